//! The bilinear space `(h, (.,.))`, rank-one tensors on `h ⊗ h` and the
//! type-B Jordan algebra of symmetric tensors inside it.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{int, serde_rational, Rational};

/// A finite-dimensional space with a non-degenerate symmetric form,
/// given by its Gram matrix in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearSpace {
    gram: Vec<Vec<Rational>>,
}

impl BilinearSpace {
    pub fn new(gram: Vec<Vec<Rational>>) -> Result<Self> {
        let d = gram.len();
        if d == 0 || gram.iter().any(|row| row.len() != d) {
            return Err(Error::NotSquare);
        }
        for i in 0..d {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        if determinant(&gram).is_zero() {
            return Err(Error::SingularGram);
        }
        Ok(BilinearSpace { gram })
    }

    /// Orthonormal basis of dimension `d`.
    pub fn identity(d: usize) -> Self {
        let gram = (0..d)
            .map(|i| (0..d).map(|j| int((i == j) as i64)).collect())
            .collect();
        BilinearSpace { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// `(e_i, e_j)` for basis vectors.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    pub fn check(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// `a^T G b`.
    pub fn pairing(&self, a: &Vector, b: &Vector) -> Result<Rational> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.pairing_unchecked(a, b))
    }

    pub(crate) fn pairing_unchecked(&self, a: &Vector, b: &Vector) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if bj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += ai * &self.gram[i][j] * bj;
            }
        }
        acc
    }

    /// Inverse Gram matrix; exists by the non-degeneracy invariant.
    pub fn inverse_gram(&self) -> Vec<Vec<Rational>> {
        let d = self.dim();
        let mut m: Vec<Vec<Rational>> = self
            .gram
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..d).map(|j| int((i == j) as i64)));
                r
            })
            .collect();
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| !m[r][col].is_zero())
                .expect("gram is non-singular");
            m.swap(col, pivot);
            let inv = Rational::one() / &m[col][col];
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..d {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..2 * d {
                        let t = &f * &m[col][c];
                        m[r][c] -= t;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[d..].to_vec()).collect()
    }
}

fn determinant(m: &[Vec<Rational>]) -> Rational {
    let mut a = m.to_vec();
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Coordinates of a vector of `h` in the basis of its [`BilinearSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vector(#[serde(with = "serde_vec")] pub Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn basis(d: usize, i: usize) -> Self {
        Vector((0..d).map(|k| int((k == i) as i64)).collect())
    }

    pub fn zero(d: usize) -> Self {
        Vector(vec![Rational::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

mod serde_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Item(#[serde(with = "serde_rational")] Rational);

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|q| Item(q.clone())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Ok(Vec::<Item>::deserialize(d)?.into_iter().map(|i| i.0).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOne {
    pub coeff: Rational,
    pub left: Vector,
    pub right: Vector,
}

/// `Σ coeff · left ⊗ right`. No canonical form: compare elements with
/// [`TensorElement::coordinates`] or through traces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    pub terms: Vec<RankOne>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { terms: Vec::new() }
    }

    pub fn rank_one(coeff: Rational, left: Vector, right: Vector) -> Self {
        let mut t = TensorElement {
            terms: vec![RankOne { coeff, left, right }],
        };
        t.prune();
        t
    }

    pub fn scale(mut self, c: &Rational) -> Self {
        for t in &mut self.terms {
            t.coeff *= c;
        }
        self.prune();
        self
    }

    pub fn plus(mut self, other: &TensorElement) -> Self {
        self.terms.extend(other.terms.iter().cloned());
        self
    }

    fn prune(&mut self) {
        self.terms.retain(|t| !t.coeff.is_zero());
    }

    fn check(&self, space: &BilinearSpace) -> Result<()> {
        self.terms.iter().try_for_each(|t| {
            space.check(&t.left)?;
            space.check(&t.right)
        })
    }

    /// Dense `d × d` coordinate array `Σ coeff · left_i right_j`.
    pub fn coordinates(&self, d: usize) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); d]; d];
        for t in &self.terms {
            for i in 0..d {
                for j in 0..d {
                    m[i][j] += &t.coeff * &t.left.0[i] * &t.right.0[j];
                }
            }
        }
        m
    }
}

/// `L_{a,b} = a⊗b + b⊗a`.
pub fn jordan_generator(a: &Vector, b: &Vector) -> TensorElement {
    TensorElement {
        terms: vec![
            RankOne {
                coeff: Rational::one(),
                left: a.clone(),
                right: b.clone(),
            },
            RankOne {
                coeff: Rational::one(),
                left: b.clone(),
                right: a.clone(),
            },
        ],
    }
}

/// Associative product, bilinear in the rule `(a⊗b)(u⊗v) = (b,u) a⊗v`.
pub fn tensor_product(
    x: &TensorElement,
    y: &TensorElement,
    space: &BilinearSpace,
) -> Result<TensorElement> {
    x.check(space)?;
    y.check(space)?;
    Ok(product_unchecked(x, y, space))
}

fn product_unchecked(x: &TensorElement, y: &TensorElement, space: &BilinearSpace) -> TensorElement {
    let mut terms = Vec::with_capacity(x.terms.len() * y.terms.len());
    for s in &x.terms {
        for t in &y.terms {
            let c = &s.coeff * &t.coeff * space.pairing_unchecked(&s.right, &t.left);
            if !c.is_zero() {
                terms.push(RankOne {
                    coeff: c,
                    left: s.left.clone(),
                    right: t.right.clone(),
                });
            }
        }
    }
    TensorElement { terms }
}

/// `x ∘ y = (xy + yx) / 2`.
pub fn jordan_product(
    x: &TensorElement,
    y: &TensorElement,
    space: &BilinearSpace,
) -> Result<TensorElement> {
    let xy = tensor_product(x, y, space)?;
    let yx = tensor_product(y, x, space)?;
    Ok(xy.plus(&yx).scale(&crate::scalars::frac(1, 2)))
}

/// `Tr(a⊗b) = (a,b)`, extended linearly.
pub fn trace(x: &TensorElement, space: &BilinearSpace) -> Result<Rational> {
    x.check(space)?;
    Ok(x
        .terms
        .iter()
        .map(|t| &t.coeff * space.pairing_unchecked(&t.left, &t.right))
        .sum())
}

/// Trace of the ordered product of the given elements. Cycles are never
/// empty, so the empty word just yields zero.
pub fn trace_of_product(word: &[&TensorElement], space: &BilinearSpace) -> Result<Rational> {
    let Some((first, rest)) = word.split_first() else {
        return Ok(Rational::zero());
    };
    first.check(space)?;
    let mut acc = (*first).clone();
    for x in rest {
        x.check(space)?;
        acc = product_unchecked(&acc, x, space);
    }
    trace(&acc, space)
}
