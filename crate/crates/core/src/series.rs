//! Truncated multivariate Laurent expansions of correlator term lists.
//!
//! A factor `(u - v)^-p` is expanded in the region where whichever of `u`,
//! `v` comes first in the domain order dominates:
//!
//! ```text
//! (u - v)^-p = Σ_{j >= 0} C(p + j - 1, j) u^(-p-j) v^j
//! ```
//!
//! Coefficients are kept for exponent tuples whose absolute degree
//! `Σ |e_i|` is within the bound. Every factor pushes each prefix sum of
//! the exponent tuple down (never up), so a partial product whose prefix
//! sum already falls below `-bound` cannot reach the window and is pruned;
//! the truncation is therefore exact inside the window.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::closed_form::{CorrelatorTerm, Var};
use crate::error::{Error, Result};
use crate::scalars::{CentralPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    variables: Vec<Var>,
    bound: u32,
    coeffs: BTreeMap<Vec<i32>, CentralPoly>,
}

impl LaurentSeries {
    pub fn variables(&self) -> &[Var] {
        &self.variables
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `None` means the tuple lies outside the window and is unknown;
    /// inside the window an absent tuple is an exact zero.
    pub fn coeff(&self, exponents: &[i32]) -> Option<CentralPoly> {
        if exponents.len() != self.variables.len() || absolute_degree(exponents) > self.bound {
            return None;
        }
        Some(self.coeffs.get(exponents).cloned().unwrap_or_default())
    }

    /// Nonzero coefficients in lexicographic order of exponents.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, &CentralPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_json(&self) -> Vec<SeriesEntry> {
        self.coeffs
            .iter()
            .map(|(e, c)| SeriesEntry { exponents: e.clone(), coeff: c.clone() })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesEntry {
    pub exponents: Vec<i32>,
    pub coeff: CentralPoly,
}

pub fn absolute_degree(e: &[i32]) -> u32 {
    e.iter().map(|x| x.unsigned_abs()).sum()
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

struct FactorExpansion {
    dominant: usize,
    dominated: usize,
    // (coefficient, exponent of dominant, exponent of dominated)
    entries: Vec<(BigInt, i32, i32)>,
}

fn min_prefix(e: &[i32]) -> i64 {
    e.iter()
        .scan(0i64, |s, &x| {
            *s += x as i64;
            Some(*s)
        })
        .min()
        .unwrap_or(0)
}

/// ι-expansion of a term list over `domain`, exact for every exponent
/// tuple with `Σ |e_i| <= bound`.
pub fn iota_expand(terms: &[CorrelatorTerm], domain: &[Var], bound: u32) -> Result<LaurentSeries> {
    let position: BTreeMap<Var, usize> = domain.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let width = domain.len();
    let mut coeffs: BTreeMap<Vec<i32>, CentralPoly> = BTreeMap::new();

    for term in terms {
        let mut factors = Vec::with_capacity(term.denominator.len());
        for f in &term.denominator {
            let pl = *position.get(&f.left).ok_or_else(|| Error::MissingVariable(f.left.to_string()))?;
            let pr = *position.get(&f.right).ok_or_else(|| Error::MissingVariable(f.right.to_string()))?;
            let p = f.power();
            let (dominant, dominated) = if pl < pr { (pl, pr) } else { (pr, pl) };
            let entries = (0..=bound.saturating_sub(p))
                .filter(|_| p <= bound)
                .map(|j| (binomial(p + j - 1, j), -((p + j) as i32), j as i32))
                .collect();
            factors.push(FactorExpansion { dominant, dominated, entries });
        }

        let mut partial: Vec<(Vec<i32>, BigInt)> = vec![(vec![0; width], BigInt::one())];
        for f in &factors {
            let mut next = Vec::with_capacity(partial.len() * f.entries.len());
            for (e, c) in &partial {
                for (k, de, ds) in &f.entries {
                    let mut e2 = e.clone();
                    e2[f.dominant] += de;
                    e2[f.dominated] += ds;
                    if min_prefix(&e2) < -(bound as i64) {
                        // larger j only pushes further; entries are ascending
                        break;
                    }
                    next.push((e2, c * k));
                }
            }
            partial = next;
        }

        let scale = term.coefficient();
        for (e, c) in partial {
            if absolute_degree(&e) > bound {
                continue;
            }
            let contrib = scale.scale(&Rational::from_integer(c));
            let slot = coeffs.entry(e).or_default();
            *slot += &contrib;
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(LaurentSeries { variables: domain.to_vec(), bound, coeffs })
}

/// The operator-order domain `(z1, w1, z2, w2, ...)`.
pub fn paired_domain(n: usize) -> Vec<Var> {
    (1..=n).flat_map(|i| [Var::z(i), Var::w(i)]).collect()
}

/// `(z1, ..., zn)`.
pub fn single_domain(n: usize) -> Vec<Var> {
    (1..=n).map(Var::z).collect()
}

/// Every integer tuple of length `len` with the given sum and
/// `Σ |e_i| <= bound`, in lexicographic order.
pub fn exponent_tuples(len: usize, total: i32, bound: u32) -> Vec<Vec<i32>> {
    fn go(len: usize, total: i64, budget: i64, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if len == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // the remaining entries need at least |total| absolute mass
        for x in -budget..=budget {
            let rest_budget = budget - x.abs();
            if (total - x).abs() > rest_budget {
                continue;
            }
            cur.push(x as i32);
            go(len - 1, total - x, rest_budget, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, total as i64, bound as i64, &mut Vec::with_capacity(len), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::SqDiffFactor;
    use crate::scalars::{frac, int};

    fn term(factors: &[(Var, Var, u32)], scalar: Rational, r_power: usize) -> CorrelatorTerm {
        CorrelatorTerm {
            cycles: String::new(),
            diagram: None,
            r_power,
            scalar,
            denominator: factors
                .iter()
                .map(|&(l, r, m)| SqDiffFactor { left: l, right: r, multiplicity: m })
                .collect(),
        }
    }

    #[test]
    fn single_factor() {
        let (z, w) = (Var::z(1), Var::w(1));
        let s = iota_expand(&[term(&[(z, w, 1)], int(1), 0)], &[z, w], 6).unwrap();
        assert_eq!(s.coeff(&[-2, 0]).unwrap(), CentralPoly::one());
        assert_eq!(s.coeff(&[-3, 1]).unwrap(), CentralPoly::constant(int(2)));
        assert_eq!(s.coeff(&[-4, 2]).unwrap(), CentralPoly::constant(int(3)));
        assert_eq!(s.coeff(&[-5, 3]), None, "outside the window");
        assert!(s.coeff(&[-3, 0]).unwrap().is_zero());
        // orientation of the factor does not matter, only the domain order
        let s2 = iota_expand(&[term(&[(w, z, 1)], int(1), 0)], &[z, w], 6).unwrap();
        assert_eq!(s, s2);
        let s3 = iota_expand(&[term(&[(z, w, 1)], int(1), 0)], &[w, z], 6).unwrap();
        assert_eq!(s3.coeff(&[-2, 0]).unwrap(), CentralPoly::one());
        assert_eq!(s3.coeff(&[-3, 1]).unwrap(), CentralPoly::constant(int(2)));
    }

    #[test]
    fn fourth_power() {
        // (z - w)^-4 = Σ_k k(k+1)(k+2)/6 z^(-k-3) w^(k-1)
        let (z, w) = (Var::z(1), Var::z(2));
        let s = iota_expand(&[term(&[(z, w, 2)], frac(1, 3), 1)], &[z, w], 14).unwrap();
        for k in 1..=5i32 {
            let c = frac((k * (k + 1) * (k + 2)) as i64, 6) * frac(1, 3);
            assert_eq!(s.coeff(&[-k - 3, k - 1]).unwrap(), CentralPoly::monomial(c, 1));
        }
    }

    #[test]
    fn products_agree_with_direct_double_sum() {
        // (z1 - z2)^-2 (z2 - z3)^-2: coefficient of z1^(-k-1) z2^(k-1-j-1) z3^(j-1) is k j
        let (a, b, c) = (Var::z(1), Var::z(2), Var::z(3));
        let bound = 12;
        let s = iota_expand(&[term(&[(a, b, 1), (b, c, 1)], int(1), 0)], &[a, b, c], bound).unwrap();
        let mut expected: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        for k in 1..=20i32 {
            for j in 1..=20i32 {
                let e = vec![-k - 1, k - 1 - j - 1, j - 1];
                if absolute_degree(&e) <= bound {
                    *expected.entry(e).or_default() += (k * j) as i64;
                }
            }
        }
        assert_eq!(s.len(), expected.len());
        for (e, c) in expected {
            assert_eq!(s.coeff(&e).unwrap(), CentralPoly::constant(int(c)), "{e:?}");
        }
    }

    #[test]
    fn missing_variable_is_an_error() {
        let t = term(&[(Var::z(1), Var::z(2), 1)], int(1), 0);
        assert!(matches!(iota_expand(&[t], &[Var::z(1)], 4), Err(Error::MissingVariable(_))));
    }

    #[test]
    fn tuple_enumeration() {
        let ts = exponent_tuples(2, -4, 6);
        assert!(ts.contains(&vec![-4, 0]) && ts.contains(&vec![-5, 1]) && ts.contains(&vec![1, -5]));
        assert!(ts.iter().all(|t| t.iter().sum::<i32>() == -4 && absolute_degree(t) <= 6));
        assert_eq!(ts.len(), 5 + 2);
        assert_eq!(exponent_tuples(3, 0, 0), vec![vec![0, 0, 0]]);
    }
}
