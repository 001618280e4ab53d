//! Brute-force Fock-module oracle.
//!
//! The quadratic elements `a(m)b(n)` of the Heisenberg enveloping algebra
//! span a Lie algebra under the rescaled bracket `[x, y]_new = [x, y] / c`.
//! Its module `M_r` is induced from the character killing every generator
//! with a nonnegative mode and sending `c` to `r`. Because the negative part
//! is abelian, `M_r` is a polynomial ring in the negative generators, and
//! everything here is computed by commuting generators to the vacuum.
//!
//! This deliberately does not realize generators as `½:a(m)b(n):` on the
//! Heisenberg Fock space: that module only has the right central terms at
//! `r = 1`.

mod prop1;

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::closed_form::PairSequence;
use crate::error::{Error, Result};
use crate::jordan::{BilinearSpace, Vector};
use crate::scalars::{frac, int, CentralPoly, Rational};

pub use prop1::{check_prop1, Prop1Case, Prop1Family, Prop1Mismatch, Prop1Report};

const MAX_DEPTH: usize = 512;

/// `L_{e_i, e_j}(m, n) = ½ :e_i(m) e_j(n):` on basis vectors, stored with
/// `(i, m) <= (j, n)` using `L_{a,b}(m,n) = L_{b,a}(n,m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadGenerator {
    pub i: usize,
    pub m: i64,
    pub j: usize,
    pub n: i64,
}

impl QuadGenerator {
    pub fn new(i: usize, m: i64, j: usize, n: i64) -> Self {
        if (i, m) <= (j, n) {
            QuadGenerator { i, m, j, n }
        } else {
            QuadGenerator { i: j, m: n, j: i, n: m }
        }
    }

    /// Both modes negative: the generator creates.
    pub fn is_creation(&self) -> bool {
        self.m < 0 && self.n < 0
    }

    /// Change in degree when applied: `-(m + n)`.
    pub fn degree(&self) -> i64 {
        -(self.m + self.n)
    }
}

/// An element of `B ⊕ Cc`: generator coefficients plus the coefficient of `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuadElement {
    pub quad: BTreeMap<QuadGenerator, Rational>,
    pub central: Rational,
}

impl QuadElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: QuadGenerator) -> Self {
        let mut x = Self::zero();
        x.add_generator(g, Rational::one());
        x
    }

    pub fn add_generator(&mut self, g: QuadGenerator, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.quad.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.quad.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, other: &QuadElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (g, x) in &other.quad {
            self.add_generator(*g, x * c);
        }
        self.central += &other.central * c;
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.quad.is_empty() && self.central.is_zero()
    }

    /// `L_{a,b}(m, n)` for arbitrary vectors, expanded over the basis.
    pub fn from_vectors(a: &Vector, b: &Vector, m: i64, n: i64) -> Self {
        let mut x = Self::zero();
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords().iter().enumerate() {
                x.add_generator(QuadGenerator::new(i, m, j, n), ai * bj);
            }
        }
        x
    }
}

/// The ordered product `e_i(m) e_j(n)` rewritten as
/// `2 L_{e_i,e_j}(m, n) + m (e_i, e_j) δ_{m+n,0} c`, the correction
/// appearing only when normal ordering swaps the factors (`m >= n`).
pub fn normal_order_pair(i: usize, m: i64, j: usize, n: i64, space: &BilinearSpace) -> QuadElement {
    let mut x = QuadElement::generator(QuadGenerator::new(i, m, j, n)).scale(&int(2));
    if m >= n && m + n == 0 {
        x.central = int(m) * space.entry(i, j);
    }
    x
}

/// `[L_{a,b}(m,n), L_{u,v}(p,q)]_new` on basis generators:
///
/// ```text
/// ¼ n δ_{n+p} (b,u) a(m)v(q) + ¼ m δ_{m+p} (a,u) b(n)v(q)
///   + ¼ n δ_{n+q} (b,v) u(p)a(m) + ¼ m δ_{m+q} (a,v) u(p)b(n)
/// ```
///
/// with each quadratic product normal ordered into `B ⊕ Cc`.
pub fn bracket_new(g: &QuadGenerator, h: &QuadGenerator, space: &BilinearSpace) -> QuadElement {
    let (a, m, b, n) = (g.i, g.m, g.j, g.n);
    let (u, p, v, q) = (h.i, h.m, h.j, h.n);
    let quarter = frac(1, 4);
    let mut out = QuadElement::zero();
    let mut push = |mode: i64, pair: &Rational, prod: QuadElement| {
        if mode != 0 && !pair.is_zero() {
            out.add_scaled(&prod, &(&quarter * int(mode) * pair));
        }
    };
    if n + p == 0 {
        push(n, space.entry(b, u), normal_order_pair(a, m, v, q, space));
    }
    if m + p == 0 {
        push(m, space.entry(a, u), normal_order_pair(b, n, v, q, space));
    }
    if n + q == 0 {
        push(n, space.entry(b, v), normal_order_pair(u, p, a, m, space));
    }
    if m + q == 0 {
        push(m, space.entry(a, v), normal_order_pair(u, p, b, n, space));
    }
    out
}

/// Bilinear extension of [`bracket_new`]; `c` is central.
pub fn bracket_elements(x: &QuadElement, y: &QuadElement, space: &BilinearSpace) -> QuadElement {
    let mut out = QuadElement::zero();
    for (g, cg) in &x.quad {
        for (h, ch) in &y.quad {
            out.add_scaled(&bracket_new(g, h, space), &(cg * ch));
        }
    }
    out
}

/// A PBW monomial: sorted multiset of creation generators.
pub type Monomial = Vec<QuadGenerator>;

pub fn monomial_degree(mono: &[QuadGenerator]) -> i64 {
    mono.iter().map(QuadGenerator::degree).sum()
}

fn insert_sorted(mono: &[QuadGenerator], g: QuadGenerator) -> Monomial {
    let mut out = Vec::with_capacity(mono.len() + 1);
    let k = mono.partition_point(|x| *x <= g);
    out.extend_from_slice(&mono[..k]);
    out.push(g);
    out.extend_from_slice(&mono[k..]);
    out
}

fn merge_sorted(x: &[QuadGenerator], y: &[QuadGenerator]) -> Monomial {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        if x[i] <= y[j] {
            out.push(x[i]);
            i += 1;
        } else {
            out.push(y[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    out
}

/// A vector of `M_r`: PBW monomials with coefficients in `Q[r]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockState {
    terms: BTreeMap<Monomial, CentralPoly>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(Vec::new(), CentralPoly::one())
    }

    /// `c · g_1 ... g_k · 1`; every generator must create.
    pub fn monomial(mut gens: Monomial, c: CentralPoly) -> Self {
        assert!(gens.iter().all(QuadGenerator::is_creation), "monomials hold creation generators only");
        gens.sort_unstable();
        let mut s = Self::zero();
        s.add_term(gens, c);
        s
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, CentralPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: Monomial, c: CentralPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockState, c: &CentralPoly) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    /// Largest monomial degree, `None` for the zero state.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| monomial_degree(m)).max()
    }

    /// Multiplies every monomial by creation generators (abelian).
    fn times_monomial(&self, prefix: &[QuadGenerator]) -> FockState {
        if prefix.is_empty() {
            return self.clone();
        }
        FockState {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (merge_sorted(m, prefix), c.clone()))
                .collect(),
        }
    }
}

/// Coefficient of the vacuum: the pairing with the dual vacuum.
pub fn vacuum_coeff(psi: &FockState) -> CentralPoly {
    psi.terms.get(&Vec::new()).cloned().unwrap_or_default()
}

/// Mode algebra acting on `M_r` for a fixed space, with a memo of
/// generator-on-monomial results.
pub struct FockModule {
    space: BilinearSpace,
    cache: HashMap<(QuadGenerator, Monomial), FockState>,
}

impl FockModule {
    pub fn new(space: BilinearSpace) -> Self {
        FockModule { space, cache: HashMap::new() }
    }

    pub fn space(&self) -> &BilinearSpace {
        &self.space
    }

    pub fn apply_generator(&mut self, g: &QuadGenerator, psi: &FockState) -> Result<FockState> {
        let mut out = FockState::zero();
        for (mono, c) in &psi.terms {
            let part = self.on_monomial(g, mono, 0)?;
            out.add_scaled(&part, c);
        }
        Ok(out)
    }

    pub fn apply_element(&mut self, x: &QuadElement, psi: &FockState) -> Result<FockState> {
        let mut out = FockState::zero();
        for (mono, c) in &psi.terms {
            let part = self.element_on_monomial(x, mono, 0)?;
            out.add_scaled(&part, c);
        }
        Ok(out)
    }

    fn element_on_monomial(&mut self, x: &QuadElement, mono: &[QuadGenerator], depth: usize) -> Result<FockState> {
        let mut out = FockState::zero();
        for (g, c) in &x.quad {
            let part = self.on_monomial(g, mono, depth)?;
            out.add_scaled(&part, &CentralPoly::constant(c.clone()));
        }
        if !x.central.is_zero() {
            // c acts as r
            out.add_term(mono.to_vec(), CentralPoly::monomial(x.central.clone(), 1));
        }
        Ok(out)
    }

    fn on_monomial(&mut self, g: &QuadGenerator, mono: &[QuadGenerator], depth: usize) -> Result<FockState> {
        if depth > MAX_DEPTH {
            return Err(Error::DepthExceeded(MAX_DEPTH));
        }
        if g.is_creation() {
            return Ok(FockState { terms: [(insert_sorted(mono, *g), CentralPoly::one())].into() });
        }
        let deg = monomial_degree(mono);
        // A mode above the degree of the state can never be absorbed, and
        // nothing lives below degree zero.
        if g.m > deg || g.n > deg || deg + g.degree() < 0 {
            return Ok(FockState::zero());
        }
        let key = (*g, mono.to_vec());
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        // g h_1 ... h_k 1 = Σ_i h_1..h_{i-1} [g, h_i] h_{i+1}..h_k 1, since g 1 = 0
        let mut out = FockState::zero();
        for i in 0..mono.len() {
            let x = bracket_new(g, &mono[i], &self.space);
            if x.is_zero() {
                continue;
            }
            let tail = self.element_on_monomial(&x, &mono[i + 1..], depth + 1)?;
            let part = tail.times_monomial(&mono[..i]);
            out.add_scaled(&part, &CentralPoly::one());
        }
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    /// `L_{a,b}(l) = Σ_k L_{a,b}(l - 1 - k, k)`, truncated to the `k` that
    /// can act nonzero on `psi`: `k ∈ [l - 1 - N, N]` for `N` the top degree.
    pub fn apply_field_mode(&mut self, a: &Vector, b: &Vector, l: i64, psi: &FockState) -> Result<FockState> {
        self.space.check(a)?;
        self.space.check(b)?;
        let Some(top) = psi.max_degree() else {
            return Ok(FockState::zero());
        };
        let mut x = QuadElement::zero();
        for k in (l - 1 - top)..=top {
            x.add_scaled(&QuadElement::from_vectors(a, b, l - 1 - k, k), &Rational::one());
        }
        self.apply_element(&x, psi)
    }

    /// `ω(1) = Σ_{k,l} (G^-1)_{kl} L_{e_k,e_l}(1)`, the grading operator.
    pub fn weight_operator(&mut self, psi: &FockState) -> Result<FockState> {
        let d = self.space.dim();
        let inv = self.space.inverse_gram();
        let mut out = FockState::zero();
        for k in 0..d {
            for l in 0..d {
                if inv[k][l].is_zero() {
                    continue;
                }
                let part = self.apply_field_mode(&Vector::basis(d, k), &Vector::basis(d, l), 1, psi)?;
                out.add_scaled(&part, &CentralPoly::constant(inv[k][l].clone()));
            }
        }
        Ok(out)
    }

    /// `<1', L_{a_1,b_1}(m_1,n_1) ... L_{a_n,b_n}(m_n,n_n) 1>`.
    pub fn mode_correlator(&mut self, t: &PairSequence, modes: &[(i64, i64)]) -> Result<CentralPoly> {
        if modes.len() != t.len() {
            return Err(Error::DimensionMismatch { expected: t.len(), found: modes.len() });
        }
        if modes.iter().map(|(m, n)| m + n).sum::<i64>() != 0 {
            return Ok(CentralPoly::zero());
        }
        let mut psi = FockState::vacuum();
        for ((a, b), &(m, n)) in t.pairs().iter().zip(modes).rev() {
            let x = QuadElement::from_vectors(a, b, m, n);
            psi = self.apply_element(&x, &psi)?;
            if psi.is_zero() {
                break;
            }
        }
        Ok(vacuum_coeff(&psi))
    }

    /// `<1', L_{a_1,b_1}(l_1) ... L_{a_n,b_n}(l_n) 1>`: the coefficient of
    /// `∏ z_i^(-l_i-1)` in the field correlator.
    pub fn field_correlator_coeff(&mut self, t: &PairSequence, ls: &[i64]) -> Result<CentralPoly> {
        if ls.len() != t.len() {
            return Err(Error::DimensionMismatch { expected: t.len(), found: ls.len() });
        }
        if ls.iter().sum::<i64>() != t.len() as i64 {
            return Ok(CentralPoly::zero());
        }
        let mut psi = FockState::vacuum();
        for ((a, b), &l) in t.pairs().iter().zip(ls).rev() {
            psi = self.apply_field_mode(a, b, l, &psi)?;
            if psi.is_zero() {
                break;
            }
        }
        Ok(vacuum_coeff(&psi))
    }
}

/// `ω = Σ_{k,l} (G^-1)_{kl} L_{e_k,e_l}(-1,-1) 1`.
pub fn virasoro_state(space: &BilinearSpace) -> FockState {
    let inv = space.inverse_gram();
    let d = space.dim();
    let mut out = FockState::zero();
    for k in 0..d {
        for l in 0..d {
            let g = QuadGenerator::new(k, -1, l, -1);
            out.add_term(vec![g], CentralPoly::constant(inv[k][l].clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram2() -> BilinearSpace {
        BilinearSpace::new(vec![vec![int(2), int(1)], vec![int(1), int(3)]]).unwrap()
    }

    fn gen(i: usize, m: i64, j: usize, n: i64) -> QuadGenerator {
        QuadGenerator::new(i, m, j, n)
    }

    #[test]
    fn canonical_orientation() {
        assert_eq!(gen(1, -1, 0, -2), gen(0, -2, 1, -1));
        assert_eq!(gen(0, 3, 0, -1), QuadGenerator { i: 0, m: -1, j: 0, n: 3 });
    }

    #[test]
    fn normal_ordering_examples() {
        let s = gram2();
        // a(-2) b(3) is already ordered
        let x = normal_order_pair(0, -2, 1, 3, &s);
        assert_eq!(x.quad[&gen(0, -2, 1, 3)], int(2));
        assert!(x.central.is_zero());
        // a(1) v(-1) picks up (a, v) c
        let x = normal_order_pair(0, 1, 1, -1, &s);
        assert_eq!(x.quad[&gen(0, 1, 1, -1)], int(2));
        assert_eq!(x.central, int(1));
        // a(2) b(-2) picks up 2 (a, b) c
        let x = normal_order_pair(0, 2, 0, -2, &s);
        assert_eq!(x.central, int(4));
    }

    #[test]
    fn bracket_examples() {
        let s = gram2();
        let g = |i, j| s.entry(i, j).clone();
        // [L_{a,b}(0,1), L_{u,v}(-1,0)] = ½ (b,u) L_{a,v}(0,0)
        let (a, b, u, v) = (0, 1, 1, 0);
        let x = bracket_new(&gen(a, 0, b, 1), &gen(u, -1, v, 0), &s);
        let mut expect = QuadElement::zero();
        expect.add_generator(gen(a, 0, v, 0), frac(1, 2) * g(b, u));
        assert_eq!(x, expect);

        // [L_{a,b}(1,1), L_{u,v}(-1,-1)]
        let (a, b, u, v) = (0, 1, 0, 1);
        let x = bracket_new(&gen(a, 1, b, 1), &gen(u, -1, v, -1), &s);
        let mut expect = QuadElement::zero();
        let q = frac(1, 4);
        expect.add_scaled(&normal_order_pair(a, 1, v, -1, &s), &(&q * g(b, u)));
        expect.add_scaled(&normal_order_pair(b, 1, v, -1, &s), &(&q * g(a, u)));
        expect.add_scaled(&normal_order_pair(u, -1, a, 1, &s), &(&q * g(b, v)));
        expect.add_scaled(&normal_order_pair(u, -1, b, 1, &s), &(&q * g(a, v)));
        assert_eq!(x, expect);
        assert_eq!(x.central, q * (g(b, u) * g(a, v) + g(a, u) * g(b, v)));

        assert!(bracket_new(&gen(0, 2, 1, 3), &gen(0, -1, 1, -1), &s).is_zero());
    }

    #[test]
    fn generator_action_examples() {
        let s = gram2();
        let g = |i, j| s.entry(i, j).clone();
        let mut fm = FockModule::new(s.clone());
        let create = gen(0, -1, 1, -1);
        let one = FockState::vacuum();
        let psi = fm.apply_generator(&create, &one).unwrap();
        assert_eq!(psi, FockState::monomial(vec![create], CentralPoly::one()));

        let (a, b, u, v) = (0, 0, 0, 1);
        let psi = fm.apply_generator(&gen(u, -1, v, -1), &one).unwrap();
        let out = fm.apply_generator(&gen(a, 1, b, 1), &psi).unwrap();
        let expect = CentralPoly::monomial(frac(1, 4) * (g(a, u) * g(b, v) + g(a, v) * g(b, u)), 1);
        assert_eq!(out, FockState::monomial(vec![], expect.clone()));
        assert_eq!(vacuum_coeff(&out), expect);

        for g in [gen(0, 0, 1, -1), gen(0, 2, 0, 3), gen(1, -3, 0, 0)] {
            assert!(fm.apply_generator(&g, &one).unwrap().is_zero());
        }
        assert_eq!(vacuum_coeff(&one), CentralPoly::one());
        assert!(vacuum_coeff(&psi).is_zero());
    }

    #[test]
    fn field_mode_examples() {
        let s = gram2();
        let mut fm = FockModule::new(s.clone());
        let (a, b) = (Vector::new(vec![int(1), int(2)]), Vector::new(vec![frac(1, 2), int(-1)]));
        let one = FockState::vacuum();
        let creation = |m, n| {
            let x = QuadElement::from_vectors(&a, &b, m, n);
            let mut st = FockState::zero();
            for (g, c) in &x.quad {
                st.add_scaled(&FockState::monomial(vec![*g], CentralPoly::one()), &CentralPoly::constant(c.clone()));
            }
            st
        };
        assert_eq!(fm.apply_field_mode(&a, &b, -1, &one).unwrap(), creation(-1, -1));

        let mut expect = creation(-3, -1);
        expect.add_scaled(&creation(-2, -2), &CentralPoly::one());
        expect.add_scaled(&creation(-1, -3), &CentralPoly::one());
        assert_eq!(fm.apply_field_mode(&a, &b, -3, &one).unwrap(), expect);

        assert!(fm.apply_field_mode(&a, &b, 2, &one).unwrap().is_zero());
    }

    #[test]
    fn virasoro_state_examples() {
        let one_dim = BilinearSpace::identity(1);
        assert_eq!(
            virasoro_state(&one_dim),
            FockState::monomial(vec![gen(0, -1, 0, -1)], CentralPoly::one())
        );
        let mut expect = FockState::monomial(vec![gen(0, -1, 0, -1)], CentralPoly::one());
        expect.add_scaled(&FockState::monomial(vec![gen(1, -1, 1, -1)], CentralPoly::one()), &CentralPoly::one());
        assert_eq!(virasoro_state(&BilinearSpace::identity(2)), expect);
        let four = BilinearSpace::new(vec![vec![int(4)]]).unwrap();
        assert_eq!(
            virasoro_state(&four),
            FockState::monomial(vec![gen(0, -1, 0, -1)], CentralPoly::constant(frac(1, 4)))
        );
    }

    #[test]
    fn correlator_examples() {
        let s = gram2();
        let v = |x: &[i64]| Vector::new(x.iter().map(|&k| int(k)).collect());
        let t = PairSequence::new(s.clone(), vec![(v(&[1, 2]), v(&[0, 1])), (v(&[3, -1]), v(&[1, 1]))]).unwrap();
        let p = |x: &Vector, y: &Vector| s.pairing(x, y).unwrap();
        let ((a1, b1), (a2, b2)) = (&t.pairs()[0], &t.pairs()[1]);
        let expect = CentralPoly::monomial(frac(1, 4) * (p(a1, a2) * p(b1, b2) + p(a1, b2) * p(b1, a2)), 1);

        let mut fm = FockModule::new(s.clone());
        assert_eq!(fm.mode_correlator(&t, &[(1, 1), (-1, -1)]).unwrap(), expect);
        assert!(fm.mode_correlator(&t, &[(1, 2), (-1, -1)]).unwrap().is_zero());
        assert_eq!(fm.field_correlator_coeff(&t, &[3, -1]).unwrap(), expect);
        assert!(fm.field_correlator_coeff(&t, &[3, 0]).unwrap().is_zero());

        let single = PairSequence::new(s.clone(), vec![(v(&[1, 0]), v(&[0, 1]))]).unwrap();
        for modes in [(0, 0), (-1, 1), (2, -2)] {
            assert!(fm.mode_correlator(&single, &[modes]).unwrap().is_zero());
        }
        assert!(fm.field_correlator_coeff(&single, &[1]).unwrap().is_zero());

        let vir = PairSequence::virasoro(2);
        let mut fm1 = FockModule::new(BilinearSpace::identity(1));
        assert_eq!(fm1.field_correlator_coeff(&vir, &[3, -1]).unwrap(), CentralPoly::monomial(frac(1, 2), 1));
    }

    #[test]
    fn griess_vectors_have_weight_two() {
        let s = gram2();
        let mut fm = FockModule::new(s);
        for (i, j) in [(0, 0), (0, 1), (1, 1)] {
            let psi = FockState::monomial(vec![gen(i, -1, j, -1)], CentralPoly::one());
            let w = fm.weight_operator(&psi).unwrap();
            let mut expect = FockState::zero();
            expect.add_scaled(&psi, &CentralPoly::constant(int(2)));
            assert_eq!(w, expect);
        }
    }
}
