//! Seeded equivalence checks between the closed forms and the Fock oracle.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closed_form::{evaluate_terms, prop2_terms, theorem1_terms, CorrelatorTerm, PairSequence, Var};
use crate::combinatorics::{diagram_to_derangement, enumerate_derangements, enumerate_diagrams, fibre};
use crate::error::Result;
use crate::fock::{check_prop1, FockModule, Prop1Case};
use crate::jordan::{BilinearSpace, Vector};
use crate::scalars::{format_rational, frac, CentralPoly, Rational};
use crate::series::{exponent_tuples, iota_expand, paired_domain, single_domain};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

/// Random symmetric nondegenerate Gram matrix with small rational entries.
pub fn random_space<R: Rng>(rng: &mut R, d: usize) -> BilinearSpace {
    loop {
        let mut g = vec![vec![Rational::zero(); d]; d];
        for i in 0..d {
            for j in i..d {
                let x = small_rational(rng);
                g[i][j] = x.clone();
                g[j][i] = x;
            }
        }
        if let Ok(s) = BilinearSpace::new(g) {
            return s;
        }
    }
}

pub fn random_vector<R: Rng>(rng: &mut R, d: usize) -> Vector {
    loop {
        let v = Vector::new((0..d).map(|_| small_rational(rng)).collect());
        if v.coords().iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

pub fn random_sequence<R: Rng>(rng: &mut R, d: usize, n: usize) -> PairSequence {
    let space = random_space(rng, d);
    let pairs = (0..n).map(|_| (random_vector(rng, d), random_vector(rng, d))).collect();
    PairSequence::new(space, pairs).expect("dimensions agree by construction")
}

/// Distinct random rationals for `z_1..z_n` (and `w_i := z_i`).
pub fn random_diagonal_point<R: Rng>(rng: &mut R, n: usize) -> BTreeMap<Var, Rational> {
    let mut zs: Vec<Rational> = Vec::with_capacity(n);
    while zs.len() < n {
        let z = frac(rng.gen_range(-20..=20), rng.gen_range(1..=7));
        if !zs.contains(&z) {
            zs.push(z);
        }
    }
    let mut point = BTreeMap::new();
    for (i, z) in zs.into_iter().enumerate() {
        point.insert(Var::z(i + 1), z.clone());
        point.insert(Var::w(i + 1), z);
    }
    point
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub checked: usize,
    /// Checked coefficients that were nonzero.
    pub nonzero: usize,
    pub mismatch: Option<String>,
}

impl CaseReport {
    fn new(name: String) -> Self {
        CaseReport { name, checked: 0, nonzero: 0, mismatch: None }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub cases: Vec<CaseReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseReport::passed)
    }

    pub fn first_failure(&self) -> Option<&CaseReport> {
        self.cases.iter().find(|c| !c.passed())
    }
}

/// Doubles the first term: the negative control for the comparisons.
fn corrupt_terms(terms: &mut [CorrelatorTerm]) {
    if let Some(t) = terms.first_mut() {
        t.scalar = &t.scalar * frac(2, 1);
    }
}

fn monomial_text(vars: &[Var], e: &[i32]) -> String {
    vars.iter().zip(e).map(|(v, x)| format!("{v}^{x}")).collect::<Vec<_>>().join(" ")
}

fn mismatch_text(vars: &[Var], e: &[i32], closed: &CentralPoly, oracle: &CentralPoly) -> String {
    format!("coefficient of {}: closed form {closed}, oracle {oracle}", monomial_text(vars, e))
}

/// Every coefficient of the ι-expanded diagram sum over `(z1, w1, z2, ...)`
/// with `Σ|e| <= bound` against `<1', ∏ L_{a_i,b_i}(m_i, n_i) 1>`.
pub fn compare_prop2(t: &PairSequence, bound: u32, fm: &mut FockModule, corrupt: bool) -> Result<CaseReport> {
    let n = t.len();
    let mut terms = prop2_terms(t)?;
    if corrupt {
        corrupt_terms(&mut terms);
    }
    let domain = paired_domain(n);
    let series = iota_expand(&terms, &domain, bound)?;
    let mut report = CaseReport::new(format!("two-variable n={n} d={}", t.space().dim()));
    // Σ (m_i + n_i) = 0 forces Σ e = -2n; other tuples vanish on both sides
    for e in exponent_tuples(2 * n, -2 * n as i32, bound) {
        let modes: Vec<(i64, i64)> = e.chunks(2).map(|p| (-(p[0] as i64) - 1, -(p[1] as i64) - 1)).collect();
        let oracle = fm.mode_correlator(t, &modes)?;
        let closed = series.coeff(&e).unwrap_or_default();
        report.checked += 1;
        report.nonzero += usize::from(!oracle.is_zero());
        if closed != oracle {
            report.mismatch = Some(mismatch_text(&domain, &e, &closed, &oracle));
            break;
        }
    }
    // nonzero closed-form coefficients off the selection rule would be missed above
    if report.mismatch.is_none() {
        if let Some((e, c)) = series.iter().find(|(e, _)| e.iter().sum::<i32>() != -2 * n as i32) {
            report.mismatch = Some(mismatch_text(&domain, e, c, &CentralPoly::zero()));
        }
    }
    Ok(report)
}

/// Every coefficient of the ι-expanded derangement sum over `(z1, ..., zn)`
/// with `Σ|e| <= bound` against `<1', ∏ L_{a_i,b_i}(l_i) 1>`.
pub fn compare_theorem1(t: &PairSequence, bound: u32, fm: &mut FockModule, corrupt: bool) -> Result<CaseReport> {
    let n = t.len();
    let mut terms = theorem1_terms(t)?;
    if corrupt {
        corrupt_terms(&mut terms);
    }
    let domain = single_domain(n);
    let series = iota_expand(&terms, &domain, bound)?;
    let mut report = CaseReport::new(format!("field n={n} d={}", t.space().dim()));
    for e in exponent_tuples(n, -2 * n as i32, bound) {
        let ls: Vec<i64> = e.iter().map(|&x| -(x as i64) - 1).collect();
        let oracle = fm.field_correlator_coeff(t, &ls)?;
        let closed = series.coeff(&e).unwrap_or_default();
        report.checked += 1;
        report.nonzero += usize::from(!oracle.is_zero());
        if closed != oracle {
            report.mismatch = Some(mismatch_text(&domain, &e, &closed, &oracle));
            break;
        }
    }
    if report.mismatch.is_none() {
        if let Some((e, c)) = series.iter().find(|(e, _)| e.iter().sum::<i32>() != -2 * n as i32) {
            report.mismatch = Some(mismatch_text(&domain, e, c, &CentralPoly::zero()));
        }
    }
    Ok(report)
}

/// Fibres of the diagram map: sizes `2^(n - c(σ))`, disjoint, covering
/// every diagram.
pub fn check_fibres(n: usize) -> Result<CaseReport> {
    let mut report = CaseReport::new(format!("fibres n={n}"));
    if n < 2 {
        // no diagram map below two pairs
        return Ok(report);
    }
    let diagrams = enumerate_diagrams(n);
    let mut covered = 0usize;
    for sigma in enumerate_derangements(n) {
        let f = fibre(&sigma)?;
        report.checked += 1;
        report.nonzero += usize::from(!f.is_empty());
        let expected = 1usize << (n - sigma.cycle_count());
        if f.len() != expected {
            report.mismatch = Some(format!("fibre over {sigma} has {} diagrams, expected {expected}", f.len()));
            return Ok(report);
        }
        for d in &f {
            if diagram_to_derangement(d)? != sigma {
                report.mismatch = Some(format!("diagram {d} in the fibre over {sigma} maps elsewhere"));
                return Ok(report);
            }
        }
        covered += f.len();
    }
    if covered != diagrams.len() {
        report.mismatch = Some(format!("fibres cover {covered} of {} diagrams", diagrams.len()));
    }
    Ok(report)
}

/// `w := z` in the diagram sum agrees with the derangement sum at random
/// points.
pub fn check_diagonal<R: Rng>(t: &PairSequence, points: usize, rng: &mut R) -> Result<CaseReport> {
    let n = t.len();
    let two = prop2_terms(t)?;
    let one = theorem1_terms(t)?;
    let mut report = CaseReport::new(format!("diagonal n={n} d={}", t.space().dim()));
    for _ in 0..points {
        let point = random_diagonal_point(rng, n);
        let lhs = evaluate_terms(&two, &point)?;
        let rhs = evaluate_terms(&one, &point)?;
        report.checked += 1;
        report.nonzero += usize::from(!rhs.is_zero());
        if lhs != rhs {
            let at: Vec<String> = (1..=n).map(|i| format_rational(&point[&Var::z(i)])).collect();
            report.mismatch = Some(format!("at z=({}): diagram sum {lhs}, derangement sum {rhs}", at.join(",")));
            break;
        }
    }
    Ok(report)
}

/// For `n` copies of `(e, e)` with `(e, e) = 1`, every derangement term is
/// `(r/2)^c(σ)` and no derangement is missing.
pub fn check_virasoro_coefficients(n: usize) -> Result<CaseReport> {
    let mut report = CaseReport::new(format!("virasoro coefficients n={n}"));
    let terms = theorem1_terms(&PairSequence::virasoro(n))?;
    let expected = crate::closed_form::derangements_in_display_order(n);
    if terms.len() != expected.len() {
        report.mismatch = Some(format!("{} terms for {} derangements", terms.len(), expected.len()));
        return Ok(report);
    }
    for (term, sigma) in terms.iter().zip(&expected) {
        let c = sigma.cycle_count();
        let want = CentralPoly::monomial(crate::scalars::inv_pow2(c as u32), c);
        report.checked += 1;
        report.nonzero += 1;
        if term.cycles != sigma.cycle_notation() || term.coefficient() != want {
            report.mismatch = Some(format!("term {}: {} instead of {want}", term.cycles, term.coefficient()));
            break;
        }
    }
    Ok(report)
}

pub fn check_commutators(space: &BilinearSpace, window: i64) -> Result<CaseReport> {
    let p = check_prop1(space, &Prop1Case::window(window))?;
    Ok(CaseReport {
        name: format!("commutators d={} |modes|<={window}", space.dim()),
        checked: p.checked,
        nonzero: p.nonzero,
        mismatch: p.mismatch.map(|m| {
            let (a, b, u, v) = m.basis;
            format!(
                "{:?} modes {:?} basis (e{},e{},e{},e{}): bracket {} vs series {}",
                m.case.family,
                m.case.modes,
                a + 1,
                b + 1,
                u + 1,
                v + 1,
                m.bracket,
                m.series
            )
        }),
    })
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Defaults to `2n + 2`.
    pub bound: Option<u32>,
    pub prop2: bool,
    pub commutator_window: i64,
    pub diagonal_points: usize,
    pub corrupt: bool,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig { seed, bound: None, prop2: true, commutator_window: 3, diagonal_points: 5, corrupt: false }
    }
}

/// The full suite on one sequence: both series comparisons, the bracket
/// formulas for its space, the fibres for its length, and diagonal points.
pub fn run_suite(t: &PairSequence, cfg: &SuiteConfig) -> Result<VerifyReport> {
    let n = t.len();
    let bound = cfg.bound.unwrap_or(2 * n as u32 + 2);
    let mut rng = seeded_rng(cfg.seed);
    let mut fm = FockModule::new(t.space().clone());
    let mut cases = Vec::new();
    if cfg.prop2 {
        cases.push(compare_prop2(t, bound, &mut fm, cfg.corrupt)?);
    }
    cases.push(compare_theorem1(t, bound, &mut fm, cfg.corrupt)?);
    cases.push(check_commutators(t.space(), cfg.commutator_window)?);
    cases.push(check_fibres(n)?);
    if n > 0 {
        cases.push(check_diagonal(t, cfg.diagonal_points, &mut rng)?);
    }
    if *t == PairSequence::virasoro(n) {
        cases.push(check_virasoro_coefficients(n)?);
    }
    Ok(VerifyReport { seed: cfg.seed, cases })
}
