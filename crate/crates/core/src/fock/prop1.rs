//! Cross-check of the mode bracket against the generating-series
//! commutators
//!
//! ```text
//! [L++_{a,b}(x,y), L--_{u,v}(z,w)] = ½(b,v) ι(y-w)^-2 L-+_{u,a}(z,x) + ½(a,v) ι(x-w)^-2 L-+_{u,b}(z,y)
//!                                  + ½(a,u) ι(x-z)^-2 L-+_{v,b}(w,y) + ½(b,u) ι(y-z)^-2 L-+_{v,a}(w,x)
//!                                  + ¼ r (a,u)(b,v) ι(x-z)^-2 ι(y-w)^-2 + ¼ r (a,v)(b,u) ι(x-w)^-2 ι(y-z)^-2
//! [L++_{a,b}(x,y), L-+_{u,v}(z,w)] = ½(a,u) L++_{b,v}(y,w) ι(x-z)^-2 + ½(b,u) L++_{a,v}(x,w) ι(y-z)^-2
//! [L++_{a,b}(x,y), L++_{u,v}(z,w)] = 0
//! ```
//!
//! Coefficients of `x^(-m-1) y^(-n-1) z^(-p-1) w^(-q-1)` on the right are
//! extracted with [`iota_expand`] over the domain `(x, y, z, w)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{bracket_new, QuadElement, QuadGenerator};
use crate::closed_form::{CorrelatorTerm, SqDiffFactor, Var};
use crate::error::Result;
use crate::jordan::BilinearSpace;
use crate::scalars::{frac, format_rational, Rational};
use crate::series::{iota_expand, LaurentSeries};

/// Which commutator formula a case exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Prop1Family {
    /// `[++, --]`
    PlusMinus,
    /// `[++, -+]`
    PlusMixed,
    /// `[++, ++]`
    PlusPlus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Prop1Case {
    pub family: Prop1Family,
    /// `(m, n, p, q)`: left generator `(m, n)`, right generator `(p, q)`.
    pub modes: (i64, i64, i64, i64),
}

impl Prop1Case {
    /// Every case with modes of absolute value at most `max`, respecting
    /// each family's sign pattern.
    pub fn window(max: i64) -> Vec<Prop1Case> {
        let nonneg: Vec<i64> = (0..=max).collect();
        let neg: Vec<i64> = (-max..=-1).collect();
        let mut out = Vec::new();
        let families = [
            (Prop1Family::PlusMinus, &neg, &neg),
            (Prop1Family::PlusMixed, &neg, &nonneg),
            (Prop1Family::PlusPlus, &nonneg, &nonneg),
        ];
        for (family, ps, qs) in families {
            for &m in &nonneg {
                for &n in &nonneg {
                    for &p in ps {
                        for &q in qs {
                            out.push(Prop1Case { family, modes: (m, n, p, q) });
                        }
                    }
                }
            }
        }
        out
    }

    fn in_family(&self) -> bool {
        let (m, n, p, q) = self.modes;
        m >= 0
            && n >= 0
            && match self.family {
                Prop1Family::PlusMinus => p < 0 && q < 0,
                Prop1Family::PlusMixed => p < 0 && q >= 0,
                Prop1Family::PlusPlus => p >= 0 && q >= 0,
            }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop1Mismatch {
    pub case: Prop1Case,
    /// Basis indices `(a, b, u, v)`.
    pub basis: (usize, usize, usize, usize),
    pub bracket: String,
    pub series: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop1Report {
    pub checked: usize,
    /// Checked brackets that were nonzero.
    pub nonzero: usize,
    pub skipped: usize,
    pub mismatch: Option<Prop1Mismatch>,
}

impl Prop1Report {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const W: usize = 3;

fn domain() -> [Var; 4] {
    [Var::z(1), Var::w(1), Var::z(2), Var::w(2)]
}

/// ι-expansion of a product of `(s - t)^-2` factors over `(x, y, z, w)`.
fn expand(pairs: &[(usize, usize)], bound: u32) -> Result<LaurentSeries> {
    let d = domain();
    let term = CorrelatorTerm {
        cycles: String::new(),
        diagram: None,
        r_power: 0,
        scalar: Rational::one(),
        denominator: pairs
            .iter()
            .map(|&(s, t)| SqDiffFactor { left: d[s], right: d[t], multiplicity: 1 })
            .collect(),
    };
    iota_expand(&[term], &d, bound)
}

struct Expansions {
    xz: LaurentSeries,
    yw: LaurentSeries,
    xw: LaurentSeries,
    yz: LaurentSeries,
    xz_yw: LaurentSeries,
    xw_yz: LaurentSeries,
}

/// Coefficient of `∏ var^(-mode-1)` over the variables in `at`; the others
/// carry exponent zero because the factor does not involve them.
fn coeff_at(s: &LaurentSeries, at: &[(usize, i64)]) -> Rational {
    let mut e = [0i32; 4];
    for &(slot, mode) in at {
        e[slot] = (-mode - 1) as i32;
    }
    let c = s.coeff(&e).expect("expansion window covers the sampled modes");
    c.coeff(0)
}

// L±±_{s,t}(m, n) restricted to its sign pattern
fn part(s: usize, m: i64, t: usize, n: i64, m_neg: bool, n_neg: bool) -> Option<QuadGenerator> {
    ((m < 0) == m_neg && (n < 0) == n_neg).then(|| QuadGenerator::new(s, m, t, n))
}

fn series_side(
    case: &Prop1Case,
    (a, b, u, v): (usize, usize, usize, usize),
    space: &BilinearSpace,
    ex: &Expansions,
) -> QuadElement {
    let (m, n, p, q) = case.modes;
    let g = |i, j| space.entry(i, j).clone();
    let half = frac(1, 2);
    let mut out = QuadElement::zero();
    let mut add = |scalar: Rational, factor: Rational, gen: Option<QuadGenerator>| {
        let c = scalar * factor;
        if let (false, Some(gen)) = (c.is_zero(), gen) {
            out.add_generator(gen, c);
        }
    };
    match case.family {
        Prop1Family::PlusMinus => {
            add(&half * g(b, v), coeff_at(&ex.yw, &[(Y, n), (W, q)]), part(u, p, a, m, true, false));
            add(&half * g(a, v), coeff_at(&ex.xw, &[(X, m), (W, q)]), part(u, p, b, n, true, false));
            add(&half * g(a, u), coeff_at(&ex.xz, &[(X, m), (Z, p)]), part(v, q, b, n, true, false));
            add(&half * g(b, u), coeff_at(&ex.yz, &[(Y, n), (Z, p)]), part(v, q, a, m, true, false));
            let all = [(X, m), (Y, n), (Z, p), (W, q)];
            let quarter = frac(1, 4);
            out.central = &quarter * g(a, u) * g(b, v) * coeff_at(&ex.xz_yw, &all)
                + &quarter * g(a, v) * g(b, u) * coeff_at(&ex.xw_yz, &all);
        }
        Prop1Family::PlusMixed => {
            add(&half * g(a, u), coeff_at(&ex.xz, &[(X, m), (Z, p)]), part(b, n, v, q, false, false));
            add(&half * g(b, u), coeff_at(&ex.yz, &[(Y, n), (Z, p)]), part(a, m, v, q, false, false));
        }
        Prop1Family::PlusPlus => {}
    }
    out
}

/// Compares `[L_{a,b}(m,n), L_{u,v}(p,q)]_new` with the series coefficient
/// for every basis quadruple and every case. Cases outside their family's
/// sign pattern are counted as skipped.
pub fn check_prop1(space: &BilinearSpace, cases: &[Prop1Case]) -> Result<Prop1Report> {
    let max_mode = cases
        .iter()
        .map(|c| {
            let (m, n, p, q) = c.modes;
            [m, n, p, q].iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    // each exponent is -mode-1, so |e| <= max+1 per variable
    let bound = 4 * (max_mode as u32 + 1);
    let ex = Expansions {
        xz: expand(&[(X, Z)], bound)?,
        yw: expand(&[(Y, W)], bound)?,
        xw: expand(&[(X, W)], bound)?,
        yz: expand(&[(Y, Z)], bound)?,
        xz_yw: expand(&[(X, Z), (Y, W)], bound)?,
        xw_yz: expand(&[(X, W), (Y, Z)], bound)?,
    };

    let d = space.dim();
    let mut report = Prop1Report { checked: 0, nonzero: 0, skipped: 0, mismatch: None };
    for case in cases {
        if !case.in_family() {
            report.skipped += 1;
            continue;
        }
        let (m, n, p, q) = case.modes;
        for a in 0..d {
            for b in 0..d {
                for u in 0..d {
                    for v in 0..d {
                        let lhs = bracket_new(&QuadGenerator::new(a, m, b, n), &QuadGenerator::new(u, p, v, q), space);
                        let rhs = series_side(case, (a, b, u, v), space, &ex);
                        report.checked += 1;
                        report.nonzero += usize::from(!lhs.is_zero());
                        if lhs != rhs {
                            report.mismatch = Some(Prop1Mismatch {
                                case: *case,
                                basis: (a, b, u, v),
                                bracket: lhs.to_string(),
                                series: rhs.to_string(),
                            });
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .quad
            .iter()
            .map(|(g, c)| format!("{} L(e{},{};e{},{})", format_rational(c), g.i + 1, g.m, g.j + 1, g.n))
            .collect();
        if !self.central.is_zero() {
            parts.push(format!("{} c", format_rational(&self.central)));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    fn gram2() -> BilinearSpace {
        BilinearSpace::new(vec![vec![int(2), int(1)], vec![int(1), int(3)]]).unwrap()
    }

    #[test]
    fn central_terms_at_first_coefficient() {
        let s = gram2();
        let case = Prop1Case { family: Prop1Family::PlusMinus, modes: (1, 1, -1, -1) };
        let report = check_prop1(&s, &[case]).unwrap();
        assert!(report.passed(), "{:?}", report.mismatch);
        assert_eq!(report.checked, 16);
        // and the central part is ¼ r [(a,u)(b,v) + (a,v)(b,u)]
        let x = bracket_new(&QuadGenerator::new(0, 1, 1, 1), &QuadGenerator::new(0, -1, 1, -1), &s);
        let g = |i, j| s.entry(i, j).clone();
        assert_eq!(x.central, frac(1, 4) * (g(0, 0) * g(1, 1) + g(0, 1) * g(1, 0)));
    }

    #[test]
    fn mixed_family_single_delta() {
        let s = gram2();
        // n + p = 0 only: ½ (b,u) n L++_{a,v}(m, q)
        let case = Prop1Case { family: Prop1Family::PlusMixed, modes: (0, 2, -2, 1) };
        assert!(check_prop1(&s, &[case]).unwrap().passed());
        let x = bracket_new(&QuadGenerator::new(0, 0, 1, 2), &QuadGenerator::new(1, -2, 0, 1), &s);
        let mut expect = QuadElement::zero();
        expect.add_generator(QuadGenerator::new(0, 0, 0, 1), frac(1, 2) * int(2) * s.entry(1, 1));
        assert_eq!(x, expect);
    }

    #[test]
    fn annihilators_commute() {
        let s = gram2();
        let cases: Vec<_> = Prop1Case::window(2).into_iter().filter(|c| c.family == Prop1Family::PlusPlus).collect();
        assert!(check_prop1(&s, &cases).unwrap().passed());
    }

    #[test]
    fn full_window_small() {
        let report = check_prop1(&gram2(), &Prop1Case::window(2)).unwrap();
        assert!(report.passed(), "{:?}", report.mismatch);
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn out_of_family_cases_are_skipped() {
        let case = Prop1Case { family: Prop1Family::PlusMinus, modes: (1, 1, 1, -1) };
        let report = check_prop1(&gram2(), &[case]).unwrap();
        assert_eq!((report.checked, report.skipped), (0, 1));
    }
}
