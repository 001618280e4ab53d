//! The closed-form correlators: the sum over derangements for the
//! single-variable fields and the sum over diagrams for the two-variable
//! series, kept as structured term lists.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    diagram_to_derangement, enumerate_derangements, enumerate_diagrams, Derangement, Diagram,
    Endpoint, Side,
};
use crate::error::{Error, ParseError, Result};
use crate::jordan::{jordan_generator, trace_of_product, BilinearSpace, Vector};
use crate::scalars::{format_rational, frac, inv_pow2, CentralPoly, Rational};

/// The data `T = (a_1,b_1)...(a_n,b_n)` together with its space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSequence {
    space: BilinearSpace,
    pairs: Vec<(Vector, Vector)>,
}

impl PairSequence {
    pub fn new(space: BilinearSpace, pairs: Vec<(Vector, Vector)>) -> Result<Self> {
        for (a, b) in &pairs {
            space.check(a)?;
            space.check(b)?;
        }
        Ok(PairSequence { space, pairs })
    }

    /// `n` copies of `(e, e)` with `(e, e) = 1` in one dimension.
    pub fn virasoro(n: usize) -> Self {
        let e = Vector::basis(1, 0);
        PairSequence {
            space: BilinearSpace::identity(1),
            pairs: vec![(e.clone(), e); n],
        }
    }

    pub fn space(&self) -> &BilinearSpace {
        &self.space
    }

    pub fn pairs(&self) -> &[(Vector, Vector)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The vector sitting at an endpoint.
    pub fn vector(&self, x: Endpoint) -> &Vector {
        let (a, b) = &self.pairs[x.pair - 1];
        match x.side {
            Side::A => a,
            Side::B => b,
        }
    }

    /// Reorders the pairs: new pair `k` is old pair `perm[k]` (0-based).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        PairSequence {
            space: self.space.clone(),
            pairs: perm.iter().map(|&k| self.pairs[k].clone()).collect(),
        }
    }

    pub fn to_file(&self) -> SequenceFile {
        SequenceFile {
            dim: self.space.dim(),
            gram: self
                .space
                .gram()
                .iter()
                .map(|row| Vector::new(row.clone()))
                .collect(),
            pairs: self.pairs.clone(),
        }
    }
}

/// On-disk form: `{"dim": d, "gram": [[...]], "pairs": [[a, b], ...]}`,
/// rationals as `"p/q"` strings (plain integers are accepted too).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SequenceFile {
    pub dim: usize,
    pub gram: Vec<Vector>,
    pub pairs: Vec<(Vector, Vector)>,
}

impl TryFrom<SequenceFile> for PairSequence {
    type Error = Error;

    fn try_from(f: SequenceFile) -> Result<Self> {
        if f.gram.len() != f.dim {
            return Err(Error::DimensionMismatch { expected: f.dim, found: f.gram.len() });
        }
        let space = BilinearSpace::new(f.gram.into_iter().map(|v| v.0).collect())?;
        PairSequence::new(space, f.pairs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    Z,
    W,
}

/// A formal variable `z_i` (attached to `a_i`) or `w_i` (attached to `b_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub kind: VarKind,
    pub index: usize,
}

impl Var {
    pub fn z(index: usize) -> Self {
        Var { kind: VarKind::Z, index }
    }

    pub fn w(index: usize) -> Self {
        Var { kind: VarKind::W, index }
    }

    pub fn of_endpoint(x: Endpoint) -> Self {
        match x.side {
            Side::A => Var::z(x.pair),
            Side::B => Var::w(x.pair),
        }
    }

    fn on_diagonal(self) -> Self {
        Var::z(self.index)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            VarKind::Z => 'z',
            VarKind::W => 'w',
        };
        write!(f, "{k}{}", self.index)
    }
}

impl FromStr for Var {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let bad = || ParseError::Variable(s.to_string());
        let kind = match t.chars().next() {
            Some('z') => VarKind::Z,
            Some('w') => VarKind::W,
            _ => return Err(bad()),
        };
        let index: usize = t[1..].parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Var { kind, index })
    }
}

/// `1 / (left - right)^(2 * multiplicity)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqDiffFactor {
    pub left: Var,
    pub right: Var,
    pub multiplicity: u32,
}

impl SqDiffFactor {
    pub fn new(left: Var, right: Var) -> Self {
        debug_assert_ne!(left, right);
        SqDiffFactor { left, right, multiplicity: 1 }
    }

    fn unordered(&self) -> (Var, Var) {
        if self.left <= self.right {
            (self.left, self.right)
        } else {
            (self.right, self.left)
        }
    }

    pub fn power(&self) -> u32 {
        2 * self.multiplicity
    }

    pub fn to_json(&self) -> (String, String, u32) {
        (self.left.to_string(), self.right.to_string(), self.power())
    }
}

impl fmt::Display for SqDiffFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}-{})^{}", self.left, self.right, self.power())
    }
}

/// Folds repeated factors (in either orientation) into multiplicities,
/// keeping the first orientation seen.
fn merge_factors(factors: impl IntoIterator<Item = SqDiffFactor>) -> Vec<SqDiffFactor> {
    let mut out: Vec<SqDiffFactor> = Vec::new();
    for f in factors {
        match out.iter_mut().find(|g| g.unordered() == f.unordered()) {
            Some(g) => g.multiplicity += f.multiplicity,
            None => out.push(f),
        }
    }
    out
}

/// `scalar · r^r_power / ∏ factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelatorTerm {
    /// The derangement this term belongs to (`σ_D` for diagram terms).
    pub cycles: String,
    /// The diagram, for terms of the two-variable sum.
    pub diagram: Option<Diagram>,
    pub r_power: usize,
    pub scalar: Rational,
    pub denominator: Vec<SqDiffFactor>,
}

impl CorrelatorTerm {
    pub fn coefficient(&self) -> CentralPoly {
        CentralPoly::monomial(self.scalar.clone(), self.r_power)
    }

    /// Orientation-free form of the denominator, for grouping.
    pub fn denominator_key(&self) -> Vec<((Var, Var), u32)> {
        let mut k: Vec<_> = merge_factors(self.denominator.iter().copied())
            .iter()
            .map(|f| (f.unordered(), f.multiplicity))
            .collect();
        k.sort_unstable();
        k
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.denominator.iter().flat_map(|f| [f.left, f.right]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn denominator_text(&self) -> String {
        self.denominator.iter().map(ToString::to_string).collect()
    }

    pub fn to_json(&self) -> TermJson {
        TermJson {
            cycles: self.cycles.clone(),
            edges: self.diagram.as_ref().map(Diagram::edge_labels),
            r_power: self.r_power,
            coefficient: format_rational(&self.scalar),
            denominator: self.denominator.iter().map(SqDiffFactor::to_json).collect(),
        }
    }
}

impl fmt::Display for CorrelatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient())?;
        if !self.denominator.is_empty() {
            write!(f, " / {}", self.denominator_text())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub cycles: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edges: Option<Vec<[String; 2]>>,
    pub r_power: usize,
    pub coefficient: String,
    pub denominator: Vec<(String, String, u32)>,
}

/// `Γ(σ; Z)` as factors `(z_i - z_σ(i))^2`, walked cycle by cycle.
pub fn cycle_denominator(sigma: &Derangement) -> Vec<SqDiffFactor> {
    merge_factors(sigma.cycles().iter().flat_map(|c| {
        c.iter()
            .map(|&i| SqDiffFactor::new(Var::z(i), Var::z(sigma.apply(i))))
    }))
}

/// Derangements in display order: by cycle type, then cycle notation.
pub fn derangements_in_display_order(n: usize) -> Vec<Derangement> {
    let mut all = enumerate_derangements(n);
    all.sort_by_cached_key(|s| (s.cycle_type(), s.cycle_notation()));
    all
}

/// `Γ(σ, T) = 2^(-s-n) ∏_cycles Tr(L_{a_k1,b_k1} ... L_{a_kt,b_kt})`.
pub fn gamma_sigma_t(sigma: &Derangement, t: &PairSequence) -> Result<Rational> {
    let n = t.len();
    if sigma.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: sigma.n() });
    }
    let gens: Vec<_> = t.pairs.iter().map(|(a, b)| jordan_generator(a, b)).collect();
    let mut acc = inv_pow2((sigma.cycle_count() + n) as u32);
    for c in sigma.cycles() {
        let word: Vec<_> = c.iter().map(|&k| &gens[k - 1]).collect();
        acc *= trace_of_product(&word, &t.space)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// A derangement term with its trace data left symbolic, as in
/// `1/64 Tr(L1 L2)Tr(L3 L4) r^2 / (z1-z2)^4(z3-z4)^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTerm {
    pub sigma: Derangement,
    pub prefactor: Rational,
    pub r_power: usize,
    pub denominator: Vec<SqDiffFactor>,
}

impl SymbolicTerm {
    pub fn traces(&self) -> String {
        self.sigma
            .cycles()
            .iter()
            .map(|c| {
                let word: Vec<String> = c.iter().map(|k| format!("L{k}")).collect();
                format!("Tr({})", word.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for SymbolicTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", format_rational(&self.prefactor), self.traces())?;
        match self.r_power {
            0 => {}
            1 => f.write_str(" r")?,
            k => write!(f, " r^{k}")?,
        }
        if !self.denominator.is_empty() {
            f.write_str(" / ")?;
            for d in &self.denominator {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

/// The derangement sum with the traces unevaluated, in display order.
pub fn theorem1_symbolic(n: usize) -> Vec<SymbolicTerm> {
    derangements_in_display_order(n)
        .into_iter()
        .map(|sigma| SymbolicTerm {
            prefactor: inv_pow2((sigma.cycle_count() + n) as u32),
            r_power: sigma.cycle_count(),
            denominator: cycle_denominator(&sigma),
            sigma,
        })
        .collect()
}

/// The single-variable correlator as a sum over derangements; zero terms
/// are dropped.
pub fn theorem1_terms(t: &PairSequence) -> Result<Vec<CorrelatorTerm>> {
    let mut out = Vec::new();
    for sigma in derangements_in_display_order(t.len()) {
        let scalar = gamma_sigma_t(&sigma, t)?;
        if scalar.is_zero() {
            continue;
        }
        out.push(CorrelatorTerm {
            cycles: sigma.cycle_notation(),
            diagram: None,
            r_power: sigma.cycle_count(),
            scalar,
            denominator: cycle_denominator(&sigma),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeWeightKind {
    /// `1 / (x - y)^2`
    K,
    /// `(u, v) / 2 / (x - y)^2`
    Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeight {
    pub scalar: Rational,
    pub factor: SqDiffFactor,
}

/// `K(e; Z, W)` or `Q(e; Z, W)` for an edge between distinct pairs.
pub fn edge_weight(
    edge: (Endpoint, Endpoint),
    t: &PairSequence,
    kind: EdgeWeightKind,
) -> Result<EdgeWeight> {
    let (u, v) = edge;
    if u.pair == v.pair {
        return Err(Error::InvalidDiagram(format!("edge {{{u},{v}}} inside a pair")));
    }
    for x in [u, v] {
        if x.pair == 0 || x.pair > t.len() {
            return Err(Error::InvalidDiagram(format!("endpoint {x} out of range")));
        }
    }
    let scalar = match kind {
        EdgeWeightKind::K => Rational::one(),
        EdgeWeightKind::Q => frac(1, 2) * t.space.pairing(t.vector(u), t.vector(v))?,
    };
    Ok(EdgeWeight {
        scalar,
        factor: SqDiffFactor::new(Var::of_endpoint(u), Var::of_endpoint(v)),
    })
}

/// `Γ(D) = ∏_{edges} (u, v)`.
pub fn gamma_diagram(d: &Diagram, t: &PairSequence) -> Result<Rational> {
    let mut acc = Rational::one();
    for &(u, v) in d.edges() {
        acc *= t.space.pairing(t.vector(u), t.vector(v))?;
    }
    Ok(acc)
}

/// The two-variable correlator as a sum over diagrams: each diagram
/// contributes `r^c(σ_D) ∏ Q(e)`. For `n = 0` this is the single empty term.
pub fn prop2_terms(t: &PairSequence) -> Result<Vec<CorrelatorTerm>> {
    let n = t.len();
    if n == 0 {
        return Ok(vec![CorrelatorTerm {
            cycles: String::new(),
            diagram: None,
            r_power: 0,
            scalar: Rational::one(),
            denominator: vec![],
        }]);
    }
    let mut out = Vec::new();
    for d in enumerate_diagrams(n) {
        let mut scalar = Rational::one();
        let mut denominator = Vec::with_capacity(n);
        for &e in d.edges() {
            let w = edge_weight(e, t, EdgeWeightKind::Q)?;
            scalar *= w.scalar;
            denominator.push(w.factor);
        }
        if scalar.is_zero() {
            continue;
        }
        let sigma = diagram_to_derangement(&d)?;
        out.push(CorrelatorTerm {
            cycles: sigma.cycle_notation(),
            r_power: sigma.cycle_count(),
            diagram: Some(d),
            scalar,
            denominator,
        });
    }
    Ok(out)
}

/// Substitutes `w_i := z_i` in every term.
pub fn restrict_to_diagonal(terms: &[CorrelatorTerm]) -> Vec<CorrelatorTerm> {
    terms
        .iter()
        .map(|t| CorrelatorTerm {
            denominator: merge_factors(t.denominator.iter().map(|f| SqDiffFactor {
                left: f.left.on_diagonal(),
                right: f.right.on_diagonal(),
                multiplicity: f.multiplicity,
            })),
            ..t.clone()
        })
        .collect()
}

/// Sums coefficients of terms sharing a `cycles` label.
pub fn group_by_cycles(terms: &[CorrelatorTerm]) -> BTreeMap<String, CentralPoly> {
    let mut out: BTreeMap<String, CentralPoly> = BTreeMap::new();
    for t in terms {
        *out.entry(t.cycles.clone()).or_default() += &t.coefficient();
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Σ coefficient / ∏ (x - y)^(2m)` at a point, keeping `r` symbolic.
pub fn evaluate_terms(
    terms: &[CorrelatorTerm],
    point: &BTreeMap<Var, Rational>,
) -> Result<CentralPoly> {
    let mut acc = CentralPoly::zero();
    for t in terms {
        let mut denom = Rational::one();
        for f in &t.denominator {
            let x = point.get(&f.left).ok_or_else(|| Error::MissingVariable(f.left.to_string()))?;
            let y = point.get(&f.right).ok_or_else(|| Error::MissingVariable(f.right.to_string()))?;
            let diff = x - y;
            if diff.is_zero() {
                return Err(Error::Pole { left: f.left.to_string(), right: f.right.to_string() });
            }
            denom *= num_traits::pow(diff, f.power() as usize);
        }
        acc += &t.coefficient().scale(&(Rational::one() / denom));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    fn v(xs: &[i64]) -> Vector {
        Vector::new(xs.iter().map(|&x| int(x)).collect())
    }

    fn generic2() -> PairSequence {
        let g = BilinearSpace::new(vec![vec![int(2), int(1)], vec![int(1), int(3)]]).unwrap();
        PairSequence::new(g, vec![(v(&[1, 2]), v(&[1, 1])), (v(&[3, -1]), v(&[1, 1]))]).unwrap()
    }

    /// `((a1,a2)(b1,b2) + (a1,b2)(b1,a2)) / 4` computed from raw pairings.
    fn n2_coefficient(t: &PairSequence) -> Rational {
        let p = |x: &Vector, y: &Vector| t.space().pairing(x, y).unwrap();
        let ((a1, b1), (a2, b2)) = (&t.pairs()[0], &t.pairs()[1]);
        (p(a1, a2) * p(b1, b2) + p(a1, b2) * p(b1, a2)) * frac(1, 4)
    }

    #[test]
    fn gamma_examples() {
        let vir = PairSequence::virasoro(4);
        for sigma in enumerate_derangements(4) {
            let expect = num_traits::pow(frac(1, 2), sigma.cycle_count());
            assert_eq!(gamma_sigma_t(&sigma, &vir).unwrap(), expect);
        }
        let t = generic2();
        let s = &enumerate_derangements(2)[0];
        assert_eq!(gamma_sigma_t(s, &t).unwrap(), n2_coefficient(&t));
        let s = Derangement::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(gamma_sigma_t(&s, &vir).unwrap(), frac(1, 4));
    }

    #[test]
    fn theorem1_small_cases() {
        let t1 = PairSequence::virasoro(1);
        assert!(theorem1_terms(&t1).unwrap().is_empty());

        let t = generic2();
        let terms = theorem1_terms(&t).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coefficient(), CentralPoly::monomial(n2_coefficient(&t), 1));
        assert_eq!(terms[0].denominator_text(), "(z1-z2)^4");

        let t0 = PairSequence::virasoro(0);
        let terms = theorem1_terms(&t0).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coefficient(), CentralPoly::one());
    }

    #[test]
    fn theorem1_n4_structure() {
        let sym = theorem1_symbolic(4);
        let lines: Vec<String> = sym.iter().map(ToString::to_string).collect();
        assert_eq!(lines[0], "1/64 Tr(L1 L2)Tr(L3 L4) r^2 / (z1-z2)^4(z3-z4)^4");
        assert_eq!(lines[3], "1/32 Tr(L1 L2 L3 L4) r / (z1-z2)^2(z2-z3)^2(z3-z4)^2(z4-z1)^2");
        assert_eq!(lines[4], "1/32 Tr(L1 L2 L4 L3) r / (z1-z2)^2(z2-z4)^2(z4-z3)^2(z3-z1)^2");
    }

    #[test]
    fn edge_weight_examples() {
        let t = generic2();
        let p = |x: &Vector, y: &Vector| t.space().pairing(x, y).unwrap();
        let w = edge_weight((Endpoint::a(1), Endpoint::b(2)), &t, EdgeWeightKind::Q).unwrap();
        assert_eq!(w.scalar, frac(1, 2) * p(&t.pairs()[0].0, &t.pairs()[1].1));
        assert_eq!(w.factor.to_string(), "(z1-w2)^2");
        let k = edge_weight((Endpoint::a(1), Endpoint::a(2)), &t, EdgeWeightKind::K).unwrap();
        assert_eq!((k.scalar, k.factor.to_string()), (int(1), "(z1-z2)^2".to_string()));

        let id = BilinearSpace::identity(2);
        let orth = PairSequence::new(id, vec![(v(&[1, 0]), v(&[1, 0])), (v(&[0, 1]), v(&[0, 1]))]).unwrap();
        let q = edge_weight((Endpoint::b(1), Endpoint::b(2)), &orth, EdgeWeightKind::Q).unwrap();
        assert!(q.scalar.is_zero());
        assert!(edge_weight((Endpoint::a(1), Endpoint::b(1)), &orth, EdgeWeightKind::Q).is_err());
    }

    #[test]
    fn prop2_small_cases() {
        let t = generic2();
        let p = |x: &Vector, y: &Vector| t.space().pairing(x, y).unwrap();
        let ((a1, b1), (a2, b2)) = (&t.pairs()[0], &t.pairs()[1]);
        let terms = prop2_terms(&t).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].scalar, p(a1, a2) * p(b1, b2) * frac(1, 4));
        assert_eq!(terms[0].denominator_text(), "(z1-z2)^2(w1-w2)^2");
        assert_eq!(terms[1].scalar, p(a1, b2) * p(b1, a2) * frac(1, 4));
        assert_eq!(terms[1].denominator_text(), "(z1-w2)^2(w1-z2)^2");
        assert!(terms.iter().all(|t| t.r_power == 1));

        let empty = prop2_terms(&PairSequence::virasoro(0)).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].coefficient(), CentralPoly::one());
        assert!(prop2_terms(&PairSequence::virasoro(1)).unwrap().is_empty());
    }

    #[test]
    fn diagonal_restriction_groups_into_theorem1() {
        let t = PairSequence::virasoro(4);
        let collapsed = restrict_to_diagonal(&prop2_terms(&t).unwrap());
        let t1 = theorem1_terms(&t).unwrap();
        let grouped = group_by_cycles(&collapsed);
        assert_eq!(grouped.len(), t1.len());
        for term in &t1 {
            assert_eq!(grouped[&term.cycles], term.coefficient());
        }
        for c in &collapsed {
            let matching = t1.iter().find(|t| t.cycles == c.cycles).unwrap();
            assert_eq!(c.denominator_key(), matching.denominator_key());
        }
    }

    #[test]
    fn evaluation_examples() {
        let vir2 = theorem1_terms(&PairSequence::virasoro(2)).unwrap();
        let pt: BTreeMap<Var, Rational> = [(Var::z(1), int(1)), (Var::z(2), int(0))].into();
        assert_eq!(evaluate_terms(&vir2, &pt).unwrap(), CentralPoly::monomial(frac(1, 2), 1));
        assert_eq!(evaluate_terms(&vir2, &pt).unwrap().eval(&int(2)), int(1));

        let vir1 = theorem1_terms(&PairSequence::virasoro(1)).unwrap();
        assert!(evaluate_terms(&vir1, &pt).unwrap().is_zero());

        let pole: BTreeMap<Var, Rational> = [(Var::z(1), int(3)), (Var::z(2), int(3))].into();
        assert!(matches!(evaluate_terms(&vir2, &pole), Err(Error::Pole { .. })));
        let missing: BTreeMap<Var, Rational> = [(Var::z(1), int(3))].into();
        assert!(matches!(evaluate_terms(&vir2, &missing), Err(Error::MissingVariable(_))));
    }

    #[test]
    fn n4_virasoro_matches_printed_display() {
        // the nine printed terms, evaluated independently at z = (3, 2, 1, 0), r = 1
        let z = [int(3), int(2), int(1), int(0)];
        let d = |i: usize, j: usize| &z[i - 1] - &z[j - 1];
        let sq = |x: Rational| &x * &x;
        let quart = |x: Rational| sq(sq(x));
        let cyc = |c: [usize; 4]| {
            sq(d(c[0], c[1])) * sq(d(c[1], c[2])) * sq(d(c[2], c[3])) * sq(d(c[3], c[0]))
        };
        let mut expect = frac(1, 4) / (quart(d(1, 2)) * quart(d(3, 4)))
            + frac(1, 4) / (quart(d(1, 3)) * quart(d(2, 4)))
            + frac(1, 4) / (quart(d(1, 4)) * quart(d(2, 3)));
        for c in [[1, 2, 3, 4], [1, 2, 4, 3], [1, 3, 2, 4], [1, 3, 4, 2], [1, 4, 2, 3], [1, 4, 3, 2]] {
            expect += frac(1, 2) / cyc(c);
        }
        let pt: BTreeMap<Var, Rational> = (1..=4).map(|i| (Var::z(i), z[i - 1].clone())).collect();
        let got = evaluate_terms(&theorem1_terms(&PairSequence::virasoro(4)).unwrap(), &pt).unwrap();
        assert_eq!(got.eval(&int(1)), expect);
    }

    #[test]
    fn var_parsing() {
        assert_eq!("z3".parse::<Var>().unwrap(), Var::z(3));
        assert_eq!("w12".parse::<Var>().unwrap(), Var::w(12));
        assert!("x1".parse::<Var>().is_err());
        assert!("z0".parse::<Var>().is_err());
    }

    #[test]
    fn sequence_file_round_trip() {
        let t = generic2();
        let js = serde_json::to_string(&t.to_file()).unwrap();
        let back: SequenceFile = serde_json::from_str(&js).unwrap();
        assert_eq!(PairSequence::try_from(back).unwrap(), t);
        let raw = r#"{"dim": 1, "gram": [["1"]], "pairs": [[[1], ["1/2"]]]}"#;
        let f: SequenceFile = serde_json::from_str(raw).unwrap();
        assert_eq!(PairSequence::try_from(f).unwrap().pairs()[0].1, Vector::new(vec![frac(1, 2)]));
        let bad = r#"{"dim": 2, "gram": [["1"]], "pairs": []}"#;
        let f: SequenceFile = serde_json::from_str(bad).unwrap();
        assert!(PairSequence::try_from(f).is_err());
    }
}
