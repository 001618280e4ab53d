//! Derangements, matching diagrams over a paired sequence, and the map
//! contracting a diagram to a derangement.
//!
//! Pairs are labelled `1..=n`. A pair `i` has two endpoints, `a_i` (side
//! [`Side::A`]) and `b_i` (side [`Side::B`]).

use std::fmt;

use crate::error::{Error, ParseError, Result};

/// A fixed-point-free permutation of `1..=n` with its cycle decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Derangement {
    // image[i - 1] = σ(i)
    image: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl Derangement {
    /// Builds from the one-line image `[σ(1), ..., σ(n)]` (1-based values).
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (k, &j) in image.iter().enumerate() {
            if j == 0 || j > n || seen[j - 1] {
                return Err(Error::InvalidDerangement(format!("{image:?} is not a permutation")));
            }
            if j == k + 1 {
                return Err(Error::InvalidDerangement(format!("{j} is a fixed point")));
            }
            seen[j - 1] = true;
        }
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i - 1] {
                visited[i - 1] = true;
                cycle.push(i);
                i = image[i - 1];
            }
            cycles.push(cycle);
        }
        Ok(Derangement { image, cycles })
    }

    /// Builds from cycles, e.g. `[[1, 2], [3, 5, 6, 4]]` for `(12)(3564)`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image = vec![0; n];
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                if i == 0 || i > n || image[i - 1] != 0 {
                    return Err(Error::InvalidDerangement(format!("bad cycle list {cycles:?}")));
                }
                image[i - 1] = c[(k + 1) % c.len()];
            }
        }
        Self::from_image(image)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `σ(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// Disjoint cycles, each starting at its smallest label, sorted by
    /// that label.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `c(σ)`.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle lengths in ascending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// `(12)(3564)`; labels are space-separated once any exceeds 9.
    pub fn cycle_notation(&self) -> String {
        let spaced = self.n() > 9;
        self.cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", body.join(if spaced { " " } else { "" }))
            })
            .collect()
    }
}

impl fmt::Display for Derangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// All derangements of `1..=n` in lexicographic order of their images.
pub fn enumerate_derangements(n: usize) -> Vec<Derangement> {
    fn go(pos: usize, n: usize, used: &mut [bool], image: &mut Vec<usize>, out: &mut Vec<Derangement>) {
        if pos > n {
            out.push(Derangement::from_image(image.clone()).expect("valid by construction"));
            return;
        }
        for j in 1..=n {
            if j == pos || used[j - 1] {
                continue;
            }
            used[j - 1] = true;
            image.push(j);
            go(pos + 1, n, used, image, out);
            image.pop();
            used[j - 1] = false;
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        // the empty permutation has no fixed point
        out.push(Derangement { image: vec![], cycles: vec![] });
        return out;
    }
    go(1, n, &mut vec![false; n], &mut Vec::with_capacity(n), &mut out);
    out
}

pub fn cycle_count(sigma: &Derangement) -> usize {
    sigma.cycle_count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub pair: usize,
    pub side: Side,
}

impl Endpoint {
    pub fn a(pair: usize) -> Self {
        Endpoint { pair, side: Side::A }
    }

    pub fn b(pair: usize) -> Self {
        Endpoint { pair, side: Side::B }
    }

    fn slot(self) -> usize {
        2 * (self.pair - 1) + (self.side == Side::B) as usize
    }

    fn from_slot(k: usize) -> Self {
        Endpoint {
            pair: k / 2 + 1,
            side: if k.is_multiple_of(2) { Side::A } else { Side::B },
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::A => 'a',
            Side::B => 'b',
        };
        write!(f, "{s}{}", self.pair)
    }
}

/// A perfect matching of the `2n` endpoints with no edge inside a pair.
///
/// Edges are stored with the smaller endpoint first and sorted, so two
/// diagrams are equal iff their edge sets are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    edges: Vec<(Endpoint, Endpoint)>,
}

impl Diagram {
    pub fn from_edges(n: usize, edges: &[(Endpoint, Endpoint)]) -> Result<Self> {
        if edges.len() != n {
            return Err(Error::InvalidDiagram(format!("{} edges for {n} pairs", edges.len())));
        }
        let mut covered = vec![false; 2 * n];
        let mut sorted = Vec::with_capacity(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x.pair == 0 || x.pair > n {
                    return Err(Error::InvalidDiagram(format!("endpoint {x} out of range")));
                }
            }
            if u.pair == v.pair {
                return Err(Error::InvalidDiagram(format!("edge {{{u},{v}}} inside a pair")));
            }
            for x in [u, v] {
                if std::mem::replace(&mut covered[x.slot()], true) {
                    return Err(Error::InvalidDiagram(format!("endpoint {x} used twice")));
                }
            }
            sorted.push(if u < v { (u, v) } else { (v, u) });
        }
        sorted.sort_unstable();
        Ok(Diagram { n, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Endpoint, Endpoint)] {
        &self.edges
    }

    /// The endpoint matched with `x`.
    pub fn partner(&self, x: Endpoint) -> Endpoint {
        self.edges
            .iter()
            .find_map(|&(u, v)| {
                if u == x {
                    Some(v)
                } else if v == x {
                    Some(u)
                } else {
                    None
                }
            })
            .expect("every endpoint is covered")
    }

    /// `[["a1","b2"], ...]`.
    pub fn edge_labels(&self) -> Vec<[String; 2]> {
        self.edges
            .iter()
            .map(|(u, v)| [u.to_string(), v.to_string()])
            .collect()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (u, v)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{u},{v}}}")?;
        }
        f.write_str("}")
    }
}

/// Backtracking over the smallest unmatched endpoint. `accept(u, v)` can
/// veto an edge (`u < v`) during the search.
fn matchings(n: usize, accept: &dyn Fn(Endpoint, Endpoint) -> bool) -> Vec<Diagram> {
    fn go(
        used: &mut [bool],
        edges: &mut Vec<(Endpoint, Endpoint)>,
        accept: &dyn Fn(Endpoint, Endpoint) -> bool,
        out: &mut Vec<Diagram>,
    ) {
        let Some(first) = used.iter().position(|&u| !u) else {
            out.push(Diagram { n: edges.len(), edges: edges.clone() });
            return;
        };
        let u = Endpoint::from_slot(first);
        used[first] = true;
        for k in first + 1..used.len() {
            let v = Endpoint::from_slot(k);
            if used[k] || v.pair == u.pair || !accept(u, v) {
                continue;
            }
            used[k] = true;
            edges.push((u, v));
            go(used, edges, accept, out);
            edges.pop();
            used[k] = false;
        }
        used[first] = false;
    }
    let mut out = Vec::new();
    go(&mut vec![false; 2 * n], &mut Vec::with_capacity(n), accept, &mut out);
    out
}

/// Every diagram over `n` pairs, in lexicographic order of sorted edge lists.
pub fn enumerate_diagrams(n: usize) -> Vec<Diagram> {
    matchings(n, &|_, _| true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One `(ε_i, δ_i)` per pair: the signs of `a_i` and `b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignAssignment {
    pub signs: Vec<(Sign, Sign)>,
}

impl SignAssignment {
    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn get(&self, x: Endpoint) -> Sign {
        let (s, d) = self.signs[x.pair - 1];
        match x.side {
            Side::A => s,
            Side::B => d,
        }
    }

    /// All `4^n` sign assignments.
    pub fn all(n: usize) -> Vec<SignAssignment> {
        (0..1usize << (2 * n))
            .map(|bits| SignAssignment {
                signs: (0..n)
                    .map(|i| {
                        let s = |k: usize| if bits >> k & 1 == 0 { Sign::Plus } else { Sign::Minus };
                        (s(2 * i), s(2 * i + 1))
                    })
                    .collect(),
            })
            .collect()
    }
}

impl std::str::FromStr for SignAssignment {
    type Err = ParseError;

    /// Parses `(++)(--)(+-)`; `−` is accepted for minus.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::Sign(s.to_string());
        let syms: Vec<Sign> = s
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '(' | ')'))
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                _ => Err(bad()),
            })
            .collect::<Result<_, _>>()?;
        if !syms.len().is_multiple_of(2) {
            return Err(bad());
        }
        Ok(SignAssignment {
            signs: syms.chunks(2).map(|c| (c[0], c[1])).collect(),
        })
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, d) in &self.signs {
            write!(f, "({}{})", s.symbol(), d.symbol())?;
        }
        Ok(())
    }
}

/// The unique sign making `D` compatible: on every edge the endpoint in
/// the lower-numbered pair gets `+`, the other `-`.
pub fn induced_sign(d: &Diagram) -> SignAssignment {
    let mut signs = vec![(Sign::Plus, Sign::Plus); d.n];
    for &(u, v) in &d.edges {
        // u < v and they lie in different pairs, so u.pair < v.pair
        for (x, s) in [(u, Sign::Plus), (v, Sign::Minus)] {
            let slot = &mut signs[x.pair - 1];
            match x.side {
                Side::A => slot.0 = s,
                Side::B => slot.1 = s,
            }
        }
    }
    SignAssignment { signs }
}

/// Diagrams compatible with `eps`; the sign constraint prunes the search.
pub fn diagrams_for_sign(n: usize, eps: &SignAssignment) -> Vec<Diagram> {
    if eps.n() != n {
        return Vec::new();
    }
    matchings(n, &|u, v| eps.get(u) == Sign::Plus && eps.get(v) == Sign::Minus)
}

/// Contracts each pair to a node and orients every resulting cycle so that
/// it leaves its smallest node `i` along the edge at `a_i`.
pub fn diagram_to_derangement(d: &Diagram) -> Result<Derangement> {
    let n = d.n;
    if n < 2 {
        return Err(Error::TooFewPairs(n));
    }
    let mut partner = vec![Endpoint::a(1); 2 * n];
    for &(u, v) in &d.edges {
        partner[u.slot()] = v;
        partner[v.slot()] = u;
    }
    let mut image = vec![0usize; n];
    for start in 1..=n {
        if image[start - 1] != 0 {
            continue;
        }
        let mut exit = Endpoint::a(start);
        loop {
            let entry = partner[exit.slot()];
            image[exit.pair - 1] = entry.pair;
            if entry.pair == start {
                break;
            }
            exit = Endpoint { pair: entry.pair, side: entry.side.other() };
        }
    }
    Derangement::from_image(image)
}

/// All diagrams contracting to `sigma`, built cycle by cycle: each node
/// other than the cycle's smallest picks which endpoint receives the
/// incoming edge, giving `2^(n - c(σ))` diagrams.
pub fn fibre(sigma: &Derangement) -> Result<Vec<Diagram>> {
    let n = sigma.n();
    if n < 2 {
        return Err(Error::TooFewPairs(n));
    }
    let free: Vec<usize> = sigma
        .cycles()
        .iter()
        .flat_map(|c| c[1..].iter().copied())
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for bits in 0..1usize << free.len() {
        let mut entry_side = vec![Side::A; n + 1];
        for (k, &i) in free.iter().enumerate() {
            entry_side[i] = if bits >> k & 1 == 0 { Side::A } else { Side::B };
        }
        let mut edges = Vec::with_capacity(n);
        for c in sigma.cycles() {
            // the smallest node exits through a_i, so it is entered at b_i
            entry_side[c[0]] = Side::B;
            for (k, &i) in c.iter().enumerate() {
                let j = c[(k + 1) % c.len()];
                let exit = Endpoint { pair: i, side: entry_side[i].other() };
                let entry = Endpoint { pair: j, side: entry_side[j] };
                edges.push((exit, entry));
            }
        }
        out.push(Diagram::from_edges(n, &edges)?);
    }
    out.sort();
    Ok(out)
}
