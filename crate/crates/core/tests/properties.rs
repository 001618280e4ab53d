#![allow(clippy::needless_range_loop)]

use jordan_voa::combinatorics::{
    diagram_to_derangement, diagrams_for_sign, enumerate_diagrams, induced_sign, Diagram, Endpoint, SignAssignment,
};
use jordan_voa::fock::{bracket_elements, bracket_new, FockModule, FockState, QuadElement, QuadGenerator};
use jordan_voa::jordan::{jordan_generator, trace_of_product};
use jordan_voa::scalars::{frac, CentralPoly};
use jordan_voa::{BilinearSpace, Rational, TensorElement, Vector};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn space(d: usize) -> impl Strategy<Value = BilinearSpace> {
    prop::collection::vec(rational(), d * (d + 1) / 2).prop_filter_map("degenerate Gram", move |upper| {
        let mut g = vec![vec![Rational::default(); d]; d];
        let mut it = upper.into_iter();
        for i in 0..d {
            for j in i..d {
                let x = it.next().unwrap();
                g[i][j] = x.clone();
                g[j][i] = x;
            }
        }
        BilinearSpace::new(g).ok()
    })
}

fn any_space() -> impl Strategy<Value = BilinearSpace> {
    prop_oneof![space(1), space(2)]
}

fn generator(d: usize, modes: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = QuadGenerator> {
    (0..d, modes.clone(), 0..d, modes).prop_map(|(i, m, j, n)| QuadGenerator::new(i, m, j, n))
}

fn space_and_generators(k: usize) -> impl Strategy<Value = (BilinearSpace, Vec<QuadGenerator>)> {
    any_space().prop_flat_map(move |s| {
        let d = s.dim();
        (Just(s), prop::collection::vec(generator(d, -4..=4), k))
    })
}

fn vector(d: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), d).prop_map(Vector::new)
}

fn cycle_count(d: &Diagram) -> usize {
    diagram_to_derangement(d).unwrap().cycle_count()
}

// pairs i, i+1 of a diagram become the single pair (a_{i+1}, b_i)
fn contract_edge(d: &Diagram, i: usize) -> Option<Diagram> {
    let e = (Endpoint::a(i), Endpoint::b(i + 1));
    if !d.edges().contains(&e) {
        return None;
    }
    let relabel = |x: Endpoint| match x.pair {
        p if p < i => x,
        p if p == i => Endpoint::b(i),
        p if p == i + 1 => Endpoint::a(i),
        p => Endpoint { pair: p - 1, side: x.side },
    };
    let edges: Vec<_> = d.edges().iter().filter(|&&f| f != e).map(|&(u, v)| (relabel(u), relabel(v))).collect();
    // a 2-cycle through e would close into a loop on the merged pair
    Diagram::from_edges(d.n() - 1, &edges).ok()
}

fn remove_ladder(d: &Diagram, i: usize) -> Option<Diagram> {
    let e1 = (Endpoint::a(i), Endpoint::a(i + 1));
    let e2 = (Endpoint::b(i), Endpoint::b(i + 1));
    if !(d.edges().contains(&e1) && d.edges().contains(&e2)) {
        return None;
    }
    let relabel = |x: Endpoint| if x.pair > i + 1 { Endpoint { pair: x.pair - 2, side: x.side } } else { x };
    let edges: Vec<_> =
        d.edges().iter().filter(|&&f| f != e1 && f != e2).map(|&(u, v)| (relabel(u), relabel(v))).collect();
    Some(Diagram::from_edges(d.n() - 2, &edges).unwrap())
}

fn diagram(max_n: usize) -> impl Strategy<Value = Diagram> {
    (2..=max_n, any::<prop::sample::Index>()).prop_map(|(n, ix)| {
        let all = enumerate_diagrams(n);
        all[ix.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bracket_is_antisymmetric((s, g) in space_and_generators(2)) {
        let x = bracket_new(&g[0], &g[1], &s);
        let y = bracket_new(&g[1], &g[0], &s);
        prop_assert_eq!(x, y.scale(&frac(-1, 1)));
    }

    #[test]
    fn bracket_satisfies_jacobi((s, g) in space_and_generators(3)) {
        let e = |k: usize| QuadElement::generator(g[k]);
        let mut total = QuadElement::zero();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let inner = bracket_elements(&e(b), &e(c), &s);
            total.add_scaled(&bracket_elements(&e(a), &inner, &s), &frac(1, 1));
        }
        prop_assert!(total.is_zero(), "{}", total);
    }

    #[test]
    fn creation_generators_commute(s in any_space(), seed in any::<[u8; 4]>()) {
        let d = s.dim();
        let m = |k: u8| -(k as i64 % 4) - 1;
        let g = QuadGenerator::new(seed[0] as usize % d, m(seed[1]), seed[2] as usize % d, m(seed[3]));
        let h = QuadGenerator::new(seed[2] as usize % d, m(seed[0]), seed[1] as usize % d, m(seed[2]));
        prop_assert!(bracket_new(&g, &h, &s).is_zero());
    }

    #[test]
    fn trace_is_cyclic_and_reversal_invariant(
        (s, vs) in any_space().prop_flat_map(|s| { let d = s.dim(); (Just(s), prop::collection::vec(vector(d), 2..=10)) }),
        shift in 0usize..5,
    ) {
        let word: Vec<TensorElement> = vs.chunks(2).filter(|c| c.len() == 2).map(|c| jordan_generator(&c[0], &c[1])).collect();
        let refs: Vec<&TensorElement> = word.iter().collect();
        let t = trace_of_product(&refs, &s).unwrap();
        let mut rotated = refs.clone();
        rotated.rotate_left(shift % refs.len());
        prop_assert_eq!(&t, &trace_of_product(&rotated, &s).unwrap());
        let reversed: Vec<&TensorElement> = refs.iter().rev().copied().collect();
        prop_assert_eq!(&t, &trace_of_product(&reversed, &s).unwrap());
    }

    #[test]
    fn grading_operator_measures_degree(
        (s, gens) in any_space().prop_flat_map(|s| { let d = s.dim(); (Just(s), prop::collection::vec(generator(d, -3..=-1), 1..=3)) }),
    ) {
        let deg: i64 = gens.iter().map(QuadGenerator::degree).sum();
        let psi = FockState::monomial(gens, CentralPoly::one());
        let mut fm = FockModule::new(s);
        let mut expect = FockState::zero();
        expect.add_scaled(&psi, &CentralPoly::constant(frac(deg, 1)));
        prop_assert_eq!(fm.weight_operator(&psi).unwrap(), expect);
    }

    #[test]
    fn griess_vectors_have_weight_two((s, a, b) in any_space().prop_flat_map(|s| { let d = s.dim(); (Just(s), vector(d), vector(d)) })) {
        let x = QuadElement::from_vectors(&a, &b, -1, -1);
        let mut fm = FockModule::new(s);
        let psi = fm.apply_element(&x, &FockState::vacuum()).unwrap();
        let mut expect = FockState::zero();
        expect.add_scaled(&psi, &CentralPoly::constant(frac(2, 1)));
        prop_assert_eq!(fm.weight_operator(&psi).unwrap(), expect);
    }

    #[test]
    fn every_diagram_has_exactly_one_compatible_sign(d in diagram(5), bits in any::<u16>()) {
        let n = d.n();
        let eps = induced_sign(&d);
        prop_assert!(diagrams_for_sign(n, &eps).contains(&d));
        let other = &SignAssignment::all(n)[bits as usize % (1 << (2 * n))];
        let listed = diagrams_for_sign(n, other);
        let filtered: Vec<Diagram> = enumerate_diagrams(n).into_iter().filter(|x| &induced_sign(x) == other).collect();
        prop_assert_eq!(listed, filtered);
    }

    #[test]
    fn deleting_a_bridge_keeps_the_cycle_count(d in diagram(6)) {
        for i in 1..d.n() {
            if let Some(d1) = contract_edge(&d, i) {
                prop_assert_eq!(cycle_count(&d1), cycle_count(&d));
            }
        }
    }

    #[test]
    fn deleting_a_ladder_drops_one_cycle(d in diagram(6)) {
        for i in 1..d.n() {
            if let Some(d2) = remove_ladder(&d, i) {
                let c2 = if d2.n() == 0 { 0 } else { cycle_count(&d2) };
                prop_assert_eq!(c2 + 1, cycle_count(&d));
            }
        }
    }
}
