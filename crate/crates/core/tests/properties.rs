//! Property tests for the invariants of fields, groups, solubilizers, graphs
//! and file formats.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use solubilizer::field::{prime_power_parts, FiniteField};
use solubilizer::graph::{
    greedy_coloring, hamiltonian_search, is_proper_coloring, validate_cycle, SolubilityGraph, VertexOrder,
};
use solubilizer::group::Group;
use solubilizer::oracle::counting_lemma;
use solubilizer::report::{parse_adjacency, write_adjacency};
use solubilizer::solubilizer::{classify_size, in_solubilizer, solubilizer_of_element, SizeKind, SolubilizerRecord};
use solubilizer::subgroup::closure;

struct Fixture {
    g: Group,
    records: Vec<SolubilizerRecord>,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        ["psl2:7", "psl2:8", "psl2:27", "psl3:3"]
            .iter()
            .map(|s| {
                let g = common::group(s);
                let records = common::records(&g);
                Fixture { g, records }
            })
            .collect()
    })
}

const FIELDS: [u64; 10] = [4, 5, 8, 9, 16, 27, 81, 1024, 6561, 16384];

fn field(i: usize) -> &'static FiniteField {
    static F: OnceLock<Vec<FiniteField>> = OnceLock::new();
    &F.get_or_init(|| FIELDS.iter().map(|&q| FiniteField::new(q).unwrap()).collect())[i]
}

fn random_graph(n: usize, edges: &[(usize, usize)]) -> SolubilityGraph {
    let mut g = SolubilityGraph::empty(n);
    for &(a, b) in edges {
        let (a, b) = (a % n, b % n);
        if a != b {
            g.add_edge(a, b);
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(i in 0..FIELDS.len(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(i);
        let q = f.order();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, q as u64 - 1), f.one());
        }
    }

    #[test]
    fn group_operations(k in 0..4usize, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let g = &fixtures()[k].g;
        let n = g.order() as u32;
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.conj(a, b), g.mul(g.mul(g.inv(b), a), b));
        prop_assert_eq!(g.pow(a, g.element_order(a) as u64), g.identity());
        let class = &g.classes()[g.class_of(a)];
        prop_assert_eq!(g.conj(a, g.conjugator_to_rep(a)), class.representative);
        prop_assert_eq!(g.class_of(g.conj(a, b)), g.class_of(a));
    }

    #[test]
    fn closures_are_subgroups(k in 0..4usize, a in any::<u32>(), b in any::<u32>()) {
        let g = &fixtures()[k].g;
        let n = g.order() as u32;
        let mut h = closure(g, &[a % n, b % n], usize::MAX).members;
        h.sort_unstable();
        prop_assert_eq!(g.order() % h.len(), 0);
        prop_assert!(h.binary_search(&(a % n)).is_ok());
        for &x in h.iter().take(20) {
            for &y in h.iter().take(20) {
                prop_assert!(h.binary_search(&g.mul(x, y)).is_ok());
            }
        }
    }

    #[test]
    fn solubilizer_invariants(k in 0..4usize, y in any::<u32>(), z in any::<u32>()) {
        let fx = &fixtures()[k];
        let g = &fx.g;
        let n = g.order() as u32;
        let (y, z) = (y % n, z % n);
        let sol = solubilizer_of_element(g, &fx.records, y);
        prop_assert!(sol.contains(y as usize));
        prop_assert_eq!(sol.count_ones(..) % g.element_order(y) as usize, 0);
        for c in g.cyclic(y) {
            prop_assert!(sol.contains(c as usize));
        }
        for t in g.cyclic_normalizer(y) {
            prop_assert!(sol.contains(t as usize));
        }
        prop_assert_eq!(sol.contains(z as usize), in_solubilizer(g, &fx.records, z, y));
        // conjugating both arguments preserves membership
        let w = g.conjugator_to_rep(z);
        prop_assert_eq!(in_solubilizer(g, &fx.records, y, z), in_solubilizer(g, &fx.records, g.conj(y, w), g.conj(z, w)));
    }

    #[test]
    fn probabilities_are_reduced(k in 0..4usize) {
        let fx = &fixtures()[k];
        for r in &fx.records {
            let p = r.probability;
            prop_assert_eq!(num_integer::gcd(*p.numer(), *p.denom()), 1);
            prop_assert_eq!(*p.numer() * fx.g.order() as u64, r.size as u64 * *p.denom());
        }
    }

    #[test]
    fn size_classification(n in 1u64..1_000_000) {
        let kind = classify_size(n);
        match prime_power_parts(n) {
            None => prop_assert_eq!(kind, SizeKind::NotPrimePower),
            Some((p, k)) => {
                prop_assert_eq!(p.pow(k), n);
                prop_assert_eq!(kind.is_power_of_two(), p == 2);
                prop_assert_eq!(kind.is_odd_prime_power(), p % 2 == 1);
            }
        }
    }

    #[test]
    fn counting_lemma_is_exact(k in 1u64..50, n in 1u64..200, m in 1u64..200) {
        // choose r so that n divides m*r
        let r = n * k;
        prop_assert_eq!(counting_lemma(m, r, n).unwrap(), m * k);
    }

    #[test]
    fn adjacency_roundtrip(n in 1usize..70, edges in prop::collection::vec((0usize..70, 0usize..70), 0..300)) {
        let g = random_graph(n, &edges);
        let mut buf = Vec::new();
        write_adjacency(&g, &mut buf).unwrap();
        let back = parse_adjacency(std::str::from_utf8(&buf).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn colorings_are_proper(n in 1usize..60, edges in prop::collection::vec((0usize..60, 0usize..60), 0..400), seed in any::<u64>()) {
        let g = random_graph(n, &edges);
        for order in [VertexOrder::Canonical, VertexOrder::DegreeDescending, VertexOrder::Random(seed), VertexOrder::Dsatur] {
            let c = greedy_coloring(&g, order);
            prop_assert!(is_proper_coloring(&g, &c.colors));
            prop_assert!(c.color_count <= g.max_degree() + 1);
        }
    }

    #[test]
    fn hamiltonian_results_validate(n in 3usize..40, edges in prop::collection::vec((0usize..40, 0usize..40), 0..500), seed in any::<u64>()) {
        let g = random_graph(n, &edges);
        let h = hamiltonian_search(&g, seed, 50, &[]);
        if h.found {
            prop_assert!(validate_cycle(&g, &h.cycle).is_ok());
        }
        let again = hamiltonian_search(&g, seed, 50, &[]);
        prop_assert_eq!(h.cycle, again.cycle);
    }
}

#[test]
fn complete_graph_needs_n_colors() {
    for n in [1usize, 2, 5, 17] {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let g = random_graph(n, &edges);
        for order in [VertexOrder::Canonical, VertexOrder::DegreeDescending, VertexOrder::Random(3), VertexOrder::Dsatur] {
            assert_eq!(greedy_coloring(&g, order).color_count, n);
        }
    }
}
