//! Independent recomputations of values produced by the library.

mod common;

use common::{group, records};
use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use solubilizer::field::FiniteField;
use solubilizer::graph::build_graph;
use solubilizer::group::Group;
use solubilizer::oracle::involution_identity_check;
use solubilizer::solubilizer::{in_solubilizer, solubilizer_of_element, solubilizer_set};
use solubilizer::subgroup::{closure, derived_series, is_pair_soluble, SolubilityMode, SolubilityTester};

fn commutator(g: &Group, a: u32, b: u32) -> u32 {
    g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b))
}

/// Derived series by closing all pairwise commutators of the current term.
/// A large term is first tested against the commutators of a few pairs:
/// if those already generate the term, it is perfect.
fn all_pairs_derived_orders(g: &Group, members: &[u32]) -> (bool, Vec<usize>) {
    let mut cur = members.to_vec();
    let mut orders = vec![cur.len()];
    loop {
        if cur.len() > 1000 {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(cur.len() as u64);
            let sample: Vec<u32> = (0..8)
                .map(|_| {
                    let a = cur[rng.random_range(0..cur.len())];
                    let b = cur[rng.random_range(0..cur.len())];
                    commutator(g, a, b)
                })
                .collect();
            if closure(g, &sample, usize::MAX).members.len() == cur.len() {
                return (false, orders);
            }
        }
        let mut comms: Vec<u32> = Vec::new();
        for &a in &cur {
            for &b in &cur {
                comms.push(commutator(g, a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        let next = closure(g, &comms, usize::MAX).members;
        if next.len() == cur.len() {
            return (next.len() == 1, orders);
        }
        orders.push(next.len());
        cur = next;
    }
}

fn brute_pair_soluble(g: &Group, x: u32, y: u32) -> bool {
    let members = closure(g, &[x, y], usize::MAX).members;
    all_pairs_derived_orders(g, &members).0
}

#[test]
fn derived_series_matches_all_pairs_oracle() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(11);
    for s in ["psl2:4", "psl2:7", "psl2:8", "psl3:3"] {
        let g = group(s);
        let n = g.order() as u32;
        for _ in 0..40 {
            let gens = [rng.random_range(0..n), rng.random_range(0..n)];
            let members = closure(&g, &gens, g.order() / 2).members;
            if members.len() > g.order() / 2 {
                continue;
            }
            let ours = derived_series(&g, &members).unwrap();
            let (soluble, orders) = all_pairs_derived_orders(&g, &members);
            assert_eq!(ours.soluble, soluble, "{s} {gens:?}");
            assert_eq!(ours.orders, orders, "{s} {gens:?}");
        }
    }
}

#[test]
fn whole_groups_are_perfect() {
    for s in ["psl2:4", "psl2:7"] {
        let g = group(s);
        let all: Vec<u32> = (0..g.order() as u32).collect();
        assert_eq!(all_pairs_derived_orders(&g, &all), (false, vec![g.order()]));
        assert!(!derived_series(&g, &all).unwrap().soluble);
    }
}

#[test]
fn pair_solubility_three_ways() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(5);
    for s in ["psl2:13", "psl2:27", "psl3:3", "sz:8"] {
        let g = group(s);
        let n = g.order() as u32;
        for _ in 0..60 {
            let (x, y) = (rng.random_range(0..n), rng.random_range(0..n));
            let short = is_pair_soluble(&g, x, y, SolubilityMode::Shortcut).unwrap();
            let general = is_pair_soluble(&g, x, y, SolubilityMode::General).unwrap();
            let brute = brute_pair_soluble(&g, x, y);
            assert_eq!((short, general), (brute, brute), "{s} ({x}, {y})");
        }
    }
}

#[test]
fn modes_agree_on_every_pair_of_small_groups() {
    for s in ["psl2:4", "psl2:7", "psl2:8"] {
        let g = group(s);
        let n = g.order() as u32;
        let mut short = SolubilityTester::new(&g, SolubilityMode::Shortcut).unwrap();
        let mut general = SolubilityTester::new(&g, SolubilityMode::General).unwrap();
        for x in 0..n {
            for y in x..n {
                assert_eq!(short.is_soluble(&[x, y]), general.is_soluble(&[x, y]), "{s} ({x}, {y})");
            }
        }
    }
}

#[test]
fn conjugation_equivariance_spot_checks() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(3);
    for s in ["psl2:8", "psl2:13", "psl3:3"] {
        let g = group(s);
        let recs = records(&g);
        let mut tester = SolubilityTester::new(&g, SolubilityMode::Shortcut).unwrap();
        for c in g.classes() {
            for _ in 0..10 {
                let y = c.members[rng.random_range(0..c.members.len())];
                let direct = solubilizer_set(&g, y, &mut tester);
                assert_eq!(direct, solubilizer_of_element(&g, &recs, y), "{s} element {y}");
            }
        }
    }
}

#[test]
fn symmetry_exhaustive_up_to_order_1092() {
    for s in ["psl2:4", "psl2:7", "psl2:8", "psl2:11", "psl2:13"] {
        let g = group(s);
        let recs = records(&g);
        let n = g.order() as u32;
        for y in 0..n {
            let sol = solubilizer_of_element(&g, &recs, y);
            for z in 0..n {
                assert_eq!(sol.contains(z as usize), in_solubilizer(&g, &recs, z, y), "{s} ({y}, {z})");
            }
        }
    }
}

#[test]
fn adjacency_matches_direct_pair_test() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(17);
    for s in ["psl2:13", "psl3:3"] {
        let g = group(s);
        let recs = records(&g);
        let graph = build_graph(&g, &recs, false).unwrap();
        let elements = graph.elements().unwrap();
        let n = graph.vertex_count();
        let mut tester = SolubilityTester::new(&g, SolubilityMode::Shortcut).unwrap();
        for _ in 0..10_000 {
            let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
            if u == v {
                continue;
            }
            let direct = tester.is_soluble(&[elements[u], elements[v]]);
            assert_eq!(graph.has_edge(u, v), direct, "{s} ({u}, {v})");
        }
    }
}

/// Right-hand side summed element by element instead of by class.
#[test]
fn involution_identity_element_by_element() {
    let cases = [("psl2:4", 540u64), ("psl2:7", 1848), ("psl2:8", 168 * 63), ("psl3:3", 2832 * 117)];
    for (s, lhs) in cases {
        let g = group(s);
        let recs = records(&g);
        let orders = g.element_orders();
        let rhs: u64 = (0..g.order() as u32)
            .map(|y| {
                solubilizer_of_element(&g, &recs, y)
                    .ones()
                    .filter(|&z| orders[z] == 2)
                    .count() as u64
            })
            .sum();
        let id = involution_identity_check(&g, &recs).unwrap();
        assert_eq!((id.lhs, id.rhs, id.holds), (lhs, rhs, true), "{s}");
        assert_eq!(rhs, lhs, "{s}");
    }
}

#[test]
fn field_inverses_by_exhaustive_scan() {
    for q in [4u64, 7, 8, 9, 13, 16, 27, 31, 32, 64, 81, 128, 243, 256, 512] {
        let f = FiniteField::new(q).unwrap();
        for a in 1..q as u32 {
            let scan = (1..q as u32).find(|&e| f.mul(a, e) == f.one()).unwrap();
            assert_eq!(f.inv(a).unwrap(), scan, "GF({q}) element {a}");
        }
    }
}
