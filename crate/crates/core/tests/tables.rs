//! Brute-force solubilizers against the closed-form tables.

mod common;

use common::{distinct_sizes, group, records, sizes_by_order};
use solubilizer::group::Group;
use solubilizer::oracle::{
    classify_case, closed_form_profile, compare_appendix_case, counting_lemma, verify_maximal_counts, CaseKey,
    OracleError, OrderClass, TableFamily, Verdict,
};
use solubilizer::solubilizer::SolubilizerRecord;
use solubilizer::subgroup::{fingerprint, MaximalSubgroups};

fn verdicts(g: &Group, recs: &[SolubilizerRecord]) -> Vec<(u32, Verdict)> {
    let maxes = MaximalSubgroups::compute(g).unwrap();
    recs.iter()
        .map(|r| {
            let profile = closed_form_profile(&classify_case(g, r.class_index).unwrap()).unwrap();
            assert_eq!(profile.sol_size, r.size as u64, "class {} of order {}", r.class_index, r.element_order);
            let report = verify_maximal_counts(g, r, &profile, &maxes.containing(g, r.representative));
            (r.element_order, report.verdict)
        })
        .collect()
}

fn all_pass(s: &str) {
    let g = group(s);
    let recs = records(&g);
    for (order, v) in verdicts(&g, &recs) {
        assert_eq!(v, Verdict::Pass, "{s}, class of order {order}");
    }
}

#[test]
fn even_characteristic_tables() {
    let g = group("psl2:4");
    assert_eq!(distinct_sizes(&records(&g)), vec![10, 24, 36]);
    let g = group("psl2:8");
    assert_eq!(distinct_sizes(&records(&g)), vec![18, 112, 168]);
    all_pass("psl2:4");
    all_pass("psl2:8");
}

#[test]
fn psl2_8_involution_overgroups() {
    let g = group("psl2:8");
    let maxes = MaximalSubgroups::compute(&g).unwrap();
    let inv = g.involutions()[0];
    let mut orders: Vec<usize> = maxes.containing(&g, inv).iter().map(|m| m.order()).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![14, 14, 14, 14, 18, 18, 18, 18, 56]);
}

#[test]
fn psl2_27_table() {
    let g = group("psl2:27");
    let recs = records(&g);
    assert_eq!(distinct_sizes(&recs), vec![28, 432, 702, 756]);
    all_pass("psl2:27");
    let maxes = MaximalSubgroups::compute(&g).unwrap();
    let r = recs.iter().find(|r| r.element_order == 13).unwrap();
    let over = maxes.containing(&g, r.representative);
    assert_eq!(over.len(), 3);
    for (i, a) in over.iter().enumerate() {
        for b in &over[i + 1..] {
            let meet: Vec<u32> = a.members.iter().copied().filter(|&x| b.contains(x)).collect();
            let fp = fingerprint(&g, &meet).unwrap();
            assert_eq!(fp.order, 13);
            assert!(fp.is_cyclic());
        }
    }
}

#[test]
fn prime_tables() {
    let cases: [(&str, &[usize]); 3] = [
        ("psl2:13", &[14, 78, 156, 192, 300]),
        ("psl2:17", &[18, 126, 136, 272, 336, 592]),
        ("psl2:23", &[24, 120, 168, 253, 506, 648]),
    ];
    for (s, sizes) in cases {
        assert_eq!(distinct_sizes(&records(&group(s))), sizes.to_vec(), "{s}");
        all_pass(s);
    }
}

#[test]
fn psl2_7_sizes_exact_counts_warn() {
    let g = group("psl2:7");
    let recs = records(&g);
    assert_eq!(sizes_by_order(&recs), vec![(2, 88), (3, 78), (4, 40), (7, 21), (7, 21)]);
    let v = verdicts(&g, &recs);
    assert!(v.iter().all(|(_, v)| *v != Verdict::Mismatch));
    assert!(v.iter().any(|(_, v)| *v == Verdict::Warning));
}

#[test]
fn suzuki_8_table() {
    let g = group("sz:8");
    let recs = records(&g);
    let mut seen: Vec<(u32, usize)> = sizes_by_order(&recs);
    seen.dedup();
    assert_eq!(seen, vec![(2, 1856), (4, 704), (5, 20), (7, 896), (13, 52)]);
    for (order, v) in verdicts(&g, &recs) {
        assert_eq!(v, Verdict::Pass, "class of order {order}");
    }
}

#[test]
fn psl3_3_table_and_intersections() {
    let g = group("psl3:3");
    let recs = records(&g);
    let mut by_class: Vec<(usize, u64)> = recs
        .iter()
        .filter(|r| r.element_order > 1)
        .map(|r| (r.size, r.normalizer_order))
        .collect();
    by_class.sort_unstable();
    by_class.dedup();
    assert_eq!(
        by_class,
        vec![(39, 39), (816, 16), (848, 16), (1026, 18), (1368, 12), (2376, 108), (2832, 48)]
    );
    for (order, v) in verdicts(&g, &recs) {
        assert_eq!(v, Verdict::Pass, "class of order {order}");
    }
    let maxes = MaximalSubgroups::compute(&g).unwrap();
    for (i, c) in g.classes().iter().enumerate().filter(|(_, c)| c.element_order > 1) {
        let cmp = compare_appendix_case(&g, i, &maxes.containing(&g, c.representative)).unwrap();
        assert!(cmp.matches, "class {i}: {cmp:?}");
    }
}

#[test]
fn psl3_3_order_three_with_large_normalizer_has_no_s4_overgroup() {
    let g = group("psl3:3");
    let maxes = MaximalSubgroups::compute(&g).unwrap();
    let ci = g
        .classes()
        .iter()
        .position(|c| c.element_order == 3 && c.normalizer_order == 108)
        .unwrap();
    let c = &g.classes()[ci];
    let over = maxes.containing(&g, c.representative);
    assert_eq!(over.iter().filter(|m| m.order() == 24).count(), 0);
    assert_eq!(over.iter().filter(|m| m.order() == 432).count(), 8);
    let key = classify_case(&g, ci).unwrap();
    let profile = closed_form_profile(&key).unwrap();
    assert!(profile.rows.iter().filter(|r| r.order == 24).all(|r| r.count == 0));
}

#[test]
fn profile_examples() {
    let key = |family, q, residue, order_class| CaseKey { family, q, residue, order_class, normalizer_order: None };
    let p = closed_form_profile(&key(TableFamily::Psl2Even, 8, None, OrderClass::Two)).unwrap();
    assert_eq!(p.rows.iter().map(|r| r.count).collect::<Vec<_>>(), vec![1, 4, 4]);
    assert_eq!(p.sol_size, 168);
    let p = closed_form_profile(&key(TableFamily::Suzuki, 8, None, OrderClass::Four)).unwrap();
    assert_eq!(p.rows.iter().map(|r| r.count).collect::<Vec<_>>(), vec![1, 0, 4, 4]);
    assert_eq!(p.sol_size, 704);
    let p = closed_form_profile(&key(TableFamily::Psl2Prime, 23, Some(23), OrderClass::Two)).unwrap();
    assert_eq!(p.rows.iter().map(|r| r.count).collect::<Vec<_>>(), vec![0, 12, 13, 18]);
    assert_eq!(p.sol_size, 648);
}

#[test]
fn routing_examples() {
    let g = group("psl2:8");
    let c = g.classes().iter().position(|c| c.element_order == 7).unwrap();
    let k = classify_case(&g, c).unwrap();
    assert_eq!((k.family, k.q, k.order_class), (TableFamily::Psl2Even, 8, OrderClass::DividesQMinusOne));
    let g = group("psl2:23");
    let c = g.classes().iter().position(|c| c.element_order == 4).unwrap();
    let k = classify_case(&g, c).unwrap();
    assert_eq!((k.residue, k.order_class), (Some(23), OrderClass::Four));
    for s in ["psl2:11", "psl4:2"] {
        let g = group(s);
        assert!(matches!(classify_case(&g, 1), Err(OracleError::NotCovered(_))), "{s}");
    }
}

#[test]
fn every_formula_divisible_by_element_order() {
    for s in ["psl2:4", "psl2:8", "psl2:13", "psl2:17", "psl2:23", "psl2:27", "psl3:3"] {
        let g = group(s);
        for (i, c) in g.classes().iter().enumerate() {
            let p = closed_form_profile(&classify_case(&g, i).unwrap()).unwrap();
            assert_eq!(p.sol_size % c.element_order as u64, 0, "{s} class {i}");
        }
    }
}

/// The lemma's count agrees with overgroups found by brute force, for every
/// maximal subgroup class and every element class meeting it.
#[test]
fn counting_lemma_matches_brute_force() {
    for s in ["psl2:8", "psl2:13", "psl2:27", "psl3:3"] {
        let g = group(s);
        let maxes = MaximalSubgroups::compute(&g).unwrap();
        for (ci, c) in g.classes().iter().enumerate().filter(|(_, c)| c.element_order > 1) {
            let over = maxes.containing(&g, c.representative);
            for m in maxes.classes() {
                let in_m = m.members.iter().filter(|&&y| g.class_of(y) == ci).count() as u64;
                if in_m == 0 {
                    continue;
                }
                // maximal subgroups of a simple group are self-normalizing
                let r = (g.order() / m.order()) as u64;
                let expected = counting_lemma(in_m, r, c.members.len() as u64).unwrap();
                let found = over
                    .iter()
                    .filter(|o| o.order() == m.order() && solubilizer::subgroup::conjugate_into(&g, o, m).is_some())
                    .count() as u64;
                assert_eq!(expected, found, "{s} class {ci} in maximal subgroup of order {}", m.order());
            }
        }
    }
}
