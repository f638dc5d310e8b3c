//! Solubilizers of conjugacy class representatives.
//!
//! `Sol(x)` is the set of y for which the subgroup generated by x and y is
//! soluble. It is a union of orbits of the normalizer of the cyclic subgroup
//! generated by x acting by conjugation, so one test per orbit suffices.

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::field::prime_power_parts;
use crate::group::Group;
use crate::subgroup::{
    bitset_members, derived_series_of_generated, generating_set, is_maximal_soluble, Subgroup,
    SolubilityMode, SolubilityTester, SubgroupError,
};

#[derive(Debug, Clone)]
pub struct SolubilizerRecord {
    pub class_index: usize,
    pub representative: u32,
    pub element_order: u32,
    pub class_size: usize,
    pub members: FixedBitSet,
    pub size: usize,
    pub is_subgroup: bool,
    /// Meaningful only when `is_subgroup` holds.
    pub is_soluble: bool,
    pub probability: Ratio<u64>,
    pub normalizer_order: u64,
}

impl SolubilizerRecord {
    pub fn contains(&self, y: u32) -> bool {
        self.members.contains(y as usize)
    }

    pub fn member_list(&self) -> Vec<u32> {
        bitset_members(&self.members)
    }
}

/// Membership set of `Sol(x)`.
pub fn solubilizer_set(g: &Group, x: u32, tester: &mut SolubilityTester<'_>) -> FixedBitSet {
    let n = g.order();
    let norm = g.cyclic_normalizer(x);
    let mut decided = FixedBitSet::with_capacity(n);
    let mut sol = FixedBitSet::with_capacity(n);
    let mut orbit: Vec<u32> = Vec::new();
    for y in 0..n as u32 {
        if decided.contains(y as usize) {
            continue;
        }
        orbit.clear();
        for &t in &norm {
            let z = g.conj(y, t);
            if !decided.put(z as usize) {
                orbit.push(z);
            }
        }
        let soluble = sol.contains(y as usize) || {
            let s = tester.is_soluble(&[x, y]);
            if s {
                for &m in tester.last_members() {
                    sol.insert(m as usize);
                }
            }
            s
        };
        if soluble {
            for &z in &orbit {
                sol.insert(z as usize);
            }
        }
    }
    sol
}

pub fn solubilizer(g: &Group, class_index: usize, mode: SolubilityMode) -> Result<SolubilizerRecord, SubgroupError> {
    let mut tester = SolubilityTester::new(g, mode)?;
    Ok(record_for_class(g, class_index, &mut tester))
}

fn record_for_class(g: &Group, class_index: usize, tester: &mut SolubilityTester<'_>) -> SolubilizerRecord {
    let class = &g.classes()[class_index];
    let x = class.representative;
    let members = solubilizer_set(g, x, tester);
    let size = members.count_ones(..);
    let (is_subgroup, is_soluble) = if g.order() % size == 0 {
        match generating_set(g, &bitset_members(&members)) {
            Ok(gens) => (true, derived_series_of_generated(g, &gens).soluble),
            Err(_) => (false, false),
        }
    } else {
        (false, false)
    };
    SolubilizerRecord {
        class_index,
        representative: x,
        element_order: class.element_order,
        class_size: class.size(),
        members,
        size,
        is_subgroup,
        is_soluble,
        probability: Ratio::new(size as u64, g.order() as u64),
        normalizer_order: class.normalizer_order,
    }
}

/// Records for every class, in class order.
pub fn all_solubilizers(g: &Group, mode: SolubilityMode) -> Result<Vec<SolubilizerRecord>, SubgroupError> {
    SolubilityTester::new(g, mode)?;
    Ok((0..g.classes().len())
        .into_par_iter()
        .map_init(
            || SolubilityTester::new(g, mode).expect("checked above"),
            |t, c| record_for_class(g, c, t),
        )
        .collect())
}

/// Records for the listed classes only.
pub fn solubilizers_for(
    g: &Group,
    classes: &[usize],
    mode: SolubilityMode,
) -> Result<Vec<SolubilizerRecord>, SubgroupError> {
    SolubilityTester::new(g, mode)?;
    Ok(classes
        .par_iter()
        .map_init(
            || SolubilityTester::new(g, mode).expect("checked above"),
            |t, &c| record_for_class(g, c, t),
        )
        .collect())
}

/// `Sol(y)` for an arbitrary element, obtained by conjugating the record of its class.
pub fn solubilizer_of_element(g: &Group, records: &[SolubilizerRecord], y: u32) -> FixedBitSet {
    let rec = &records[g.class_of(y)];
    let w = g.conjugator_to_rep(y);
    let wi = g.inv(w);
    // rep = w^-1 y w, so Sol(y) = w Sol(rep) w^-1
    let mut out = FixedBitSet::with_capacity(g.order());
    for s in rec.members.ones() {
        out.insert(g.conj(s as u32, wi) as usize);
    }
    out
}

/// `z in Sol(y)` without materialising `Sol(y)`.
pub fn in_solubilizer(g: &Group, records: &[SolubilizerRecord], y: u32, z: u32) -> bool {
    let w = g.conjugator_to_rep(y);
    records[g.class_of(y)].contains(g.conj(z, w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SizeKind {
    Prime(u64),
    PrimeSquare(u64),
    PowerOfTwo(u32),
    OddPrimePower(u64, u32),
    NotPrimePower,
}

impl SizeKind {
    pub fn is_odd_prime_power(&self) -> bool {
        match *self {
            SizeKind::Prime(p) | SizeKind::PrimeSquare(p) => p % 2 == 1,
            SizeKind::OddPrimePower(..) => true,
            _ => false,
        }
    }

    pub fn is_power_of_two(&self) -> bool {
        matches!(*self, SizeKind::Prime(2) | SizeKind::PrimeSquare(2) | SizeKind::PowerOfTwo(_))
    }
}

/// Prime-power classification of a solubilizer size. Exponents one and two
/// take precedence over the parity split.
pub fn classify_size(n: u64) -> SizeKind {
    match prime_power_parts(n) {
        None => SizeKind::NotPrimePower,
        Some((p, 1)) => SizeKind::Prime(p),
        Some((p, 2)) => SizeKind::PrimeSquare(p),
        Some((2, k)) => SizeKind::PowerOfTwo(k),
        Some((p, k)) => SizeKind::OddPrimePower(p, k),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Structural properties every solubilizer family must satisfy.
pub fn verify_solubilizer_axioms(g: &Group, records: &[SolubilizerRecord]) -> AxiomReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, witness: Option<String>| {
        checks.push(AxiomCheck {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        })
    };

    let w = records
        .iter()
        .find(|r| r.size % r.element_order as usize != 0)
        .map(|r| format!("class {} of order {} has |Sol| = {}", r.class_index, r.element_order, r.size));
    push("element order divides |Sol|", w);

    let w = records.iter().find_map(|r| {
        g.cyclic_normalizer(r.representative)
            .into_iter()
            .find(|&n| !r.contains(n))
            .map(|n| format!("class {}: normalizer element {n} missing", r.class_index))
    });
    push("cyclic normalizer contained in Sol", w);

    let w = records.iter().find_map(|r| {
        g.cyclic(r.representative)
            .into_iter()
            .find(|&c| !r.contains(c))
            .map(|c| format!("class {}: power {c} missing", r.class_index))
    });
    push("cyclic subgroup contained in Sol", w);

    // y in Sol(x) iff x in Sol(y); by conjugation it suffices to let x run over representatives
    let w = records.par_iter().find_map_any(|r| {
        (0..g.order() as u32).find_map(|y| {
            let forward = r.contains(y);
            let backward = in_solubilizer(g, records, y, r.representative);
            (forward != backward).then(|| format!("x = {}, y = {y}", r.representative))
        })
    });
    push("symmetry", w);

    let w = records
        .par_iter()
        .filter(|r| r.is_subgroup && r.is_soluble)
        .find_map_any(|r| {
            let s = Subgroup::from_members(g, &r.member_list()).ok()?;
            (!is_maximal_soluble(g, &s)).then(|| format!("class {}", r.class_index))
        });
    push("soluble subgroup solubilizers are maximal soluble", w);

    let w = records
        .iter()
        .all(|r| r.is_subgroup)
        .then(|| "every solubilizer is a subgroup".to_string());
    push("some solubilizer is not a subgroup", w);

    AxiomReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn a5_solubilizer_sizes() {
        let g = Group::build(GroupSpec::psl2(4)).unwrap();
        for mode in [SolubilityMode::Shortcut, SolubilityMode::General] {
            let recs = all_solubilizers(&g, mode).unwrap();
            let mut by_order: Vec<(u32, usize)> = recs.iter().map(|r| (r.element_order, r.size)).collect();
            by_order.sort();
            assert_eq!(by_order, vec![(1, 60), (2, 36), (3, 24), (5, 10), (5, 10)]);
        }
    }

    #[test]
    fn psl27_sizes_and_axioms() {
        let g = Group::build(GroupSpec::psl2(7)).unwrap();
        let recs = all_solubilizers(&g, SolubilityMode::Shortcut).unwrap();
        let mut by_order: Vec<(u32, usize)> = recs.iter().map(|r| (r.element_order, r.size)).collect();
        by_order.sort();
        assert_eq!(by_order, vec![(1, 168), (2, 88), (3, 78), (4, 40), (7, 21), (7, 21)]);
        let rep = verify_solubilizer_axioms(&g, &recs);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn size_classes() {
        assert_eq!(classify_size(36), SizeKind::NotPrimePower);
        assert_eq!(classify_size(32), SizeKind::PowerOfTwo(5));
        assert_eq!(classify_size(39), SizeKind::NotPrimePower);
        assert_eq!(classify_size(13), SizeKind::Prime(13));
        assert_eq!(classify_size(49), SizeKind::PrimeSquare(7));
        assert_eq!(classify_size(27), SizeKind::OddPrimePower(3, 3));
        assert!(classify_size(9).is_odd_prime_power());
        assert!(classify_size(4).is_power_of_two());
        assert!(!classify_size(1).is_power_of_two());
    }
}
