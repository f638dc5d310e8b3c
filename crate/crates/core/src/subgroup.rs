//! Subgroup closure, derived series, pair solubility and maximal overgroups.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;
use thiserror::Error;

use crate::field::distinct_prime_factors;
use crate::group::Group;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("the given element set is not closed under multiplication")]
    NotClosed,
    #[error("the given element set is empty or lacks the identity")]
    NotASubgroup,
    #[error("shortcut solubility is only valid for minimal simple groups ({0} is not one)")]
    ShortcutUnavailable(String),
    #[error("maximal subgroup discovery is only supported for minimal simple groups ({0} is not one)")]
    NotMinimalSimple(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolubilityMode {
    /// Closure against the largest proper subgroup order; minimal simple groups only.
    Shortcut,
    /// Closure followed by a derived series computation.
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    /// Members in discovery order, starting with the identity.
    pub members: Vec<u32>,
    /// True when the closure grew past the abort threshold before finishing.
    pub aborted: bool,
}

/// Reusable scratch space for repeated closures.
#[derive(Debug)]
pub struct Workspace {
    stamp: Vec<u32>,
    epoch: u32,
}

impl Workspace {
    pub fn new(n: usize) -> Self {
        Workspace {
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    /// Closes `gens` under multiplication, giving up once more than
    /// `abort_above` elements are found.
    pub fn close(&mut self, g: &Group, gens: &[u32], abort_above: usize, out: &mut Vec<u32>) -> bool {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let e = self.epoch;
        out.clear();
        out.push(0);
        self.stamp[0] = e;
        let mut head = 0;
        while head < out.len() {
            let m = out[head];
            for &x in gens {
                let p = g.mul(m, x);
                if self.stamp[p as usize] != e {
                    self.stamp[p as usize] = e;
                    out.push(p);
                    if out.len() > abort_above {
                        return true;
                    }
                }
            }
            head += 1;
        }
        false
    }

    /// Membership in the most recent closure.
    pub fn contains(&self, a: u32) -> bool {
        self.stamp[a as usize] == self.epoch
    }
}

pub fn closure(g: &Group, gens: &[u32], abort_above: usize) -> Closure {
    let mut ws = Workspace::new(g.order());
    let mut members = Vec::new();
    let aborted = ws.close(g, gens, abort_above, &mut members);
    Closure { members, aborted }
}

pub fn to_bitset(n: usize, members: &[u32]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for &m in members {
        b.insert(m as usize);
    }
    b
}

pub fn bitset_members(b: &FixedBitSet) -> Vec<u32> {
    b.ones().map(|i| i as u32).collect()
}

/// A small generating set of a subgroup given by its elements; fails if the
/// elements do not form a subgroup.
pub fn generating_set(g: &Group, members: &[u32]) -> Result<Vec<u32>, SubgroupError> {
    if members.is_empty() {
        return Err(SubgroupError::NotASubgroup);
    }
    let set = to_bitset(g.order(), members);
    if !set.contains(0) {
        return Err(SubgroupError::NotASubgroup);
    }
    let target = set.count_ones(..);
    let mut ws = Workspace::new(g.order());
    let mut cur = vec![0u32];
    let mut gens: Vec<u32> = Vec::new();
    ws.close(g, &gens, usize::MAX, &mut cur);
    for &m in members {
        if ws.contains(m) {
            continue;
        }
        gens.push(m);
        if ws.close(g, &gens, target, &mut cur) {
            return Err(SubgroupError::NotClosed);
        }
        if cur.iter().any(|&c| !set.contains(c as usize)) {
            return Err(SubgroupError::NotClosed);
        }
        if cur.len() == target {
            break;
        }
    }
    Ok(gens)
}

/// Generators and elements of the derived subgroup of the subgroup generated by `gens`.
fn derived_subgroup(g: &Group, gens: &[u32], ws: &mut Workspace) -> (Vec<u32>, Vec<u32>) {
    let mut dgens: Vec<u32> = Vec::new();
    let mut seen = FxHashSet::default();
    for &a in gens {
        for &b in gens {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            if c != 0 && seen.insert(c) {
                dgens.push(c);
            }
        }
    }
    let mut members = Vec::new();
    ws.close(g, &dgens, usize::MAX, &mut members);
    loop {
        let mut added = None;
        'scan: for &d in &dgens {
            for &h in gens {
                let c = g.conj(d, h);
                if !ws.contains(c) {
                    added = Some(c);
                    break 'scan;
                }
            }
        }
        match added {
            Some(c) => {
                dgens.push(c);
                ws.close(g, &dgens, usize::MAX, &mut members);
            }
            None => break,
        }
    }
    (dgens, members)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedSeries {
    pub soluble: bool,
    /// Derived length for soluble subgroups (0 for the trivial group).
    pub length: Option<u32>,
    /// Orders of the terms, starting with the subgroup itself.
    pub orders: Vec<usize>,
}

/// Derived series of the subgroup generated by `gens`.
pub fn derived_series_of_generated(g: &Group, gens: &[u32]) -> DerivedSeries {
    let mut ws = Workspace::new(g.order());
    let mut members = Vec::new();
    ws.close(g, gens, usize::MAX, &mut members);
    let mut orders = vec![members.len()];
    let mut cur: Vec<u32> = gens.to_vec();
    let mut steps = 0;
    loop {
        if *orders.last().unwrap() == 1 {
            return DerivedSeries {
                soluble: true,
                length: Some(steps),
                orders,
            };
        }
        let (dg, dm) = derived_subgroup(g, &cur, &mut ws);
        if dm.len() == *orders.last().unwrap() {
            return DerivedSeries {
                soluble: false,
                length: None,
                orders,
            };
        }
        orders.push(dm.len());
        cur = dg;
        steps += 1;
    }
}

/// Derived series of a subgroup given by its elements.
pub fn derived_series(g: &Group, members: &[u32]) -> Result<DerivedSeries, SubgroupError> {
    let gens = generating_set(g, members)?;
    Ok(derived_series_of_generated(g, &gens))
}

pub fn derived_series_soluble(g: &Group, members: &[u32]) -> Result<bool, SubgroupError> {
    Ok(derived_series(g, members)?.soluble)
}

/// Solubility of the whole group, computed once.
pub fn group_is_soluble(g: &Group) -> bool {
    *g.soluble_cell()
        .get_or_init(|| derived_series_of_generated(g, g.generators()).soluble)
}

/// Decides solubility of subgroups generated by small sets, reusing scratch
/// space and caching derived-series outcomes.
#[derive(Debug)]
pub struct SolubilityTester<'a> {
    g: &'a Group,
    mode: SolubilityMode,
    bound: usize,
    group_soluble: bool,
    ws: Workspace,
    buf: Vec<u32>,
    cache: FxHashMap<Vec<u32>, bool>,
}

impl<'a> SolubilityTester<'a> {
    pub fn new(g: &'a Group, mode: SolubilityMode) -> Result<Self, SubgroupError> {
        let spec = g.spec();
        let bound = match mode {
            SolubilityMode::Shortcut => {
                if !spec.is_minimal_simple() {
                    return Err(SubgroupError::ShortcutUnavailable(spec.to_string()));
                }
                spec.proper_subgroup_bound() as usize
            }
            SolubilityMode::General => g.order() / 2,
        };
        Ok(SolubilityTester {
            g,
            mode,
            bound,
            group_soluble: group_is_soluble(g),
            ws: Workspace::new(g.order()),
            buf: Vec::new(),
            cache: FxHashMap::default(),
        })
    }

    pub fn mode(&self) -> SolubilityMode {
        self.mode
    }

    /// Solubility of the subgroup generated by `gens`. When soluble, the
    /// subgroup's elements are left in [`Self::last_members`].
    pub fn is_soluble(&mut self, gens: &[u32]) -> bool {
        let aborted = self.ws.close(self.g, gens, self.bound, &mut self.buf);
        match self.mode {
            SolubilityMode::Shortcut => !aborted && self.buf.len() < self.g.order(),
            SolubilityMode::General => {
                if aborted {
                    // more than half the group: the whole group
                    return self.group_soluble;
                }
                let mut key = self.buf.clone();
                key.sort_unstable();
                if let Some(&s) = self.cache.get(&key) {
                    return s;
                }
                let s = derived_series_of_generated(self.g, gens).soluble;
                self.cache.insert(key, s);
                s
            }
        }
    }

    pub fn last_members(&self) -> &[u32] {
        &self.buf
    }
}

pub fn is_pair_soluble(g: &Group, x: u32, y: u32, mode: SolubilityMode) -> Result<bool, SubgroupError> {
    let mut t = SolubilityTester::new(g, mode)?;
    Ok(t.is_soluble(&[x, y]))
}

/// Isomorphism-invariant summary of a subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// (element order, count) pairs in increasing element order.
    pub order_histogram: Vec<(u32, usize)>,
    pub is_abelian: bool,
    pub derived_length: Option<u32>,
}

impl Fingerprint {
    pub fn count_of_order(&self, k: u32) -> usize {
        self.order_histogram
            .iter()
            .find(|(o, _)| *o == k)
            .map_or(0, |(_, c)| *c)
    }

    /// Dihedral of order at least 6.
    pub fn is_dihedral(&self) -> bool {
        if self.order < 6 || self.order % 2 == 1 {
            return false;
        }
        let n = self.order / 2;
        let inv = self.count_of_order(2);
        self.count_of_order(n as u32) > 0 && inv == if n % 2 == 0 { n + 1 } else { n }
    }

    pub fn is_cyclic(&self) -> bool {
        self.count_of_order(self.order as u32) > 0
    }

    pub fn from_histogram(hist: BTreeMap<u32, usize>, is_abelian: bool, derived_length: Option<u32>) -> Self {
        Fingerprint {
            order: hist.values().sum(),
            order_histogram: hist.into_iter().collect(),
            is_abelian,
            derived_length,
        }
    }
}

pub fn fingerprint(g: &Group, members: &[u32]) -> Result<Fingerprint, SubgroupError> {
    let gens = generating_set(g, members)?;
    let mut hist = BTreeMap::new();
    for &m in members {
        *hist.entry(g.element_order(m)).or_insert(0usize) += 1;
    }
    let is_abelian = gens
        .iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    let ds = derived_series_of_generated(g, &gens);
    Ok(Fingerprint::from_histogram(hist, is_abelian, ds.length))
}

/// A subgroup stored with generators and membership.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub generators: Vec<u32>,
    /// Sorted members.
    pub members: Vec<u32>,
    pub set: FixedBitSet,
}

impl Subgroup {
    pub fn from_generators(g: &Group, gens: &[u32]) -> Self {
        let mut members = closure(g, gens, usize::MAX).members;
        members.sort_unstable();
        let set = to_bitset(g.order(), &members);
        Subgroup {
            generators: gens.to_vec(),
            members,
            set,
        }
    }

    pub fn from_members(g: &Group, members: &[u32]) -> Result<Self, SubgroupError> {
        let generators = generating_set(g, members)?;
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let set = to_bitset(g.order(), &members);
        Ok(Subgroup {
            generators,
            members,
            set,
        })
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: u32) -> bool {
        self.set.contains(a as usize)
    }

    /// `t^-1 H t`.
    pub fn conjugate(&self, g: &Group, t: u32) -> Subgroup {
        let mut members: Vec<u32> = self.members.iter().map(|&m| g.conj(m, t)).collect();
        members.sort_unstable();
        let set = to_bitset(g.order(), &members);
        Subgroup {
            generators: self.generators.iter().map(|&m| g.conj(m, t)).collect(),
            members,
            set,
        }
    }
}

pub fn normalizer(g: &Group, h: &Subgroup) -> Vec<u32> {
    (0..g.order() as u32)
        .filter(|&t| h.generators.iter().all(|&a| h.contains(g.conj(a, t))))
        .collect()
}

/// Some t with `t^-1 A t` contained in B.
pub fn conjugate_into(g: &Group, a: &Subgroup, b: &Subgroup) -> Option<u32> {
    if b.order() % a.order() != 0 {
        return None;
    }
    (0..g.order() as u32).find(|&t| a.generators.iter().all(|&x| b.contains(g.conj(x, t))))
}

/// Elementary abelian p-subgroups for every prime p, one per conjugacy class.
pub fn elementary_abelian_classes(g: &Group) -> Vec<Subgroup> {
    let mut out = Vec::new();
    for p in distinct_prime_factors(g.order() as u64) {
        let p = p as u32;
        let mut level: Vec<Subgroup> = Vec::new();
        for c in g.classes() {
            if c.element_order == p {
                let k = Subgroup::from_generators(g, &[c.representative]);
                push_up_to_conjugacy(g, &mut level, k);
            }
        }
        while !level.is_empty() {
            let mut next: Vec<Subgroup> = Vec::new();
            let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
            for k in &level {
                for z in 0..g.order() as u32 {
                    if g.element_order(z) != p || k.contains(z) {
                        continue;
                    }
                    if !k.generators.iter().all(|&a| g.mul(a, z) == g.mul(z, a)) {
                        continue;
                    }
                    let mut gens = k.generators.clone();
                    gens.push(z);
                    let cand = Subgroup::from_generators(g, &gens);
                    if seen.insert(cand.members.clone()) {
                        push_up_to_conjugacy(g, &mut next, cand);
                    }
                }
            }
            out.append(&mut level);
            level = next;
        }
    }
    out
}

fn push_up_to_conjugacy(g: &Group, reps: &mut Vec<Subgroup>, k: Subgroup) {
    let dup = reps
        .iter()
        .any(|r| r.order() == k.order() && conjugate_into(g, &k, r).is_some());
    if !dup {
        reps.push(k);
    }
}

/// Conjugacy class representatives of maximal subgroups of a minimal simple group.
#[derive(Debug, Clone)]
pub struct MaximalSubgroups {
    classes: Vec<Subgroup>,
}

impl MaximalSubgroups {
    /// Every maximal subgroup of a minimal simple group is soluble, hence the
    /// normalizer of a minimal normal elementary abelian subgroup. The maximal
    /// members of the family of such normalizers are exactly the maximal subgroups.
    pub fn compute(g: &Group) -> Result<Self, SubgroupError> {
        if !g.spec().is_minimal_simple() {
            return Err(SubgroupError::NotMinimalSimple(g.spec().to_string()));
        }
        let mut cands = soluble_normalizers(g);
        cands.sort_by(|a, b| b.order().cmp(&a.order()).then(a.members.cmp(&b.members)));
        let mut classes: Vec<Subgroup> = Vec::new();
        for c in cands {
            if c.order() == g.order() {
                continue;
            }
            if classes.iter().any(|m| conjugate_into(g, &c, m).is_some()) {
                continue;
            }
            classes.push(c);
        }
        Ok(MaximalSubgroups { classes })
    }

    pub fn classes(&self) -> &[Subgroup] {
        &self.classes
    }

    /// All maximal subgroups containing `x`, sorted by decreasing order and
    /// then by member list.
    pub fn containing(&self, g: &Group, x: u32) -> Vec<Subgroup> {
        let mut out: Vec<Subgroup> = Vec::new();
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        for m in &self.classes {
            let mut covered = FixedBitSet::with_capacity(g.order());
            for t in 0..g.order() as u32 {
                if covered.contains(t as usize) {
                    continue;
                }
                // t x t^-1 in M  <=>  x in t^-1 M t
                if !m.contains(g.conj(x, g.inv(t))) {
                    continue;
                }
                for &a in &m.members {
                    covered.insert(g.mul(a, t) as usize);
                }
                let conj = m.conjugate(g, t);
                if seen.insert(conj.members.clone()) {
                    out.push(conj);
                }
            }
        }
        out.sort_by(|a, b| b.order().cmp(&a.order()).then(a.members.cmp(&b.members)));
        out
    }
}

/// Normalizers of elementary abelian subgroups that are proper and soluble.
pub fn soluble_normalizers(g: &Group) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    let mut seen = FxHashSet::default();
    for k in elementary_abelian_classes(g) {
        let n = normalizer(g, &k);
        if n.len() == g.order() || !seen.insert(n.clone()) {
            continue;
        }
        let Ok(s) = Subgroup::from_members(g, &n) else {
            continue;
        };
        if derived_series_of_generated(g, &s.generators).soluble {
            out.push(s);
        }
    }
    out
}

/// The maximal (soluble) subgroups containing `x` in a minimal simple group.
pub fn maximal_soluble_overgroups(g: &Group, x: u32) -> Result<Vec<Subgroup>, SubgroupError> {
    Ok(MaximalSubgroups::compute(g)?.containing(g, x))
}

/// Fingerprints of pairwise intersections, with multiplicities.
pub fn intersection_tally(g: &Group, overgroups: &[Subgroup]) -> BTreeMap<Fingerprint, usize> {
    let mut out = BTreeMap::new();
    for (_, fp) in pairwise_intersections(g, overgroups) {
        *out.entry(fp).or_insert(0) += 1;
    }
    out
}

/// Like [`intersection_tally`] but also keyed by the orders of the two
/// overgroups (larger first).
pub fn pair_intersection_tally(
    g: &Group,
    overgroups: &[Subgroup],
) -> BTreeMap<(usize, usize, Fingerprint), usize> {
    let mut out = BTreeMap::new();
    for ((a, b), fp) in pairwise_intersections(g, overgroups) {
        let (oa, ob) = (overgroups[a].order(), overgroups[b].order());
        *out.entry((oa.max(ob), oa.min(ob), fp)).or_insert(0) += 1;
    }
    out
}

fn pairwise_intersections(g: &Group, overgroups: &[Subgroup]) -> Vec<((usize, usize), Fingerprint)> {
    let mut out = Vec::new();
    for i in 0..overgroups.len() {
        for j in i + 1..overgroups.len() {
            let mut s = overgroups[i].set.clone();
            s.intersect_with(&overgroups[j].set);
            let members = bitset_members(&s);
            let fp = fingerprint(g, &members).expect("intersection of subgroups is a subgroup");
            out.push(((i, j), fp));
        }
    }
    out
}

/// Whether a soluble subgroup is maximal among soluble subgroups.
pub fn is_maximal_soluble(g: &Group, h: &Subgroup) -> bool {
    let mut tester = SolubilityTester::new(g, SolubilityMode::General).expect("general mode always available");
    let mut covered = h.set.clone();
    let mut gens = h.generators.clone();
    gens.push(0);
    for z in 0..g.order() as u32 {
        if covered.contains(z as usize) {
            continue;
        }
        for &a in &h.members {
            covered.insert(g.mul(a, z) as usize);
        }
        *gens.last_mut().unwrap() = z;
        if tester.is_soluble(&gens) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn a5() -> Group {
        Group::build(GroupSpec::psl2(4)).unwrap()
    }

    #[test]
    fn closure_of_generators_is_group() {
        let g = a5();
        let c = closure(&g, g.generators(), usize::MAX);
        assert_eq!(c.members.len(), 60);
        assert!(!c.aborted);
        let c = closure(&g, g.generators(), 30);
        assert!(c.aborted);
    }

    #[test]
    fn non_subgroup_detected() {
        let g = a5();
        let inv = g.involutions();
        assert_eq!(generating_set(&g, &[0, inv[0], inv[1]]), Err(SubgroupError::NotClosed));
        assert_eq!(generating_set(&g, &[inv[0]]), Err(SubgroupError::NotASubgroup));
    }

    #[test]
    fn derived_series_of_a5_and_a4() {
        let g = a5();
        let all: Vec<u32> = (0..60).collect();
        let ds = derived_series(&g, &all).unwrap();
        assert!(!ds.soluble);
        let maxes = MaximalSubgroups::compute(&g).unwrap();
        let orders: Vec<usize> = maxes.classes().iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![12, 10, 6]);
        let a4 = &maxes.classes()[0];
        let ds = derived_series(&g, &a4.members).unwrap();
        assert_eq!(ds.orders, vec![12, 4, 1]);
        assert_eq!(ds.length, Some(2));
    }

    #[test]
    fn dihedral_fingerprints() {
        let g = a5();
        let maxes = MaximalSubgroups::compute(&g).unwrap();
        let fps: Vec<bool> = maxes
            .classes()
            .iter()
            .map(|m| fingerprint(&g, &m.members).unwrap().is_dihedral())
            .collect();
        assert_eq!(fps, vec![false, true, true]);
    }

    #[test]
    fn shortcut_refused_outside_minimal_simple() {
        let g = Group::build(GroupSpec::psl2(11)).unwrap();
        assert!(matches!(
            is_pair_soluble(&g, 1, 2, SolubilityMode::Shortcut),
            Err(SubgroupError::ShortcutUnavailable(_))
        ));
        assert!(matches!(MaximalSubgroups::compute(&g), Err(SubgroupError::NotMinimalSimple(_))));
    }
}
