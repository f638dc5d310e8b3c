#![allow(dead_code)]

use solubilizer::group::{Group, GroupSpec};
use solubilizer::pipeline::default_records;
use solubilizer::solubilizer::SolubilizerRecord;

pub fn group(s: &str) -> Group {
    Group::build(s.parse::<GroupSpec>().unwrap()).unwrap()
}

pub fn records(g: &Group) -> Vec<SolubilizerRecord> {
    default_records(g).unwrap()
}

/// (element order, |Sol|) for every non-identity class, sorted.
pub fn sizes_by_order(records: &[SolubilizerRecord]) -> Vec<(u32, usize)> {
    let mut v: Vec<(u32, usize)> = records
        .iter()
        .filter(|r| r.element_order > 1)
        .map(|r| (r.element_order, r.size))
        .collect();
    v.sort_unstable();
    v
}

/// Distinct non-identity solubilizer sizes, sorted.
pub fn distinct_sizes(records: &[SolubilizerRecord]) -> Vec<usize> {
    let mut v: Vec<usize> = records.iter().filter(|r| r.element_order > 1).map(|r| r.size).collect();
    v.sort_unstable();
    v.dedup();
    v
}
