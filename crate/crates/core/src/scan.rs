//! Executable forms of the corollaries and conjectures about solubilizer
//! sizes, probabilities and graph properties.
//!
//! Predictions here are computed from the group parameters by arithmetic
//! alone, independently of the closed-form tables. The identity is excluded
//! from every per-class check.

use num_rational::Ratio;
use serde::Serialize;

use crate::graph::{ColoringReport, EulerianReport};
use crate::group::{Family, GroupSpec};
use crate::solubilizer::{classify_size, SizeKind, SolubilizerRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanCheck {
    pub name: String,
    pub status: ScanStatus,
    pub witnesses: Vec<String>,
}

impl ScanCheck {
    fn from_witnesses(name: &str, witnesses: Vec<String>) -> Self {
        ScanCheck {
            name: name.to_string(),
            status: if witnesses.is_empty() { ScanStatus::Pass } else { ScanStatus::Fail },
            witnesses,
        }
    }

    fn not_applicable(name: &str, why: &str) -> Self {
        ScanCheck {
            name: name.to_string(),
            status: ScanStatus::NotApplicable,
            witnesses: vec![why.to_string()],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub group: String,
    pub checks: Vec<ScanCheck>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != ScanStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&ScanCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const NORMALIZER_DIVIDES: &str = "normalizer order divides |Sol|";
pub const NOT_PRIME_OR_SQUARE: &str = "|Sol| is not a prime or the square of a prime";
pub const NOT_ODD_PRIME_POWER: &str = "|Sol| is not an odd prime power";
pub const PROBABILITY_THREE_FIFTHS: &str = "P_S <= 3/5, equality only for A5 involutions";
pub const PROBABILITY_HALF: &str = "P_S < 1/2 for non-involutions";
pub const POWER_OF_TWO: &str = "power-of-two sizes match the Mersenne prediction";
pub const ABOVE_HALF: &str = "P_S > 1/2 exactly in the three listed cases";
pub const SOL_IS_NORMALIZER: &str = "Sol = N(<x>) exactly in the listed cases";
pub const EULERIAN: &str = "Eulerian verdict matches the prediction";
pub const CHROMATIC: &str = "chromatic bracket lies within the predicted bounds";

fn describe(r: &SolubilizerRecord) -> String {
    format!("class {} (order {}, |Sol| = {})", r.class_index, r.element_order, r.size)
}

fn is_a5(spec: &GroupSpec) -> bool {
    spec.order() == 60
}

/// Runs every per-class scanner over the records of one group. Corollaries
/// stated for minimal simple groups report not-applicable elsewhere.
pub fn scan_solubilizers(spec: &GroupSpec, records: &[SolubilizerRecord]) -> ScanReport {
    let recs: Vec<&SolubilizerRecord> = records.iter().filter(|r| r.element_order > 1).collect();
    let mut checks = Vec::new();

    checks.push(ScanCheck::from_witnesses(
        NORMALIZER_DIVIDES,
        recs.iter()
            .filter(|r| r.size as u64 % r.normalizer_order != 0)
            .map(|r| format!("{}: |N| = {}", describe(r), r.normalizer_order))
            .collect(),
    ));
    checks.push(ScanCheck::from_witnesses(
        NOT_PRIME_OR_SQUARE,
        recs.iter()
            .filter(|r| matches!(classify_size(r.size as u64), SizeKind::Prime(_) | SizeKind::PrimeSquare(_)))
            .map(|r| describe(r))
            .collect(),
    ));
    checks.push(ScanCheck::from_witnesses(
        NOT_ODD_PRIME_POWER,
        recs.iter()
            .filter(|r| classify_size(r.size as u64).is_odd_prime_power())
            .map(|r| describe(r))
            .collect(),
    ));
    let three_fifths = Ratio::new(3u64, 5);
    checks.push(ScanCheck::from_witnesses(
        PROBABILITY_THREE_FIFTHS,
        recs.iter()
            .filter(|r| {
                r.probability > three_fifths
                    || (r.probability == three_fifths && !(is_a5(spec) && r.element_order == 2))
            })
            .map(|r| format!("{}: P_S = {}", describe(r), r.probability))
            .collect(),
    ));
    let half = Ratio::new(1u64, 2);
    checks.push(ScanCheck::from_witnesses(
        PROBABILITY_HALF,
        recs.iter()
            .filter(|r| r.element_order != 2 && r.probability >= half)
            .map(|r| format!("{}: P_S = {}", describe(r), r.probability))
            .collect(),
    ));

    if !spec.is_minimal_simple() {
        for name in [POWER_OF_TWO, ABOVE_HALF, SOL_IS_NORMALIZER] {
            checks.push(ScanCheck::not_applicable(name, "not a minimal simple group"));
        }
        return ScanReport { group: spec.to_string(), checks };
    }

    checks.push(ScanCheck::from_witnesses(
        POWER_OF_TWO,
        recs.iter()
            .filter(|r| classify_size(r.size as u64).is_power_of_two() != power_of_two_predicted(spec, r.element_order as u64))
            .map(|r| describe(r))
            .collect(),
    ));
    checks.push(ScanCheck::from_witnesses(
        ABOVE_HALF,
        recs.iter()
            .filter(|r| {
                let predicted = above_half_predicted(spec, r.element_order as u64);
                match predicted {
                    Some(p) => r.probability != p,
                    None => r.probability > half,
                }
            })
            .map(|r| format!("{}: P_S = {}", describe(r), r.probability))
            .collect(),
    ));
    checks.push(ScanCheck::from_witnesses(
        SOL_IS_NORMALIZER,
        recs.iter()
            .filter(|r| {
                let actual = r.size as u64 == r.normalizer_order;
                Some(actual) != sol_is_normalizer_predicted(spec, r.element_order as u64)
            })
            .map(|r| format!("{}: |N| = {}", describe(r), r.normalizer_order))
            .collect(),
    ));
    ScanReport { group: spec.to_string(), checks }
}

/// Compares an Eulerian verdict with the prediction for minimal simple groups.
pub fn scan_eulerian(spec: &GroupSpec, report: &EulerianReport) -> ScanCheck {
    match eulerian_predicted(spec) {
        None => ScanCheck::not_applicable(EULERIAN, "not a minimal simple group"),
        Some(p) if p == report.eulerian => ScanCheck::from_witnesses(EULERIAN, Vec::new()),
        Some(p) => ScanCheck::from_witnesses(
            EULERIAN,
            vec![format!("predicted {p}, computed {} (witness {:?})", report.eulerian, report.witness)],
        ),
    }
}

/// Checks predicted lower bound <= certified lower bound and
/// found coloring <= max degree <= predicted upper bound.
pub fn scan_chromatic(spec: &GroupSpec, coloring: &ColoringReport, max_degree: usize) -> ScanCheck {
    let Some((lo, hi)) = chromatic_bounds_predicted(spec) else {
        return ScanCheck::not_applicable(CHROMATIC, "not a minimal simple group");
    };
    let mut w = Vec::new();
    if (coloring.lower_bound as u64) < lo {
        w.push(format!("certified lower bound {} below predicted {lo}", coloring.lower_bound));
    }
    if coloring.best.color_count as u64 > hi {
        w.push(format!("coloring with {} colors above predicted {hi}", coloring.best.color_count));
    }
    if max_degree as u64 > hi {
        w.push(format!("maximum degree {max_degree} above predicted {hi}"));
    }
    ScanCheck::from_witnesses(CHROMATIC, w)
}

fn isqrt(n: u64) -> u64 {
    num_integer::Roots::sqrt(&n)
}

fn is_power_of_two(n: u64) -> bool {
    n.is_power_of_two()
}

/// |Sol(x)| is a power of two exactly for PSL(2, 2^n - 1), n = 3 mod 4, n > 3,
/// and |x| = 2^m with 2 < m < n.
pub fn power_of_two_predicted(spec: &GroupSpec, element_order: u64) -> bool {
    if spec.family != Family::Psl2 || !is_power_of_two(spec.q + 1) {
        return false;
    }
    let n = (spec.q + 1).trailing_zeros();
    let m = element_order.trailing_zeros();
    n % 4 == 3 && n > 3 && is_power_of_two(element_order) && 2 < m && m < n
}

/// The exact probability when it is predicted to exceed one half.
pub fn above_half_predicted(spec: &GroupSpec, element_order: u64) -> Option<Ratio<u64>> {
    if element_order != 2 {
        return None;
    }
    if is_a5(spec) {
        Some(Ratio::new(3, 5))
    } else if *spec == GroupSpec::psl2(7) {
        Some(Ratio::new(11, 21))
    } else if spec.family == Family::Psl3 && spec.q == 3 {
        Some(Ratio::new(59, 117))
    } else {
        None
    }
}

/// Whether Sol(x) = N(<x>) for non-identity x; `None` outside minimal simple groups.
pub fn sol_is_normalizer_predicted(spec: &GroupSpec, d: u64) -> Option<bool> {
    if !spec.is_minimal_simple() || d <= 1 {
        return None;
    }
    let q = spec.q;
    Some(match spec.family {
        Family::Psl2 if q % 2 == 0 => (q + 1) % d == 0,
        Family::Psl2 if q % 3 == 0 => d != 2 && (q + 1) % d == 0,
        Family::Psl2 => d == q || (d > 4 && (q + 1) % d == 0),
        Family::Sz => {
            let r = isqrt(2 * q);
            (q + r + 1) % d == 0 || (q - r + 1) % d == 0
        }
        Family::Psl3 => d == 13,
        Family::Psl4 => return None,
    })
}

/// Whether the induced solubility graph is Eulerian; `None` outside minimal simple groups.
pub fn eulerian_predicted(spec: &GroupSpec) -> Option<bool> {
    if !spec.is_minimal_simple() {
        return None;
    }
    Some(match spec.family {
        Family::Psl2 if crate::field::is_prime(spec.q) && spec.q > 3 => !matches!(spec.q % 20, 3 | 7),
        Family::Psl3 => false,
        _ => true,
    })
}

/// Lower and upper chromatic bounds for minimal simple groups.
pub fn chromatic_bounds_predicted(spec: &GroupSpec) -> Option<(u64, u64)> {
    if !spec.is_minimal_simple() {
        return None;
    }
    let q = spec.q;
    Some(match spec.family {
        Family::Psl2 if q % 2 == 0 => (q * q - 1, 3 * q * (q - 1) - 2),
        Family::Psl2 if q % 3 == 0 => (q * (q - 1) / 2, q * (q + 1) - 2),
        Family::Psl2 => (q * (q - 1) / 2, (q - 1) * (2 * q + 3) - 2),
        Family::Sz => ((q * q + 1) * (q - 1), q * q * (4 * q - 3) - 2),
        Family::Psl3 => (431, 2830),
        Family::Psl4 => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn mersenne_prediction() {
        // 127 = 2^7 - 1 with 7 = 3 mod 4
        let g = GroupSpec { family: Family::Psl2, q: 127 };
        for d in [8, 16, 32, 64] {
            assert!(power_of_two_predicted(&g, d));
        }
        assert!(!power_of_two_predicted(&g, 4));
        assert!(!power_of_two_predicted(&g, 128));
        assert!(!power_of_two_predicted(&spec("psl2:31"), 16));
        assert!(!power_of_two_predicted(&spec("psl2:7"), 4));
    }

    #[test]
    fn eulerian_predictions() {
        assert_eq!(eulerian_predicted(&spec("psl2:4")), Some(true));
        assert_eq!(eulerian_predicted(&spec("psl2:7")), Some(false));
        assert_eq!(eulerian_predicted(&spec("psl2:23")), Some(false));
        assert_eq!(eulerian_predicted(&spec("psl2:13")), Some(true));
        assert_eq!(eulerian_predicted(&spec("psl3:3")), Some(false));
        assert_eq!(eulerian_predicted(&spec("psl2:11")), None);
    }

    #[test]
    fn chromatic_predictions() {
        assert_eq!(chromatic_bounds_predicted(&spec("psl2:4")), Some((15, 34)));
        assert_eq!(chromatic_bounds_predicted(&spec("psl2:27")).unwrap().0, 351);
        assert_eq!(chromatic_bounds_predicted(&spec("sz:8")), Some((455, 1854)));
        assert_eq!(chromatic_bounds_predicted(&spec("psl3:3")), Some((431, 2830)));
    }

    #[test]
    fn normalizer_cases() {
        let sz = spec("sz:8");
        assert_eq!(sol_is_normalizer_predicted(&sz, 13), Some(true));
        assert_eq!(sol_is_normalizer_predicted(&sz, 5), Some(true));
        assert_eq!(sol_is_normalizer_predicted(&sz, 7), Some(false));
        assert_eq!(sol_is_normalizer_predicted(&spec("psl2:27"), 2), Some(false));
        assert_eq!(sol_is_normalizer_predicted(&spec("psl2:27"), 7), Some(true));
        assert_eq!(sol_is_normalizer_predicted(&spec("psl2:23"), 4), Some(false));
        assert_eq!(sol_is_normalizer_predicted(&spec("psl2:23"), 6), Some(true));
        assert_eq!(sol_is_normalizer_predicted(&spec("psl2:23"), 23), Some(true));
    }
}
