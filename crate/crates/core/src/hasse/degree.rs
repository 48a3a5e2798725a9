//! Degree statistics of a Hasse diagram and the closed forms for the
//! maximum degree in each family.

use crate::family::{Family, GroupSpec};
use crate::hasse::graph::HasseGraph;
use std::collections::BTreeMap;

/// Max-degree witnesses are capped; the histogram is complete.
pub const ARGMAX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeReport {
    pub max_degree: usize,
    /// Ids attaining the max, highest id first, at most ARGMAX_CAP of them.
    pub argmax_ids: Vec<u32>,
    /// Labels parallel to argmax_ids.
    pub argmax: Vec<String>,
    /// Total number of vertices attaining the max.
    pub argmax_total: usize,
    /// degree -> vertex count, complete.
    pub histogram: BTreeMap<usize, usize>,
}

pub fn degree_report(h: &HasseGraph) -> DegreeReport {
    let mut histogram = BTreeMap::new();
    let mut max_degree = 0;
    for list in &h.adj {
        *histogram.entry(list.len()).or_insert(0usize) += 1;
        max_degree = max_degree.max(list.len());
    }
    let mut argmax_ids: Vec<u32> = (0..h.size() as u32)
        .filter(|&v| h.degree(v) == max_degree)
        .collect();
    argmax_ids.reverse();
    let argmax_total = argmax_ids.len();
    argmax_ids.truncate(ARGMAX_CAP);
    let argmax = argmax_ids
        .iter()
        .map(|&v| h.labels[v as usize].clone())
        .collect();
    DegreeReport {
        max_degree,
        argmax_ids,
        argmax,
        argmax_total,
        histogram,
    }
}

/// Known maximum Hasse degree for the family, where one is established.
/// The A form is in the number of letters n = rank + 1. The B family
/// switches regime at rank 5.
pub fn expected_max_degree(spec: &GroupSpec) -> Option<u64> {
    let r = spec.rank as u64;
    match spec.family {
        Family::A => {
            let n = r + 1;
            (n >= 2).then(|| n * n / 4 + n - 2)
        }
        Family::B => Some(if r <= 4 { 4 * (r - 1) } else { r * r / 2 + r - 1 }),
        Family::D => Some(r * r / 2 + r - 1),
        Family::I2 => spec.m.map(|m| match m {
            2 => 2,
            3 => 3,
            _ => 4,
        }),
        Family::H3 => Some(9),
        Family::F4 => Some(16),
        Family::E6 => Some(25),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::table::{enumerate, Budget};

    fn report(family: Family, rank: u8, m: Option<u32>) -> DegreeReport {
        let spec = GroupSpec::new(family, rank, m).unwrap();
        let table = enumerate(spec, &Budget::default()).unwrap();
        degree_report(&HasseGraph::from_table(&table))
    }

    #[test]
    fn b3_histogram_is_frozen() {
        let r = report(Family::B, 3, None);
        assert_eq!(r.max_degree, 8);
        let expect: BTreeMap<usize, usize> =
            [(3, 2), (4, 4), (5, 10), (6, 22), (7, 8), (8, 2)].into();
        assert_eq!(r.histogram, expect);
        assert_eq!(r.argmax_total, 2);
        assert_eq!(r.argmax_ids.len(), 2);
        assert!(r.argmax_ids[0] > r.argmax_ids[1]);
    }

    #[test]
    fn histogram_counts_all_vertices() {
        let r = report(Family::D, 4, None);
        assert_eq!(r.histogram.values().sum::<usize>(), 192);
        assert_eq!(r.max_degree, 11);
    }

    #[test]
    fn formula_agrees_on_small_groups() {
        for (fam, rank, m) in [
            (Family::A, 2, None),
            (Family::A, 3, None),
            (Family::A, 4, None),
            (Family::B, 2, None),
            (Family::B, 3, None),
            (Family::B, 4, None),
            (Family::D, 4, None),
            (Family::I2, 2, Some(3)),
            (Family::I2, 2, Some(4)),
            (Family::I2, 2, Some(9)),
        ] {
            let spec = GroupSpec::new(fam, rank, m).unwrap();
            let r = report(fam, rank, m);
            assert_eq!(
                Some(r.max_degree as u64),
                expected_max_degree(&spec),
                "{spec}"
            );
        }
    }
}
