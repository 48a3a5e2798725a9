//! Undirected graphs on an enumerated group: the Hasse diagram of Bruhat
//! order (edges where a reflection moves the length by exactly one) and the
//! full reflection graph (edges for every reflection move).

use crate::groups::table::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseGraph {
    /// Coxeter length of each vertex.
    pub lengths: Vec<u32>,
    /// Sorted neighbor lists.
    pub adj: Vec<Vec<u32>>,
    /// Display label per vertex (window notation where available).
    pub labels: Vec<String>,
}

impl HasseGraph {
    /// Hasse diagram of strong Bruhat order: w -- tw when the length gap is
    /// exactly one.
    pub fn from_table(table: &GroupTable) -> HasseGraph {
        Self::build(table, |gap| gap == 1)
    }

    /// Full reflection graph: w -- tw for every reflection t. Regular of
    /// degree |T|; every gap is odd.
    pub fn bruhat_from_table(table: &GroupTable) -> HasseGraph {
        Self::build(table, |_| true)
    }

    fn build(table: &GroupTable, keep: impl Fn(u32) -> bool) -> HasseGraph {
        let n = table.size();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for w in 0..n {
            for action in &table.refl_action {
                let o = action[w] as usize;
                if o > w {
                    let gap = table.lengths[o] - table.lengths[w];
                    if keep(gap) {
                        adj[w].push(o as u32);
                        adj[o].push(w as u32);
                    }
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let labels = (0..n as u32).map(|i| table.label(i)).collect();
        HasseGraph {
            lengths: table.lengths.clone(),
            adj,
            labels,
        }
    }

    pub fn size(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// Edge list with u < v, ascending. Deterministic export order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.first_triangle().is_none()
    }

    /// Some edge lying in a triangle, if any. Sorted adjacency lists allow
    /// a merge-style intersection test.
    pub fn first_triangle(&self) -> Option<(u32, u32)> {
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v && !intersection_empty(list, &self.adj[v as usize]) {
                    return Some((u as u32, v));
                }
            }
        }
        None
    }

    /// Largest number of common neighbors over the endpoints of any edge,
    /// which is the largest number of triangles any edge lies in.
    pub fn max_edge_triangles(&self) -> usize {
        let mut best = 0;
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    best = best.max(intersection_size(list, &self.adj[v as usize]));
                }
            }
        }
        best
    }
}

pub(crate) fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

fn intersection_empty(a: &[u32], b: &[u32]) -> bool {
    intersection_size(a, b) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{Family, GroupSpec};
    use crate::groups::table::{enumerate, Budget};

    fn hasse(family: Family, rank: u8, m: Option<u32>) -> HasseGraph {
        let spec = GroupSpec::new(family, rank, m).unwrap();
        let table = enumerate(spec, &Budget::default()).unwrap();
        HasseGraph::from_table(&table)
    }

    #[test]
    fn small_hasse_sizes() {
        let h = hasse(Family::A, 2, None);
        assert_eq!((h.size(), h.edge_count()), (6, 8));
        let h = hasse(Family::A, 3, None);
        assert_eq!((h.size(), h.edge_count()), (24, 58));
        let h = hasse(Family::B, 2, None);
        assert_eq!((h.size(), h.edge_count()), (8, 12));
        let h = hasse(Family::B, 3, None);
        assert_eq!((h.size(), h.edge_count()), (48, 138));
        let h = hasse(Family::D, 4, None);
        assert_eq!((h.size(), h.edge_count()), (192, 790));
    }

    #[test]
    fn dihedral_hasse_shape() {
        for m in [3u32, 5, 8] {
            let h = hasse(Family::I2, 2, Some(m));
            assert_eq!(h.size(), 2 * m as usize);
            assert_eq!(h.edge_count(), 4 * m as usize - 4);
        }
    }

    #[test]
    fn hasse_is_length_bipartite_and_triangle_free() {
        let h = hasse(Family::B, 3, None);
        for (u, v) in h.edges() {
            let d = h.lengths[u as usize].abs_diff(h.lengths[v as usize]);
            assert_eq!(d, 1);
        }
        assert!(h.is_triangle_free());
        assert_eq!(h.max_edge_triangles(), 0);
    }

    #[test]
    fn bruhat_graph_is_reflection_regular_with_odd_gaps() {
        let spec = GroupSpec::new(Family::B, 3, None).unwrap();
        let table = enumerate(spec, &Budget::default()).unwrap();
        let g = HasseGraph::bruhat_from_table(&table);
        for v in 0..g.size() as u32 {
            assert_eq!(g.degree(v), table.reflections.len());
        }
        for (u, v) in g.edges() {
            let d = g.lengths[u as usize].abs_diff(g.lengths[v as usize]);
            assert_eq!(d % 2, 1, "{u}-{v}");
        }
        assert!(g.edge_count() > HasseGraph::from_table(&table).edge_count());
    }

    #[test]
    fn triangle_detection_on_a_triangle() {
        let g = HasseGraph {
            lengths: vec![0; 3],
            adj: vec![vec![1, 2], vec![0, 2], vec![0, 1]],
            labels: vec!["a".into(), "b".into(), "c".into()],
        };
        assert_eq!(g.first_triangle(), Some((0, 1)));
        assert_eq!(g.max_edge_triangles(), 1);
    }
}
