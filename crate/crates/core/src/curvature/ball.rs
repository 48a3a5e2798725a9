//! The radius-2 combinatorial ball around a vertex, split into the two
//! rings the quadratic-form reduction works with.

use crate::error::CurvatureError;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct LocalBall {
    pub center: u32,
    /// Neighbors of the center. Order is significant: it fixes the row
    /// order of the reduced matrix.
    pub ring1: Vec<u32>,
    /// Vertices at distance exactly 2, ascending.
    pub ring2: Vec<u32>,
    pub center_degree: usize,
    /// Degree in the ambient graph of each ring-1 vertex.
    pub ring1_degrees: Vec<usize>,
    /// For each ring-2 vertex, the ring-1 indices it is adjacent to.
    pub cross: Vec<Vec<usize>>,
    /// Edges inside ring 1, as index pairs i < j.
    pub ring1_edges: Vec<(usize, usize)>,
}

impl LocalBall {
    /// Ball with ring 1 in ascending vertex order.
    pub fn new(adj: &[Vec<u32>], x: u32) -> Result<LocalBall, CurvatureError> {
        Self::with_ring1_order(adj, x, adj[x as usize].clone())
    }

    /// Ball with a caller-chosen ring-1 order; the set must be exactly the
    /// neighborhood of x. Adjacency lists must be sorted.
    pub fn with_ring1_order(
        adj: &[Vec<u32>],
        x: u32,
        ring1: Vec<u32>,
    ) -> Result<LocalBall, CurvatureError> {
        if adj[x as usize].is_empty() {
            return Err(CurvatureError::EmptyBall(x));
        }
        {
            let mut sorted = ring1.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, adj[x as usize], "ring1 must be the neighborhood of x");
        }
        let slot: HashMap<u32, usize> =
            ring1.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut ring2: Vec<u32> = Vec::new();
        for &v in &ring1 {
            for &u in &adj[v as usize] {
                if u != x && !slot.contains_key(&u) {
                    ring2.push(u);
                }
            }
        }
        ring2.sort_unstable();
        ring2.dedup();
        let cross: Vec<Vec<usize>> = ring2
            .iter()
            .map(|&u| {
                let mut ids: Vec<usize> = adj[u as usize]
                    .iter()
                    .filter_map(|w| slot.get(w).copied())
                    .collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        let mut ring1_edges = Vec::new();
        for i in 0..ring1.len() {
            for j in i + 1..ring1.len() {
                if adj[ring1[i] as usize].binary_search(&ring1[j]).is_ok() {
                    ring1_edges.push((i, j));
                }
            }
        }
        let ring1_degrees = ring1.iter().map(|&v| adj[v as usize].len()).collect();
        Ok(LocalBall {
            center: x,
            center_degree: adj[x as usize].len(),
            ring1,
            ring2,
            ring1_degrees,
            cross,
            ring1_edges,
        })
    }

    /// Ring-1 vertices followed by ring-2 vertices: the variable order of
    /// the full quadratic form.
    pub fn variables(&self) -> Vec<u32> {
        self.ring1.iter().chain(&self.ring2).copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_ball() {
        // 0-1-2-3-4, centered at 1
        let adj = vec![vec![1], vec![0, 2], vec![1, 3], vec![2, 4], vec![3]];
        let b = LocalBall::new(&adj, 1).unwrap();
        assert_eq!(b.ring1, vec![0, 2]);
        assert_eq!(b.ring2, vec![3]);
        assert_eq!(b.cross, vec![vec![1]]);
        assert!(b.ring1_edges.is_empty());
        assert_eq!(b.ring1_degrees, vec![1, 2]);
    }

    #[test]
    fn triangle_ball_sees_ring1_edge() {
        let adj = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        let b = LocalBall::new(&adj, 0).unwrap();
        assert_eq!(b.ring1, vec![1, 2]);
        assert!(b.ring2.is_empty());
        assert_eq!(b.ring1_edges, vec![(0, 1)]);
    }

    #[test]
    fn custom_ring1_order_is_kept() {
        let adj = vec![vec![1], vec![0, 2], vec![1, 3], vec![2, 4], vec![3]];
        let b = LocalBall::with_ring1_order(&adj, 1, vec![2, 0]).unwrap();
        assert_eq!(b.ring1, vec![2, 0]);
        assert_eq!(b.cross, vec![vec![0]]);
        assert_eq!(b.ring1_degrees, vec![2, 1]);
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let adj = vec![vec![], vec![2], vec![1]];
        assert_eq!(
            LocalBall::new(&adj, 0).unwrap_err(),
            CurvatureError::EmptyBall(0)
        );
    }
}
