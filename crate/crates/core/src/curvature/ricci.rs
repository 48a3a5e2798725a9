//! Local and global curvature of a graph, plus the degree-based bounds it
//! is checked against. The local value at x is the smallest eigenvalue of
//! the reduced matrix on ring 1.

use crate::curvature::ball::LocalBall;
use crate::curvature::eigen::{jacobi_eigen, SymMat};
use crate::curvature::reduce::reduce_to_a;
use crate::error::CurvatureError;
use crate::hasse::graph::intersection_size;
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq)]
pub struct LocalCurvature {
    pub vertex: u32,
    pub ric: f64,
    /// Full spectrum of the reduced matrix, ascending.
    pub spectrum: Vec<f64>,
}

pub fn local_ricci(adj: &[Vec<u32>], x: u32) -> Result<LocalCurvature, CurvatureError> {
    let ball = LocalBall::new(adj, x)?;
    let a = reduce_to_a(&ball);
    local_from_matrix(x, &a)
}

/// Same, but with a caller-fixed ring-1 order (the spectrum is order
/// independent; the matrix is not).
pub fn local_ricci_ordered(
    adj: &[Vec<u32>],
    x: u32,
    ring1: Vec<u32>,
) -> Result<(SymMat, LocalCurvature), CurvatureError> {
    let ball = LocalBall::with_ring1_order(adj, x, ring1)?;
    let a = reduce_to_a(&ball);
    let local = local_from_matrix(x, &a)?;
    Ok((a, local))
}

fn local_from_matrix(x: u32, a: &SymMat) -> Result<LocalCurvature, CurvatureError> {
    let eig = jacobi_eigen(a)?;
    Ok(LocalCurvature {
        vertex: x,
        ric: eig.values[0],
        spectrum: eig.values,
    })
}

#[derive(Debug, Clone)]
pub struct CurvatureReport {
    pub per_vertex: Vec<LocalCurvature>,
    /// min over vertices of the local value.
    pub ric: f64,
    /// First vertex attaining the min.
    pub argmin: u32,
    pub max_degree: usize,
    /// 4 - max over ordered edges (x,y) of (3 d(x) + d(y))/2; triangle-free
    /// graphs only.
    pub lower_bound_edgewise: Option<f64>,
    /// 4 - 2 max_degree; triangle-free graphs only.
    pub lower_bound_degree: Option<f64>,
    /// 2 + (max triangles through an edge)/2.
    pub upper_bound: f64,
}

/// Curvature at every vertex, in parallel. Work per vertex is independent
/// and the collection preserves vertex order, so results are identical for
/// any thread count.
pub fn global_ricci(adj: &[Vec<u32>]) -> Result<CurvatureReport, CurvatureError> {
    if let Some(v) = adj.iter().position(Vec::is_empty) {
        return Err(CurvatureError::IsolatedVertex(v as u32));
    }
    let per_vertex: Vec<LocalCurvature> = (0..adj.len() as u32)
        .into_par_iter()
        .map(|x| local_ricci(adj, x))
        .collect::<Result<_, _>>()?;
    let (argmin, ric) = per_vertex
        .iter()
        .enumerate()
        .fold((0usize, f64::INFINITY), |(ai, av), (i, lc)| {
            if lc.ric < av {
                (i, lc.ric)
            } else {
                (ai, av)
            }
        });
    let triangle_free = first_triangle(adj).is_none();
    Ok(CurvatureReport {
        ric,
        argmin: argmin as u32,
        max_degree: adj.iter().map(Vec::len).max().unwrap_or(0),
        lower_bound_edgewise: triangle_free.then(|| edgewise_bound(adj)),
        lower_bound_degree: triangle_free.then(|| lower_bound_from_max_degree(adj)),
        upper_bound: upper_bound_triangles(adj),
        per_vertex,
    })
}

fn first_triangle(adj: &[Vec<u32>]) -> Option<(u32, u32)> {
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            if (u as u32) < v && intersection_size(list, &adj[v as usize]) > 0 {
                return Some((u as u32, v));
            }
        }
    }
    None
}

fn edgewise_bound(adj: &[Vec<u32>]) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    for list in adj {
        for &y in list {
            worst = worst.max((3.0 * list.len() as f64 + adj[y as usize].len() as f64) / 2.0);
        }
    }
    if worst.is_finite() {
        4.0 - worst
    } else {
        4.0
    }
}

/// Global lower bound for triangle-free graphs from vertex degrees along
/// edges. Errs with a witness edge if the graph has triangles.
pub fn lower_bound_triangle_free(adj: &[Vec<u32>]) -> Result<f64, CurvatureError> {
    if let Some((u, v)) = first_triangle(adj) {
        return Err(CurvatureError::HasTriangles(u, v));
    }
    Ok(edgewise_bound(adj))
}

/// Weaker triangle-free lower bound from the maximum degree alone.
pub fn lower_bound_from_max_degree(adj: &[Vec<u32>]) -> f64 {
    4.0 - 2.0 * adj.iter().map(Vec::len).max().unwrap_or(0) as f64
}

/// Upper bound from the largest number of triangles through one edge.
pub fn upper_bound_triangles(adj: &[Vec<u32>]) -> f64 {
    let mut t = 0;
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            if (u as u32) < v {
                t = t.max(intersection_size(list, &adj[v as usize]));
            }
        }
    }
    2.0 + t as f64 / 2.0
}
