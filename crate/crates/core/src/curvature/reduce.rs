//! Reduction of the iterated form to a symmetric matrix on ring 1.
//!
//! Ring-2 values enter twice the iterated form only through their own
//! diagonal-plus-cross term, so minimizing them out is a one-variable
//! Schur complement per ring-2 vertex: u's optimum is 2*s_u/k_u where s_u
//! sums f over the ring-1 neighbors of u and k_u counts them. What remains
//! is the quadratic form below, assembled entry by entry.

use crate::curvature::ball::LocalBall;
use crate::curvature::eigen::SymMat;

/// The reduced matrix A with min over f of the Rayleigh quotient
/// Gamma2/Gamma equal to the smallest eigenvalue of A.
pub fn reduce_to_a(ball: &LocalBall) -> SymMat {
    let n = ball.ring1.len();
    let mut a = SymMat::zeros(n);
    for nb in &ball.cross {
        let k = nb.len() as f64;
        for &i in nb {
            a.add_sym(i, i, 2.0 - 2.0 / k);
            for &j in nb {
                if j != i {
                    // both ordered pairs visited, so add to one slot only
                    a.set(i, j, a.at(i, j) - 2.0 / k);
                }
            }
        }
    }
    a.add_all(1.0);
    for &(i, j) in &ball.ring1_edges {
        a.add_sym(i, j, -2.0);
        a.add_sym(i, i, 2.5);
        a.add_sym(j, j, 2.5);
    }
    let dx = ball.center_degree as f64;
    for (i, &dv) in ball.ring1_degrees.iter().enumerate() {
        a.add_sym(i, i, (4.0 - dx - dv as f64) / 2.0);
    }
    a
}

/// The eliminated ring-2 optimum for given ring-1 values, in ring-2 order.
pub fn ring2_minimizer(ball: &LocalBall, f_ring1: &[f64]) -> Vec<f64> {
    ball.cross
        .iter()
        .map(|nb| {
            let s: f64 = nb.iter().map(|&i| f_ring1[i]).sum();
            2.0 * s / nb.len() as f64
        })
        .collect()
}
