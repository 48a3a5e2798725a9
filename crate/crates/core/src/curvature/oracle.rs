//! Independent check of the local curvature value: build the full
//! quadratic form of twice the iterated operator by polarizing indicator
//! functions, then solve the constrained minimum by positive-semidefinite
//! bisection with a Cholesky test. Shares no code with the reduction
//! pipeline beyond the ball itself.

use crate::curvature::ball::LocalBall;
use crate::curvature::eigen::SymMat;
use crate::curvature::ops;
use crate::error::CurvatureError;

const BISECT_LO: f64 = -200.0;
const BISECT_HI: f64 = 200.0;
const BISECT_ITERS: usize = 70;
const JITTER: f64 = 1e-13;

/// min of Gamma2/Gamma over functions supported on the ball, computed as
/// the largest lambda with M - lambda*B positive semidefinite, where M is
/// the polarized form of 2*Gamma2 and B puts weight 1 on ring-1 slots
/// (2*Gamma(f)(x) is the squared norm of the ring-1 values).
pub fn direct_min_ricci(adj: &[Vec<u32>], x: u32) -> Result<f64, CurvatureError> {
    let ball = LocalBall::new(adj, x)?;
    let vars = ball.variables();
    let nv = vars.len();
    let n1 = ball.ring1.len();

    let q = |assign: &[(u32, f64)]| -> f64 {
        let mut f = vec![0.0; adj.len()];
        for &(v, fv) in assign {
            f[v as usize] = fv;
        }
        2.0 * ops::gamma2(adj, &f, x)
    };

    let singles: Vec<f64> = vars.iter().map(|&v| q(&[(v, 1.0)])).collect();
    let mut m = SymMat::zeros(nv);
    for i in 0..nv {
        m.set(i, i, singles[i]);
        for j in i + 1..nv {
            let qij = q(&[(vars[i], 1.0), (vars[j], 1.0)]);
            let val = (qij - singles[i] - singles[j]) / 2.0;
            m.set(i, j, val);
            m.set(j, i, val);
        }
    }

    let psd = |lambda: f64| -> bool {
        let mut shifted = m.clone();
        for i in 0..nv {
            let b = if i < n1 { 1.0 } else { 0.0 };
            shifted.set(i, i, shifted.at(i, i) - lambda * b + JITTER);
        }
        cholesky_ok(&shifted)
    };

    let (mut lo, mut hi) = (BISECT_LO, BISECT_HI);
    assert!(
        psd(lo) && !psd(hi),
        "bisection bracket failed at vertex {x}"
    );
    for _ in 0..BISECT_ITERS {
        let mid = (lo + hi) / 2.0;
        if psd(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / 2.0)
}

/// In-place LL^T attempt; true iff every pivot stays positive.
fn cholesky_ok(m: &SymMat) -> bool {
    let n = m.n;
    let mut l = vec![0.0f64; n * n];
    for j in 0..n {
        let mut d = m.at(j, j);
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= 0.0 || !d.is_finite() {
            return false;
        }
        let root = d.sqrt();
        l[j * n + j] = root;
        for i in j + 1..n {
            let mut v = m.at(i, j);
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = v / root;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::ricci::local_ricci;

    #[test]
    fn cholesky_recognizes_definiteness() {
        let pd = SymMat::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!(cholesky_ok(&pd));
        let indef = SymMat::from_rows(&[vec![1.0, 3.0], vec![3.0, 1.0]]);
        assert!(!cholesky_ok(&indef));
    }

    #[test]
    fn oracle_matches_reduction_on_fixtures() {
        let graphs: Vec<(Vec<Vec<u32>>, u32)> = vec![
            (vec![vec![1], vec![0, 2], vec![1]], 1),
            (vec![vec![1], vec![0, 2], vec![1]], 0),
            (vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]], 0),
            (vec![vec![1, 2], vec![0, 2], vec![0, 1]], 0),
            (
                vec![
                    vec![1, 5],
                    vec![0, 2],
                    vec![1, 3],
                    vec![2, 4],
                    vec![3, 5],
                    vec![0, 4],
                ],
                0,
            ),
        ];
        for (adj, x) in graphs {
            let direct = direct_min_ricci(&adj, x).unwrap();
            let reduced = local_ricci(&adj, x).unwrap().ric;
            assert!(
                (direct - reduced).abs() < 1e-8,
                "x={x}: {direct} vs {reduced}"
            );
        }
    }
}
