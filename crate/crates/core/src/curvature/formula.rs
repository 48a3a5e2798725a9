//! Closed-form expansion of the iterated form on the radius-2 ball.
//!
//! For f with f(center) = 0, twice the iterated form splits into four
//! pieces: a ring-2 term, the squared ring-1 sum, a ring-1 edge term, and
//! a degree term. Valid on any graph, triangles included; agrees with the
//! definitional operator (tested, and part of the verification suite).

use crate::curvature::ball::LocalBall;
use crate::error::CurvatureError;
use std::collections::HashMap;

/// Gamma2(f)(center) for f given on ring 1 and ring 2 and zero at the
/// center. A nonzero center value is rejected rather than shifted, so the
/// caller's normalization mistakes stay visible.
pub fn gamma2_formula(
    ball: &LocalBall,
    f: &HashMap<u32, f64>,
) -> Result<f64, CurvatureError> {
    if let Some(&fx) = f.get(&ball.center) {
        if fx != 0.0 {
            return Err(CurvatureError::NotNormalized(fx));
        }
    }
    let value = |v: u32| -> Result<f64, CurvatureError> {
        f.get(&v).copied().ok_or(CurvatureError::MissingValue(v))
    };

    let f1: Vec<f64> = ball
        .ring1
        .iter()
        .map(|&v| value(v))
        .collect::<Result<_, _>>()?;

    let mut t_ring2 = 0.0;
    for (u, nb) in ball.ring2.iter().zip(&ball.cross) {
        let fu = value(*u)?;
        for &i in nb {
            t_ring2 += 0.5 * (fu - 2.0 * f1[i]).powi(2);
        }
    }

    let t_sum = f1.iter().sum::<f64>().powi(2);

    let mut t_edges = 0.0;
    for &(i, j) in &ball.ring1_edges {
        t_edges += 2.0 * (f1[i] - f1[j]).powi(2) + 0.5 * (f1[i].powi(2) + f1[j].powi(2));
    }

    let dx = ball.center_degree as f64;
    let t_deg: f64 = f1
        .iter()
        .zip(&ball.ring1_degrees)
        .map(|(fv, &dv)| (4.0 - dx - dv as f64) / 2.0 * fv * fv)
        .sum();

    Ok((t_ring2 + t_sum + t_edges + t_deg) / 2.0)
}
