//! Route-against-route curvature checks on random graphs: the four-term
//! formula, the operator definition, the reduced matrix, and the
//! direct-minimization oracle must all tell the same story off the Hasse
//! fixtures too.

use bruric_core::curvature::ball::LocalBall;
use bruric_core::curvature::formula::gamma2_formula;
use bruric_core::curvature::ops;
use bruric_core::curvature::oracle::direct_min_ricci;
use bruric_core::curvature::reduce::{reduce_to_a, ring2_minimizer};
use bruric_core::curvature::ricci::{global_ricci, local_ricci, upper_bound_triangles};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Random graph, then a path stitched over component representatives so
/// no vertex is isolated.
fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                adj[u].push(v as u32);
                adj[v].push(u as u32);
            }
        }
    }
    // union-find over components
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut Vec<usize>, mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for u in 0..n {
        for i in 0..adj[u].len() {
            let v = adj[u][i] as usize;
            let (ru, rv) = (find(&mut root, u), find(&mut root, v));
            root[ru] = rv;
        }
    }
    let mut reps: Vec<usize> = (0..n).filter(|&x| find(&mut root, x) == x).collect();
    reps.sort_unstable();
    for pair in reps.windows(2) {
        adj[pair[0]].push(pair[1] as u32);
        adj[pair[1]].push(pair[0] as u32);
        let r0 = find(&mut root, pair[0]);
        root[r0] = find(&mut root, pair[1]);
    }
    for row in &mut adj {
        row.sort_unstable();
        row.dedup();
    }
    adj
}

fn random_ball_values(
    ball: &LocalBall,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> (Vec<f64>, HashMap<u32, f64>) {
    let mut dense = vec![0.0; n];
    let mut sparse = HashMap::new();
    for v in ball.variables() {
        let fv = rng.gen_range(-1.0..1.0);
        dense[v as usize] = fv;
        sparse.insert(v, fv);
    }
    (dense, sparse)
}

#[test]
fn formula_route_matches_operator_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for trial in 0..30 {
        let n = 4 + (trial % 9);
        let adj = random_connected(n, 0.4, &mut rng);
        for x in 0..n as u32 {
            let ball = LocalBall::new(&adj, x).unwrap();
            for _ in 0..20 {
                let (dense, sparse) = random_ball_values(&ball, n, &mut rng);
                let via_formula = gamma2_formula(&ball, &sparse).unwrap();
                let via_ops = ops::gamma2(&adj, &dense, x);
                assert!(
                    (via_formula - via_ops).abs() <= 1e-11,
                    "trial {trial} vertex {x}: {via_formula} vs {via_ops}"
                );
            }
        }
    }
}

#[test]
fn reduced_matrix_is_the_partially_minimized_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(57);
    for trial in 0..20 {
        let n = 5 + (trial % 7);
        let adj = random_connected(n, 0.35, &mut rng);
        for x in 0..n as u32 {
            let ball = LocalBall::new(&adj, x).unwrap();
            let a = reduce_to_a(&ball);
            for _ in 0..10 {
                let f1: Vec<f64> = (0..ball.ring1.len())
                    .map(|_| rng.gen_range(-1.0..1.0))
                    .collect();
                let f2 = ring2_minimizer(&ball, &f1);
                let mut sparse: HashMap<u32, f64> = HashMap::new();
                for (i, &v) in ball.ring1.iter().enumerate() {
                    sparse.insert(v, f1[i]);
                }
                for (i, &u) in ball.ring2.iter().enumerate() {
                    sparse.insert(u, f2[i]);
                }
                let two_gamma2 = 2.0 * gamma2_formula(&ball, &sparse).unwrap();
                let quad = a.quadratic_form(&f1);
                assert!(
                    (two_gamma2 - quad).abs() <= 1e-10,
                    "trial {trial} vertex {x}: {two_gamma2} vs {quad}"
                );
            }
        }
    }
}

#[test]
fn oracle_matches_reduction_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for trial in 0..15 {
        let n = 4 + (trial % 6);
        let adj = random_connected(n, 0.45, &mut rng);
        for x in 0..n as u32 {
            let lc = local_ricci(&adj, x).unwrap();
            let oracle = direct_min_ricci(&adj, x).unwrap();
            assert!(
                (lc.ric - oracle).abs() <= 1e-8,
                "trial {trial} vertex {x}: {} vs oracle {oracle}",
                lc.ric
            );
        }
    }
}

#[test]
fn global_min_respects_triangle_upper_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for trial in 0..15 {
        let n = 5 + (trial % 8);
        let adj = random_connected(n, 0.4, &mut rng);
        let report = global_ricci(&adj).unwrap();
        let upper = upper_bound_triangles(&adj);
        assert!(
            report.ric <= upper + 1e-9,
            "trial {trial}: ric {} over bound {upper}",
            report.ric
        );
    }
}

#[test]
fn curvature_is_shift_invariant_in_f() {
    // Gamma2 only sees differences, so shifting every ball value by a
    // constant must not change it once the center is renormalized.
    let mut rng = ChaCha8Rng::seed_from_u64(131);
    let adj = random_connected(9, 0.4, &mut rng);
    for x in 0..9u32 {
        let ball = LocalBall::new(&adj, x).unwrap();
        let (dense, _) = random_ball_values(&ball, 9, &mut rng);
        let base = ops::gamma2(&adj, &dense, x);
        let shifted: Vec<f64> = dense.iter().map(|v| v + 3.25).collect();
        assert!((ops::gamma2(&adj, &shifted, x) - base).abs() <= 1e-10);
    }
}
