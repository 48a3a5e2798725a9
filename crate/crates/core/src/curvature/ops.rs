//! Definitional graph operators. Functions are dense slices indexed by
//! vertex id; adjacency lists must cover every vertex the operator touches.

/// Graph Laplacian at x: sum of differences into the neighbors.
pub fn delta(adj: &[Vec<u32>], f: &[f64], x: u32) -> f64 {
    adj[x as usize]
        .iter()
        .map(|&v| f[v as usize] - f[x as usize])
        .sum()
}

/// Carre du champ at x.
pub fn gamma_bilinear(adj: &[Vec<u32>], f: &[f64], g: &[f64], x: u32) -> f64 {
    0.5 * adj[x as usize]
        .iter()
        .map(|&v| (f[x as usize] - f[v as usize]) * (g[x as usize] - g[v as usize]))
        .sum::<f64>()
}

pub fn gamma(adj: &[Vec<u32>], f: &[f64], x: u32) -> f64 {
    gamma_bilinear(adj, f, f, x)
}

/// Iterated form at x, straight from the definition:
/// Gamma2(f)(x) = 1/2 Delta(Gamma(f,f))(x) - Gamma(f, Delta f)(x).
/// Reads f only on the radius-2 ball around x.
pub fn gamma2(adj: &[Vec<u32>], f: &[f64], x: u32) -> f64 {
    let gf_x = gamma(adj, f, x);
    let df_x = delta(adj, f, x);
    let mut half_delta_gf = 0.0;
    let mut gamma_f_df = 0.0;
    for &v in &adj[x as usize] {
        half_delta_gf += 0.5 * (gamma(adj, f, v) - gf_x);
        gamma_f_df += 0.5
            * (f[x as usize] - f[v as usize])
            * (df_x - delta(adj, f, v));
    }
    half_delta_gf - gamma_f_df
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Vec<Vec<u32>> {
        vec![vec![1], vec![0, 2], vec![1, 3], vec![2]]
    }

    #[test]
    fn delta_and_gamma_on_a_path() {
        let adj = path4();
        let f = [0.0, 1.0, 3.0, 6.0];
        assert_eq!(delta(&adj, &f, 1), (0.0 - 1.0) + (3.0 - 1.0));
        assert_eq!(gamma(&adj, &f, 1), 0.5 * (1.0 + 4.0));
        assert_eq!(gamma(&adj, &f, 0), 0.5);
    }

    #[test]
    fn gamma_product_rule_against_expansion() {
        // Gamma(f,g) = 1/2 (Delta(fg) - f Delta g - g Delta f)
        let adj = path4();
        let f = [0.3, -1.2, 0.7, 2.0];
        let g = [1.0, 0.25, -0.5, 0.125];
        let fg: Vec<f64> = f.iter().zip(&g).map(|(a, b)| a * b).collect();
        for x in 0..4u32 {
            let lhs = gamma_bilinear(&adj, &f, &g, x);
            let rhs = 0.5
                * (delta(&adj, &fg, x)
                    - f[x as usize] * delta(&adj, &g, x)
                    - g[x as usize] * delta(&adj, &f, x));
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn gamma2_is_invariant_under_constants() {
        let adj = path4();
        let f = [0.3, -1.2, 0.7, 2.0];
        let shifted: Vec<f64> = f.iter().map(|v| v + 5.0).collect();
        for x in 0..4u32 {
            assert!((gamma2(&adj, &f, x) - gamma2(&adj, &shifted, x)).abs() < 1e-12);
        }
    }
}
