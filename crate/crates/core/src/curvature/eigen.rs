//! Dense symmetric matrices and a cyclic Jacobi eigensolver. Matrices here
//! are tiny (ring-1 sized), so simplicity and bit-for-bit determinism beat
//! a library solver.

use crate::error::CurvatureError;

#[derive(Debug, Clone, PartialEq)]
pub struct SymMat {
    pub n: usize,
    data: Vec<f64>,
}

impl SymMat {
    pub fn zeros(n: usize) -> SymMat {
        SymMat {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> SymMat {
        let n = rows.len();
        let mut m = SymMat::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, &v) in row.iter().enumerate() {
                m.data[i * n + j] = v;
            }
        }
        m.assert_symmetric();
        m
    }

    fn assert_symmetric(&self) {
        for i in 0..self.n {
            for j in 0..i {
                assert!(
                    (self.at(i, j) - self.at(j, i)).abs() < 1e-12,
                    "not symmetric at ({i},{j})"
                );
            }
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    /// Adds v at (i,j) and, off the diagonal, at (j,i) too.
    pub fn add_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] += v;
        if i != j {
            self.data[j * self.n + i] += v;
        }
    }

    pub fn add_all(&mut self, v: f64) {
        for x in &mut self.data {
            *x += v;
        }
    }

    pub fn max_abs_diff(&self, other: &SymMat) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n);
        let mut q = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                q += x[i] * self.at(i, j) * x[j];
            }
        }
        q
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.at(i, j) * self.at(i, j);
                }
            }
        }
        s.sqrt()
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

#[derive(Debug, Clone)]
pub struct Eigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// vectors[k] is the unit eigenvector for values[k].
    pub vectors: Vec<Vec<f64>>,
}

pub const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi: rotate away each off-diagonal entry in row order until
/// the off-diagonal norm is negligible against the matrix scale.
pub fn jacobi_eigen(m: &SymMat) -> Result<Eigen, CurvatureError> {
    let n = m.n;
    let mut a = m.clone();
    // v[k*n + i] = component i of eigenvector candidate k (rows = vectors)
    let mut v = vec![0.0; n * n];
    for k in 0..n {
        v[k * n + k] = 1.0;
    }
    let scale = a.frobenius().max(1.0);
    let tol = 1e-13 * scale;
    let mut sweeps = 0;
    while a.off_diagonal_norm() > tol {
        sweeps += 1;
        if sweeps > MAX_SWEEPS {
            return Err(CurvatureError::NoConvergence {
                sweeps: MAX_SWEEPS,
                norm: a.off_diagonal_norm(),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.at(p, q);
                if apq.abs() <= tol / (n as f64 * n as f64) {
                    continue;
                }
                let theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a.at(k, p);
                        let akq = a.at(k, q);
                        a.set(k, p, c * akp - s * akq);
                        a.set(p, k, c * akp - s * akq);
                        a.set(k, q, s * akp + c * akq);
                        a.set(q, k, s * akp + c * akq);
                    }
                }
                let app = a.at(p, p);
                let aqq = a.at(q, q);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for i in 0..n {
                    let vip = v[p * n + i];
                    let viq = v[q * n + i];
                    v[p * n + i] = c * vip - s * viq;
                    v[q * n + i] = s * vip + c * viq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.at(i, i).partial_cmp(&a.at(j, j)).unwrap());
    let values = order.iter().map(|&k| a.at(k, k)).collect();
    let vectors = order
        .iter()
        .map(|&k| v[k * n..(k + 1) * n].to_vec())
        .collect();
    Ok(Eigen { values, vectors })
}
