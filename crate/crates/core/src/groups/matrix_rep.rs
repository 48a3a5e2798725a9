//! Exact matrix representations for the exceptional groups.
//!
//! Group elements are square matrices acting on coordinates in the basis of
//! simple roots. The generator s_i is the identity with row i replaced by
//! (c_{i1}, ..., -1, ..., c_{in}), where c_{ij} = 2 cos(pi / m_ij) is the
//! reflection coefficient: 0 for m = 2, 1 for m = 3, phi for m = 5. For the
//! crystallographic F4/E6 the coefficients are the negated off-diagonal
//! Cartan entries, so everything stays in integers; H3 needs Z[phi].

use crate::groups::zphi::ZPhi;
use std::fmt::Display;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Scalar:
    Copy
    + Eq
    + Ord
    + Hash
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const ZERO: Self;
    const ONE: Self;
}

impl Scalar for i64 {
    const ZERO: i64 = 0;
    const ONE: i64 = 1;
}

impl Scalar for ZPhi {
    const ZERO: ZPhi = ZPhi::ZERO;
    const ONE: ZPhi = ZPhi::ONE;
}

/// Dense n x n matrix over an exact scalar, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMat<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> SquareMat<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::ZERO; n * n];
        for i in 0..n {
            data[i * n + i] = T::ONE;
        }
        SquareMat { n, data }
    }

    pub fn at(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &SquareMat<T>) -> SquareMat<T> {
        let n = self.n;
        debug_assert_eq!(n, rhs.n);
        let mut data = vec![T::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == T::ZERO {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = data[i * n + j] + a * rhs.at(k, j);
                }
            }
        }
        SquareMat { n, data }
    }

    /// Canonical comma-separated key over all entries, row-major.
    pub fn key(&self) -> String {
        self.data
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Generator matrices from a table of reflection coefficients:
/// `coeff[i][j]` is c_{ij} for j != i (diagonal entries are ignored).
fn generators_from_coefficients<T: Scalar>(coeff: &[Vec<T>]) -> Vec<SquareMat<T>> {
    let n = coeff.len();
    (0..n)
        .map(|i| {
            let mut s = SquareMat::identity(n);
            for j in 0..n {
                s.data[i * n + j] = if i == j { -T::ONE } else { coeff[i][j] };
            }
            s
        })
        .collect()
}

/// H3: Coxeter diagram 1 -5- 2 -3- 3.
pub fn h3_generators() -> Vec<SquareMat<ZPhi>> {
    let one = ZPhi::ONE;
    let phi = ZPhi::PHI;
    let zero = ZPhi::ZERO;
    let coeff = vec![
        vec![zero, phi, zero],
        vec![phi, zero, one],
        vec![zero, one, zero],
    ];
    generators_from_coefficients(&coeff)
}

/// F4 Cartan matrix (one of the two orientations of the double bond; both
/// generate the same group).
const F4_CARTAN: [[i64; 4]; 4] = [
    [2, -1, 0, 0],
    [-1, 2, -1, 0],
    [0, -2, 2, -1],
    [0, 0, -1, 2],
];

pub fn f4_generators() -> Vec<SquareMat<i64>> {
    cartan_generators(&F4_CARTAN.map(|r| r.to_vec()))
}

/// E6: chain 1-2-3-4-5 with node 6 attached to node 3.
pub fn e6_generators() -> Vec<SquareMat<i64>> {
    let mut cartan = vec![vec![0i64; 6]; 6];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &[(0usize, 1usize), (1, 2), (2, 3), (3, 4), (2, 5)] {
        cartan[i][j] = -1;
        cartan[j][i] = -1;
    }
    cartan_generators(&cartan)
}

fn cartan_generators(cartan: &[Vec<i64>]) -> Vec<SquareMat<i64>> {
    // s_i row entries are delta_ij - C[i][j]; off-diagonal that is -C[i][j],
    // i.e. the reflection coefficient.
    let coeff: Vec<Vec<i64>> = cartan.iter().map(|row| row.iter().map(|&c| -c).collect()).collect();
    generators_from_coefficients(&coeff)
}

/// Reflection set: closure of the generators under conjugation, sorted by
/// matrix payload for determinism.
pub fn reflection_closure<T: Scalar>(gens: &[SquareMat<T>]) -> Vec<SquareMat<T>> {
    use std::collections::BTreeSet;
    let mut set: BTreeSet<SquareMat<T>> = gens.iter().cloned().collect();
    loop {
        let mut next = Vec::new();
        for t in &set {
            for g in gens {
                // g t g^{-1} = g t g since generators are involutions
                let conj = g.mul(t).mul(g);
                if !set.contains(&conj) {
                    next.push(conj);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        set.extend(next);
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_coxeter_relations<T: Scalar + std::fmt::Debug>(gens: &[SquareMat<T>], orders: &[Vec<u32>]) {
        let n = gens.len();
        let id = SquareMat::identity(gens[0].n);
        for i in 0..n {
            assert_eq!(gens[i].mul(&gens[i]), id, "s{i} not an involution");
            for j in i + 1..n {
                let m = orders[i][j];
                let mut p = SquareMat::identity(gens[0].n);
                for _ in 0..m {
                    p = p.mul(&gens[i]).mul(&gens[j]);
                }
                assert_eq!(p, id, "(s{i} s{j})^{m} != e");
            }
        }
    }

    #[test]
    fn h3_relations() {
        let orders = vec![
            vec![1, 5, 2],
            vec![5, 1, 3],
            vec![2, 3, 1],
        ]
        .into_iter()
        .map(|r| r.into_iter().collect())
        .collect::<Vec<Vec<u32>>>();
        check_coxeter_relations(&h3_generators(), &orders);
        assert_eq!(reflection_closure(&h3_generators()).len(), 15);
    }

    #[test]
    fn f4_relations() {
        // bonds: 1-2 order 3, 2-3 order 4, 3-4 order 3, rest commute
        let orders = vec![
            vec![1, 3, 2, 2],
            vec![3, 1, 4, 2],
            vec![2, 4, 1, 3],
            vec![2, 2, 3, 1],
        ];
        check_coxeter_relations(&f4_generators(), &orders);
        assert_eq!(reflection_closure(&f4_generators()).len(), 24);
    }

    #[test]
    fn e6_relations() {
        let mut orders = vec![vec![2u32; 6]; 6];
        for i in 0..6 {
            orders[i][i] = 1;
        }
        for &(i, j) in &[(0usize, 1usize), (1, 2), (2, 3), (3, 4), (2, 5)] {
            orders[i][j] = 3;
            orders[j][i] = 3;
        }
        check_coxeter_relations(&e6_generators(), &orders);
        assert_eq!(reflection_closure(&e6_generators()).len(), 36);
    }
}
