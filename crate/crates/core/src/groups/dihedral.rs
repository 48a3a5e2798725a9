//! The dihedral group I2(m) of order 2m, in rotation/flip coordinates.
//!
//! An element (r, f) is rotation^r when f = 0 and rotation^r * flip when
//! f = 1. Both generators are reflections: the flip itself and
//! rotation * flip. Every element with f = 1 is a reflection; the m
//! reflections are exactly the odd-length elements under the Coxeter
//! length, which the BFS recovers as depth.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    pub r: u32,
    pub f: u8,
}

impl Dihedral {
    pub fn identity() -> Self {
        Dihedral { r: 0, f: 0 }
    }

    /// Group law: (r1,f1)*(r2,f2) with the flip conjugating rotations.
    pub fn mul(self, rhs: Dihedral, m: u32) -> Dihedral {
        if self.f == 0 {
            Dihedral {
                r: (self.r + rhs.r) % m,
                f: rhs.f,
            }
        } else {
            Dihedral {
                r: (self.r + m - rhs.r % m) % m,
                f: 1 - rhs.f,
            }
        }
    }

    pub fn key(&self) -> String {
        format!("{},{}", self.r, self.f)
    }
}

/// The two simple generators: flip and rotation*flip.
pub fn generators() -> [Dihedral; 2] {
    [Dihedral { r: 0, f: 1 }, Dihedral { r: 1, f: 1 }]
}

/// All m reflections, in rotation order.
pub fn reflections(m: u32) -> Vec<Dihedral> {
    (0..m).map(|r| Dihedral { r, f: 1 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        let m = 7;
        let e = Dihedral::identity();
        for r in 0..m {
            for f in 0..2u8 {
                let x = Dihedral { r, f };
                assert_eq!(e.mul(x, m), x);
                assert_eq!(x.mul(e, m), x);
                // reflections square to the identity
                if f == 1 {
                    assert_eq!(x.mul(x, m), e);
                }
            }
        }
        // associativity, exhaustively for small m
        let all: Vec<Dihedral> = (0..m)
            .flat_map(|r| [Dihedral { r, f: 0 }, Dihedral { r, f: 1 }])
            .collect();
        for &a in &all {
            for &b in &all {
                for &c in &all {
                    assert_eq!(a.mul(b, m).mul(c, m), a.mul(b.mul(c, m), m));
                }
            }
        }
    }

    #[test]
    fn generators_have_order_m_product() {
        let m = 5;
        let [s, t] = generators();
        let mut p = Dihedral::identity();
        for _ in 0..m {
            p = p.mul(s, m).mul(t, m);
        }
        // (st)^m = e
        assert_eq!(p, Dihedral::identity());
    }
}
