//! Arithmetic in Z[phi], phi = (1 + sqrt 5)/2, as integer pairs a + b*phi.
//!
//! phi^2 = phi + 1, so (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi.
//! Exact integer arithmetic keeps the H3 reflection representation free of
//! rounding; i64 coefficients are far beyond what 3x3 products of H3
//! matrices ever reach (entries stay single-digit).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZPhi {
    pub a: i64,
    pub b: i64,
}

impl ZPhi {
    pub const ZERO: ZPhi = ZPhi { a: 0, b: 0 };
    pub const ONE: ZPhi = ZPhi { a: 1, b: 0 };
    pub const PHI: ZPhi = ZPhi { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        ZPhi { a, b }
    }

    pub fn from_int(a: i64) -> Self {
        ZPhi { a, b: 0 }
    }
}

impl Add for ZPhi {
    type Output = ZPhi;
    fn add(self, rhs: ZPhi) -> ZPhi {
        ZPhi::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for ZPhi {
    type Output = ZPhi;
    fn sub(self, rhs: ZPhi) -> ZPhi {
        ZPhi::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi::new(-self.a, -self.b)
    }
}

impl Mul for ZPhi {
    type Output = ZPhi;
    fn mul(self, rhs: ZPhi) -> ZPhi {
        ZPhi::new(
            self.a * rhs.a + self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a + self.b * rhs.b,
        )
    }
}

impl fmt::Display for ZPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a, self.b)
    }
}
