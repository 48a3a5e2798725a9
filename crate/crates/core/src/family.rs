//! Group specifications: which finite irreducible Coxeter group to build.

use crate::error::GroupError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H3,
    F4,
    E6,
}

impl FromStr for Family {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" | "C" => Ok(Family::B),
            "D" => Ok(Family::D),
            "I2" | "I" => Ok(Family::I2),
            "H3" => Ok(Family::H3),
            "F4" => Ok(Family::F4),
            "E6" => Ok(Family::E6),
            // Finite but deliberately out of scope: too large for the
            // exhaustive checks this crate exists to run.
            "E7" | "E8" | "H4" => Err(GroupError::UnsupportedType(format!(
                "{} is not supported (group too large for exhaustive verification)",
                s.to_ascii_uppercase()
            ))),
            other => Err(GroupError::UnsupportedType(format!(
                "unknown family {other:?} (expected A, B, D, I2, H3, F4, E6)"
            ))),
        }
    }
}

/// A validated (family, rank, m) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub rank: u8,
    /// Dihedral order parameter; `Some` exactly for I2(m).
    pub m: Option<u32>,
}

impl GroupSpec {
    pub fn new(family: Family, rank: u8, m: Option<u32>) -> Result<Self, GroupError> {
        let err = |msg: String| Err(GroupError::UnsupportedType(msg));
        match family {
            Family::A => {
                if rank < 1 {
                    return err("A requires rank >= 1".into());
                }
            }
            Family::B => {
                if rank < 2 {
                    return err("B requires rank >= 2".into());
                }
            }
            Family::D => {
                // D3 is accepted; it is isomorphic to A3 and callers may
                // want it for rule cross-checks.
                if rank < 3 {
                    return err("D requires rank >= 3".into());
                }
            }
            Family::I2 => {
                let m = m.ok_or_else(|| {
                    GroupError::UnsupportedType("I2 requires the m parameter".into())
                })?;
                if m < 2 {
                    return err(format!("I2({m}) is not a dihedral group; need m >= 2"));
                }
                if rank != 0 && rank != 2 {
                    return err(format!("I2 has rank 2, got rank {rank}"));
                }
                return Ok(GroupSpec { family, rank: 2, m: Some(m) });
            }
            Family::H3 | Family::F4 | Family::E6 => {
                let fixed = match family {
                    Family::H3 => 3,
                    Family::F4 => 4,
                    _ => 6,
                };
                if rank != 0 && rank != fixed {
                    return err(format!("{family:?} has fixed rank {fixed}, got {rank}"));
                }
                if m.is_some() {
                    return err(format!("{family:?} takes no m parameter"));
                }
                return Ok(GroupSpec { family, rank: fixed, m: None });
            }
        }
        // Window families share a cap: entries are stored as i8 and the
        // element budget rules out anything larger anyway.
        if !matches!(family, Family::I2) && m.is_some() {
            return err(format!("{family:?} takes no m parameter"));
        }
        if rank > 12 {
            return err(format!("{family:?} rank {rank} exceeds the window cap (12)"));
        }
        Ok(GroupSpec { family, rank, m: None })
    }

    /// Number of group elements, from the classical order formulas.
    pub fn order(&self) -> u128 {
        fn fact(k: u128) -> u128 {
            (2..=k).product::<u128>().max(1)
        }
        let r = self.rank as u128;
        match self.family {
            Family::A => fact(r + 1),
            Family::B => (1u128 << r) * fact(r),
            Family::D => (1u128 << (r - 1)) * fact(r),
            Family::I2 => 2 * self.m.unwrap() as u128,
            Family::H3 => 120,
            Family::F4 => 1152,
            Family::E6 => 51_840,
        }
    }

    /// Number of reflections |T|; also the maximal length.
    pub fn reflection_count(&self) -> usize {
        let r = self.rank as usize;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B => r * r,
            Family::D => r * r - r,
            Family::I2 => self.m.unwrap() as usize,
            Family::H3 => 15,
            Family::F4 => 24,
            Family::E6 => 36,
        }
    }

    /// Length of the one-line window for the window families (A_n acts on
    /// n+1 letters), 0 for the others.
    pub fn window_len(&self) -> usize {
        match self.family {
            Family::A => self.rank as usize + 1,
            Family::B | Family::D => self.rank as usize,
            _ => 0,
        }
    }

    pub fn generator_count(&self) -> usize {
        match self.family {
            Family::I2 => 2,
            _ => self.rank as usize,
        }
    }

    /// Low-rank coincidences worth a note in reports. D3 is the same
    /// group as A3; it is accepted so rule cross-checks can use it.
    pub fn alias_note(&self) -> Option<&'static str> {
        match (self.family, self.rank) {
            (Family::D, 3) => Some("D3 is isomorphic to A3"),
            (Family::I2, 2) if self.m == Some(3) => Some("I2(3) is isomorphic to A2"),
            (Family::I2, 2) if self.m == Some(4) => Some("I2(4) is isomorphic to B2"),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.m.unwrap()),
            Family::H3 => write!(f, "H3"),
            Family::F4 => write!(f, "F4"),
            Family::E6 => write!(f, "E6"),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_families() {
        assert_eq!("b".parse::<Family>().unwrap(), Family::B);
        assert_eq!("I2".parse::<Family>().unwrap(), Family::I2);
        assert!(matches!(
            "E8".parse::<Family>(),
            Err(GroupError::UnsupportedType(_))
        ));
        assert!(matches!(
            "H4".parse::<Family>(),
            Err(GroupError::UnsupportedType(_))
        ));
        assert!("Z".parse::<Family>().is_err());
    }

    #[test]
    fn orders_and_reflection_counts() {
        let b4 = GroupSpec::new(Family::B, 4, None).unwrap();
        assert_eq!(b4.order(), 384);
        assert_eq!(b4.reflection_count(), 16);

        let d5 = GroupSpec::new(Family::D, 5, None).unwrap();
        assert_eq!(d5.order(), 1920);
        assert_eq!(d5.reflection_count(), 20);

        let a3 = GroupSpec::new(Family::A, 3, None).unwrap();
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.reflection_count(), 6);

        let i27 = GroupSpec::new(Family::I2, 0, Some(7)).unwrap();
        assert_eq!(i27.order(), 14);
        assert_eq!(i27.reflection_count(), 7);
        assert_eq!(i27.rank, 2);

        let e6 = GroupSpec::new(Family::E6, 0, None).unwrap();
        assert_eq!(e6.order(), 51_840);
        assert_eq!(e6.reflection_count(), 36);
        assert_eq!(e6.to_string(), "E6");
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(GroupSpec::new(Family::B, 1, None).is_err());
        assert!(GroupSpec::new(Family::D, 2, None).is_err());
        assert!(GroupSpec::new(Family::I2, 2, Some(1)).is_err());
        assert!(GroupSpec::new(Family::I2, 2, None).is_err());
        assert!(GroupSpec::new(Family::A, 3, Some(5)).is_err());
        assert!(GroupSpec::new(Family::H3, 4, None).is_err());
    }

    #[test]
    fn low_rank_aliases() {
        let d3 = GroupSpec::new(Family::D, 3, None).unwrap();
        assert_eq!(d3.order(), 24);
        assert_eq!(d3.alias_note(), Some("D3 is isomorphic to A3"));
        let i22 = GroupSpec::new(Family::I2, 2, Some(2)).unwrap();
        assert_eq!(i22.order(), 4);
        assert!(GroupSpec::new(Family::B, 4, None).unwrap().alias_note().is_none());
    }
}
