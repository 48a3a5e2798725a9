//! Window notation for (signed) permutations and the reflections that act
//! on them.
//!
//! A window `[w(1), ..., w(n)]` lists the images of 1..n; the images of the
//! negative letters are forced by w(-i) = -w(i). Plain permutations (the A
//! family, acting on 1..n with every entry positive) use the same type.
//!
//! Reflections are value maps applied on the LEFT: `(t*w)(j) = t(w(j))`.

use crate::error::GroupError;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Window(Vec<i8>);

impl Window {
    pub fn new(entries: Vec<i8>) -> Self {
        Window(entries)
    }

    pub fn identity(n: usize) -> Self {
        Window((1..=n as i8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    /// Image of the positive letter at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> i8 {
        self.0[pos - 1]
    }

    pub fn negative_count(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// Checks the entries form a signed permutation of 1..n.
    pub fn validate_signed(&self) -> Result<(), GroupError> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        for &x in &self.0 {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a - 1] {
                return Err(GroupError::InvalidWindow(format!(
                    "{self} is not a signed permutation of 1..{n}"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(())
    }

    /// Checks the entries form a plain permutation (A family).
    pub fn validate_unsigned(&self) -> Result<(), GroupError> {
        self.validate_signed()?;
        if self.negative_count() > 0 {
            return Err(GroupError::InvalidWindow(format!(
                "{self} has negative entries; the A family takes plain permutations"
            )));
        }
        Ok(())
    }

    /// Checks membership in D_n: signed permutation with evenly many
    /// negative entries.
    pub fn validate_even_signs(&self) -> Result<(), GroupError> {
        self.validate_signed()?;
        if self.negative_count() % 2 != 0 {
            return Err(GroupError::OddSigns(self.to_string()));
        }
        Ok(())
    }

    /// Inversions: pairs i < j with w(i) > w(j).
    pub fn inversions(&self) -> u32 {
        let mut c = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Sum of |w(i)| over the negative entries.
    pub fn negative_sum(&self) -> u32 {
        self.0.iter().filter(|&&x| x < 0).map(|&x| (-x) as u32).sum()
    }

    /// Pairs i < j with w(i) + w(j) < 0.
    pub fn negative_sum_pairs(&self) -> u32 {
        let mut c = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] + self.0[j] < 0 {
                    c += 1;
                }
            }
        }
        c
    }

    /// Coxeter length in S_n (entries all positive): inversion count.
    pub fn length_a(&self) -> u32 {
        self.inversions()
    }

    /// Coxeter length in B_n.
    pub fn length_b(&self) -> u32 {
        self.inversions() + self.negative_sum()
    }

    /// Coxeter length in D_n.
    pub fn length_d(&self) -> u32 {
        self.inversions() + self.negative_sum_pairs()
    }

    /// Right multiplication by the longest element of B_n/D_n with
    /// window -id is entrywise negation; for S_n, w0 reverses the window.
    pub fn negate(&self) -> Window {
        Window(self.0.iter().map(|&x| -x).collect())
    }

    pub fn reversed(&self) -> Window {
        Window(self.0.iter().rev().copied().collect())
    }

    /// Canonical comma-separated form used as the cache key, e.g. `2,-3,1`.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key())
    }
}

impl FromStr for Window {
    type Err = GroupError;

    /// Accepts `1,-2,3`, `[1,-2,3]`, and spaces after commas.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.is_empty() {
            return Err(GroupError::InvalidWindow("empty window".into()));
        }
        let entries = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i8>()
                    .map_err(|_| GroupError::InvalidWindow(format!("bad entry {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let w = Window(entries);
        w.validate_signed()?;
        Ok(w)
    }
}

/// A reflection of S_n / B_n / D_n as a value map on letters.
///
/// `Pair(a,b)` swaps the values a and b (and -a, -b); `Sign(a)` negates the
/// value a; `NegPair(a,b)` sends a to -b and b to -a. All of B_n's
/// reflections are of these three kinds; D_n has no `Sign` reflections and
/// S_n only `Pair`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reflection {
    Pair(u8, u8),
    Sign(u8),
    NegPair(u8, u8),
}

impl Reflection {
    /// Image of the signed value `v` (sign-equivariant extension).
    pub fn map_value(&self, v: i8) -> i8 {
        let (a, out) = if v > 0 { (v, 1) } else { (-v, -1) };
        let mapped = match *self {
            Reflection::Pair(p, q) => {
                let (p, q) = (p as i8, q as i8);
                if a == p {
                    q
                } else if a == q {
                    p
                } else {
                    a
                }
            }
            Reflection::Sign(p) => {
                if a == p as i8 {
                    -a
                } else {
                    a
                }
            }
            Reflection::NegPair(p, q) => {
                let (p, q) = (p as i8, q as i8);
                if a == p {
                    -q
                } else if a == q {
                    -p
                } else {
                    a
                }
            }
        };
        out * mapped
    }

    /// Left multiplication: applies the value map to every window entry.
    pub fn apply(&self, w: &Window) -> Window {
        Window(w.entries().iter().map(|&x| self.map_value(x)).collect())
    }

    /// The reflection whose left action swaps two window entries with the
    /// given VALUES: (..x..y..) -> (..y..x..). For entries of equal sign
    /// that is the plain pair on |x|,|y|; for mixed signs it is the
    /// negative pair.
    pub fn entry_swap(x: i8, y: i8) -> Reflection {
        let (a, b) = order(x.unsigned_abs(), y.unsigned_abs());
        if x.signum() == y.signum() {
            Reflection::Pair(a, b)
        } else {
            Reflection::NegPair(a, b)
        }
    }

    /// The reflection whose left action sends entries (..x..y..) to
    /// (..-y..-x..). Dual to `entry_swap`: same-sign entries need the
    /// negative pair, mixed signs the plain pair.
    pub fn entry_negate_swap(x: i8, y: i8) -> Reflection {
        let (a, b) = order(x.unsigned_abs(), y.unsigned_abs());
        if x.signum() == y.signum() {
            Reflection::NegPair(a, b)
        } else {
            Reflection::Pair(a, b)
        }
    }
}

fn order(a: u8, b: u8) -> (u8, u8) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Reflections of S_n (window length n), in a fixed deterministic order.
pub fn reflections_a(window_len: usize) -> Vec<Reflection> {
    let n = window_len as u8;
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Reflection::Pair(a, b));
        }
    }
    out
}

/// Reflections of B_n: pairs, then sign flips, then negative pairs.
pub fn reflections_b(n: usize) -> Vec<Reflection> {
    let n = n as u8;
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Reflection::Pair(a, b));
        }
    }
    for a in 1..=n {
        out.push(Reflection::Sign(a));
    }
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Reflection::NegPair(a, b));
        }
    }
    out
}

/// Reflections of D_n: pairs and negative pairs only.
pub fn reflections_d(n: usize) -> Vec<Reflection> {
    let n = n as u8;
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Reflection::Pair(a, b));
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Reflection::NegPair(a, b));
        }
    }
    out
}

/// Simple generators acting on windows of length `len`.
///
/// A: adjacent transpositions (i, i+1) on values.
/// B: the sign flip on 1, then adjacent transpositions.
/// D: the negative pair on {1,2}, then adjacent transpositions.
pub fn generators(family: crate::family::Family, len: usize) -> Vec<Reflection> {
    use crate::family::Family;
    let adj = |from: u8| -> Vec<Reflection> {
        (from..len as u8)
            .map(|i| Reflection::Pair(i, i + 1))
            .collect()
    };
    match family {
        Family::A => adj(1),
        Family::B => {
            let mut g = vec![Reflection::Sign(1)];
            g.extend(adj(1));
            g
        }
        Family::D => {
            let mut g = vec![Reflection::NegPair(1, 2)];
            g.extend(adj(1));
            g
        }
        _ => panic!("generators(): window families only"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["[2,-3,-4,1]", "1,2,3", "[ -1, 2 ]"] {
            let w: Window = s.parse().unwrap();
            let again: Window = w.to_string().parse().unwrap();
            assert_eq!(w, again);
        }
        assert!("".parse::<Window>().is_err());
        assert!("1,1".parse::<Window>().is_err());
        assert!("0,1".parse::<Window>().is_err());
        assert!("3,1".parse::<Window>().is_err());
    }

    #[test]
    fn frozen_lengths() {
        let b: Window = "[4,-3,2,-1]".parse().unwrap();
        assert_eq!(b.length_b(), 8);
        let d: Window = "[2,-3,-4,1]".parse().unwrap();
        assert_eq!(d.length_d(), 9);
        assert_eq!(Window::identity(5).length_b(), 0);
        // longest elements
        let w0b: Window = "[-1,-2,-3]".parse().unwrap();
        assert_eq!(w0b.length_b(), 9);
        let w0d: Window = "[-1,-2,-3,-4]".parse().unwrap();
        assert_eq!(w0d.length_d(), 12);
    }

    #[test]
    fn entry_swap_duality() {
        // mixed-sign entry swap must come from a NegPair value map
        let w: Window = "[-2,-1,3]".parse().unwrap();
        let t = Reflection::entry_swap(-1, 3); // entries at slots 2,3
        assert_eq!(t, Reflection::NegPair(1, 3));
        assert_eq!(t.apply(&w), "[-2,3,-1]".parse().unwrap());

        let t2 = Reflection::entry_negate_swap(-1, 3);
        assert_eq!(t2, Reflection::Pair(1, 3));
        assert_eq!(t2.apply(&w), "[-2,-3,1]".parse().unwrap());
    }

    fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<u8>> {
        Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle()
    }

    fn arb_signed_window(n: usize) -> impl Strategy<Value = Window> {
        (
            permutation_strategy(n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(perm, signs)| {
                Window::new(
                    perm.iter()
                        .zip(&signs)
                        .map(|(&v, &neg)| if neg { -(v as i8) } else { v as i8 })
                        .collect(),
                )
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn reflections_are_involutions(w in arb_signed_window(5)) {
            for t in reflections_b(5) {
                prop_assert_eq!(t.apply(&t.apply(&w)), w.clone());
            }
        }

        #[test]
        fn entry_swap_swaps_entries(w in arb_signed_window(5), i in 0usize..5, j in 0usize..5) {
            prop_assume!(i < j);
            let (x, y) = (w.entries()[i], w.entries()[j]);
            let swapped = Reflection::entry_swap(x, y).apply(&w);
            prop_assert_eq!(swapped.entries()[i], y);
            prop_assert_eq!(swapped.entries()[j], x);
            let negswapped = Reflection::entry_negate_swap(x, y).apply(&w);
            prop_assert_eq!(negswapped.entries()[i], -y);
            prop_assert_eq!(negswapped.entries()[j], -x);
        }

        #[test]
        fn length_changes_by_one_under_generators(w in arb_signed_window(5)) {
            for g in generators(crate::family::Family::B, 5) {
                let l1 = w.length_b() as i64;
                let l2 = g.apply(&w).length_b() as i64;
                prop_assert_eq!((l1 - l2).abs(), 1);
            }
        }
    }
}
