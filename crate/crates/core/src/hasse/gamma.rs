//! Diagnostic graphs of a signed window: the cover moves of an element,
//! drawn as edges between the letters they touch.
//!
//! Each cover neighbor of pi in the Hasse diagram is tw for a unique
//! reflection t, and the kind of t decides the edge: a plain swap joins
//! {a,b}, a sign flip is a loop at a, a negate-swap is a minus edge {a,b}.

use crate::error::GroupError;
use crate::groups::covers;
use crate::groups::window::{Reflection, Window};
use std::collections::BTreeSet;

/// Letter graph of a signed permutation. Edge count equals the Hasse
/// degree of the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaB {
    pub n: usize,
    pub loops: BTreeSet<u8>,
    pub plain: BTreeSet<(u8, u8)>,
    pub minus: BTreeSet<(u8, u8)>,
}

/// Graph on signed letters -n..-1, 1..n; edges (u, v) with u < v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    pub n: usize,
    pub edges: BTreeSet<(i8, i8)>,
}

impl GammaB {
    pub fn edge_count(&self) -> usize {
        self.loops.len() + self.plain.len() + self.minus.len()
    }

    /// Degree of letter i: incident plain and minus edges, plus one for a
    /// loop. Equals the degree of both i and -i in the doubled graph.
    pub fn degree(&self, i: u8) -> usize {
        let inc = |s: &BTreeSet<(u8, u8)>| s.iter().filter(|(a, b)| *a == i || *b == i).count();
        inc(&self.plain) + inc(&self.minus) + usize::from(self.loops.contains(&i))
    }

    pub fn min_degree(&self) -> (u8, usize) {
        (1..=self.n as u8)
            .map(|i| (i, self.degree(i)))
            .min_by_key(|&(i, d)| (d, i))
            .unwrap()
    }

    /// Doubled graph on signed letters: plain {a,b} becomes {a,b} and
    /// {-a,-b}; minus {a,b} becomes {a,-b} and {-a,b}; a loop at a becomes
    /// the edge {a,-a}.
    pub fn tilde(&self) -> SignedGraph {
        let mut edges = BTreeSet::new();
        for &(a, b) in &self.plain {
            edges.insert(ordered(a as i8, b as i8));
            edges.insert(ordered(-(a as i8), -(b as i8)));
        }
        for &(a, b) in &self.minus {
            edges.insert(ordered(a as i8, -(b as i8)));
            edges.insert(ordered(-(a as i8), b as i8));
        }
        for &a in &self.loops {
            edges.insert(ordered(a as i8, -(a as i8)));
        }
        SignedGraph { n: self.n, edges }
    }
}

impl SignedGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: i8) -> usize {
        self.edges.iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    /// Minimum degree over positive letters (degrees are mirror symmetric).
    pub fn min_degree(&self) -> (i8, usize) {
        (1..=self.n as i8)
            .map(|i| (i, self.degree(i)))
            .min_by_key(|&(i, d)| (d, i))
            .unwrap()
    }
}

fn ordered(a: i8, b: i8) -> (i8, i8) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The unique reflection t with c = t * w, recovered from where the two
/// windows differ.
pub fn reflection_between(w: &Window, c: &Window) -> Reflection {
    let diffs: Vec<usize> = (0..w.len())
        .filter(|&i| w.entries()[i] != c.entries()[i])
        .collect();
    match diffs.as_slice() {
        [i] => {
            debug_assert_eq!(c.entries()[*i], -w.entries()[*i]);
            Reflection::Sign(w.entries()[*i].unsigned_abs())
        }
        [i, j] => {
            let (x, y) = (w.entries()[*i], w.entries()[*j]);
            if c.entries()[*i] == y {
                Reflection::entry_swap(x, y)
            } else {
                debug_assert_eq!(c.entries()[*i], -y);
                Reflection::entry_negate_swap(x, y)
            }
        }
        _ => panic!("windows do not differ by one reflection: {w} vs {c}"),
    }
}

fn kinds_of_covers(w: &Window, covers: &[Window]) -> Vec<Reflection> {
    covers.iter().map(|c| reflection_between(w, c)).collect()
}

/// Letter graph of a signed permutation, from its cover moves in the
/// signed Hasse diagram.
pub fn gamma_b(w: &Window) -> GammaB {
    let (ups, downs) = covers::neighbors_b(w);
    let mut g = GammaB {
        n: w.len(),
        loops: BTreeSet::new(),
        plain: BTreeSet::new(),
        minus: BTreeSet::new(),
    };
    for t in kinds_of_covers(w, &ups)
        .into_iter()
        .chain(kinds_of_covers(w, &downs))
    {
        match t {
            Reflection::Pair(a, b) => {
                g.plain.insert((a.min(b), a.max(b)));
            }
            Reflection::Sign(a) => {
                g.loops.insert(a);
            }
            Reflection::NegPair(a, b) => {
                g.minus.insert((a.min(b), a.max(b)));
            }
        }
    }
    g
}

/// Signed letter graph of an even-signed permutation: each cover move
/// contributes its mirror pair of edges. No {i,-i} edges occur because the
/// group has no sign-flip reflections. Edge count is twice the Hasse degree.
pub fn gamma_d(w: &Window) -> Result<SignedGraph, GroupError> {
    let (ups, downs) = covers::neighbors_d(w)?;
    let mut edges = BTreeSet::new();
    for t in kinds_of_covers(w, &ups)
        .into_iter()
        .chain(kinds_of_covers(w, &downs))
    {
        match t {
            Reflection::Pair(a, b) => {
                edges.insert(ordered(a as i8, b as i8));
                edges.insert(ordered(-(a as i8), -(b as i8)));
            }
            Reflection::NegPair(a, b) => {
                edges.insert(ordered(a as i8, -(b as i8)));
                edges.insert(ordered(-(a as i8), b as i8));
            }
            Reflection::Sign(_) => unreachable!("no sign reflections here"),
        }
    }
    Ok(SignedGraph { n: w.len(), edges })
}
