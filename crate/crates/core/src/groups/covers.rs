//! Local covering rules for the strong Bruhat order on window families.
//!
//! `up_covers_*` enumerate the covers of a window w (elements t*w one step
//! up) by inspecting the window alone; no group table is needed. Each rule
//! is validated exhaustively against the generic length-gap oracle (see
//! tests/cover_oracle.rs): rule output == { t*w : |l(t*w) - l(w)| = 1,
//! l(t*w) > l(w) } over the whole group.
//!
//! Down-covers do not get a second rule. `neighbors_*` tests the up rule on
//! each candidate t*w, which keeps the two directions consistent by
//! construction.

use crate::error::GroupError;
use crate::groups::window::{reflections_b, reflections_d, Reflection, Window};

/// Interval predicate used by all the rules: is any w(k), k in `slots`,
/// strictly inside the open value interval (lo, hi)?
fn some_entry_inside(w: &Window, slots: std::ops::Range<usize>, lo: i8, hi: i8) -> bool {
    w.entries()[slots].iter().any(|&v| lo < v && v < hi)
}

/// Covers of a plain permutation: swap an ascending pair of entries whose
/// open value interval contains no entry strictly between the two slots.
pub fn up_covers_a(w: &Window) -> Vec<Window> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (w.entries()[i], w.entries()[j]);
            if x < y && !some_entry_inside(w, i + 1..j, x, y) {
                out.push(Reflection::entry_swap(x, y).apply(w));
            }
        }
    }
    out
}

/// Covers in B_n. Three kinds of move:
///  1. ascending entry swap with empty open interval between the slots;
///  2. sign flip of a positive entry w(i) with no earlier entry inside
///     (-w(i), w(i));
///  3. negate-swap of a mixed-sign pair x = w(i), y = w(j) with x + y > 0,
///     provided no earlier entry lies inside (-y, x) or (-x, y) and no
///     entry between the slots lies inside (-x, y).
pub fn up_covers_b(w: &Window) -> Vec<Window> {
    let n = w.len();
    let mut out = up_covers_a(w);
    for i in 0..n {
        let x = w.entries()[i];
        if x > 0 && !some_entry_inside(w, 0..i, -x, x) {
            out.push(Reflection::Sign(x as u8).apply(w));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (w.entries()[i], w.entries()[j]);
            if x.signum() != y.signum() && x + y > 0 && mixed_negate_swap_clear(w, i, j) {
                out.push(Reflection::entry_negate_swap(x, y).apply(w));
            }
        }
    }
    out
}

/// Shared clearance test for the mixed-sign negate-swap (B kind 3 and the
/// same move in D): prefix entries must avoid both (-y, x) and (-x, y),
/// middle entries must avoid (-x, y), where intervals are taken between
/// min and max of their endpoints.
fn mixed_negate_swap_clear(w: &Window, i: usize, j: usize) -> bool {
    let (x, y) = (w.entries()[i], w.entries()[j]);
    let (lo1, hi1) = minmax(-y, x);
    let (lo2, hi2) = minmax(-x, y);
    !some_entry_inside(w, 0..i, lo1, hi1)
        && !some_entry_inside(w, 0..i, lo2, hi2)
        && !some_entry_inside(w, i + 1..j, lo2, hi2)
}

fn minmax(a: i8, b: i8) -> (i8, i8) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Covers in D_n (window must have evenly many negative entries). Moves:
///  1. ascending entry swap, as in A/B;
///  2. mixed-sign negate-swap with x + y > 0, same clearance as in B;
///  3. negate-swap of two POSITIVE entries in either order, provided every
///     earlier entry has |w(k)| > max(x, y) and no entry between the slots
///     lies inside (-x, y).
/// D_n has no sign-flip reflections.
pub fn up_covers_d(w: &Window) -> Result<Vec<Window>, GroupError> {
    w.validate_even_signs()?;
    let n = w.len();
    let mut out = up_covers_a(w);
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (w.entries()[i], w.entries()[j]);
            if x.signum() != y.signum() && x + y > 0 && mixed_negate_swap_clear(w, i, j) {
                out.push(Reflection::entry_negate_swap(x, y).apply(w));
            }
            if x > 0 && y > 0 {
                let m = x.max(y);
                let prefix_clear = w.entries()[..i].iter().all(|&v| v.abs() > m);
                if prefix_clear && !some_entry_inside(w, i + 1..j, -x, y) {
                    out.push(Reflection::NegPair(x as u8, y as u8).apply(w));
                }
            }
        }
    }
    Ok(out)
}

/// Up and down cover neighbors of a plain permutation.
pub fn neighbors_a(w: &Window) -> (Vec<Window>, Vec<Window>) {
    let ups = up_covers_a(w);
    let mut downs = Vec::new();
    for t in crate::groups::window::reflections_a(w.len()) {
        let cand = t.apply(w);
        if cand.length_a() < w.length_a() && up_covers_a(&cand).contains(w) {
            downs.push(cand);
        }
    }
    (ups, downs)
}

/// Up and down cover neighbors in B_n.
pub fn neighbors_b(w: &Window) -> (Vec<Window>, Vec<Window>) {
    let ups = up_covers_b(w);
    let mut downs = Vec::new();
    for t in reflections_b(w.len()) {
        let cand = t.apply(w);
        if cand.length_b() < w.length_b() && up_covers_b(&cand).contains(w) {
            downs.push(cand);
        }
    }
    (ups, downs)
}

/// Up and down cover neighbors in D_n.
pub fn neighbors_d(w: &Window) -> Result<(Vec<Window>, Vec<Window>), GroupError> {
    let ups = up_covers_d(w)?;
    let mut downs = Vec::new();
    for t in reflections_d(w.len()) {
        let cand = t.apply(w);
        if cand.length_d() < w.length_d() && up_covers_d(&cand)?.contains(w) {
            downs.push(cand);
        }
    }
    Ok((ups, downs))
}
