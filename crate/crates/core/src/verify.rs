//! Named verification checks. Each check is self-contained, deterministic
//! for a fixed seed, and reports a pass flag plus a human-readable detail
//! line. The CLI `verify` command runs them all and exits nonzero if any
//! fail; the acceptance tests call them individually.
//!
//! Three checks test claims that are false as stated (windows outside the
//! even-signed group, a figure that disagrees with its own edge rule, and
//! a degree bound with counterexamples). They are implemented faithfully
//! and fail honestly; their detail strings carry the analysis.

use crate::curvature::ball::LocalBall;
use crate::curvature::eigen::SymMat;
use crate::curvature::formula::gamma2_formula;
use crate::curvature::ops;
use crate::curvature::oracle::direct_min_ricci;
use crate::curvature::ricci::{
    global_ricci, local_ricci, local_ricci_ordered, lower_bound_from_max_degree,
    lower_bound_triangle_free,
};
use crate::family::{Family, GroupSpec};
use crate::groups::covers;
use crate::groups::embed::verify_embedding;
use crate::groups::table::{enumerate, Budget, GroupTable};
use crate::groups::window::Window;
use crate::hasse::degree::{degree_report, expected_max_degree};
use crate::hasse::gamma::{gamma_b, gamma_d};
use crate::hasse::graph::HasseGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Sample count for the randomized B7 degree check.
    pub sample: usize,
    pub seed: u64,
    /// Include the slower exhaustive variants (D5 cover check).
    pub deep: bool,
    /// Agreement tolerance between the reduced eigenvalue and the
    /// bisection oracle.
    pub oracle_tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sample: 10_000,
            seed: 7,
            deep: true,
            oracle_tol: 1e-8,
        }
    }
}

fn timed(name: &'static str, f: impl FnOnce() -> (bool, String)) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = f();
    CheckOutcome {
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn table_of(family: Family, rank: u8, m: Option<u32>) -> GroupTable {
    let spec = GroupSpec::new(family, rank, m).expect("valid spec");
    enumerate(spec, &Budget::default()).expect("within budget")
}

fn dihedral_hasse(m: u32) -> HasseGraph {
    HasseGraph::from_table(&table_of(Family::I2, 2, Some(m)))
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    vec![
        check_dihedral_curvature(),
        check_reduction_golden_matrices(),
        check_cover_rules(opts),
        check_max_degree_formulas(),
        check_extremal_window_d5_d6_as_stated(),
        check_exceptional_max_degrees(),
        check_gamma_graph_invariants(),
        check_d4_figure_graph_as_printed(),
        check_gamma_min_degree_bounds(opts),
        check_d5_gamma_degree_bound_as_stated(),
        check_curvature_consistency(opts),
        check_symmetric_group_embedding(),
        check_thread_count_determinism(),
    ]
}

/// Global curvature of the dihedral Hasse diagrams against closed forms.
pub fn check_dihedral_curvature() -> CheckOutcome {
    timed("dihedral_curvature", || {
        let mut ok = true;
        let mut detail = String::new();
        for m in 3..=10u32 {
            let expected = match m {
                3 => (21.0 - 33f64.sqrt()) / 12.0,
                4 => 0.5,
                5 => (5.0 - 17f64.sqrt()) / 4.0,
                _ => 0.0,
            };
            let h = dihedral_hasse(m);
            let r = global_ricci(&h.adj).expect("connected graph");
            let err = (r.ric - expected).abs();
            if err > 1e-9 {
                ok = false;
                let _ = write!(detail, "I2({m}): ric {} != {expected} ", r.ric);
            }
        }
        if ok {
            detail = "I2(3) = (21-sqrt(33))/12, I2(4) = 1/2, I2(5) = (5-sqrt(17))/4 \
                      (the quarter branch, not the half), I2(6..10) = 0; all within 1e-9"
                .to_string();
        }
        (ok, detail)
    })
}

struct GoldenRep {
    name: &'static str,
    m: u32,
    level: u32,
    matrix: &'static [&'static [f64]],
    spectrum: fn() -> Vec<f64>,
}

const THIRD: f64 = 1.0 / 3.0;

static MAT_A: [&[f64]; 2] = [&[2.5, -1.0], &[-1.0, 2.5]];
static MAT_B: [&[f64]; 3] = [
    &[7.0 * THIRD, -2.0 * THIRD, THIRD],
    &[-2.0 * THIRD, 7.0 * THIRD, THIRD],
    &[THIRD, THIRD, 11.0 / 6.0],
];
static MAT_C: [&[f64]; 3] = [
    &[17.0 / 6.0, -5.0 * THIRD, THIRD],
    &[-5.0 * THIRD, 17.0 / 6.0, THIRD],
    &[THIRD, THIRD, 11.0 / 6.0],
];
static MAT_D: [&[f64]; 4] = [
    &[2.0, -0.5, 0.5, 0.5],
    &[-0.5, 2.0, 0.5, 0.5],
    &[0.5, 0.5, 2.0, -0.5],
    &[0.5, 0.5, -0.5, 2.0],
];
static MAT_E: [&[f64]; 4] = [
    &[2.5, -1.5, 0.5, 0.5],
    &[-1.5, 2.5, 0.5, 0.5],
    &[0.5, 0.5, 2.0, -0.5],
    &[0.5, 0.5, -0.5, 2.0],
];
static MAT_F: [&[f64]; 4] = [
    &[2.5, -1.5, 0.5, 0.5],
    &[-1.5, 2.5, 0.5, 0.5],
    &[0.5, 0.5, 2.5, -1.5],
    &[0.5, 0.5, -1.5, 2.5],
];

fn spec_a() -> Vec<f64> {
    vec![1.5, 3.5]
}
fn spec_b() -> Vec<f64> {
    vec![(21.0 - 33f64.sqrt()) / 12.0, (21.0 + 33f64.sqrt()) / 12.0, 3.0]
}
fn spec_c() -> Vec<f64> {
    vec![1.5 - 3f64.sqrt() / 3.0, 1.5 + 3f64.sqrt() / 3.0, 4.5]
}
fn spec_d() -> Vec<f64> {
    vec![0.5, 2.5, 2.5, 2.5]
}
fn spec_e() -> Vec<f64> {
    vec![(5.0 - 17f64.sqrt()) / 4.0, (5.0 + 17f64.sqrt()) / 4.0, 2.5, 4.0]
}
fn spec_f() -> Vec<f64> {
    vec![0.0, 2.0, 4.0, 4.0]
}

/// The reduced matrix at one vertex of each distinct dihedral ball shape,
/// with ring 1 ordered upper level first, against frozen entries and
/// spectra.
pub fn check_reduction_golden_matrices() -> CheckOutcome {
    timed("reduction_golden_matrices", || {
        let reps = [
            GoldenRep { name: "A", m: 3, level: 0, matrix: &MAT_A, spectrum: spec_a },
            GoldenRep { name: "A", m: 5, level: 0, matrix: &MAT_A, spectrum: spec_a },
            GoldenRep { name: "B", m: 3, level: 1, matrix: &MAT_B, spectrum: spec_b },
            GoldenRep { name: "C", m: 4, level: 1, matrix: &MAT_C, spectrum: spec_c },
            GoldenRep { name: "C", m: 6, level: 1, matrix: &MAT_C, spectrum: spec_c },
            GoldenRep { name: "D", m: 4, level: 2, matrix: &MAT_D, spectrum: spec_d },
            GoldenRep { name: "E", m: 5, level: 2, matrix: &MAT_E, spectrum: spec_e },
            GoldenRep { name: "E", m: 6, level: 2, matrix: &MAT_E, spectrum: spec_e },
            GoldenRep { name: "F", m: 6, level: 3, matrix: &MAT_F, spectrum: spec_f },
            GoldenRep { name: "F", m: 8, level: 4, matrix: &MAT_F, spectrum: spec_f },
        ];
        let mut ok = true;
        let mut detail = String::new();
        for rep in &reps {
            let h = dihedral_hasse(rep.m);
            let x = if rep.level == 0 { 0 } else { 2 * rep.level - 1 };
            let mut ring1 = h.adj[x as usize].clone();
            ring1.reverse();
            let (a, local) =
                local_ricci_ordered(&h.adj, x, ring1).expect("vertex has neighbors");
            let rows: Vec<Vec<f64>> = rep.matrix.iter().map(|r| r.to_vec()).collect();
            let want = SymMat::from_rows(&rows);
            let mdiff = a.max_abs_diff(&want);
            if mdiff > 1e-12 {
                ok = false;
                let _ = write!(
                    detail,
                    "{} at I2({}) level {}: matrix off by {mdiff:.2e} ",
                    rep.name, rep.m, rep.level
                );
            }
            let frozen = (rep.spectrum)();
            let sdiff = local
                .spectrum
                .iter()
                .zip(&frozen)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if local.spectrum.len() != frozen.len() || sdiff > 1e-9 {
                ok = false;
                let _ = write!(
                    detail,
                    "{} at I2({}) level {}: spectrum off by {sdiff:.2e} ",
                    rep.name, rep.m, rep.level
                );
            }
        }
        if ok {
            detail = "all six ball-shape matrices reproduced entrywise within 1e-12 \
                      and spectra within 1e-9 at ten representative vertices"
                .to_string();
        }
        (ok, detail)
    })
}

fn rule_neighbors(family: Family, w: &Window) -> (Vec<Window>, Vec<Window>) {
    match family {
        Family::A => covers::neighbors_a(w),
        Family::B => covers::neighbors_b(w),
        Family::D => covers::neighbors_d(w).expect("window is in the group"),
        _ => unreachable!("window families only"),
    }
}

/// Local covering rules against the reflection-table covers, element by
/// element.
pub fn check_cover_rules(opts: &VerifyOptions) -> CheckOutcome {
    timed("cover_rules_match_reflection_table", || {
        let mut cases: Vec<(Family, u8)> = vec![
            (Family::A, 3),
            (Family::A, 4),
            (Family::B, 3),
            (Family::B, 4),
            (Family::D, 4),
        ];
        if opts.deep {
            cases.push((Family::D, 5));
        }
        let mut ok = true;
        let mut detail = String::new();
        for &(family, rank) in &cases {
            let table = table_of(family, rank, None);
            let windows = table.windows.as_ref().unwrap();
            let mut mismatches = 0usize;
            for id in 0..table.size() as u32 {
                let w = &windows[id as usize];
                let (gup, gdown) = table.generic_covers(id);
                let mut gup: Vec<Window> =
                    gup.iter().map(|&i| windows[i as usize].clone()).collect();
                let mut gdown: Vec<Window> =
                    gdown.iter().map(|&i| windows[i as usize].clone()).collect();
                gup.sort_unstable();
                gdown.sort_unstable();
                let (mut rup, mut rdown) = rule_neighbors(family, w);
                rup.sort_unstable();
                rdown.sort_unstable();
                if rup != gup || rdown != gdown {
                    mismatches += 1;
                    if mismatches == 1 {
                        let _ = write!(detail, "first mismatch {family:?}{rank} at {w}; ");
                    }
                }
            }
            if mismatches > 0 {
                ok = false;
                let _ = write!(detail, "{family:?}{rank}: {mismatches} mismatches; ");
            } else {
                let _ = write!(detail, "{family:?}{rank}: 0/{} ", table.size());
            }
        }
        (ok, detail.trim_end().to_string())
    })
}

fn window_degree(family: Family, w: &Window) -> usize {
    let (u, d) = rule_neighbors(family, w);
    u.len() + d.len()
}

/// Max Hasse degrees against the closed forms, and the extremal windows
/// that are valid group elements.
pub fn check_max_degree_formulas() -> CheckOutcome {
    timed("max_degree_formulas", || {
        let mut ok = true;
        let mut detail = String::new();
        let cases: Vec<(Family, u8)> = vec![
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::A, 5),
            (Family::A, 6),
            (Family::B, 2),
            (Family::B, 3),
            (Family::B, 4),
            (Family::B, 5),
            (Family::B, 6),
            (Family::D, 4),
            (Family::D, 5),
            (Family::D, 6),
        ];
        for &(family, rank) in &cases {
            let spec = GroupSpec::new(family, rank, None).unwrap();
            let table = enumerate(spec, &Budget::default()).unwrap();
            let got = degree_report(&HasseGraph::from_table(&table)).max_degree as u64;
            let want = expected_max_degree(&spec).unwrap();
            if got != want {
                ok = false;
                let _ = write!(detail, "{spec}: d_max {got} != formula {want}; ");
            } else {
                let _ = write!(detail, "{spec}={got} ");
            }
        }
        // block windows [1..m, -n..-(m+1)] with m = floor(n/2), where they
        // are group elements
        let windows: Vec<(Family, &str, usize)> = vec![
            (Family::B, "[1,2,-5,-4,-3]", 16),
            (Family::B, "[1,2,3,-6,-5,-4]", 23),
            (Family::D, "[1,2,-4,-3]", 11),
        ];
        for (family, text, want) in windows {
            let w: Window = text.parse().unwrap();
            let got = window_degree(family, &w);
            if got != want {
                ok = false;
                let _ = write!(detail, "{text}: degree {got} != {want}; ");
            } else {
                let _ = write!(detail, "{text}={got} ");
            }
        }
        (ok, detail.trim_end().to_string())
    })
}

/// The stated rank-5 and rank-6 even-signed extremal windows, exactly as
/// given. Both have an odd number of negative entries, so they are not
/// elements of the group and the check fails; sign-adjusted variants do
/// attain the maximum degree.
pub fn check_extremal_window_d5_d6_as_stated() -> CheckOutcome {
    timed("extremal_window_d5_d6_as_stated", || {
        let mut ok = true;
        let mut detail = String::new();
        let stated: Vec<(&str, u8, u64)> =
            vec![("[1,2,-5,-4,-3]", 5, 16), ("[1,2,3,-6,-5,-4]", 6, 23)];
        for (text, rank, want) in stated {
            let w: Window = text.parse().unwrap();
            match w.validate_even_signs() {
                Ok(()) => {
                    let got = window_degree(Family::D, &w) as u64;
                    if got != want {
                        ok = false;
                        let _ = write!(detail, "{text}: degree {got} != {want}; ");
                    }
                }
                Err(e) => {
                    ok = false;
                    let _ = write!(detail, "D{rank} window {text}: {e}; ");
                }
            }
        }
        if !ok {
            detail.push_str(
                "the sign-adjusted variants are group elements and attain the maximum: ",
            );
            for (text, want) in [("[-1,2,-5,-4,-3]", 16u64), ("[-1,2,3,-6,-5,-4]", 23u64)] {
                let w: Window = text.parse().unwrap();
                let got = window_degree(Family::D, &w) as u64;
                let _ = write!(
                    detail,
                    "{text} has degree {got}{} ",
                    if got == want { "" } else { " (MISMATCH)" }
                );
            }
        }
        (ok, detail.trim_end().to_string())
    })
}

/// Max Hasse degrees of the three exceptional groups and the degree-based
/// lower bounds they imply.
pub fn check_exceptional_max_degrees() -> CheckOutcome {
    timed("exceptional_max_degrees", || {
        let cases = [
            (Family::H3, 3u8, 9usize, -14.0),
            (Family::F4, 4, 16, -28.0),
            (Family::E6, 6, 25, -46.0),
        ];
        let mut ok = true;
        let mut detail = String::new();
        for &(family, rank, want_deg, want_bound) in &cases {
            let table = table_of(family, rank, None);
            let h = HasseGraph::from_table(&table);
            let got = degree_report(&h).max_degree;
            let bound = lower_bound_from_max_degree(&h.adj);
            if got != want_deg || (bound - want_bound).abs() > 1e-12 {
                ok = false;
                let _ = write!(
                    detail,
                    "{family:?}: d_max {got} (want {want_deg}), bound {bound} (want {want_bound}); "
                );
            } else {
                let _ = write!(detail, "{family:?}: d_max={got} 4-2d={bound} ");
            }
        }
        (ok, detail.trim_end().to_string())
    })
}

fn frozen_tilde_edges() -> BTreeSet<(i8, i8)> {
    let mut s = BTreeSet::new();
    let plain = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)];
    for (a, b) in plain {
        s.insert((a, b));
        s.insert((-b, -a));
    }
    let minus = [(1, 2), (2, 3), (3, 4)];
    for (a, b) in minus {
        s.insert((-b, a));
        s.insert((-a, b));
    }
    for a in 1..=4 {
        s.insert((-a, a));
    }
    s
}

/// Letter-graph invariants: edge counts equal Hasse degrees, doubled
/// graphs have mirror-symmetric degrees, and the worked example matches
/// edge for edge.
pub fn check_gamma_graph_invariants() -> CheckOutcome {
    timed("gamma_graph_invariants", || {
        let mut ok = true;
        let mut detail = String::new();

        for rank in [3u8, 4] {
            let table = table_of(Family::B, rank, None);
            let windows = table.windows.as_ref().unwrap();
            let mut bad = 0;
            for id in 0..table.size() as u32 {
                let (u, d) = table.generic_covers(id);
                let g = gamma_b(&windows[id as usize]);
                if g.edge_count() != u.len() + d.len() {
                    bad += 1;
                }
                if rank == 4 {
                    let t = g.tilde();
                    for i in 1..=4i8 {
                        if t.degree(i) != t.degree(-i)
                            || t.degree(i) != g.degree(i as u8)
                        {
                            bad += 1;
                        }
                    }
                }
            }
            if bad > 0 {
                ok = false;
                let _ = write!(detail, "B{rank}: {bad} violations; ");
            } else {
                let _ = write!(detail, "B{rank} ok ");
            }
        }

        let table = table_of(Family::D, 4, None);
        let windows = table.windows.as_ref().unwrap();
        let mut bad = 0;
        for id in 0..table.size() as u32 {
            let (u, d) = table.generic_covers(id);
            let g = gamma_d(&windows[id as usize]).unwrap();
            if g.edge_count() != 2 * (u.len() + d.len()) {
                bad += 1;
            }
        }
        if bad > 0 {
            ok = false;
            let _ = write!(detail, "D4: {bad} edge-count violations; ");
        } else {
            detail.push_str("D4 ok ");
        }

        let g = gamma_b(&"[4,-3,2,-1]".parse().unwrap());
        let sets_ok = g.loops == [1, 2, 3, 4].into()
            && g.plain == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)].into()
            && g.minus == [(1, 2), (2, 3), (3, 4)].into()
            && g.tilde().edges == frozen_tilde_edges();
        if sets_ok {
            detail.push_str("worked example edge-for-edge ok");
        } else {
            ok = false;
            detail.push_str("worked example mismatch");
        }
        (ok, detail)
    })
}

fn printed_d4_figure_edges() -> BTreeSet<(i8, i8)> {
    let mut s = BTreeSet::new();
    // as printed: three plain pairs, two negative pairs, and {2,4}
    for (a, b) in [(1, 2), (2, 3), (3, 4), (2, 4)] {
        s.insert((a, b));
        s.insert((-b, -a));
    }
    for (a, b) in [(1, 2), (1, 4)] {
        s.insert((-b, a));
        s.insert((-a, b));
    }
    s
}

/// The printed edge set of the rank-4 example figure against the edge
/// rule applied to the same window. The figure disagrees with the rule:
/// it omits four edges and draws two that no cover move produces, so the
/// check fails.
pub fn check_d4_figure_graph_as_printed() -> CheckOutcome {
    timed("d4_figure_graph_as_printed", || {
        let computed = gamma_d(&"[2,-3,-4,1]".parse().unwrap()).unwrap();
        let printed = printed_d4_figure_edges();
        if computed.edges == printed {
            (true, "figure matches the edge rule".to_string())
        } else {
            let missing: Vec<_> = computed.edges.difference(&printed).collect();
            let spurious: Vec<_> = printed.difference(&computed.edges).collect();
            let detail = format!(
                "computed graph has {} edges (= 2 x Hasse degree 7), printed figure has {}; \
                 figure omits {missing:?} and adds {spurious:?}; the computed set is \
                 confirmed by the doubled edge count and mirror-degree symmetry",
                computed.edge_count(),
                printed.len()
            );
            (false, detail)
        }
    })
}

/// Every signed permutation has a letter of small degree in its graph:
/// exhaustive at rank 5, sampled at rank 7.
pub fn check_gamma_min_degree_bounds(opts: &VerifyOptions) -> CheckOutcome {
    timed("gamma_min_degree_bounds", || {
        let mut ok = true;
        let mut detail = String::new();

        let table = table_of(Family::B, 5, None);
        let mut worst = 0usize;
        let mut violations = 0usize;
        for w in table.windows.as_ref().unwrap() {
            let (_, d) = gamma_b(w).min_degree();
            worst = worst.max(d);
            if d > 6 {
                violations += 1;
            }
        }
        if violations > 0 {
            ok = false;
            let _ = write!(detail, "B5: {violations} windows over the bound 6; ");
        } else {
            let _ = write!(detail, "B5 exhaustive: worst min-degree {worst} <= 6; ");
        }

        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut worst7 = 0usize;
        let mut violations7 = 0usize;
        for _ in 0..opts.sample {
            let mut vals: Vec<i8> = (1..=7).collect();
            vals.shuffle(&mut rng);
            for v in &mut vals {
                if rng.gen::<bool>() {
                    *v = -*v;
                }
            }
            let (_, d) = gamma_b(&Window::new(vals)).min_degree();
            worst7 = worst7.max(d);
            if d > 7 {
                violations7 += 1;
            }
        }
        if violations7 > 0 {
            ok = false;
            let _ = write!(detail, "B7: {violations7} sampled windows over the bound 7");
        } else {
            let _ = write!(
                detail,
                "B7 sampled {}: worst min-degree {worst7} <= 7",
                opts.sample
            );
        }
        (ok, detail)
    })
}

/// The stated bound: every rank-5 even-signed element has a letter of
/// degree at most 5 in its signed letter graph. False: the maximum-degree
/// elements have minimum letter degree 6, so the check fails and lists
/// them.
pub fn check_d5_gamma_degree_bound_as_stated() -> CheckOutcome {
    timed("d5_gamma_degree_bound_as_stated", || {
        let table = table_of(Family::D, 5, None);
        let mut violators: Vec<(Window, usize, usize)> = Vec::new();
        for w in table.windows.as_ref().unwrap() {
            let g = gamma_d(w).unwrap();
            let (_, d) = g.min_degree();
            if d > 5 {
                let hasse_degree = window_degree(Family::D, w);
                violators.push((w.clone(), d, hasse_degree));
            }
        }
        if violators.is_empty() {
            (true, "all 1920 elements have a letter of degree <= 5".to_string())
        } else {
            let list: Vec<String> = violators
                .iter()
                .map(|(w, d, hd)| format!("{w} (min degree {d}, Hasse degree {hd})"))
                .collect();
            let detail = format!(
                "{} counterexamples out of 1920; every letter has degree >= 6 in: {}; \
                 each is a maximum-Hasse-degree element (d_max = 16)",
                violators.len(),
                list.join(", ")
            );
            (false, detail)
        }
    })
}

struct ConsistencyStats {
    vertices: usize,
    functions: usize,
    max_route_gap: f64,
    max_oracle_gap: f64,
}

fn consistency_on(
    adj: &[Vec<u32>],
    xs: &[u32],
    rng: &mut ChaCha8Rng,
    funcs_per_vertex: usize,
    oracle_tol: f64,
    errors: &mut String,
) -> ConsistencyStats {
    let bound = lower_bound_triangle_free(adj).expect("Hasse graphs are triangle free");
    let mut stats = ConsistencyStats {
        vertices: 0,
        functions: 0,
        max_route_gap: 0.0,
        max_oracle_gap: 0.0,
    };
    for &x in xs {
        stats.vertices += 1;
        let lc = local_ricci(adj, x).expect("no isolated vertices");
        if lc.ric > 2.0 + 1e-12 {
            let _ = write!(errors, "vertex {x}: ric {} above 2; ", lc.ric);
        }
        if lc.ric < bound - 1e-9 {
            let _ = write!(errors, "vertex {x}: ric {} below bound {bound}; ", lc.ric);
        }
        let oracle = direct_min_ricci(adj, x).expect("no isolated vertices");
        let ogap = (oracle - lc.ric).abs();
        stats.max_oracle_gap = stats.max_oracle_gap.max(ogap);
        if ogap > oracle_tol {
            let _ = write!(errors, "vertex {x}: oracle {oracle} vs {}; ", lc.ric);
        }

        let ball = LocalBall::new(adj, x).expect("no isolated vertices");
        let vars = ball.variables();
        let mut dense = vec![0.0; adj.len()];
        let mut sparse: HashMap<u32, f64> = HashMap::new();
        for _ in 0..funcs_per_vertex {
            stats.functions += 1;
            for &v in &vars {
                let fv = rng.gen_range(-1.0..1.0);
                dense[v as usize] = fv;
                sparse.insert(v, fv);
            }
            let cf = gamma2_formula(&ball, &sparse).expect("ball values set");
            let op = ops::gamma2(adj, &dense, x);
            let gap = (cf - op).abs();
            stats.max_route_gap = stats.max_route_gap.max(gap);
            if gap > 1e-10 {
                let _ = write!(errors, "vertex {x}: routes differ by {gap:.2e}; ");
            }
            let gamma_x = ops::gamma(adj, &dense, x);
            if cf < lc.ric * gamma_x - 1e-9 {
                let _ = write!(
                    errors,
                    "vertex {x}: Gamma2 {cf} under ric*Gamma {}; ",
                    lc.ric * gamma_x
                );
            }
            for &v in &vars {
                dense[v as usize] = 0.0;
            }
            sparse.clear();
        }
    }
    stats
}

/// Cross-checks every curvature route against every other on the rank-3
/// signed Hasse diagram, sampled vertices of the rank-4 even-signed one,
/// and the dihedral diagrams.
pub fn check_curvature_consistency(opts: &VerifyOptions) -> CheckOutcome {
    timed("curvature_consistency", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e3779b97f4a7c15);
        let mut errors = String::new();
        let mut detail = String::new();

        let b3 = HasseGraph::from_table(&table_of(Family::B, 3, None));
        let xs: Vec<u32> = (0..b3.size() as u32).collect();
        let s = consistency_on(&b3.adj, &xs, &mut rng, 1000, opts.oracle_tol, &mut errors);
        let _ = write!(
            detail,
            "B3: {} vertices, {} functions, route gap {:.1e}, oracle gap {:.1e}; ",
            s.vertices, s.functions, s.max_route_gap, s.max_oracle_gap
        );

        let d4 = HasseGraph::from_table(&table_of(Family::D, 4, None));
        let xs: Vec<u32> = (0..200).map(|_| rng.gen_range(0..d4.size() as u32)).collect();
        let s = consistency_on(&d4.adj, &xs, &mut rng, 1000, opts.oracle_tol, &mut errors);
        let _ = write!(
            detail,
            "D4: {} sampled vertices, route gap {:.1e}, oracle gap {:.1e}; ",
            s.vertices, s.max_route_gap, s.max_oracle_gap
        );

        for m in 3..=8u32 {
            let h = dihedral_hasse(m);
            let xs: Vec<u32> = (0..h.size() as u32).collect();
            consistency_on(&h.adj, &xs, &mut rng, 1000, opts.oracle_tol, &mut errors);
        }
        detail.push_str("I2(3..8): all vertices");

        if errors.is_empty() {
            (true, detail)
        } else {
            (false, format!("{errors}| {detail}"))
        }
    })
}

/// Bruhat order on the signed groups of rank 2 and 3 is induced from the
/// symmetric group under the doubling embedding.
pub fn check_symmetric_group_embedding() -> CheckOutcome {
    timed("symmetric_group_embedding", || {
        let mut ok = true;
        let mut detail = String::new();
        for rank in [2u8, 3] {
            let table = table_of(Family::B, rank, None);
            let cmp = verify_embedding(&table).expect("under the cap");
            if cmp.agrees() {
                let _ = write!(detail, "B{rank}: {} pairs agree; ", cmp.pairs);
            } else {
                ok = false;
                let _ = write!(
                    detail,
                    "B{rank}: {} of {} pairs disagree (first {:?}); ",
                    cmp.disagreements, cmp.pairs, cmp.first_disagreement
                );
            }
        }
        (ok, detail.trim_end().to_string())
    })
}

/// The same curvature and degree computations under one thread and eight
/// give bitwise identical results.
pub fn check_thread_count_determinism() -> CheckOutcome {
    timed("thread_count_determinism", || {
        let h = HasseGraph::from_table(&table_of(Family::B, 3, None));
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("pool");
            pool.install(|| global_ricci(&h.adj).expect("connected"))
        };
        let r1 = run(1);
        let r8 = run(8);
        let bits = |r: &crate::curvature::ricci::CurvatureReport| {
            r.per_vertex
                .iter()
                .flat_map(|lc| {
                    std::iter::once(lc.ric.to_bits())
                        .chain(lc.spectrum.iter().map(|v| v.to_bits()))
                })
                .collect::<Vec<u64>>()
        };
        if bits(&r1) == bits(&r8) && r1.ric.to_bits() == r8.ric.to_bits() {
            (
                true,
                "per-vertex curvature bitwise identical for 1 and 8 threads".to_string(),
            )
        } else {
            (false, "thread count changed numeric results".to_string())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // the fast always-green checks; the full set runs in the acceptance
    // suite of the CLI crate
    #[test]
    fn dihedral_curvature_passes() {
        let c = check_dihedral_curvature();
        assert!(c.passed, "{}", c.detail);
    }

    #[test]
    fn golden_matrices_pass() {
        let c = check_reduction_golden_matrices();
        assert!(c.passed, "{}", c.detail);
    }

    #[test]
    fn embedding_passes() {
        let c = check_symmetric_group_embedding();
        assert!(c.passed, "{}", c.detail);
    }

    #[test]
    fn thread_determinism_passes() {
        let c = check_thread_count_determinism();
        assert!(c.passed, "{}", c.detail);
    }
}
