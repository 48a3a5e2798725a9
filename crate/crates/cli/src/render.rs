//! Text renderings for the CLI. All output is assembled from sorted
//! structures, so repeated runs produce identical bytes.

use bruric_core::curvature::ricci::CurvatureReport;
use bruric_core::hasse::degree::DegreeReport;
use bruric_core::hasse::gamma::{GammaB, SignedGraph};
use bruric_core::hasse::graph::HasseGraph;
use bruric_core::verify::CheckOutcome;
use bruric_core::GroupTable;
use std::fmt::Write as _;

/// Twelve decimal places with trailing zeros trimmed: eigenvalues carry
/// an ulp or so of Jacobi noise, and `0.5` should print as `0.5`. CSV and
/// JSON keep full roundtrip precision; this is display only.
pub fn fmt12(v: f64) -> String {
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn opt(v: Option<f64>) -> String {
    match v {
        Some(v) => fmt12(v),
        None => "n/a".to_string(),
    }
}

pub fn group_summary(table: &GroupTable) -> String {
    let mut layers = vec![0usize; table.max_length() as usize + 1];
    for &l in &table.lengths {
        layers[l as usize] += 1;
    }
    let layers: Vec<String> = layers.iter().map(|c| c.to_string()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "group={}", table.spec);
    let _ = writeln!(out, "order={}", table.size());
    let _ = writeln!(out, "reflections={}", table.reflections.len());
    let _ = writeln!(out, "max_length={}", table.max_length());
    let _ = writeln!(out, "layers={}", layers.join(","));
    if let Some(note) = table.spec.alias_note() {
        let _ = writeln!(out, "note={note}");
    }
    out
}

pub fn degrees(r: &DegreeReport, note: Option<&str>, full: Option<&[String]>) -> String {
    let first = r.argmax.first().map(String::as_str).unwrap_or("-");
    let mut out = format!(
        "max_degree={} argmax={} argmax_count={}\n",
        r.max_degree, first, r.argmax_total
    );
    if let Some(note) = note {
        let _ = writeln!(out, "note={note}");
    }
    out.push_str("histogram:\n");
    for (d, c) in &r.histogram {
        let _ = writeln!(out, "  {d}: {c}");
    }
    if let Some(labels) = full {
        out.push_str("argmax elements:\n");
        for label in labels {
            let _ = writeln!(out, "  {label}");
        }
    }
    out
}

pub fn curvature(
    r: &CurvatureReport,
    h: &HasseGraph,
    note: Option<&str>,
    tol: f64,
) -> String {
    let ties = r
        .per_vertex
        .iter()
        .filter(|lc| (lc.ric - r.ric).abs() <= tol)
        .count();
    let mut out = format!("ric={}\n", fmt12(r.ric));
    let _ = writeln!(
        out,
        "argmin={} (vertex {})",
        h.labels[r.argmin as usize], r.argmin
    );
    let _ = writeln!(out, "argmin_count={ties} (tol {tol:e})");
    let _ = writeln!(out, "max_degree={}", r.max_degree);
    let _ = writeln!(out, "lower_bound_edgewise={}", opt(r.lower_bound_edgewise));
    let _ = writeln!(out, "lower_bound_degree={}", opt(r.lower_bound_degree));
    let _ = writeln!(out, "upper_bound={}", fmt12(r.upper_bound));
    if let Some(note) = note {
        let _ = writeln!(out, "note={note}");
    }
    out
}

pub fn gamma(g: &GammaB) -> String {
    let (letter, deg) = g.min_degree();
    let loops: Vec<String> = g.loops.iter().map(|a| a.to_string()).collect();
    let pairs = |set: &std::collections::BTreeSet<(u8, u8)>| {
        set.iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "n={}", g.n);
    let _ = writeln!(out, "edges={}", g.edge_count());
    let _ = writeln!(out, "loops={}", loops.join(","));
    let _ = writeln!(out, "plain={}", pairs(&g.plain));
    let _ = writeln!(out, "minus={}", pairs(&g.minus));
    let _ = writeln!(out, "min_degree={deg} (letter {letter})");
    out
}

pub fn signed(g: &SignedGraph) -> String {
    let (letter, deg) = g.min_degree();
    let mut out = String::new();
    let _ = writeln!(out, "n={}", g.n);
    let _ = writeln!(out, "edges={}", g.edge_count());
    for (a, b) in &g.edges {
        let _ = writeln!(out, "  ({a},{b})");
    }
    let _ = writeln!(out, "min_degree={deg} (letter {letter})");
    out
}

pub struct BoundsView<'a> {
    pub group: String,
    pub h: &'a HasseGraph,
    pub max_degree: usize,
    pub edgewise: Option<f64>,
    pub degree_bound: f64,
    pub upper: f64,
    pub note: Option<&'a str>,
}

pub fn bounds(v: &BoundsView) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group={}", v.group);
    let _ = writeln!(out, "vertices={}", v.h.size());
    let _ = writeln!(out, "edges={}", v.h.edge_count());
    let _ = writeln!(out, "max_degree={}", v.max_degree);
    let _ = writeln!(out, "triangle_free={}", v.h.is_triangle_free());
    let _ = writeln!(out, "lower_bound_edgewise={}", opt(v.edgewise));
    let _ = writeln!(out, "lower_bound_degree={}", fmt12(v.degree_bound));
    let _ = writeln!(out, "upper_bound={}", fmt12(v.upper));
    if let Some(note) = v.note {
        let _ = writeln!(out, "note={note}");
    }
    out
}

pub fn verify_report(outcomes: &[CheckOutcome]) -> String {
    let mut out = String::new();
    let mut passed = 0usize;
    for c in outcomes {
        let flag = if c.passed {
            passed += 1;
            "PASS"
        } else {
            "FAIL"
        };
        let _ = writeln!(out, "{flag} {} ({:.2}s): {}", c.name, c.seconds, c.detail);
    }
    let _ = writeln!(out, "passed {passed} of {} checks", outcomes.len());
    out
}
