//! Deterministic DOT, CSV, and JSON renderings of graphs and reports.
//! Iteration is over sorted structures throughout, so every export is
//! byte-identical across runs and thread counts.

use crate::curvature::ricci::CurvatureReport;
use crate::groups::table::GroupTable;
use crate::hasse::degree::DegreeReport;
use crate::hasse::gamma::{GammaB, SignedGraph};
use crate::hasse::graph::HasseGraph;
use serde::Serialize;
use std::collections::BTreeMap;

/// Letter graph with its three edge kinds; minus edges are dashed, loops
/// are self edges.
pub fn dot_gamma(g: &GammaB) -> String {
    let mut out = String::from("graph {\n");
    for a in &g.loops {
        out.push_str(&format!("  \"{a}\" -- \"{a}\";\n"));
    }
    for (a, b) in &g.plain {
        out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    for (a, b) in &g.minus {
        out.push_str(&format!("  \"{a}\" -- \"{b}\" [style=dashed];\n"));
    }
    out.push_str("}\n");
    out
}

pub fn dot_signed(g: &SignedGraph) -> String {
    let mut out = String::from("graph {\n");
    for (a, b) in &g.edges {
        out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram with window-notation node names.
pub fn dot_hasse(h: &HasseGraph) -> String {
    let mut out = String::from("graph {\n");
    for (u, v) in h.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            h.labels[u as usize], h.labels[v as usize]
        ));
    }
    out.push_str("}\n");
    out
}

/// RFC 4180 field quoting: commas, quotes, and line breaks force quotes.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_degree(r: &DegreeReport) -> String {
    let mut out = String::from("degree,count\r\n");
    for (d, c) in &r.histogram {
        out.push_str(&format!("{d},{c}\r\n"));
    }
    out
}

pub fn csv_curvature(r: &CurvatureReport, h: &HasseGraph) -> String {
    let mut out = String::from("vertex,label,degree,ric\r\n");
    for lc in &r.per_vertex {
        out.push_str(&format!(
            "{},{},{},{}\r\n",
            lc.vertex,
            csv_field(&h.labels[lc.vertex as usize]),
            h.degree(lc.vertex),
            lc.ric
        ));
    }
    out
}

pub fn csv_elements(t: &GroupTable) -> String {
    let mut out = String::from("id,length,key\r\n");
    for id in 0..t.size() {
        out.push_str(&format!(
            "{id},{},{}\r\n",
            t.lengths[id],
            csv_field(&t.keys[id])
        ));
    }
    out
}

pub fn csv_gamma(g: &GammaB) -> String {
    let mut out = String::from("a,b,kind\r\n");
    for a in &g.loops {
        out.push_str(&format!("{a},{a},loop\r\n"));
    }
    for (a, b) in &g.plain {
        out.push_str(&format!("{a},{b},plain\r\n"));
    }
    for (a, b) in &g.minus {
        out.push_str(&format!("{a},{b},minus\r\n"));
    }
    out
}

pub fn csv_signed(g: &SignedGraph) -> String {
    let mut out = String::from("a,b\r\n");
    for (a, b) in &g.edges {
        out.push_str(&format!("{a},{b}\r\n"));
    }
    out
}

#[derive(Serialize)]
struct GammaJson<'a> {
    n: usize,
    loops: &'a std::collections::BTreeSet<u8>,
    plain: Vec<[u8; 2]>,
    minus: Vec<[u8; 2]>,
}

pub fn json_gamma(g: &GammaB) -> String {
    let doc = GammaJson {
        n: g.n,
        loops: &g.loops,
        plain: g.plain.iter().map(|&(a, b)| [a, b]).collect(),
        minus: g.minus.iter().map(|&(a, b)| [a, b]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[derive(Serialize)]
struct SignedJson {
    n: usize,
    edges: Vec<[i8; 2]>,
}

pub fn json_signed(g: &SignedGraph) -> String {
    let doc = SignedJson {
        n: g.n,
        edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[derive(Serialize)]
struct GroupJson<'a> {
    group: String,
    order: usize,
    reflections: usize,
    max_length: u32,
    layer_sizes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

pub fn json_group(t: &GroupTable) -> String {
    let mut layer_sizes = vec![0usize; t.max_length() as usize + 1];
    for &l in &t.lengths {
        layer_sizes[l as usize] += 1;
    }
    let doc = GroupJson {
        group: t.spec.to_string(),
        order: t.size(),
        reflections: t.reflections.len(),
        max_length: t.max_length(),
        layer_sizes,
        note: t.spec.alias_note(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[derive(Serialize)]
struct DegreeJson<'a> {
    group: &'a str,
    max_degree: usize,
    argmax_count: usize,
    argmax: &'a [String],
    histogram: &'a BTreeMap<usize, usize>,
}

pub fn json_degree(group: &str, r: &DegreeReport) -> String {
    let doc = DegreeJson {
        group,
        max_degree: r.max_degree,
        argmax_count: r.argmax_total,
        argmax: &r.argmax,
        histogram: &r.histogram,
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

#[derive(Serialize)]
struct VertexJson<'a> {
    id: u32,
    label: &'a str,
    degree: usize,
    ric: f64,
    spectrum: &'a [f64],
}

#[derive(Serialize)]
struct CurvatureJson<'a> {
    group: &'a str,
    ric: f64,
    argmin: u32,
    argmin_label: &'a str,
    max_degree: usize,
    lower_bound_edgewise: Option<f64>,
    lower_bound_degree: Option<f64>,
    upper_bound: f64,
    vertices: Vec<VertexJson<'a>>,
}

pub fn json_curvature(group: &str, r: &CurvatureReport, h: &HasseGraph) -> String {
    let vertices = r
        .per_vertex
        .iter()
        .map(|lc| VertexJson {
            id: lc.vertex,
            label: &h.labels[lc.vertex as usize],
            degree: h.degree(lc.vertex),
            ric: lc.ric,
            spectrum: &lc.spectrum,
        })
        .collect();
    let doc = CurvatureJson {
        group,
        ric: r.ric,
        argmin: r.argmin,
        argmin_label: &h.labels[r.argmin as usize],
        max_degree: r.max_degree,
        lower_bound_edgewise: r.lower_bound_edgewise,
        lower_bound_degree: r.lower_bound_degree,
        upper_bound: r.upper_bound,
        vertices,
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}
