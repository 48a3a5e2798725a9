//! One function per subcommand; each returns the rendered output so the
//! caller decides between stdout and a file.

use crate::{render, CliError, Format, GroupArgs};
use bruric_core::curvature::ricci::global_ricci;
use bruric_core::curvature::ricci::{
    lower_bound_from_max_degree, lower_bound_triangle_free, upper_bound_triangles,
};
use bruric_core::groups::table::enumerate as enumerate_group;
use bruric_core::hasse::degree::degree_report;
use bruric_core::hasse::gamma::{gamma_b, gamma_d};
use bruric_core::io::cache::{load_group, save_group};
use bruric_core::io::export;
use bruric_core::verify::{run_all, VerifyOptions};
use bruric_core::{Budget, Family, GroupSpec, GroupTable, HasseGraph, Window};

fn parse_spec(args: &GroupArgs) -> Result<GroupSpec, CliError> {
    let family: Family = args.family.parse()?;
    Ok(GroupSpec::new(family, args.rank, args.m)?)
}

fn budget(args: &GroupArgs) -> Budget {
    let mut b = Budget::default();
    if let Some(n) = args.max_elements {
        b.max_elements = n;
    }
    if let Some(s) = args.max_seconds {
        b.max_seconds = s;
    }
    b
}

/// Load from the cache file when present and matching, else enumerate
/// (and fill the cache if a path was given).
fn load_or_build(args: &GroupArgs) -> Result<GroupTable, CliError> {
    let spec = parse_spec(args)?;
    if let Some(path) = &args.cache {
        if path.exists() {
            let table = load_group(path)?;
            if table.spec != spec {
                return Err(CliError::Usage(format!(
                    "cache file {} holds {}, not {spec}",
                    path.display(),
                    table.spec
                )));
            }
            return Ok(table);
        }
    }
    let table = enumerate_group(spec, &budget(args))?;
    if let Some(path) = &args.cache {
        save_group(&table, path)?;
    }
    Ok(table)
}

pub fn enumerate(args: &GroupArgs, format: Format) -> Result<String, CliError> {
    let table = load_or_build(args)?;
    Ok(match format {
        Format::Text => render::group_summary(&table),
        Format::Csv => export::csv_elements(&table),
        Format::Json => export::json_group(&table),
        Format::Dot => export::dot_hasse(&HasseGraph::from_table(&table)),
    })
}

pub fn degrees(args: &GroupArgs, format: Format, full_argmax: bool) -> Result<String, CliError> {
    if full_argmax && format != Format::Text {
        return Err(CliError::Usage(
            "--full-argmax is a text-format dump".to_string(),
        ));
    }
    let table = load_or_build(args)?;
    let h = HasseGraph::from_table(&table);
    let report = degree_report(&h);
    Ok(match format {
        Format::Text => {
            let full = full_argmax.then(|| {
                let mut ids: Vec<u32> = (0..h.size() as u32)
                    .filter(|&v| h.degree(v) == report.max_degree)
                    .collect();
                ids.sort_unstable_by(|a, b| b.cmp(a));
                ids.iter()
                    .map(|&v| h.labels[v as usize].clone())
                    .collect::<Vec<String>>()
            });
            render::degrees(&report, table.spec.alias_note(), full.as_deref())
        }
        Format::Csv => export::csv_degree(&report),
        Format::Json => export::json_degree(&table.spec.to_string(), &report),
        Format::Dot => {
            return Err(CliError::Usage(
                "degrees has no dot rendering; use enumerate --format dot".to_string(),
            ))
        }
    })
}

pub fn curvature(args: &GroupArgs, format: Format, tol: f64) -> Result<String, CliError> {
    let table = load_or_build(args)?;
    let h = HasseGraph::from_table(&table);
    let report = global_ricci(&h.adj)?;
    Ok(match format {
        Format::Text => render::curvature(&report, &h, table.spec.alias_note(), tol),
        Format::Csv => export::csv_curvature(&report, &h),
        Format::Json => export::json_curvature(&table.spec.to_string(), &report, &h),
        Format::Dot => {
            return Err(CliError::Usage(
                "curvature has no dot rendering; use enumerate --format dot".to_string(),
            ))
        }
    })
}

pub fn gamma(family: &str, element: &str, tilde: bool, format: Format) -> Result<String, CliError> {
    let family: Family = family.parse()?;
    let w: Window = element.parse()?;
    if w.len() > 12 {
        return Err(CliError::Usage(format!(
            "window has {} entries; letter graphs are limited to 12",
            w.len()
        )));
    }
    match family {
        Family::B => {
            w.validate_signed()?;
            let g = gamma_b(&w);
            if tilde {
                let t = g.tilde();
                Ok(match format {
                    Format::Dot => export::dot_signed(&t),
                    Format::Text => render::signed(&t),
                    Format::Csv => export::csv_signed(&t),
                    Format::Json => export::json_signed(&t),
                })
            } else {
                Ok(match format {
                    Format::Dot => export::dot_gamma(&g),
                    Format::Text => render::gamma(&g),
                    Format::Csv => export::csv_gamma(&g),
                    Format::Json => export::json_gamma(&g),
                })
            }
        }
        Family::D => {
            if tilde {
                return Err(CliError::Usage(
                    "--tilde doubles a B letter graph; the D graph is already signed"
                        .to_string(),
                ));
            }
            w.validate_signed()?;
            let g = gamma_d(&w)?;
            Ok(match format {
                Format::Dot => export::dot_signed(&g),
                Format::Text => render::signed(&g),
                Format::Csv => export::csv_signed(&g),
                Format::Json => export::json_signed(&g),
            })
        }
        other => Err(CliError::Usage(format!(
            "letter graphs are defined for families B and D, not {other:?}"
        ))),
    }
}

pub fn bounds(args: &GroupArgs, format: Format) -> Result<String, CliError> {
    let table = load_or_build(args)?;
    let h = HasseGraph::from_table(&table);
    let max_degree = degree_report(&h).max_degree;
    let edgewise = lower_bound_triangle_free(&h.adj).ok();
    let degree_bound = lower_bound_from_max_degree(&h.adj);
    let upper = upper_bound_triangles(&h.adj);
    let note = (table.spec.family == Family::B && table.spec.rank <= 5).then_some(
        "degree bound uses the computed max degree; the closed form switches at rank 5",
    );
    let view = render::BoundsView {
        group: table.spec.to_string(),
        h: &h,
        max_degree,
        edgewise,
        degree_bound,
        upper,
        note,
    };
    Ok(match format {
        Format::Text => render::bounds(&view),
        Format::Json => {
            let doc = serde_json::json!({
                "group": view.group,
                "vertices": h.size(),
                "edges": h.edge_count(),
                "max_degree": max_degree,
                "triangle_free": h.is_triangle_free(),
                "lower_bound_edgewise": edgewise,
                "lower_bound_degree": degree_bound,
                "upper_bound": upper,
                "note": note,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        _ => {
            return Err(CliError::Usage(
                "bounds renders as text or json".to_string(),
            ))
        }
    })
}

pub fn verify(sample: usize, seed: u64, deep: bool, tol: f64) -> (String, bool) {
    let opts = VerifyOptions {
        sample,
        seed,
        deep,
        oracle_tol: tol,
    };
    let outcomes = run_all(&opts);
    let all_passed = outcomes.iter().all(|c| c.passed);
    (render::verify_report(&outcomes), all_passed)
}
