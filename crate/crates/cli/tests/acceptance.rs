//! Acceptance suite: one test per criterion, named c01..c10. Each prints
//! a PASS/FAIL line with the check detail, then asserts, so the harness
//! row is the per-criterion record.
//!
//! Three tests encode claims that are false as stated and fail by
//! design; their assertion messages carry the analysis:
//!   c04_extremal_window_d5_d6_as_stated
//!   c06_d4_figure_graph_as_printed
//!   c07_d5_gamma_degree_bound_as_stated

use bruric_core::verify::{
    check_cover_rules, check_curvature_consistency, check_d4_figure_graph_as_printed,
    check_d5_gamma_degree_bound_as_stated, check_dihedral_curvature,
    check_exceptional_max_degrees, check_extremal_window_d5_d6_as_stated,
    check_gamma_graph_invariants, check_gamma_min_degree_bounds, check_max_degree_formulas,
    check_reduction_golden_matrices, check_symmetric_group_embedding,
    check_thread_count_determinism, CheckOutcome, VerifyOptions,
};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

fn report(c: &CheckOutcome) {
    let flag = if c.passed { "PASS" } else { "FAIL" };
    println!("{flag} {} ({:.2}s): {}", c.name, c.seconds, c.detail);
}

#[test]
fn c01_dihedral_curvature() {
    let c = check_dihedral_curvature();
    report(&c);
    assert!(c.passed, "{}", c.detail);
    assert!(c.seconds < 1.0, "budget 1s, took {:.2}s", c.seconds);
    // the report must name which closed-form branch I2(5) matches
    assert!(c.detail.contains("(5-sqrt(17))/4"), "{}", c.detail);
}

#[test]
fn c02_reduction_golden_matrices() {
    let c = check_reduction_golden_matrices();
    report(&c);
    assert!(c.passed, "{}", c.detail);
    assert!(c.seconds < 1.0, "budget 1s, took {:.2}s", c.seconds);
}

#[test]
fn c03_cover_rule_oracle_equivalence() {
    let c = check_cover_rules(&VerifyOptions::default());
    report(&c);
    assert!(c.passed, "{}", c.detail);
    assert!(c.seconds < 30.0, "budget 30s, took {:.2}s", c.seconds);
}

#[test]
fn c04_max_degree_formulas() {
    let c = check_max_degree_formulas();
    report(&c);
    assert!(c.passed, "{}", c.detail);
    assert!(c.seconds < 180.0, "budget 3min, took {:.2}s", c.seconds);
}

#[test]
fn c04_extremal_window_d5_d6_as_stated() {
    // The block windows for D5 and D6, exactly as stated, have an odd
    // number of negative entries and are not elements of the group. The
    // check fails honestly; the detail names working sign-adjusted
    // variants that do attain the maximum degree.
    let c = check_extremal_window_d5_d6_as_stated();
    report(&c);
    assert!(c.passed, "{}", c.detail);
}

#[test]
fn c05_exceptional_max_degrees() {
    // H3 alone carries the tightest budget, so time it separately.
    let start = Instant::now();
    let spec = bruric_core::GroupSpec::new(bruric_core::Family::H3, 3, None).unwrap();
    let table =
        bruric_core::groups::table::enumerate(spec, &bruric_core::Budget::default()).unwrap();
    let h3 = bruric_core::HasseGraph::from_table(&table);
    let d = bruric_core::hasse::degree::degree_report(&h3).max_degree;
    let h3_seconds = start.elapsed().as_secs_f64();
    assert_eq!(d, 9);
    assert!(h3_seconds < 5.0, "H3 budget 5s, took {h3_seconds:.2}s");

    let c = check_exceptional_max_degrees();
    report(&c);
    assert!(c.passed, "{}", c.detail);
    assert!(c.seconds < 960.0, "budget 16min, took {:.2}s", c.seconds);
}

#[test]
fn c06_gamma_graph_consistency() {
    let c = check_gamma_graph_invariants();
    report(&c);
    assert!(c.passed, "{}", c.detail);
}

#[test]
fn c06_d4_figure_graph_as_printed() {
    // The printed figure for [2,-3,-4,1] disagrees with the edge rule it
    // illustrates: four edges missing, two drawn that no cover produces.
    // The computed set is cross-checked by the doubled edge count.
    let c = check_d4_figure_graph_as_printed();
    report(&c);
    assert!(c.passed, "{}", c.detail);
}

#[test]
fn c07_gamma_min_degree_bounds() {
    let c = check_gamma_min_degree_bounds(&VerifyOptions::default());
    report(&c);
    assert!(c.passed, "{}", c.detail);
}

#[test]
fn c07_d5_gamma_degree_bound_as_stated() {
    // "Every element of D5 has a letter of degree <= 5" has exactly eight
    // counterexamples, all maximum-Hasse-degree elements; they are listed
    // in the failure message.
    let c = check_d5_gamma_degree_bound_as_stated();
    report(&c);
    assert!(c.passed, "{}", c.detail);
}

#[test]
fn c08_curvature_property_suite() {
    let c = check_curvature_consistency(&VerifyOptions::default());
    report(&c);
    assert!(c.passed, "{}", c.detail);
}

#[test]
fn c09_symmetric_group_embedding() {
    let c = check_symmetric_group_embedding();
    report(&c);
    assert!(c.passed, "{}", c.detail);
    assert!(c.seconds < 60.0, "budget 1min, took {:.2}s", c.seconds);
}

fn run_to_file(subcommand: &str, group: &[&str], threads: &str, format: &str, out: &Path) {
    let status = Command::new(env!("CARGO_BIN_EXE_bruric"))
        .arg(subcommand)
        .args(group)
        .args(["--threads", threads, "--format", format])
        .arg("--out")
        .arg(out)
        .status()
        .expect("spawn bruric");
    assert!(status.success(), "{subcommand} with --threads {threads} failed");
}

#[test]
fn c10_outputs_are_byte_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &[&str], &str); 4] = [
        ("degrees", &["--family", "B", "--rank", "4"], "text"),
        ("degrees", &["--family", "B", "--rank", "4"], "json"),
        ("curvature", &["--family", "D", "--rank", "4"], "text"),
        ("curvature", &["--family", "D", "--rank", "4"], "json"),
    ];
    for (i, (sub, group, format)) in cases.iter().enumerate() {
        let mut outputs = Vec::new();
        // twice with one thread, then eight: both repeatability and
        // thread-count independence
        for (j, threads) in ["1", "1", "8"].iter().enumerate() {
            let path = dir.path().join(format!("{i}-{j}.out"));
            run_to_file(sub, group, threads, format, &path);
            outputs.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(outputs[0], outputs[1], "{sub} {format}: rerun differs");
        assert_eq!(outputs[0], outputs[2], "{sub} {format}: thread count differs");
        assert!(!outputs[0].is_empty());
    }
    // the in-process half of the same contract
    let c = check_thread_count_determinism();
    report(&c);
    assert!(c.passed, "{}", c.detail);
}
