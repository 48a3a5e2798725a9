//! Cache files through the filesystem: save, reload, recompute, and the
//! failure modes a stale or damaged file must surface.

use bruric_core::curvature::ricci::global_ricci;
use bruric_core::hasse::degree::degree_report;
use bruric_core::io::cache::{load_group, save_group};
use bruric_core::{Budget, CacheError, Family, GroupSpec, HasseGraph};
use std::fs;

fn build(family: Family, rank: u8, m: Option<u32>) -> bruric_core::GroupTable {
    let spec = GroupSpec::new(family, rank, m).unwrap();
    bruric_core::groups::table::enumerate(spec, &Budget::default()).unwrap()
}

#[test]
fn roundtrip_preserves_the_whole_table() {
    let dir = tempfile::tempdir().unwrap();
    for (family, rank, m) in [
        (Family::B, 4, None),
        (Family::D, 4, None),
        (Family::I2, 2, Some(9)),
        (Family::H3, 3, None),
    ] {
        let table = build(family, rank, m);
        let path = dir.path().join(format!("{}.cache", table.spec));
        save_group(&table, &path).unwrap();
        let reloaded = load_group(&path).unwrap();
        assert_eq!(table, reloaded, "{}", table.spec);
    }
}

#[test]
fn reloaded_table_reproduces_reports_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let table = build(Family::H3, 3, None);
    let path = dir.path().join("h3.cache");
    save_group(&table, &path).unwrap();
    let reloaded = load_group(&path).unwrap();

    let h1 = HasseGraph::from_table(&table);
    let h2 = HasseGraph::from_table(&reloaded);
    assert_eq!(degree_report(&h1), degree_report(&h2));

    let r1 = global_ricci(&h1.adj).unwrap();
    let r2 = global_ricci(&h2.adj).unwrap();
    assert_eq!(r1.ric.to_bits(), r2.ric.to_bits());
    for (a, b) in r1.per_vertex.iter().zip(&r2.per_vertex) {
        assert_eq!(a.ric.to_bits(), b.ric.to_bits());
    }
}

#[test]
fn flipped_byte_fails_the_checksum() {
    let dir = tempfile::tempdir().unwrap();
    let table = build(Family::B, 3, None);
    let path = dir.path().join("b3.cache");
    save_group(&table, &path).unwrap();

    let mut bytes = fs::read(&path).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] = if bytes[mid] == b'3' { b'4' } else { b'3' };
    fs::write(&path, &bytes).unwrap();

    match load_group(&path) {
        Err(CacheError::ChecksumMismatch { .. }) => {}
        other => panic!("expected checksum failure, got {other:?}"),
    }
}

#[test]
fn missing_file_reports_io() {
    let dir = tempfile::tempdir().unwrap();
    match load_group(&dir.path().join("absent.cache")) {
        Err(CacheError::Io(_)) => {}
        other => panic!("expected io error, got {other:?}"),
    }
}
