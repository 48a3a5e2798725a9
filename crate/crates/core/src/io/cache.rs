//! Plain-text cache of an enumerated group.
//!
//! Layout, one record per line, LF endings, FNV-1a 64 checksum over
//! everything before the checksum line:
//!
//! ```text
//! BRURIC-CACHE v1 B 4
//! <id> <length> <key> <image under each generator>
//! ...
//! T <reflection element ids>
//! FNV1A64 <16 hex digits>
//! ```
//!
//! Only generator actions are stored; reflection actions are rebuilt on
//! load by composing generator permutations along a reduced word, which is
//! checked against the directly computed actions in the table tests.

use crate::error::CacheError;
use crate::family::{Family, GroupSpec};
use crate::groups::table::{refl_actions_from_generators, GroupTable};
use crate::groups::window::Window;
use std::fs;
use std::path::Path;

const MAGIC: &str = "BRURIC-CACHE";
const VERSION: &str = "v1";

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

pub fn save_group(table: &GroupTable, path: &Path) -> Result<(), CacheError> {
    let mut body = String::new();
    let spec = &table.spec;
    match spec.family {
        Family::I2 => {
            body.push_str(&format!(
                "{MAGIC} {VERSION} I2 {} {}\n",
                spec.rank,
                spec.m.unwrap()
            ));
        }
        _ => {
            body.push_str(&format!(
                "{MAGIC} {VERSION} {:?} {}\n",
                spec.family, spec.rank
            ));
        }
    }
    for id in 0..table.size() {
        body.push_str(&format!("{id} {} {}", table.lengths[id], table.keys[id]));
        for g in &table.gen_action {
            body.push_str(&format!(" {}", g[id]));
        }
        body.push('\n');
    }
    body.push('T');
    for t in &table.reflections {
        body.push_str(&format!(" {t}"));
    }
    body.push('\n');
    let checksum = fnv1a64(body.as_bytes());
    fs::write(path, format!("{body}FNV1A64 {checksum:016x}\n"))?;
    Ok(())
}

pub fn load_group(path: &Path) -> Result<GroupTable, CacheError> {
    let content = fs::read_to_string(path)?;
    parse_group(&content)
}

fn bad(line: usize, what: impl Into<String>) -> CacheError {
    CacheError::ParseError {
        line,
        what: what.into(),
    }
}

pub fn parse_group(content: &str) -> Result<GroupTable, CacheError> {
    // checksum verification first, when the trailer is intact; a file cut
    // short loses the trailer and falls through to line-level parsing so
    // the error names the first structurally bad line
    let body_end = content.rfind("FNV1A64 ");
    if let Some(pos) = body_end {
        if pos > 0 && content[..pos].ends_with('\n') {
            let stated = content[pos + 8..].trim();
            let actual = format!("{:016x}", fnv1a64(content[..pos].as_bytes()));
            if stated != actual {
                return Err(CacheError::ChecksumMismatch {
                    stated: stated.to_string(),
                    actual,
                });
            }
        }
    }

    let mut lines = content
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .enumerate();

    let (_, header) = lines.next().ok_or_else(|| bad(1, "empty file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() < 2 || head[0] != MAGIC || head[1] != VERSION {
        return Err(CacheError::VersionMismatch(header.to_string()));
    }
    if head.len() < 4 {
        return Err(bad(1, "header needs a family and a rank"));
    }
    let family: Family = head[2]
        .parse()
        .map_err(|e| bad(1, format!("{e}")))?;
    let rank: u8 = head[3]
        .parse()
        .map_err(|_| bad(1, format!("bad rank {:?}", head[3])))?;
    let m: Option<u32> = match head.get(4) {
        Some(tok) => Some(
            tok.parse()
                .map_err(|_| bad(1, format!("bad m {tok:?}")))?,
        ),
        None => None,
    };
    let spec = GroupSpec::new(family, rank, m).map_err(|e| bad(1, format!("{e}")))?;
    let size = spec.order();
    if size > u32::MAX as u128 {
        return Err(bad(1, "group too large for a cache file"));
    }
    let size = size as usize;
    let gens = spec.generator_count();

    let mut lengths = Vec::with_capacity(size);
    let mut keys: Vec<String> = Vec::with_capacity(size);
    let mut gen_action: Vec<Vec<u32>> = vec![Vec::with_capacity(size); gens];
    for id in 0..size {
        let (i, line) = lines
            .next()
            .filter(|(_, l)| !l.starts_with("FNV1A64"))
            .ok_or_else(|| {
                bad(id + 2, format!("expected element line for id {id}, found end of data"))
            })?;
        let lineno = i + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 + gens {
            return Err(bad(
                lineno,
                format!("expected {} fields, found {}", 3 + gens, toks.len()),
            ));
        }
        let stated_id: usize = toks[0]
            .parse()
            .map_err(|_| bad(lineno, format!("bad id {:?}", toks[0])))?;
        if stated_id != id {
            return Err(bad(lineno, format!("expected id {id}, found {stated_id}")));
        }
        let len: u32 = toks[1]
            .parse()
            .map_err(|_| bad(lineno, format!("bad length {:?}", toks[1])))?;
        if let Some(&prev) = lengths.last() {
            if len < prev {
                return Err(bad(lineno, "lengths must be non-decreasing"));
            }
        } else if len != 0 {
            return Err(bad(lineno, "first element must have length 0"));
        }
        lengths.push(len);
        keys.push(toks[2].to_string());
        for (g, tok) in toks[3..].iter().enumerate() {
            let img: u32 = tok
                .parse()
                .map_err(|_| bad(lineno, format!("bad image {tok:?}")))?;
            if img as usize >= size {
                return Err(bad(lineno, format!("image {img} out of range")));
            }
            gen_action[g].push(img);
        }
    }

    let (i, tline) = lines
        .next()
        .filter(|(_, l)| !l.starts_with("FNV1A64"))
        .ok_or_else(|| bad(size + 2, "expected reflection line, found end of data"))?;
    let lineno = i + 1;
    let mut tt = tline.split_whitespace();
    if tt.next() != Some("T") {
        return Err(bad(lineno, "expected reflection line starting with T"));
    }
    let reflections: Vec<u32> = tt
        .map(|tok| {
            tok.parse::<u32>()
                .ok()
                .filter(|&t| (t as usize) < size)
                .ok_or_else(|| bad(lineno, format!("bad reflection id {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    if reflections.len() != spec.reflection_count() {
        return Err(bad(
            lineno,
            format!(
                "expected {} reflections, found {}",
                spec.reflection_count(),
                reflections.len()
            ),
        ));
    }
    if !reflections.windows(2).all(|p| p[0] < p[1]) {
        return Err(bad(lineno, "reflection ids must be strictly ascending"));
    }

    let (i, tail) = lines
        .next()
        .ok_or_else(|| bad(size + 3, "expected checksum line, found end of data"))?;
    if !tail.starts_with("FNV1A64 ") {
        return Err(bad(i + 1, "expected checksum line"));
    }
    if let Some((j, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(bad(j + 1, "unexpected data after checksum line"));
    }

    let windows = match family {
        Family::A | Family::B | Family::D => {
            let parsed: Result<Vec<Window>, _> = keys
                .iter()
                .enumerate()
                .map(|(id, k)| {
                    k.parse::<Window>()
                        .map_err(|e| bad(id + 2, format!("{e}")))
                })
                .collect();
            Some(parsed?)
        }
        _ => None,
    };

    let refl_action = refl_actions_from_generators(&lengths, &gen_action, &reflections);
    Ok(GroupTable {
        spec,
        lengths,
        keys,
        gen_action,
        reflections,
        refl_action,
        windows,
    })
}
