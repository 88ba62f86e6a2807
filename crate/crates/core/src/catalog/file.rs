//! The group file format: one group per `.grp` file.
//!
//! ```text
//! # optional comments
//! name d16
//! degree 8
//! gen (0 1 2 3 4 5 6 7)
//! gen (1 7)(2 6)(3 5)
//! ```

use std::fs;
use std::path::Path;

use crate::group::{close_generators_capped, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;

use super::{CatalogEntry, CatalogError, CatalogSource};

pub fn parse_group_file(
    text: &str,
    path_for_errors: &str,
) -> Result<(String, usize, Vec<Permutation>), CatalogError> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    let err = |line: usize, reason: String| CatalogError::Parse {
        path: path_for_errors.to_string(),
        line,
        reason,
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, rest) = trimmed
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(line, format!("malformed line `{trimmed}`")))?;
        let rest = rest.trim();
        match key {
            "name" => {
                if name.is_some() {
                    return Err(err(line, "duplicate name line".into()));
                }
                if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(err(line, format!("bad identifier `{rest}`")));
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(err(line, "duplicate degree line".into()));
                }
                let d: usize = rest
                    .parse()
                    .map_err(|_| err(line, format!("bad degree `{rest}`")))?;
                if d == 0 {
                    return Err(err(line, "degree must be positive".into()));
                }
                degree = Some(d);
            }
            "gen" => {
                let d = degree.ok_or_else(|| err(line, "gen before degree".into()))?;
                let p = Permutation::parse_cycles(rest, d)
                    .map_err(|e| err(line, e.to_string()))?;
                gens.push(p);
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| err(0, "missing name line".into()))?;
    let degree = degree.ok_or_else(|| err(0, "missing degree line".into()))?;
    Ok((name, degree, gens))
}

pub fn load_group_file(path: &Path) -> Result<CatalogEntry, CatalogError> {
    let text = fs::read_to_string(path)?;
    let shown = path.display().to_string();
    let (name, degree, gens) = parse_group_file(&text, &shown)?;
    let mut group = close_generators_capped(degree, &gens, None, DEFAULT_ORDER_CAP)?;
    group.set_name(&name);
    let tags = vec![format!("order{}", group.order())];
    Ok(CatalogEntry {
        name,
        source: CatalogSource::File(path.to_path_buf()),
        group,
        tags,
    })
}

/// Loads every `.grp` file of a directory (sorted by file name); duplicate
/// group names are rejected.
pub fn load_catalog(dir: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().map(|e| e == "grp").unwrap_or(false))
        .collect();
    paths.sort();
    let mut entries = Vec::with_capacity(paths.len());
    let mut seen = std::collections::HashSet::new();
    for path in paths {
        let entry = load_group_file(&path)?;
        if !seen.insert(entry.name.clone()) {
            return Err(CatalogError::DuplicateName(entry.name));
        }
        entries.push(entry);
    }
    Ok(entries)
}

/// Writes a group file from permutation generators.
pub fn write_group_file(
    path: &Path,
    name: &str,
    degree: usize,
    gens: &[Permutation],
    comment: &str,
) -> std::io::Result<()> {
    let mut out = String::new();
    for line in comment.lines() {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("name {name}\n"));
    out.push_str(&format!("degree {degree}\n"));
    for g in gens {
        out.push_str(&format!("gen {}\n", g.to_cycles()));
    }
    fs::write(path, out)
}

/// Round-trips a table group through its right-regular representation on the
/// designated generators, for export into the file format.
pub fn regular_generators(group: &FiniteGroup) -> Vec<Permutation> {
    let gens = if group.generators().is_empty() {
        group.small_generating_set()
    } else {
        group.generators().to_vec()
    };
    crate::group::regular_representation(group, &gens)
}
