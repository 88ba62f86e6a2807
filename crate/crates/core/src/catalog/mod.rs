//! Reference groups: named builders for every group the verification suite
//! speaks about, the complete strata of orders 1..16, and the group-file
//! loader.

use std::path::PathBuf;

use thiserror::Error;

use crate::group::{product_direct, FiniteGroup, GroupError};

mod builders;
mod file;

pub use file::{load_catalog, load_group_file, parse_group_file, regular_generators, write_group_file};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown builtin group name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },
    #[error("{path}:{line}: {reason}")]
    Parse {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("duplicate group name `{0}` in catalog")]
    DuplicateName(String),
    #[error("builtin `{name}` failed validation: {reason}")]
    Validation { name: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogSource {
    Builtin,
    File(PathBuf),
}

/// A named group with provenance and free-form tags.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub source: CatalogSource,
    pub group: FiniteGroup,
    pub tags: Vec<String>,
}

fn one_param(name: &str, params: &[u64]) -> Result<usize, CatalogError> {
    match params {
        [p] => Ok(*p as usize),
        _ => Err(CatalogError::BadParams {
            name: name.into(),
            reason: format!("expected 1 parameter, got {}", params.len()),
        }),
    }
}

fn no_params(name: &str, params: &[u64]) -> Result<(), CatalogError> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(CatalogError::BadParams {
            name: name.into(),
            reason: format!("expected no parameters, got {}", params.len()),
        })
    }
}

fn optional_param(params: &[u64], default: usize) -> Result<usize, CatalogError> {
    match params {
        [] => Ok(default),
        [p] => Ok(*p as usize),
        _ => Err(CatalogError::BadParams {
            name: "extraspecial".into(),
            reason: "expected at most 1 parameter".into(),
        }),
    }
}

/// Constructs a named builtin group, validated against its expected order and
/// invariant vector.
pub fn builtin(name: &str, params: &[u64]) -> Result<FiniteGroup, CatalogError> {
    match name {
        "cyclic" => builders::cyclic(one_param(name, params)?),
        "elementary_abelian" => builders::elementary_abelian(one_param(name, params)?),
        "dihedral" => builders::dihedral(one_param(name, params)?),
        "quaternion" => builders::quaternion(one_param(name, params)?),
        "semidihedral" => builders::semidihedral(one_param(name, params)?),
        "modular16" => {
            no_params(name, params)?;
            builders::modular16()
        }
        "C4xC4" => {
            no_params(name, params)?;
            builders::c4xc4()
        }
        "C4sdC4" => {
            no_params(name, params)?;
            builders::c4sdc4()
        }
        "C4sdQ8" => {
            no_params(name, params)?;
            builders::c4sdq8()
        }
        "H32" => {
            no_params(name, params)?;
            builders::h32()
        }
        "H245" => {
            no_params(name, params)?;
            builders::h245()
        }
        "Q8xC4" => {
            no_params(name, params)?;
            builders::q8xc4()
        }
        "Q8xQ8" => {
            no_params(name, params)?;
            builders::q8xq8()
        }
        "thm12_iv" => {
            no_params(name, params)?;
            builders::thm12_iv()
        }
        "P" => builders::p_group(one_param(name, params)?),
        "R" => builders::r_group(one_param(name, params)?),
        "extraspecial_D8central" => builders::extraspecial_d8central(optional_param(params, 1)?),
        "extraspecial_Q8central" => builders::extraspecial_q8central(optional_param(params, 1)?),
        "heisenberg" => builders::heisenberg(one_param(name, params)?),
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

/// Builds a builtin as a catalog entry with provenance and an order tag.
pub fn builtin_entry(spec: &str) -> Result<CatalogEntry, CatalogError> {
    let group = builtin_from_spec(spec)?;
    let tags = vec![format!("order{}", group.order())];
    Ok(CatalogEntry {
        name: group.name().to_string(),
        source: CatalogSource::Builtin,
        group,
        tags,
    })
}

/// Parses and builds a builtin spec such as `dihedral(8)`, `P(2)` or `H245`.
pub fn builtin_from_spec(spec: &str) -> Result<FiniteGroup, CatalogError> {
    let spec = spec.trim();
    if let Some(open) = spec.find('(') {
        let name = &spec[..open];
        let rest = spec[open..]
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| CatalogError::BadParams {
                name: name.to_string(),
                reason: "unbalanced parentheses".into(),
            })?;
        let params: Vec<u64> = if rest.trim().is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|tok| {
                    tok.trim().parse::<u64>().map_err(|_| CatalogError::BadParams {
                        name: name.to_string(),
                        reason: format!("bad integer parameter `{tok}`"),
                    })
                })
                .collect::<Result<_, _>>()?
        };
        builtin(name, &params)
    } else {
        builtin(spec, &[])
    }
}

fn named(mut g: FiniteGroup, name: &str) -> FiniteGroup {
    g.set_name(name);
    g
}

/// The complete isomorphism-class list for one small order (1, 2, 4, 8, 16).
pub fn complete_stratum(order: usize) -> Result<Vec<FiniteGroup>, CatalogError> {
    match order {
        1 => Ok(vec![named(builders::cyclic(1)?, "c1")]),
        2 => Ok(vec![named(builders::cyclic(2)?, "c2")]),
        4 => Ok(vec![
            named(builders::cyclic(4)?, "c4"),
            named(builders::elementary_abelian(2)?, "c2xc2"),
        ]),
        8 => Ok(vec![
            named(builders::cyclic(8)?, "c8"),
            named(direct_relabel(builders::cyclic(4)?, builders::cyclic(2)?, &["a"], &["b"])?, "c4xc2"),
            named(builders::elementary_abelian(3)?, "c2xc2xc2"),
            named(builders::dihedral(8)?, "d8"),
            named(builders::quaternion(8)?, "q8"),
        ]),
        16 => Ok(vec![
            named(builders::cyclic(16)?, "c16"),
            named(direct_relabel(builders::cyclic(8)?, builders::cyclic(2)?, &["a"], &["b"])?, "c8xc2"),
            named(builders::c4xc4()?, "c4xc4"),
            named(
                direct_relabel(builders::cyclic(4)?, builders::elementary_abelian(2)?, &["a"], &["b", "c"])?,
                "c4xc2xc2",
            ),
            named(builders::elementary_abelian(4)?, "c2xc2xc2xc2"),
            named(builders::dihedral(16)?, "d16"),
            named(builders::semidihedral(16)?, "sd16"),
            named(builders::quaternion(16)?, "q16"),
            named(builders::modular16()?, "m16"),
            named(direct_relabel(builders::dihedral(8)?, builders::cyclic(2)?, &["r", "s"], &["t"])?, "d8xc2"),
            named(direct_relabel(builders::quaternion(8)?, builders::cyclic(2)?, &["i", "j"], &["t"])?, "q8xc2"),
            named(c2c2_sd_c4()?, "c2c2_sd_c4"),
            named(builders::c4sdc4()?, "c4_sd_c4"),
            named(c4_y_d8()?, "c4_y_d8"),
        ]),
        other => Err(CatalogError::BadParams {
            name: "complete_stratum".into(),
            reason: format!("no complete stratum is shipped for order {other}"),
        }),
    }
}

/// Orders whose strata are complete in this repository.
pub const COMPLETE_STRATA: [usize; 5] = [1, 2, 4, 8, 16];

/// All groups of the complete strata, in order.
pub fn complete_strata() -> Result<Vec<FiniteGroup>, CatalogError> {
    let mut out = Vec::new();
    for order in COMPLETE_STRATA {
        out.extend(complete_stratum(order)?);
    }
    Ok(out)
}

/// Loads a shipped `catalog/order<N>` directory, attaching the
/// `complete-stratum` tag. Only the orders whose strata this repository
/// guarantees complete are accepted.
pub fn load_shipped_stratum(
    catalog_root: &std::path::Path,
    order: usize,
) -> Result<Vec<CatalogEntry>, CatalogError> {
    if !COMPLETE_STRATA.contains(&order) {
        return Err(CatalogError::BadParams {
            name: "load_shipped_stratum".into(),
            reason: format!("order {order} is not a complete stratum"),
        });
    }
    let mut entries = load_catalog(&catalog_root.join(format!("order{order}")))?;
    for entry in &mut entries {
        entry.tags.push("complete-stratum".into());
    }
    Ok(entries)
}

fn direct_relabel(
    g1: FiniteGroup,
    g2: FiniteGroup,
    names1: &[&str],
    names2: &[&str],
) -> Result<FiniteGroup, CatalogError> {
    let mut prod = product_direct(&g1, &g2)?;
    let n2 = g2.order();
    let mut gens: Vec<(usize, &str)> = Vec::new();
    for (k, &idx) in g1.generators().iter().enumerate() {
        gens.push((idx * n2, names1[k]));
    }
    for (k, &idx) in g2.generators().iter().enumerate() {
        gens.push((idx, names2[k]));
    }
    prod.relabel_from_generators(&gens);
    Ok(prod)
}

/// The nonabelian (C2 x C2) x| C4: the acting generator swaps the two Klein
/// factors.
fn c2c2_sd_c4() -> Result<FiniteGroup, CatalogError> {
    let klein = builders::elementary_abelian(2)?;
    let c4 = builders::cyclic(4)?;
    let x = klein.generators()[0];
    let y = klein.generators()[1];
    let mut swap: Vec<usize> = (0..klein.order()).collect();
    swap[x] = y;
    swap[y] = x;
    let action = crate::group::action_from_generators(&klein, &c4, &[(1, swap)])?;
    let mut g = crate::group::product_semidirect(&klein, &c4, &action)?;
    let n2 = c4.order();
    g.relabel_from_generators(&[(x * n2, "x"), (y * n2, "y"), (1, "c")]);
    Ok(g)
}

/// The central product C4 Y D8 over the shared order-2 central subgroup.
fn c4_y_d8() -> Result<FiniteGroup, CatalogError> {
    let c4 = builders::cyclic(4)?;
    let d8 = builders::dihedral(8)?;
    let g_sq = c4.mul(1, 1);
    let r = d8.element_by_label("r").expect("labeled");
    let r_sq = d8.mul(r, r);
    let mut g = crate::group::product_central(&c4, &d8, &[(g_sq, r_sq)])?;
    let gens: Vec<(usize, &str)> = [("g", "g"), ("r", "r"), ("s", "s")]
        .iter()
        .map(|&(label, nm)| (g.element_by_label(label).expect("label survives"), nm))
        .collect();
    g.relabel_from_generators(&gens);
    Ok(g)
}

/// The named builders that appear in the classification statements, beyond
/// the complete strata.
pub fn named_builtins() -> Result<Vec<FiniteGroup>, CatalogError> {
    Ok(vec![
        builtin("Q8xC4", &[])?,
        builtin("C4sdQ8", &[])?,
        builtin("H32", &[])?,
        builtin("thm12_iv", &[])?,
        builtin("Q8xQ8", &[])?,
        builtin("H245", &[])?,
        builtin("P", &[1])?,
        builtin("P", &[2])?,
        builtin("R", &[1])?,
        builtin("R", &[2])?,
        builtin("extraspecial_D8central", &[2])?,
        builtin("extraspecial_Q8central", &[2])?,
    ])
}

#[cfg(test)]
mod tests;
