//! Output documents for the non-verify subcommands.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use serde::Serialize;

use uul_core::algebra::GroupAlgebra;
use uul_core::bicyclic::{bicyclic_unit, lemma13_predicate, normalizes_cyclic, BicyclicSpec};
use uul_core::classify::{
    classify_theorem11, classify_theorem12, is_good, lemma41_filter, lemma414_check, ClassVerdict,
};
use uul_core::group::{decompose_elem_abelian_factor, shape_predicates};
use uul_core::units::{is_unitary, normalized_unit_count, unitary_units, UnitSweepConfig};
use uul_core::{FiniteGroup, SubgroupKind};

use crate::ScanPredicate;

#[derive(Serialize)]
pub struct ClassifyDoc {
    group: String,
    order: usize,
    thm11: ClassVerdict,
    thm12: ClassVerdict,
    good: bool,
    lemma41: bool,
    lemma414_applicable: bool,
    lemma414_holds: bool,
}

pub fn classify_doc(g: &FiniteGroup) -> Result<(ClassifyDoc, String)> {
    let thm11 = classify_theorem11(g)?;
    let thm12 = classify_theorem12(g)?;
    let (good, _) = is_good(g)?;
    let lemma41 = lemma41_filter(g)?;
    let (applicable, holds, _) = lemma414_check(g)?;
    let doc = ClassifyDoc {
        group: g.name().to_string(),
        order: g.order(),
        thm11,
        thm12,
        good,
        lemma41,
        lemma414_applicable: applicable,
        lemma414_holds: holds,
    };
    let fmt_conditions = |v: &ClassVerdict| -> String {
        if v.abelian {
            "abelian".to_string()
        } else if v.conditions.is_empty() {
            "none".to_string()
        } else {
            serde_json::to_value(&v.conditions)
                .ok()
                .and_then(|j| {
                    j.as_array().map(|a| {
                        a.iter()
                            .filter_map(|c| c.as_str().map(str::to_string))
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                })
                .unwrap_or_default()
        }
    };
    let text = format!(
        "group {} (order {})\n  split: |E| = {}, |H| = {}\n  thm1.1: {} [{}]\n  thm1.2: {} [{}]\n  good: {}\n  lemma4.1 filter: {}\n  lemma4.14: applicable {}, holds {}",
        doc.group,
        doc.order,
        doc.thm11.e_order,
        doc.thm11.h_order,
        if doc.thm11.in_class { "in class" } else { "not in class" },
        fmt_conditions(&doc.thm11),
        if doc.thm12.in_class { "in class" } else { "not in class" },
        fmt_conditions(&doc.thm12),
        doc.good,
        doc.lemma41,
        doc.lemma414_applicable,
        doc.lemma414_holds,
    );
    Ok((doc, text))
}

#[derive(Serialize)]
pub struct UnitsDoc {
    group: String,
    p: u32,
    normalized_units: String,
    mode: String,
    unitary_count: Option<u64>,
}

pub fn units_doc(group: FiniteGroup, p: u32, cfg: &UnitSweepConfig) -> Result<(UnitsDoc, String)> {
    if !group.is_p_group(p) {
        bail!("group {} is not a {p}-group", group.name());
    }
    let name = group.name().to_string();
    let algebra = GroupAlgebra::from_group(group, p)?;
    let total = normalized_unit_count(&algebra)
        .map(|t| t.to_string())
        .unwrap_or_else(|| format!("{p}^{}", algebra.dim() - 1));
    let unitary = match normalized_unit_count(&algebra) {
        Some(t) if t <= cfg.max_exhaustive => {
            Some(unitary_units(&algebra, cfg.max_exhaustive)?.len() as u64)
        }
        _ => None,
    };
    let doc = UnitsDoc {
        group: name,
        p,
        normalized_units: total,
        mode: "exhaustive".into(),
        unitary_count: unitary,
    };
    let text = format!(
        "group {} | p={} | |V(KG)| = {} | |V*(KG)| = {}",
        doc.group,
        doc.p,
        doc.normalized_units,
        doc.unitary_count
            .map(|c| c.to_string())
            .unwrap_or_else(|| "not enumerated (over cap)".into()),
    );
    Ok((doc, text))
}

#[derive(Serialize)]
pub struct BicyclicDoc {
    group: String,
    p: u32,
    g: Option<String>,
    h: Option<String>,
    unit: Option<String>,
    support: Option<usize>,
    unitary: Option<bool>,
    criterion: Option<bool>,
    all_unitary: Option<bool>,
    witness: Option<(String, String)>,
}

fn single_element(algebra: &GroupAlgebra, word: &str) -> Result<usize> {
    let elem = algebra.parse_literal(word)?;
    let support = elem.support();
    if support.len() != 1 || elem.coeff(support[0]) != 1 {
        bail!("`{word}` is not a single group element");
    }
    Ok(support[0])
}

pub fn bicyclic_doc(
    group: FiniteGroup,
    p: u32,
    g: Option<&str>,
    h: Option<&str>,
) -> Result<(BicyclicDoc, String)> {
    let name = group.name().to_string();
    let algebra = GroupAlgebra::from_group(group, p)?;
    match (g, h) {
        (Some(gw), Some(hw)) => {
            let gi = single_element(&algebra, gw)?;
            let hi = single_element(&algebra, hw)?;
            let spec = BicyclicSpec { g: gi, h: hi };
            let unit = bicyclic_unit(&algebra, spec);
            let unitary = is_unitary(&unit)?;
            let criterion = if normalizes_cyclic(algebra.group(), gi, hi) {
                true
            } else {
                lemma13_predicate(algebra.group(), p, spec)?
            };
            let doc = BicyclicDoc {
                group: name,
                p,
                g: Some(algebra.group().label(gi).to_string()),
                h: Some(algebra.group().label(hi).to_string()),
                unit: Some(unit.to_literal()),
                support: Some(unit.support().len()),
                unitary: Some(unitary),
                criterion: Some(criterion),
                all_unitary: None,
                witness: None,
            };
            let text = format!(
                "group {} | p={} | u_{{{},{}}} = {}\n  support {} | unitary {} | criterion {}",
                doc.group,
                doc.p,
                doc.g.as_ref().unwrap(),
                doc.h.as_ref().unwrap(),
                doc.unit.as_ref().unwrap(),
                doc.support.unwrap(),
                doc.unitary.unwrap(),
                doc.criterion.unwrap(),
            );
            Ok((doc, text))
        }
        _ => {
            let (all, witness) = uul_core::bicyclic::all_bicyclic_unitary(&algebra)?;
            let witness =
                witness.map(|w| {
                    (
                        algebra.group().label(w.g).to_string(),
                        algebra.group().label(w.h).to_string(),
                    )
                });
            let doc = BicyclicDoc {
                group: name,
                p,
                g: None,
                h: None,
                unit: None,
                support: None,
                unitary: None,
                criterion: None,
                all_unitary: Some(all),
                witness: witness.clone(),
            };
            let text = format!(
                "group {} | p={} | all bicyclic units unitary: {}{}",
                doc.group,
                doc.p,
                all,
                witness
                    .map(|(g, h)| format!(" | least failing pair (g, h) = ({g}, {h})"))
                    .unwrap_or_default(),
            );
            Ok((doc, text))
        }
    }
}

#[derive(Serialize)]
pub struct ScanDoc {
    predicate: String,
    passing: Vec<String>,
    failing: Vec<String>,
}

type PredicateFn = Box<dyn Fn(&FiniteGroup) -> Result<bool> + Sync>;

pub fn scan_doc(groups: &[FiniteGroup], predicate: ScanPredicate) -> Result<(ScanDoc, String)> {
    let (name, f): (&str, PredicateFn) = match predicate {
        ScanPredicate::Lemma41 => ("lemma4.1", Box::new(|g| Ok(lemma41_filter(g)?))),
        ScanPredicate::Good => ("good", Box::new(|g| Ok(is_good(g)?.0))),
        ScanPredicate::Thm11 => (
            "thm1.1",
            Box::new(|g| {
                let v = classify_theorem11(g)?;
                Ok(v.abelian || v.in_class)
            }),
        ),
        ScanPredicate::Thm12 => (
            "thm1.2",
            Box::new(|g| {
                let v = classify_theorem12(g)?;
                Ok(v.abelian || v.in_class)
            }),
        ),
    };
    let mut passing = Vec::new();
    let mut failing = Vec::new();
    for g in groups {
        if f(g)? {
            passing.push(g.name().to_string());
        } else {
            failing.push(g.name().to_string());
        }
    }
    let doc = ScanDoc {
        predicate: name.into(),
        passing,
        failing,
    };
    let text = format!(
        "predicate {}\n  passing ({}): {}\n  failing ({}): {}",
        doc.predicate,
        doc.passing.len(),
        doc.passing.join(", "),
        doc.failing.len(),
        doc.failing.join(", "),
    );
    Ok((doc, text))
}

#[derive(Serialize)]
pub struct InfoDoc {
    group: String,
    order: usize,
    census: BTreeMap<u32, usize>,
    center: usize,
    derived: usize,
    frattini: Option<usize>,
    omega: Option<usize>,
    shapes: Vec<String>,
    e_order: usize,
    h_order: usize,
    generators: Vec<String>,
}

pub fn info_doc(g: &FiniteGroup) -> Result<(InfoDoc, String)> {
    let flags = shape_predicates(g);
    let mut shapes = Vec::new();
    for (set, name) in [
        (flags.abelian, "abelian"),
        (flags.cyclic, "cyclic"),
        (flags.elementary_abelian_2, "elementary_abelian_2"),
        (flags.dihedral, "dihedral"),
        (flags.generalized_quaternion, "generalized_quaternion"),
        (flags.semidihedral, "semidihedral"),
        (flags.extraspecial, "extraspecial"),
        (flags.hamiltonian, "hamiltonian"),
    ] {
        if set {
            shapes.push(name.to_string());
        }
    }
    let (e, h) = decompose_elem_abelian_factor(g)?;
    let pgroup = g.pgroup_prime().is_some() || g.order() == 1;
    let doc = InfoDoc {
        group: g.name().to_string(),
        order: g.order(),
        census: g.order_census(),
        center: g.characteristic_subgroup(SubgroupKind::Center)?.order(),
        derived: g.characteristic_subgroup(SubgroupKind::Derived)?.order(),
        frattini: pgroup
            .then(|| g.characteristic_subgroup(SubgroupKind::Frattini).map(|s| s.order()))
            .transpose()?,
        omega: pgroup
            .then(|| g.characteristic_subgroup(SubgroupKind::Omega).map(|s| s.order()))
            .transpose()?,
        shapes,
        e_order: e.order(),
        h_order: h.order(),
        generators: g.generators().iter().map(|&x| g.label(x).to_string()).collect(),
    };
    let census = doc
        .census
        .iter()
        .map(|(o, c)| format!("{o}:{c}"))
        .collect::<Vec<_>>()
        .join(" ");
    let text = format!(
        "group {} | order {} | census {{{}}}\n  |Z| = {} | |G'| = {} | |Phi| = {} | |Omega| = {}\n  shapes: {}\n  split |E| = {}, |H| = {} | generators: {}",
        doc.group,
        doc.order,
        census,
        doc.center,
        doc.derived,
        doc.frattini.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
        doc.omega.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
        if doc.shapes.is_empty() { "none".to_string() } else { doc.shapes.join(", ") },
        doc.e_order,
        doc.h_order,
        doc.generators.join(", "),
    );
    Ok((doc, text))
}
