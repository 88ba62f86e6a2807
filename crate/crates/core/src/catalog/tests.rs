use std::path::{Path, PathBuf};

use super::*;
use crate::group::{is_isomorphic, SubgroupKind};

fn repo_catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

#[test]
fn builtin_examples() {
    let q8 = builtin("quaternion", &[8]).unwrap();
    assert_eq!(q8.order(), 8);
    assert_eq!(q8.order_census().get(&2), Some(&1));

    let h245 = builtin("H245", &[]).unwrap();
    assert_eq!(h245.order(), 64);
    let phi = h245.characteristic_subgroup(SubgroupKind::Frattini).unwrap();
    let omega = h245.characteristic_subgroup(SubgroupKind::Omega).unwrap();
    assert_eq!(phi.order(), 4);
    assert!(phi.same_set(&omega));

    let iv = builtin("thm12_iv", &[]).unwrap();
    assert_eq!(iv.order(), 64);

    assert!(matches!(builtin("nope", &[]), Err(CatalogError::UnknownName(_))));
    assert!(matches!(builtin("cyclic", &[]), Err(CatalogError::BadParams { .. })));
    assert!(matches!(builtin("quaternion", &[12]), Err(CatalogError::BadParams { .. })));
}

#[test]
fn builtin_spec_parsing() {
    assert_eq!(builtin_from_spec("dihedral(8)").unwrap().order(), 8);
    assert_eq!(builtin_from_spec("P(2)").unwrap().order(), 16);
    assert_eq!(builtin_from_spec("H32").unwrap().order(), 32);
    assert_eq!(builtin_from_spec("extraspecial_D8central(2)").unwrap().order(), 32);
    assert!(builtin_from_spec("dihedral(8").is_err());
    assert!(builtin_from_spec("dihedral(x)").is_err());

    let entry = builtin_entry("quaternion(16)").unwrap();
    assert_eq!(entry.source, CatalogSource::Builtin);
    assert_eq!(entry.name, "quaternion(16)");
    assert!(entry.tags.contains(&"order16".to_string()));
}

#[test]
fn presentation_relations_h32() {
    let g = builtin("H32", &[]).unwrap();
    let x = g.element_by_label("x").unwrap();
    let y = g.element_by_label("y").unwrap();
    let u = g.element_by_label("u").unwrap();
    let x2 = g.power(x, 2);
    let y2 = g.power(y, 2);
    assert_eq!(g.power(x, 4), g.identity());
    assert_eq!(g.power(y, 4), g.identity());
    assert_eq!(g.commutator(y, x), x2);
    assert_eq!(g.power(u, 2), y2);
    assert_eq!(g.commutator(u, x), y2);
    assert_eq!(g.commutator(u, y), g.mul(x2, y2));
}

#[test]
fn presentation_relations_h245() {
    let g = builtin("H245", &[]).unwrap();
    let x = g.element_by_label("x").unwrap();
    let y = g.element_by_label("y").unwrap();
    let u = g.element_by_label("u").unwrap();
    let v = g.element_by_label("v").unwrap();
    let x2 = g.power(x, 2);
    let y2 = g.power(y, 2);
    let x2y2 = g.mul(x2, y2);
    assert_eq!(g.power(x, 4), g.identity());
    assert_eq!(g.power(y, 4), g.identity());
    assert_eq!(g.commutator(v, u), g.identity());
    assert_eq!(g.power(v, 2), x2);
    assert_eq!(g.commutator(y, x), x2);
    assert_eq!(g.commutator(v, y), x2);
    assert_eq!(g.power(u, 2), y2);
    assert_eq!(g.commutator(u, x), y2);
    assert_eq!(g.commutator(u, y), x2y2);
    assert_eq!(g.commutator(v, x), x2y2);
}

#[test]
fn presentation_relations_thm12_iv() {
    let g = builtin("thm12_iv", &[]).unwrap();
    let x = g.element_by_label("x").unwrap();
    let y = g.element_by_label("y").unwrap();
    let i = g.element_by_label("i").unwrap();
    let j = g.element_by_label("j").unwrap();
    assert_eq!(g.power(x, 4), g.identity());
    assert_eq!(g.power(y, 4), g.identity());
    assert_eq!(g.commutator(y, x), g.power(x, 2));
    // the shared central involution is x^2 y^2 = i^2
    let x2y2 = g.mul(g.power(x, 2), g.power(y, 2));
    assert_eq!(x2y2, g.power(i, 2));
    assert_eq!(g.power(j, 2), g.power(i, 2));
    assert_eq!(g.conj(i, j), g.inv(i));
    // the two factors commute elementwise
    for (a, b) in [(x, i), (x, j), (y, i), (y, j)] {
        assert_eq!(g.commutator(a, b), g.identity());
    }
}

#[test]
fn p2_is_the_modular_group_and_p1_is_quaternion() {
    let p1 = builtin("P", &[1]).unwrap();
    assert!(is_isomorphic(&p1, &builtin("quaternion", &[8]).unwrap()).is_some());
    let p2 = builtin("P", &[2]).unwrap();
    assert!(is_isomorphic(&p2, &builtin("modular16", &[]).unwrap()).is_some());
    let r1 = builtin("R", &[1]).unwrap();
    assert!(is_isomorphic(&r1, &builtin("C4sdC4", &[]).unwrap()).is_some());
}

#[test]
fn strata_counts_and_pairwise_non_isomorphism() {
    let counts = [(1usize, 1usize), (2, 1), (4, 2), (8, 5), (16, 14)];
    for (order, expected) in counts {
        let stratum = complete_stratum(order).unwrap();
        assert_eq!(stratum.len(), expected, "order {order}");
        for g in &stratum {
            assert_eq!(g.order(), order);
        }
        for i in 0..stratum.len() {
            for j in 0..i {
                assert!(
                    is_isomorphic(&stratum[i], &stratum[j]).is_none(),
                    "{} = {}",
                    stratum[i].name(),
                    stratum[j].name()
                );
            }
        }
    }
}

#[test]
fn shipped_catalog_loads_and_matches_builders() {
    for order in COMPLETE_STRATA {
        let dir = repo_catalog_dir().join(format!("order{order}"));
        let entries = load_catalog(&dir).unwrap();
        let stratum = complete_stratum(order).unwrap();
        assert_eq!(entries.len(), stratum.len(), "order {order}");
        for built in &stratum {
            let entry = entries
                .iter()
                .find(|e| e.name == built.name())
                .unwrap_or_else(|| panic!("{} missing from shipped catalog", built.name()));
            assert!(entry.tags.contains(&format!("order{order}")));
            assert!(
                is_isomorphic(&entry.group, built).is_some(),
                "shipped {} differs from builder",
                entry.name
            );
        }
    }
}

#[test]
fn group_file_parsing_and_errors() {
    let (name, degree, gens) =
        parse_group_file("# c\nname d8\ndegree 4\ngen (0 1 2 3)\ngen (1 3)\n", "mem").unwrap();
    assert_eq!(name, "d8");
    assert_eq!(degree, 4);
    assert_eq!(gens.len(), 2);

    let err = parse_group_file("name x\ndegree 4\ngen (0 9)\n", "mem").unwrap_err();
    match err {
        CatalogError::Parse { line, .. } => assert_eq!(line, 3),
        other => panic!("unexpected error {other:?}"),
    }
    assert!(parse_group_file("degree 4\ngen (0 1)\n", "mem").is_err(), "missing name");
    assert!(parse_group_file("name a\ngen (0 1)\n", "mem").is_err(), "gen before degree");
}

#[test]
fn empty_directory_loads_empty() {
    let dir = tempfile::tempdir().unwrap();
    assert!(load_catalog(dir.path()).unwrap().is_empty());
}

#[test]
fn shipped_strata_carry_the_complete_tag() {
    let entries = load_shipped_stratum(&repo_catalog_dir(), 8).unwrap();
    assert_eq!(entries.len(), 5);
    for entry in &entries {
        assert!(entry.tags.contains(&"complete-stratum".to_string()));
        assert!(entry.tags.contains(&"order8".to_string()));
    }
    assert!(matches!(
        load_shipped_stratum(&repo_catalog_dir(), 32),
        Err(CatalogError::BadParams { .. })
    ));
}

#[test]
fn duplicate_names_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a.grp"), "name twin\ndegree 2\ngen (0 1)\n").unwrap();
    std::fs::write(dir.path().join("b.grp"), "name twin\ndegree 2\ngen (0 1)\n").unwrap();
    assert!(matches!(
        load_catalog(dir.path()),
        Err(CatalogError::DuplicateName(_))
    ));
}

#[test]
fn write_and_reload_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let m16 = builtin("modular16", &[]).unwrap();
    let perms = regular_generators(&m16);
    let path = dir.path().join("m16.grp");
    write_group_file(&path, "m16", m16.order(), &perms, "round trip").unwrap();
    let entry = load_group_file(&path).unwrap();
    assert_eq!(entry.name, "m16");
    assert!(is_isomorphic(&entry.group, &m16).is_some());
}

/// Regenerates the shipped catalog files from the builders. Run explicitly:
/// `cargo test -p uul-core --lib regenerate_shipped_catalog -- --ignored`
#[test]
#[ignore]
fn regenerate_shipped_catalog() {
    for order in COMPLETE_STRATA {
        let dir = repo_catalog_dir().join(format!("order{order}"));
        std::fs::create_dir_all(&dir).unwrap();
        for g in complete_stratum(order).unwrap() {
            let perms = regular_generators(&g);
            let path = dir.join(format!("{}.grp", g.name()));
            let comment = format!(
                "builtin reference group `{}`; right-regular representation of its generators",
                g.name()
            );
            write_group_file(&path, g.name(), g.order(), &perms, &comment).unwrap();
        }
    }
}
