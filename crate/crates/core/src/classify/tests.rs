use super::*;
use crate::catalog::{builtin, complete_stratum};

#[test]
fn good_examples() {
    let d16 = builtin("dihedral", &[16]).unwrap();
    assert!(is_good(&d16).unwrap().0);

    let q16 = builtin("quaternion", &[16]).unwrap();
    assert!(is_good(&q16).unwrap().0);

    let sd16 = builtin("semidihedral", &[16]).unwrap();
    let (good, witness) = is_good(&sd16).unwrap();
    assert!(!good);
    assert!(witness.is_some());

    let h27 = builtin("heisenberg", &[3]).unwrap();
    assert!(matches!(is_good(&h27), Err(ClassifyError::Not2Group(_))));
}

#[test]
fn order16_stratum_has_exactly_three_bad_groups() {
    let bad: Vec<String> = complete_stratum(16)
        .unwrap()
        .iter()
        .filter(|g| !is_good(g).unwrap().0)
        .map(|g| g.name().to_string())
        .collect();
    assert_eq!(bad, vec!["sd16", "m16", "c2c2_sd_c4"]);
}

#[test]
fn thm11_examples() {
    let d8 = builtin("dihedral", &[8]).unwrap();
    let v = classify_theorem11(&d8).unwrap();
    assert!(v.in_class);
    assert_eq!(v.conditions, vec![Condition::Thm11I, Condition::Thm11II]);

    let q8 = builtin("quaternion", &[8]).unwrap();
    let v = classify_theorem11(&q8).unwrap();
    assert!(v.in_class);
    assert_eq!(v.conditions, vec![Condition::Thm11II]);

    let c4sdc4 = builtin("C4sdC4", &[]).unwrap();
    let v = classify_theorem11(&c4sdc4).unwrap();
    assert!(!v.in_class);

    let c16 = builtin("cyclic", &[16]).unwrap();
    let v = classify_theorem11(&c16).unwrap();
    assert!(v.in_class && v.abelian);
}

#[test]
fn thm12_examples() {
    let c4sdc4 = builtin("C4sdC4", &[]).unwrap();
    let v = classify_theorem12(&c4sdc4).unwrap();
    assert!(v.in_class);
    assert!(v.conditions.contains(&Condition::Thm12I));

    let q8xq8 = builtin("Q8xQ8", &[]).unwrap();
    let v = classify_theorem12(&q8xq8).unwrap();
    assert!(v.in_class);
    assert!(v.conditions.contains(&Condition::Thm12III));

    let m16 = builtin("modular16", &[]).unwrap();
    let v = classify_theorem12(&m16).unwrap();
    assert!(!v.in_class);

    let h32 = builtin("H32", &[]).unwrap();
    let v = classify_theorem12(&h32).unwrap();
    assert!(v.in_class);
    assert!(v.conditions.contains(&Condition::Thm12V));

    let h245 = builtin("H245", &[]).unwrap();
    let v = classify_theorem12(&h245).unwrap();
    assert!(v.conditions.contains(&Condition::Thm12V));

    let iv = builtin("thm12_iv", &[]).unwrap();
    let v = classify_theorem12(&iv).unwrap();
    assert!(v.conditions.contains(&Condition::Thm12IV));

    let q8xc4 = builtin("Q8xC4", &[]).unwrap();
    let v = classify_theorem12(&q8xc4).unwrap();
    assert!(v.conditions.contains(&Condition::Thm12III));
}

#[test]
fn split_is_reported() {
    let c2 = builtin("cyclic", &[2]).unwrap();
    let q8 = builtin("quaternion", &[8]).unwrap();
    let g = crate::group::product_direct(&c2, &q8).unwrap();
    let v = classify_theorem11(&g).unwrap();
    assert_eq!((v.e_order, v.h_order), (2, 8));
    assert!(v.in_class);
}

#[test]
fn lemma41_examples() {
    for g in [
        builtin("C4xC4", &[]).unwrap(),
        builtin("H245", &[]).unwrap(),
        builtin("C4sdQ8", &[]).unwrap(),
    ] {
        assert!(lemma41_filter(&g).unwrap(), "{}", g.name());
    }
    let d8 = builtin("dihedral", &[8]).unwrap();
    assert!(!lemma41_filter(&d8).unwrap());
}

#[test]
fn lemma414_examples() {
    let q8 = builtin("quaternion", &[8]).unwrap();
    let (applicable, holds, n) = lemma414_check(&q8).unwrap();
    assert!(applicable && holds);
    assert_eq!(n, 1);
    assert_eq!(q8.order() as u64, 1 << (n * (n + 5) / 2), "equality at n = 1");

    let q8xq8 = builtin("Q8xQ8", &[]).unwrap();
    let (applicable, holds, n) = lemma414_check(&q8xq8).unwrap();
    assert!(applicable && holds);
    assert_eq!(n, 2);

    let klein = builtin("elementary_abelian", &[2]).unwrap();
    let (applicable, holds, n) = lemma414_check(&klein).unwrap();
    assert!(applicable && holds);
    assert_eq!(n, 2);

    // D16 has Phi = <r^2> cyclic of order 4, not inside Omega? Phi <= Omega
    // holds (Omega = D16), but Omega is not central: not applicable.
    let d16 = builtin("dihedral", &[16]).unwrap();
    let (applicable, _, _) = lemma414_check(&d16).unwrap();
    assert!(!applicable);
}

#[test]
fn normal_algebra_examples() {
    let d8 = crate::algebra::GroupAlgebra::from_group(builtin("dihedral", &[8]).unwrap(), 2).unwrap();
    let report = is_normal_group_algebra(&d8, &UnitSweepConfig::exhaustive()).unwrap();
    assert!(report.passed());
    assert_eq!(report.checked_count, 256);

    let sd16 =
        crate::algebra::GroupAlgebra::from_group(builtin("semidihedral", &[16]).unwrap(), 2).unwrap();
    let report = is_normal_group_algebra(&sd16, &UnitSweepConfig::exhaustive()).unwrap();
    assert!(!report.passed());
    assert!(report.witness.is_some());

    let e8 =
        crate::algebra::GroupAlgebra::from_group(builtin("elementary_abelian", &[3]).unwrap(), 2)
            .unwrap();
    let report = is_normal_group_algebra(&e8, &UnitSweepConfig::exhaustive()).unwrap();
    assert!(report.passed());

    // predicted side agrees on these
    assert!(normal_algebra_predicted(&builtin("dihedral", &[8]).unwrap(), 2).unwrap());
    assert!(!normal_algebra_predicted(&builtin("semidihedral", &[16]).unwrap(), 2).unwrap());
    let q8 = builtin("quaternion", &[8]).unwrap();
    assert!(normal_algebra_predicted(&q8, 3).unwrap(), "hamiltonian at any p");
    // and the hamiltonian case holds under the exhaustive sweep as well
    let q8_gf3 = crate::algebra::GroupAlgebra::from_group(q8, 3).unwrap();
    let report = is_normal_group_algebra(&q8_gf3, &UnitSweepConfig::exhaustive()).unwrap();
    assert!(report.passed());
    assert_eq!(report.checked_count, 6561);
}
