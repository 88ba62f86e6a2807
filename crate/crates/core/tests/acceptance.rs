//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Groups come from the shipped complete catalogs of orders 1..16 (23 groups)
//! plus the named builders of the classification statements; sweeps are
//! exhaustive wherever the criterion says so, and every randomized law is
//! seed-pinned.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uul_core::algebra::{AlgebraElement, GroupAlgebra};
use uul_core::bicyclic::{all_bicyclic_unitary, bicyclic_unit, normalizes_cyclic, verify_lemma13, BicyclicSpec};
use uul_core::catalog::{self, builtin, load_catalog};
use uul_core::classify::{
    classify_theorem11, classify_theorem12, is_good, lemma41_filter, lemma414_check,
};
use uul_core::group::{
    action_from_generators, decompose_elem_abelian_factor, has_order2_direct_factor,
    is_isomorphic, product_direct, product_semidirect,
};
use uul_core::units::{
    check_vstar_normality, enumerate_normalized_units, is_unitary, normalized_unit_count,
    nth_normalized_unit, unitary_units, vstar_normality_by_definition, UnitSweepConfig,
};
use uul_core::{FiniteGroup, SubgroupKind};

const CAP: u64 = 1 << 24;

fn report_pass(criterion: &str, start: Instant) {
    println!("{criterion}: PASS ({:.1?})", start.elapsed());
}

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

/// The 23 groups of the complete order <= 16 catalogs, loaded from the
/// shipped files.
fn shipped_small_groups() -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for order in catalog::COMPLETE_STRATA {
        let entries = catalog::load_shipped_stratum(&catalog_dir(), order).unwrap();
        for entry in &entries {
            assert!(entry.tags.contains(&"complete-stratum".to_string()));
        }
        out.extend(entries.into_iter().map(|e| e.group));
    }
    assert_eq!(out.len(), 23, "1+1+2+5+14 complete strata");
    out
}

fn kg(group: &FiniteGroup, p: u32) -> GroupAlgebra {
    GroupAlgebra::new(Arc::new(group.clone()), p).unwrap()
}

/// The exponent-9 nonabelian group of order 27: C9 x| C3 with the acting
/// generator raising to the 4th power.
fn nonabelian_27_exponent_9() -> FiniteGroup {
    let c9 = builtin("cyclic", &[9]).unwrap();
    let c3 = builtin("cyclic", &[3]).unwrap();
    let aut: Vec<usize> = (0..9).map(|i| i * 4 % 9).collect();
    let action = action_from_generators(&c9, &c3, &[(1, aut)]).unwrap();
    let mut g = product_semidirect(&c9, &c3, &action).unwrap();
    g.set_name("C9sdC3");
    assert_eq!(g.exponent(), 9);
    assert!(!g.is_abelian());
    g
}

fn c3xc3() -> FiniteGroup {
    let c3 = builtin("cyclic", &[3]).unwrap();
    let mut g = product_direct(&c3, &c3).unwrap();
    g.set_name("C3xC3");
    g
}

#[test]
fn criterion_01_thm11_equivalence_exhaustive_order16() {
    let start = Instant::now();
    for group in shipped_small_groups() {
        let algebra = kg(&group, 2);
        let sweep = check_vstar_normality(&algebra, &UnitSweepConfig::exhaustive()).unwrap();
        assert_eq!(
            sweep.checked_count,
            normalized_unit_count(&algebra).unwrap(),
            "{}: sweep must cover all of V(KG)",
            group.name()
        );
        let verdict = classify_theorem11(&group).unwrap();
        let predicted = verdict.abelian || verdict.in_class;
        assert_eq!(
            sweep.passed(),
            predicted,
            "{}: exhaustive normality disagrees with the classifier",
            group.name()
        );
    }
    report_pass("criterion 1 (thm1.1 equivalence, exhaustive, orders <= 16)", start);
}

#[test]
fn criterion_02_lemma21_corollary22_consistency_order8() {
    let start = Instant::now();
    for group in shipped_small_groups() {
        if group.order() > 8 {
            continue;
        }
        let algebra = kg(&group, 2);
        let (by_def, _) = vstar_normality_by_definition(&algebra, CAP).unwrap();
        let by_criterion = check_vstar_normality(&algebra, &UnitSweepConfig::exhaustive())
            .unwrap()
            .passed();
        assert_eq!(by_def, by_criterion, "{}", group.name());
        // pointwise form: conjugation membership = xx*-commutation, all pairs
        let (checked, disagreement) =
            uul_core::units::lemma21_pointwise_agreement(&algebra, CAP).unwrap();
        assert!(checked > 0);
        assert!(
            disagreement.is_none(),
            "{}: pointwise equivalence fails",
            group.name()
        );
    }
    report_pass("criterion 2 (lemma2.1/corollary2.2 consistency, orders <= 8)", start);
}

#[test]
fn criterion_03_lemma13_equivalence_exhaustive() {
    let start = Instant::now();
    let mut two_groups = shipped_small_groups();
    for g in catalog::named_builtins().unwrap() {
        if g.order() <= 32 {
            two_groups.push(g);
        }
    }
    assert!(two_groups.iter().any(|g| g.order() == 32));
    for group in &two_groups {
        let report = verify_lemma13(&kg(group, 2)).unwrap();
        assert!(report.passed(), "{} at p=2", group.name());
        assert_eq!(report.checked_count, (group.order() * group.order()) as u64);
    }
    let odd_groups = vec![
        builtin("cyclic", &[3]).unwrap(),
        builtin("cyclic", &[9]).unwrap(),
        c3xc3(),
        builtin("heisenberg", &[3]).unwrap(),
        nonabelian_27_exponent_9(),
    ];
    for group in &odd_groups {
        let report = verify_lemma13(&kg(group, 3)).unwrap();
        assert!(report.passed(), "{} at p=3", group.name());
        assert_eq!(report.checked_count, (group.order() * group.order()) as u64);
    }
    report_pass("criterion 3 (lemma1.3 equivalence, orders <= 32 at p=2 and the p=3 set)", start);
}

fn thm12_group_set() -> Vec<FiniteGroup> {
    let mut groups = shipped_small_groups();
    for name in ["Q8xC4", "C4sdQ8", "H32", "thm12_iv", "Q8xQ8", "H245"] {
        groups.push(builtin(name, &[]).unwrap());
    }
    groups
}

#[test]
fn criterion_04_thm12_equivalence() {
    let start = Instant::now();
    for group in thm12_group_set() {
        let algebra = kg(&group, 2);
        let (all_unitary, _) = all_bicyclic_unitary(&algebra).unwrap();
        let verdict = classify_theorem12(&group).unwrap();
        let predicted = verdict.abelian || verdict.in_class;
        assert_eq!(all_unitary, predicted, "{}", group.name());
    }
    report_pass("criterion 4 (thm1.2 equivalence over the catalog and named groups)", start);
}

#[test]
fn criterion_05_lemma14_equivalence_and_pr_families() {
    let start = Instant::now();
    for group in thm12_group_set() {
        let (good, _) = is_good(&group).unwrap();
        let verdict = classify_theorem12(&group).unwrap();
        let predicted = verdict.abelian || verdict.in_class;
        assert_eq!(good, predicted, "{}", group.name());
    }
    for k in [1usize, 2] {
        let p = builtin("P", &[k as u64]).unwrap();
        let r = builtin("R", &[k as u64]).unwrap();
        let expected = k <= 1;
        assert_eq!(is_good(&p).unwrap().0, expected, "P({k})");
        assert_eq!(is_good(&r).unwrap().0, expected, "R({k})");
    }
    report_pass("criterion 5 (lemma1.4 equivalence; P/R good exactly for k <= 1)", start);
}

#[test]
fn criterion_06_lemma41_filter_and_scan() {
    let start = Instant::now();
    for name in [
        "C4xC4", "C4sdC4", "C4sdQ8", "Q8xC4", "Q8xQ8", "thm12_iv", "H32", "H245",
    ] {
        let g = builtin(name, &[]).unwrap();
        assert!(lemma41_filter(&g).unwrap(), "{name} must pass the filter");
    }
    let mut passing: Vec<String> = load_catalog(&catalog_dir().join("order16"))
        .unwrap()
        .iter()
        .filter(|e| lemma41_filter(&e.group).unwrap())
        .map(|e| e.name.clone())
        .collect();
    passing.sort();
    assert_eq!(passing, vec!["c4_sd_c4".to_string(), "c4xc4".to_string()]);
    report_pass("criterion 6 (lemma4.1 forward checks and complete order-16 scan)", start);
}

#[test]
fn criterion_07_lemma414_bound() {
    let start = Instant::now();
    let mut groups = thm12_group_set();
    groups.extend(catalog::named_builtins().unwrap());
    for group in &groups {
        let (applicable, holds, n) = lemma414_check(group).unwrap();
        if applicable {
            assert!(holds, "{}: bound violated at n={n}", group.name());
        }
    }
    let q8 = builtin("quaternion", &[8]).unwrap();
    let (applicable, holds, n) = lemma414_check(&q8).unwrap();
    assert!(applicable && holds && n == 1);
    assert_eq!(q8.order(), 1 << (n * (n + 5) / 2), "Q8 attains the bound");
    let q8xq8 = builtin("Q8xQ8", &[]).unwrap();
    let (applicable, holds, n) = lemma414_check(&q8xq8).unwrap();
    assert!(applicable && holds && n == 2);
    assert_eq!(
        (q8xq8.order() as u64, 1u64 << (n * (n + 5) / 2)),
        (64, 128),
        "2^6 <= 2^7 at n = 2"
    );
    report_pass("criterion 7 (lemma4.14 bound over the catalog)", start);
}

#[test]
fn criterion_08_lemma23_decomposition() {
    let start = Instant::now();
    let mut groups = thm12_group_set();
    groups.extend(catalog::named_builtins().unwrap());
    groups.push(builtin("heisenberg", &[3]).unwrap());
    groups.push(nonabelian_27_exponent_9());
    for group in &groups {
        let (e, h) = decompose_elem_abelian_factor(group).unwrap();
        let (e_group, _) = group.subgroup_as_group(&e).unwrap();
        let (h_group, _) = group.subgroup_as_group(&h).unwrap();
        assert!(
            (0..e_group.order()).all(|x| e_group.mul(x, x) == e_group.identity()),
            "{}: E not elementary abelian",
            group.name()
        );
        // no order-2 direct factor: every central involution of H must lie in
        // Phi(H) * [H,H]; a central involution outside always splits off.
        let squares = h_group.characteristic_subgroup(SubgroupKind::Squares).unwrap();
        let derived = h_group.characteristic_subgroup(SubgroupKind::Derived).unwrap();
        let phi_derived = h_group.join(&squares, &derived).unwrap();
        let center = h_group.characteristic_subgroup(SubgroupKind::Center).unwrap();
        for &z in center.members() {
            if z != h_group.identity() && h_group.mul(z, z) == h_group.identity() {
                assert!(
                    phi_derived.contains(z),
                    "{}: central involution splits off H",
                    group.name()
                );
            }
        }
        assert!(!has_order2_direct_factor(&h_group).unwrap(), "{}", group.name());
        let prod = product_direct(&e_group, &h_group).unwrap();
        assert!(
            is_isomorphic(&prod, group).is_some(),
            "{}: E x H not isomorphic to G",
            group.name()
        );
        let (e2, h2) = decompose_elem_abelian_factor(&prod).unwrap();
        let (h2_group, _) = prod.subgroup_as_group(&h2).unwrap();
        assert_eq!(e2.order(), e.order(), "{}", group.name());
        assert!(
            is_isomorphic(&h2_group, &h_group).is_some(),
            "{}: re-decomposition changes the type of H",
            group.name()
        );
    }
    report_pass("criterion 8 (lemma2.3 decomposition over the catalog)", start);
}

// ---------------------------------------------------------------------------
// Criterion 9: randomized, seed-pinned law suite (>= 10^4 cases per law)
// ---------------------------------------------------------------------------

const LAW_CASES: usize = 10_000;

fn law_pool() -> Vec<GroupAlgebra> {
    let mut pool = Vec::new();
    for (name, params, p) in [
        ("dihedral", vec![8u64], 2u32),
        ("quaternion", vec![8], 2),
        ("modular16", vec![], 2),
        ("semidihedral", vec![16], 2),
        ("C4sdC4", vec![], 2),
        ("elementary_abelian", vec![3], 2),
        ("cyclic", vec![9], 3),
        ("heisenberg", vec![3], 3),
    ] {
        pool.push(kg(&builtin(name, &params).unwrap(), p));
    }
    pool
}

fn random_element(algebra: &GroupAlgebra, rng: &mut impl Rng) -> AlgebraElement {
    let coeffs = (0..algebra.dim())
        .map(|_| rng.gen_range(0..algebra.p()) as u8)
        .collect();
    algebra.from_coeffs(coeffs)
}

#[test]
fn criterion_09_algebra_law_suite() {
    let start = Instant::now();
    let pool = law_pool();
    let pick = |rng: &mut ChaCha8Rng, pool: &[GroupAlgebra]| -> GroupAlgebra {
        pool[rng.gen_range(0..pool.len())].clone()
    };

    // star anti-automorphism: (xy)* = y* x*
    let mut rng = ChaCha8Rng::seed_from_u64(90_01);
    for _ in 0..LAW_CASES {
        let a = pick(&mut rng, &pool);
        let x = random_element(&a, &mut rng);
        let y = random_element(&a, &mut rng);
        assert_eq!(
            x.mul(&y).unwrap().star(),
            y.star().mul(&x.star()).unwrap()
        );
    }

    // star involution: x** = x
    let mut rng = ChaCha8Rng::seed_from_u64(90_02);
    for _ in 0..LAW_CASES {
        let a = pick(&mut rng, &pool);
        let x = random_element(&a, &mut rng);
        assert_eq!(x.star().star(), x);
    }

    // augmentation is a ring homomorphism
    let mut rng = ChaCha8Rng::seed_from_u64(90_03);
    for _ in 0..LAW_CASES {
        let a = pick(&mut rng, &pool);
        let x = random_element(&a, &mut rng);
        let y = random_element(&a, &mut rng);
        let p = a.p();
        assert_eq!(
            x.mul(&y).unwrap().augmentation() as u32,
            (x.augmentation() as u32 * y.augmentation() as u32) % p
        );
        assert_eq!(
            x.add(&y).unwrap().augmentation() as u32,
            (x.augmentation() as u32 + y.augmentation() as u32) % p
        );
    }

    // invert_normalized really inverts (nonzero-augmentation elements)
    let mut rng = ChaCha8Rng::seed_from_u64(90_04);
    let mut inverted = 0usize;
    while inverted < LAW_CASES {
        let a = pick(&mut rng, &pool);
        let x = random_element(&a, &mut rng);
        if x.augmentation() == 0 {
            continue;
        }
        let inv = x.invert_normalized().unwrap();
        assert!(x.mul(&inv).unwrap().is_one());
        assert!(inv.mul(&x).unwrap().is_one());
        inverted += 1;
    }

    // |V(KG)| = p^(|G|-1) for |G| <= 16: full count, sampled inverses
    let mut rng = ChaCha8Rng::seed_from_u64(90_05);
    for group in shipped_small_groups() {
        let a = kg(&group, 2);
        let expected = normalized_unit_count(&a).unwrap();
        assert_eq!(expected, 1 << (group.order() - 1));
        let mut count = 0u64;
        for u in enumerate_normalized_units(&a, CAP).unwrap() {
            assert_eq!(u.augmentation(), 1);
            count += 1;
        }
        assert_eq!(count, expected, "{}", group.name());
        for _ in 0..512 {
            let i = rng.gen_range(0..expected);
            let u = nth_normalized_unit(&a, i);
            let inv = u.invert_normalized().unwrap();
            assert!(u.mul(&inv).unwrap().is_one(), "{}", group.name());
        }
    }

    // bicyclic units square to 1 in characteristic 2
    let mut rng = ChaCha8Rng::seed_from_u64(90_06);
    for _ in 0..LAW_CASES {
        let a = loop {
            let a = pick(&mut rng, &pool);
            if a.p() == 2 {
                break a;
            }
        };
        let n = a.dim();
        let spec = BicyclicSpec {
            g: rng.gen_range(0..n),
            h: rng.gen_range(0..n),
        };
        let u = bicyclic_unit(&a, spec);
        assert!(u.mul(&u).unwrap().is_one());
    }

    // support cardinality: 1, or 1 + 2|g| when h does not normalize <g>
    let mut rng = ChaCha8Rng::seed_from_u64(90_07);
    for _ in 0..LAW_CASES {
        let a = pick(&mut rng, &pool);
        let n = a.dim();
        let (g, h) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let u = bicyclic_unit(&a, BicyclicSpec { g, h });
        let expected = if normalizes_cyclic(a.group(), g, h) {
            1
        } else {
            1 + 2 * a.group().order_of(g) as usize
        };
        assert_eq!(u.support().len(), expected);
    }

    // u_{g,h} = u_{g,hg}
    let mut rng = ChaCha8Rng::seed_from_u64(90_08);
    for _ in 0..LAW_CASES {
        let a = pick(&mut rng, &pool);
        let n = a.dim();
        let (g, h) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let hg = a.group().mul(h, g);
        assert_eq!(
            bicyclic_unit(&a, BicyclicSpec { g, h }),
            bicyclic_unit(&a, BicyclicSpec { g, h: hg })
        );
    }

    // (g - 1) gbar = gbar (g - 1) = 0
    let mut rng = ChaCha8Rng::seed_from_u64(90_09);
    for _ in 0..LAW_CASES {
        let a = pick(&mut rng, &pool);
        let g = rng.gen_range(0..a.dim());
        let gm1 = a.basis(g).sub(&a.one()).unwrap();
        let gbar = a.gbar(g);
        assert!(gm1.mul(&gbar).unwrap().is_zero());
        assert!(gbar.mul(&gm1).unwrap().is_zero());
    }

    report_pass("criterion 9 (seed-pinned algebra law suite, >= 10^4 cases per law)", start);
}

#[test]
fn criterion_10_gf3_heisenberg_negative_sampling() {
    let start = Instant::now();
    let h27 = builtin("heisenberg", &[3]).unwrap();
    let algebra = kg(&h27, 3);
    let report = check_vstar_normality(&algebra, &UnitSweepConfig::sample(10_000, 1)).unwrap();
    assert!(!report.passed(), "sampling must expose a witness at seed 1");
    assert_eq!(report.seed, Some(1));
    let witness = report.witness.expect("witness is attached");
    // verify the witness directly: x x* does not commute with the named
    // group element, and the reconstructed conjugate is not unitary
    let x = algebra.parse_literal(&witness.elements[0]).unwrap();
    let y_idx = algebra
        .group()
        .element_by_label(&witness.elements[1])
        .expect("witness names a group element");
    let y = algebra.basis(y_idx);
    let w = x.mul(&x.star()).unwrap();
    assert_ne!(
        w.mul(&y).unwrap(),
        y.mul(&w).unwrap(),
        "witness xx* must fail to commute"
    );
    let conj = x
        .invert_normalized()
        .unwrap()
        .mul(&y)
        .unwrap()
        .mul(&x)
        .unwrap();
    assert!(!is_unitary(&conj).unwrap(), "conjugate of y by x leaves V*");
    // determinism: the same seed reproduces the same witness
    let again = check_vstar_normality(&algebra, &UnitSweepConfig::sample(10_000, 1)).unwrap();
    assert_eq!(again.witness.unwrap(), witness);
    report_pass("criterion 10 (GF(3) heisenberg negative sampling, seed 1)", start);
}

// ---------------------------------------------------------------------------
// Supporting oracles used by the criteria above
// ---------------------------------------------------------------------------

/// V* is a subgroup: closed under inverse everywhere we can enumerate, and
/// under products (fully at order <= 8, sampled at order 16).
#[test]
fn vstar_subgroup_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for group in shipped_small_groups() {
        let algebra = kg(&group, 2);
        let vstar = unitary_units(&algebra, CAP).unwrap();
        let member: HashSet<Vec<u8>> = vstar.iter().map(|u| u.coeffs().to_vec()).collect();
        for u in &vstar {
            assert!(member.contains(u.invert_normalized().unwrap().coeffs()));
        }
        if group.order() <= 8 {
            for u in &vstar {
                for v in &vstar {
                    assert!(member.contains(u.mul(v).unwrap().coeffs()));
                }
            }
        } else {
            for _ in 0..20_000 {
                let u = &vstar[rng.gen_range(0..vstar.len())];
                let v = &vstar[rng.gen_range(0..vstar.len())];
                assert!(member.contains(u.mul(v).unwrap().coeffs()));
            }
        }
    }
}

/// Good two-generator subgroups match the structural list: abelian, dihedral,
/// generalized quaternion, or <x> x| <y> with |x| >= |y| = 4 and x^y = x^-1.
/// Each distinct subgroup is checked once.
#[test]
fn corollary_46_oracle() {
    let groups = thm12_group_set();
    for group in &groups {
        if !group.is_p_group(2) {
            continue;
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for g in 0..group.order() {
            for h in 0..group.order() {
                let pair = group.generated_subgroup(&[g, h]).unwrap();
                if !seen.insert(pair.members().to_vec()) {
                    continue;
                }
                let (sub, _) = group.subgroup_as_group(&pair).unwrap();
                if !is_good(&sub).unwrap().0 {
                    continue;
                }
                let flags = uul_core::shape_predicates(&sub);
                let structural = flags.abelian
                    || flags.dihedral
                    || flags.generalized_quaternion
                    || has_inverted_semidirect_form(&sub);
                assert!(structural, "{}: <{g},{h}> is good but unrecognized", group.name());
            }
        }
    }
}

fn has_inverted_semidirect_form(s: &FiniteGroup) -> bool {
    for x in 0..s.order() {
        if s.order_of(x) < 4 {
            continue;
        }
        let cx = s.generated_subgroup(&[x]).unwrap();
        for y in 0..s.order() {
            if s.order_of(y) != 4 || s.order_of(x) < 4 || cx.contains(y) {
                continue;
            }
            let cy = s.generated_subgroup(&[y]).unwrap();
            let intersection_trivial = cx
                .members()
                .iter()
                .all(|&m| m == s.identity() || !cy.contains(m));
            if !intersection_trivial || s.order_of(x) < s.order_of(y) {
                continue;
            }
            if cx.order() * cy.order() == s.order()
                && s.conj(x, y) == s.inv(x)
                && s.is_normal(&cx)
            {
                return true;
            }
        }
    }
    false
}

/// The two classes genuinely differ: on Q16 and C4 x| C4 every bicyclic unit
/// is unitary (exhaustively confirmed) while V* is not normal in V (again
/// exhaustively), and the classifiers land on the same sides.
#[test]
fn classification_boundary_is_real() {
    for name in ["q16", "c4_sd_c4"] {
        let group = shipped_small_groups()
            .into_iter()
            .find(|g| g.name() == name)
            .unwrap();
        let algebra = kg(&group, 2);

        let thm12_verdict = classify_theorem12(&group).unwrap();
        assert!(thm12_verdict.in_class, "{name} lies in the bicyclic class");
        let (all_unitary, _) = all_bicyclic_unitary(&algebra).unwrap();
        assert!(all_unitary);
        // direct route over every pair as well
        assert!(verify_lemma13(&algebra).unwrap().passed());

        let thm11_verdict = classify_theorem11(&group).unwrap();
        assert!(!thm11_verdict.in_class, "{name} lies outside the normality class");
        let sweep = check_vstar_normality(&algebra, &UnitSweepConfig::exhaustive()).unwrap();
        assert!(!sweep.passed(), "{name}: some xx* is noncentral");
    }
}

/// Good groups of exponent 4 have elementary abelian central Frattini
/// subgroups.
#[test]
fn lemma_48_oracle() {
    for group in thm12_group_set() {
        if !group.is_p_group(2) || group.exponent() != 4 {
            continue;
        }
        if !is_good(&group).unwrap().0 {
            continue;
        }
        let phi = group.characteristic_subgroup(SubgroupKind::Frattini).unwrap();
        let center = group.characteristic_subgroup(SubgroupKind::Center).unwrap();
        for &m in phi.members() {
            assert_eq!(group.mul(m, m), group.identity(), "{}", group.name());
            assert!(center.contains(m), "{}", group.name());
        }
    }
}
