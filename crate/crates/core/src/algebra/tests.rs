use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::catalog;

fn kg(name: &str, params: &[u64], p: u32) -> GroupAlgebra {
    let g = catalog::builtin(name, params).unwrap();
    GroupAlgebra::new(Arc::new(g), p).unwrap()
}

fn random_element(algebra: &GroupAlgebra, rng: &mut impl Rng) -> AlgebraElement {
    let coeffs = (0..algebra.dim())
        .map(|_| rng.gen_range(0..algebra.p()) as u8)
        .collect();
    algebra.from_coeffs(coeffs)
}

#[test]
fn char2_squaring_kills_cross_terms() {
    let a = kg("dihedral", &[8], 2);
    let one_plus_r = a.parse_literal("1 + r").unwrap();
    let sq = one_plus_r.mul(&one_plus_r).unwrap();
    assert_eq!(sq, a.parse_literal("1 + r^2").unwrap());
}

#[test]
fn g_minus_one_annihilates_gbar() {
    let a = kg("cyclic", &[4], 2);
    let g = a.group().element_by_label("g").unwrap();
    let gm1 = a.basis(g).sub(&a.one()).unwrap();
    let gbar = a.gbar(g);
    assert!(gm1.mul(&gbar).unwrap().is_zero());
    assert!(gbar.mul(&gm1).unwrap().is_zero());
}

#[test]
fn gf3_c3_product() {
    let a = kg("cyclic", &[3], 3);
    let x = a.parse_literal("1 + g").unwrap();
    let y = a.parse_literal("1 + g + g^2").unwrap();
    let prod = x.mul(&y).unwrap();
    assert_eq!(prod, a.parse_literal("2 + 2*g + 2*g^2").unwrap());
    assert_eq!(prod.augmentation(), 0);
}

#[test]
fn star_examples() {
    let a = kg("dihedral", &[8], 2);
    let x = a.parse_literal("1 + r + s").unwrap();
    let starred = x.star();
    assert_eq!(starred, a.parse_literal("1 + r^3 + s").unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let x = random_element(&a, &mut rng);
        assert_eq!(x.star().star(), x);
    }

    // on an elementary abelian group in characteristic 2, star is the identity
    let e = kg("elementary_abelian", &[3], 2);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let x = random_element(&e, &mut rng);
        assert_eq!(x.star(), x);
    }
}

#[test]
fn star_is_an_anti_automorphism() {
    let a = kg("quaternion", &[8], 2);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let x = random_element(&a, &mut rng);
        let y = random_element(&a, &mut rng);
        let lhs = x.mul(&y).unwrap().star();
        let rhs = y.star().mul(&x.star()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn augmentation_examples() {
    let a = kg("dihedral", &[8], 2);
    let r = a.group().element_by_label("r").unwrap();
    assert_eq!(a.basis(r).augmentation(), 1);
    assert_eq!(a.gbar(r).augmentation(), 0, "|r| = 4 is 0 mod 2");

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let f3 = kg("cyclic", &[9], 3);
    for _ in 0..100 {
        let x = random_element(&f3, &mut rng);
        let y = random_element(&f3, &mut rng);
        let lhs = x.mul(&y).unwrap().augmentation() as u32;
        let rhs = (x.augmentation() as u32 * y.augmentation() as u32) % 3;
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn gbar_examples() {
    let a = kg("cyclic", &[2], 2);
    let g = a.group().element_by_label("g").unwrap();
    assert_eq!(a.gbar(g), a.parse_literal("1 + g").unwrap());

    let c4 = kg("cyclic", &[4], 2);
    let g = c4.group().element_by_label("g").unwrap();
    let gbar = c4.gbar(g);
    assert_eq!(gbar, c4.parse_literal("1 + g + g^2 + g^3").unwrap());
    assert!(gbar.mul(&gbar).unwrap().is_zero(), "gbar^2 = |g| gbar = 0 in char 2");
}

#[test]
fn gbar_even_order_factorization() {
    // gbar = (g+1) * (g^2)bar when |g| is even, over GF(2)
    for (name, params) in [("cyclic", vec![4u64]), ("cyclic", vec![8]), ("dihedral", vec![8])] {
        let a = kg(name, &params, 2);
        for g in 0..a.dim() {
            if !a.group().order_of(g).is_multiple_of(2) {
                continue;
            }
            let lhs = a.gbar(g);
            let g2bar = a.gbar(a.group().mul(g, g));
            let rhs = a.basis(g).add(&a.one()).unwrap().mul(&g2bar).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn invert_normalized_examples() {
    let a = kg("dihedral", &[8], 2);
    let r = a.group().element_by_label("r").unwrap();
    let inv = a.basis(r).invert_normalized().unwrap();
    assert_eq!(inv, a.basis(a.group().inv(r)));

    // 1 + (r-1) s rbar is its own inverse over GF(2)
    let s = a.group().element_by_label("s").unwrap();
    let n = a
        .basis(r)
        .sub(&a.one())
        .unwrap()
        .mul(&a.basis(s))
        .unwrap()
        .mul(&a.gbar(r))
        .unwrap();
    let u = a.one().add(&n).unwrap();
    let u_inv = u.invert_normalized().unwrap();
    assert!(u.mul(&u_inv).unwrap().is_one());
    assert_eq!(u_inv, u);

    let c3 = kg("cyclic", &[3], 3);
    let g = c3.group().element_by_label("g").unwrap();
    let u = c3.basis(g);
    assert_eq!(u.invert_normalized().unwrap(), c3.basis(c3.group().mul(g, g)));
}

#[test]
fn augmentation_zero_is_never_a_unit_in_the_modular_case() {
    let a = kg("cyclic", &[4], 2);
    let x = a.parse_literal("1 + g").unwrap();
    assert!(matches!(x.invert_normalized(), Err(AlgebraError::NotAUnit)));
}

#[test]
fn augmentation_ideal_is_nilpotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, params, p) in [
        ("dihedral", vec![8u64], 2u32),
        ("cyclic", vec![8], 2),
        ("heisenberg", vec![3], 3),
    ] {
        let a = kg(name, &params, p);
        for _ in 0..25 {
            let mut x = random_element(&a, &mut rng);
            // force augmentation zero
            let id = a.group().identity();
            let mut coeffs = x.coeffs().to_vec();
            let aug = x.augmentation();
            coeffs[id] = a.field().reduce(coeffs[id] as u32 + a.field().neg(aug) as u32);
            x = a.from_coeffs(coeffs);
            assert_eq!(x.augmentation(), 0);
            let mut power = x.clone();
            let mut steps = 1;
            while !power.is_zero() {
                power = power.mul(&x).unwrap();
                steps += 1;
                assert!(steps <= a.dim(), "nilpotency index exceeded |G|");
            }
        }
    }
}

#[test]
fn fallback_solve_inverts_outside_the_modular_case() {
    // GF(3) D8 is not a modular pair; invertibility goes through the solver
    let a = kg("dihedral", &[8], 3);
    let r = a.group().element_by_label("r").unwrap();
    let u = a.basis(r);
    assert_eq!(u.invert_normalized().unwrap(), a.basis(a.group().inv(r)));
    // 1 + r + r^2 + r^3 has augmentation 1 but annihilates (r - 1)... check a
    // genuinely singular element: rbar * (r-1) = 0, so rbar + something can
    // still fail; the all-ones vector over GF(3)D8 has augmentation 8 = 2 and
    // is a scalar multiple of the group sum, which is an idempotent-like
    // non-unit.
    let ghat = a.from_coeffs(vec![1; a.dim()]);
    assert!(matches!(ghat.invert_normalized(), Err(AlgebraError::NotAUnit)));
}

#[test]
fn support_examples() {
    let a = kg("dihedral", &[8], 2);
    assert!(a.zero().support().is_empty());
    let r = a.group().element_by_label("r").unwrap();
    assert_eq!(a.gbar(r).support().len(), 4);
}

#[test]
fn scalar_field_ops() {
    let f = PrimeField::new(5).unwrap();
    assert_eq!(f.neg(0), 0);
    assert_eq!(f.neg(2), 3);
    assert_eq!(f.inv(1), Some(1));
    assert_eq!(f.inv(2), Some(3));
    assert_eq!(f.inv(0), None);
    assert!(PrimeField::new(4).is_err());
    assert!(PrimeField::new(7).is_err());
}

#[test]
fn mixed_context_is_rejected() {
    let a = kg("cyclic", &[4], 2);
    let b = kg("cyclic", &[4], 2); // different Arc: different context
    let x = a.one();
    let y = b.one();
    assert!(matches!(x.add(&y), Err(AlgebraError::MixedContext)));
    let a3 = kg("cyclic", &[4], 3);
    assert!(matches!(x.mul(&a3.one()), Err(AlgebraError::MixedContext)));
}

#[test]
fn literal_round_trip_and_errors() {
    let a = kg("dihedral", &[8], 2);
    let x = a.parse_literal("1 + r + r^2*s").unwrap();
    assert_eq!(a.parse_literal(&x.to_literal()).unwrap(), x);
    assert_eq!(a.zero().to_literal(), "0");
    assert!(a.parse_literal("1 + bogus").is_err());
    assert!(a.parse_literal("").is_err());
    assert!(a.parse_literal("r^").is_err());

    // coefficients reduce mod p; minus folds into GF(2)
    let y = a.parse_literal("3*r - s").unwrap();
    assert_eq!(y, a.parse_literal("r + s").unwrap());

    let c4 = kg("cyclic", &[4], 3);
    let z = c4.parse_literal("g^-1").unwrap();
    assert_eq!(z, c4.basis(c4.group().inv(c4.group().element_by_label("g").unwrap())));
}
