//! The normalized unit group V(KG) and its unitary subgroup V*(KG).
//!
//! Over GF(p) with G a p-group the normalized units are exactly the
//! augmentation-1 coefficient vectors, so V(KG) has order p^(|G|-1) and can be
//! enumerated by an odometer over the non-identity coordinates. Normality of
//! V*(KG) in V(KG) is decided through the xx*-centrality criterion; an
//! independent from-definition check (conjugate every unitary unit by every
//! unit) is provided for cross-validation at small orders.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, GroupAlgebra};
use crate::report::{Verdict, VerificationReport, Witness};

#[derive(Debug, Error)]
pub enum UnitsError {
    #[error("exhaustive sweep of {required} vectors exceeds the cap of {cap}")]
    TooLarge { required: u128, cap: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sample,
}

/// Configuration for unit sweeps; the seed makes sampled runs reproducible.
#[derive(Clone, Copy, Debug)]
pub struct UnitSweepConfig {
    pub mode: SweepMode,
    pub sample_count: u64,
    pub seed: u64,
    pub max_exhaustive: u64,
}

impl Default for UnitSweepConfig {
    fn default() -> Self {
        UnitSweepConfig {
            mode: SweepMode::Exhaustive,
            sample_count: 10_000,
            seed: 1,
            max_exhaustive: 1 << 24,
        }
    }
}

impl UnitSweepConfig {
    pub fn exhaustive() -> Self {
        UnitSweepConfig::default()
    }

    pub fn sample(sample_count: u64, seed: u64) -> Self {
        UnitSweepConfig {
            mode: SweepMode::Sample,
            sample_count,
            seed,
            ..UnitSweepConfig::default()
        }
    }
}

/// |V(KG)| = p^(|G|-1); `None` when it does not fit in a u64.
pub fn normalized_unit_count(algebra: &GroupAlgebra) -> Option<u64> {
    let p = algebra.p() as u64;
    let mut acc: u64 = 1;
    for _ in 1..algebra.dim() {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Decodes the `index`-th normalized unit: base-p digits fill the non-identity
/// coordinates and the identity coordinate restores augmentation 1.
pub fn nth_normalized_unit(algebra: &GroupAlgebra, index: u64) -> AlgebraElement {
    let p = algebra.p();
    let n = algebra.dim();
    let id = algebra.group().identity();
    let mut coeffs = vec![0u8; n];
    let mut rest = index;
    let mut digit_sum: u32 = 0;
    for (g, c) in coeffs.iter_mut().enumerate() {
        if g == id {
            continue;
        }
        let d = (rest % p as u64) as u8;
        rest /= p as u64;
        *c = d;
        digit_sum += d as u32;
    }
    let deficit = (p + 1 - digit_sum % p) % p; // 1 - digit_sum mod p
    coeffs[id] = deficit as u8;
    debug_assert_eq!(rest, 0, "index out of range");
    let u = algebra.from_coeffs(coeffs);
    debug_assert_eq!(u.augmentation(), 1);
    u
}

/// Streams every normalized unit exactly once, or `TooLarge` past the cap.
pub fn enumerate_normalized_units(
    algebra: &GroupAlgebra,
    cap: u64,
) -> Result<impl Iterator<Item = AlgebraElement> + '_, UnitsError> {
    let total = match normalized_unit_count(algebra) {
        Some(t) if t <= cap => t,
        _ => {
            return Err(UnitsError::TooLarge {
                required: count_as_u128(algebra),
                cap,
            })
        }
    };
    Ok((0..total).map(move |i| nth_normalized_unit(algebra, i)))
}

fn count_as_u128(algebra: &GroupAlgebra) -> u128 {
    let p = algebra.p() as u128;
    (1..algebra.dim()).fold(1u128, |acc, _| acc.saturating_mul(p))
}

/// A uniformly random normalized unit from the given generator.
pub fn random_normalized_unit(algebra: &GroupAlgebra, rng: &mut impl Rng) -> AlgebraElement {
    let p = algebra.p();
    let n = algebra.dim();
    let id = algebra.group().identity();
    let mut coeffs = vec![0u8; n];
    let mut digit_sum: u32 = 0;
    for (g, c) in coeffs.iter_mut().enumerate() {
        if g == id {
            continue;
        }
        *c = rng.gen_range(0..p) as u8;
        digit_sum += *c as u32;
    }
    coeffs[id] = ((p + 1 - digit_sum % p) % p) as u8;
    algebra.from_coeffs(coeffs)
}

/// A unit is unitary when its star image equals its inverse.
pub fn is_unitary(u: &AlgebraElement) -> Result<bool, AlgebraError> {
    Ok(u.star() == u.invert_normalized()?)
}

/// Enumerates V*(KG) = the unitary normalized units.
pub fn unitary_units(algebra: &GroupAlgebra, cap: u64) -> Result<Vec<AlgebraElement>, UnitsError> {
    let mut out = Vec::new();
    for u in enumerate_normalized_units(algebra, cap)? {
        if is_unitary(&u)? {
            out.push(u);
        }
    }
    Ok(out)
}

fn xxstar_central_witness(
    algebra: &GroupAlgebra,
    gens: &[usize],
    x: &AlgebraElement,
) -> Option<usize> {
    let w = x.mul(&x.star()).expect("same context");
    for &g in gens {
        let gb = algebra.basis(g);
        if w.mul(&gb).expect("same context") != gb.mul(&w).expect("same context") {
            return Some(g);
        }
    }
    None
}

fn centrality_generators(algebra: &GroupAlgebra) -> Vec<usize> {
    // Commuting with a generating set of G is centrality in KG.
    let gens = algebra.group().small_generating_set();
    if gens.is_empty() {
        vec![algebra.group().identity()]
    } else {
        gens
    }
}

/// Decides whether V*(KG) is normal in V(KG) via the criterion that every
/// xx* with x in V(KG) is central. On failure the report carries the witness
/// x, the group element its xx* misses, and the reconstructed conjugation
/// counterexample (a unitary y with x^{-1} y x not unitary).
pub fn check_vstar_normality(
    algebra: &GroupAlgebra,
    cfg: &UnitSweepConfig,
) -> Result<VerificationReport, UnitsError> {
    let start = Instant::now();
    let gens = centrality_generators(algebra);
    let (witness_unit, checked, mode, seed): (Option<AlgebraElement>, u64, &str, Option<u64>) =
        match cfg.mode {
            SweepMode::Exhaustive => {
                let total = normalized_unit_count(algebra)
                    .filter(|&t| t <= cfg.max_exhaustive)
                    .ok_or_else(|| UnitsError::TooLarge {
                        required: count_as_u128(algebra),
                        cap: cfg.max_exhaustive,
                    })?;
                let found = (0..total)
                    .into_par_iter()
                    .filter_map(|i| {
                        let x = nth_normalized_unit(algebra, i);
                        xxstar_central_witness(algebra, &gens, &x).map(|_| i)
                    })
                    .min();
                (found.map(|i| nth_normalized_unit(algebra, i)), total, "exhaustive", None)
            }
            SweepMode::Sample => {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                let mut found = None;
                let mut checked = 0;
                for _ in 0..cfg.sample_count {
                    checked += 1;
                    let x = random_normalized_unit(algebra, &mut rng);
                    if xxstar_central_witness(algebra, &gens, &x).is_some() {
                        found = Some(x);
                        break;
                    }
                }
                (found, checked, "sample", Some(cfg.seed))
            }
        };
    let group_name = algebra.group().name().to_string();
    let mut report = VerificationReport {
        claim: "vstar-normality".into(),
        group: group_name,
        p: algebra.p(),
        mode: mode.into(),
        checked_count: checked,
        verdict: Verdict::Pass,
        witness: None,
        seed,
        elapsed_ms: 0,
        details: BTreeMap::new(),
    };
    if let Some(x) = witness_unit {
        let g = xxstar_central_witness(algebra, &gens, &x).expect("witness reproduces");
        // Conjugation counterexample: y = g lies in V*, and x^{-1} y x is not
        // unitary because xx* fails to commute with y.
        let y = algebra.basis(g);
        let x_inv = x.invert_normalized()?;
        let conj = x_inv.mul(&y)?.mul(&x)?;
        let conj_unitary = is_unitary(&conj)?;
        report.verdict = Verdict::Fail;
        report.witness = Some(Witness {
            kind: "xx*-noncentral".into(),
            elements: vec![
                x.to_literal(),
                algebra.group().label(g).to_string(),
                conj.to_literal(),
            ],
            note: Some(format!(
                "x with xx* missing the group element y = {}; x^-1 y x unitary: {}",
                algebra.group().label(g),
                conj_unitary
            )),
        });
        report
            .details
            .insert("conjugate_unitary".into(), conj_unitary.to_string());
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// From-definition normality check: enumerate V*, then conjugate every
/// unitary unit by every normalized unit. Exponential; order <= 8 in practice.
pub fn vstar_normality_by_definition(
    algebra: &GroupAlgebra,
    cap: u64,
) -> Result<(bool, Option<(AlgebraElement, AlgebraElement)>), UnitsError> {
    let vstar = unitary_units(algebra, cap)?;
    let member: HashSet<Vec<u8>> = vstar.iter().map(|u| u.coeffs().to_vec()).collect();
    for x in enumerate_normalized_units(algebra, cap)? {
        let x_inv = x.invert_normalized()?;
        for y in &vstar {
            let conj = x_inv.mul(y)?.mul(&x)?;
            if !member.contains(conj.coeffs()) {
                return Ok((false, Some((x, y.clone()))));
            }
        }
    }
    Ok((true, None))
}

/// Pointwise agreement of the conjugation membership with the xx*-commutation
/// criterion, for every x in V and y in V*.
pub fn lemma21_pointwise_agreement(
    algebra: &GroupAlgebra,
    cap: u64,
) -> Result<(u64, Option<(AlgebraElement, AlgebraElement)>), UnitsError> {
    let vstar = unitary_units(algebra, cap)?;
    let member: HashSet<Vec<u8>> = vstar.iter().map(|u| u.coeffs().to_vec()).collect();
    let mut checked = 0u64;
    for x in enumerate_normalized_units(algebra, cap)? {
        let x_inv = x.invert_normalized()?;
        let w = x.mul(&x.star())?;
        for y in &vstar {
            checked += 1;
            let conj_in = member.contains(x_inv.mul(y)?.mul(&x)?.coeffs());
            let commutes = w.mul(y)? == y.mul(&w)?;
            if conj_in != commutes {
                return Ok((checked, Some((x, y.clone()))));
            }
        }
    }
    Ok((checked, None))
}
