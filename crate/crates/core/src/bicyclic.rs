//! Bicyclic units u_{g,h} = 1 + (g-1) h gbar and their unitarity.
//!
//! Unitarity of u_{g,h} is decided twice: directly (star equals inverse) and
//! through the structural criterion — characteristic 2, <g^2> normalized by
//! h, and h^2 or (hg)^2 inside <g^2> — and the two routes are required to
//! agree on every pair.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, GroupAlgebra};
use crate::group::FiniteGroup;
use crate::report::{Verdict, VerificationReport, Witness};
use crate::units::is_unitary;

#[derive(Debug, Error)]
pub enum BicyclicError {
    #[error("h normalizes <g>; the bicyclic unit is trivial")]
    NormalizerCase,
    #[error(
        "structural criterion disagrees with direct computation at (g={g}, h={h}); \
         this falsifies the implementation"
    )]
    CrossCheckMismatch { g: String, h: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The defining pair (g, h) of a bicyclic unit, as element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BicyclicSpec {
    pub g: usize,
    pub h: usize,
}

/// u_{g,h} = 1 + (g - 1) h gbar. Equals 1 exactly when h normalizes <g>;
/// otherwise its support has cardinality 1 + 2|g|.
pub fn bicyclic_unit(algebra: &GroupAlgebra, spec: BicyclicSpec) -> AlgebraElement {
    let group = algebra.group();
    let f = algebra.field();
    let n = algebra.dim();
    let mut acc = vec![0u32; n];
    acc[group.identity()] += 1;
    // (g - 1) h gbar = sum_i (g h g^i - h g^i)
    let minus_one = f.neg(1) as u32;
    let gh = group.mul(spec.g, spec.h);
    let mut gi = group.identity();
    loop {
        acc[group.mul(gh, gi)] += 1;
        acc[group.mul(spec.h, gi)] += minus_one;
        gi = group.mul(gi, spec.g);
        if gi == group.identity() {
            break;
        }
    }
    algebra.from_coeffs(acc.into_iter().map(|v| f.reduce(v)).collect())
}

/// Whether h normalizes the cyclic subgroup <g>.
pub fn normalizes_cyclic(group: &FiniteGroup, g: usize, h: usize) -> bool {
    let c = group.generated_subgroup(&[g]).expect("index in range");
    group.normalized_by(&c, h)
}

/// Structural unitarity criterion for a nontrivial bicyclic unit: p = 2,
/// <g^2> is normalized by h, and <g^2> contains h^2 or (hg)^2.
/// `NormalizerCase` signals the trivial case, which callers short-circuit.
pub fn lemma13_predicate(
    group: &FiniteGroup,
    p: u32,
    spec: BicyclicSpec,
) -> Result<bool, BicyclicError> {
    if normalizes_cyclic(group, spec.g, spec.h) {
        return Err(BicyclicError::NormalizerCase);
    }
    if p != 2 {
        return Ok(false);
    }
    let gsq = group
        .generated_subgroup(&[group.mul(spec.g, spec.g)])
        .expect("index in range");
    if !group.normalized_by(&gsq, spec.h) {
        return Ok(false);
    }
    let h2 = group.mul(spec.h, spec.h);
    let hg = group.mul(spec.h, spec.g);
    let hg2 = group.mul(hg, hg);
    Ok(gsq.contains(h2) || gsq.contains(hg2))
}

fn predicate_with_shortcircuit(
    group: &FiniteGroup,
    p: u32,
    spec: BicyclicSpec,
) -> Result<bool, BicyclicError> {
    match lemma13_predicate(group, p, spec) {
        Ok(v) => Ok(v),
        Err(BicyclicError::NormalizerCase) => Ok(true),
        Err(e) => Err(e),
    }
}

/// Sweeps all |G|^2 pairs comparing direct unitarity of u_{g,h} with the
/// structural criterion; reports the agreement count and any disagreement.
pub fn verify_lemma13(algebra: &GroupAlgebra) -> Result<VerificationReport, BicyclicError> {
    let start = Instant::now();
    let group = algebra.group();
    let n = group.order();
    let p = algebra.p();

    let disagreement = (0..n)
        .into_par_iter()
        .map(|g| -> Result<Option<(usize, usize)>, BicyclicError> {
            for h in 0..n {
                let spec = BicyclicSpec { g, h };
                let direct = is_unitary(&bicyclic_unit(algebra, spec))?;
                let predicted = predicate_with_shortcircuit(group, p, spec)?;
                if direct != predicted {
                    return Ok(Some((g, h)));
                }
            }
            Ok(None)
        })
        .try_reduce(|| None, |a, b| Ok(min_pair(a, b)));
    let disagreement = disagreement?;

    let total = (n * n) as u64;
    let mut report = VerificationReport {
        claim: "lemma1.3".into(),
        group: group.name().to_string(),
        p,
        mode: "exhaustive".into(),
        checked_count: total,
        verdict: Verdict::Pass,
        witness: None,
        seed: None,
        elapsed_ms: 0,
        details: BTreeMap::new(),
    };
    if let Some((g, h)) = disagreement {
        report.verdict = Verdict::Fail;
        report.witness = Some(Witness {
            kind: "criterion-disagreement".into(),
            elements: vec![group.label(g).to_string(), group.label(h).to_string()],
            note: Some("direct unitarity and structural criterion disagree".into()),
        });
    } else {
        report
            .details
            .insert("agreements".into(), total.to_string());
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn min_pair(a: Option<(usize, usize)>, b: Option<(usize, usize)>) -> Option<(usize, usize)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(p), Some(q)) => Some(p.min(q)),
    }
}

/// Number of direct cross-check pairs per group in `all_bicyclic_unitary`.
pub const CROSS_CHECK_PAIRS: usize = 256;

/// Whether every bicyclic unit of KG is unitary, decided by the structural
/// criterion over all pairs with the least failing pair as witness. At least
/// `CROSS_CHECK_PAIRS` pairs (all pairs, for small groups) are re-checked by
/// direct computation; a mismatch is a hard error rather than a verdict.
pub fn all_bicyclic_unitary(
    algebra: &GroupAlgebra,
) -> Result<(bool, Option<BicyclicSpec>), BicyclicError> {
    let group = algebra.group();
    let n = group.order();
    let p = algebra.p();
    let mut witness: Option<BicyclicSpec> = None;
    for g in 0..n {
        for h in 0..n {
            let spec = BicyclicSpec { g, h };
            if !predicate_with_shortcircuit(group, p, spec)? {
                witness = Some(spec);
                break;
            }
        }
        if witness.is_some() {
            break;
        }
    }
    // Cross-check the criterion against direct computation on a sample of
    // pairs (every pair when |G|^2 is small).
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b1cc);
    let pairs: Vec<BicyclicSpec> = if n * n <= CROSS_CHECK_PAIRS {
        (0..n)
            .flat_map(|g| (0..n).map(move |h| BicyclicSpec { g, h }))
            .collect()
    } else {
        let mut v: Vec<BicyclicSpec> = (0..CROSS_CHECK_PAIRS)
            .map(|_| BicyclicSpec {
                g: rng.gen_range(0..n),
                h: rng.gen_range(0..n),
            })
            .collect();
        if let Some(w) = witness {
            v.push(w);
        }
        v
    };
    for spec in pairs {
        let direct = is_unitary(&bicyclic_unit(algebra, spec))?;
        let predicted = predicate_with_shortcircuit(group, p, spec)?;
        if direct != predicted {
            return Err(BicyclicError::CrossCheckMismatch {
                g: group.label(spec.g).to_string(),
                h: group.label(spec.h).to_string(),
            });
        }
    }
    Ok((witness.is_none(), witness))
}
