//! Splitting off the largest elementary abelian direct factor.
//!
//! Every finite group is `E x H` with `E` elementary abelian of exponent at
//! most 2 and `H` without a direct factor of order 2; the construction below
//! takes `A` = the central involutions, `B` = the subgroup generated by all
//! squares, a complement `E` to `A meet B` in `A`, and a complement `H/B` to
//! `AB/B` in `G/B`. Complements are chosen greedily in ascending element-index
//! order, which makes the output deterministic (only the isomorphism types
//! are canonical).

use super::{FiniteGroup, GroupError, Subgroup, SubgroupKind};

/// Returns `(E, H)` as subgroups of `g` with `g = E x H` internally.
pub fn decompose_elem_abelian_factor(g: &FiniteGroup) -> Result<(Subgroup, Subgroup), GroupError> {
    let center = g.characteristic_subgroup(SubgroupKind::Center)?;
    // A = < a in Z(G) | a^2 = 1 >: already closed as a set.
    let a_members: Vec<usize> = center
        .members()
        .iter()
        .copied()
        .filter(|&x| g.mul(x, x) == g.identity())
        .collect();
    let a = Subgroup::from_members(g, &a_members)?;
    let b = g.characteristic_subgroup(SubgroupKind::Squares)?;
    let a_meet_b = g.intersect(&a, &b);

    // E: greedy GF(2) basis extension of A meet B inside A; E is spanned by
    // the added vectors only.
    let mut span = a_meet_b.clone();
    let mut e_basis: Vec<usize> = Vec::new();
    for &x in a.members() {
        if !span.contains(x) {
            e_basis.push(x);
            let mut seeds = span.members().to_vec();
            seeds.push(x);
            span = g.generated_subgroup(&seeds)?;
        }
    }
    let e = g.generated_subgroup(&e_basis)?;

    // H/B: complement to AB/B in G/B, again by greedy basis extension; H is
    // generated by B and the chosen coset representatives.
    let ab = g.join(&a, &b)?;
    let mut span = ab;
    let mut h = b.clone();
    for x in 0..g.order() {
        if !span.contains(x) {
            let mut seeds = span.members().to_vec();
            seeds.push(x);
            span = g.generated_subgroup(&seeds)?;
            let mut hseeds = h.members().to_vec();
            hseeds.push(x);
            h = g.generated_subgroup(&hseeds)?;
        }
    }
    debug_assert_eq!(e.order() * h.order(), g.order());
    Ok((e, h))
}

/// A finite group has a direct factor of order 2 exactly when some central
/// involution survives outside the subgroup generated by all squares.
pub fn has_order2_direct_factor(g: &FiniteGroup) -> Result<bool, GroupError> {
    let center = g.characteristic_subgroup(SubgroupKind::Center)?;
    let b = g.characteristic_subgroup(SubgroupKind::Squares)?;
    Ok(center
        .members()
        .iter()
        .any(|&x| g.mul(x, x) == g.identity() && !b.contains(x)))
}
