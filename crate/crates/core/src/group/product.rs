//! Direct, semidirect and central products of table groups.

use std::collections::VecDeque;

use super::{FiniteGroup, GroupError, Subgroup};

/// A homomorphism from an acting group into `Aut(N)`, one automorphism (as an
/// index permutation of `N`) per element of the acting group.
#[derive(Clone, Debug)]
pub struct Action {
    pub auts: Vec<Vec<usize>>,
}

fn pair_label(l1: &str, l2: &str) -> String {
    match (l1, l2) {
        ("1", "1") => "1".to_string(),
        (a, "1") => a.to_string(),
        ("1", b) => b.to_string(),
        (a, b) => format!("{a}*{b}"),
    }
}

pub fn product_direct(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let idx = |a: usize, b: usize| a * n2 + b;
    let mut table = vec![vec![0usize; n]; n];
    for a1 in 0..n1 {
        for b1 in 0..n2 {
            for a2 in 0..n1 {
                for b2 in 0..n2 {
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g1.mul(a1, a2), g2.mul(b1, b2));
                }
            }
        }
    }
    let labels = (0..n1)
        .flat_map(|a| (0..n2).map(move |b| (a, b)))
        .map(|(a, b)| pair_label(g1.label(a), g2.label(b)))
        .collect();
    let name = format!("{}x{}", g1.name(), g2.name());
    FiniteGroup::from_mul_table(&name, table, Some(labels))
}

fn validate_action(normal: &FiniteGroup, acting: &FiniteGroup, action: &Action) -> Result<(), GroupError> {
    let n1 = normal.order();
    if action.auts.len() != acting.order() {
        return Err(GroupError::BadAction {
            reason: "one automorphism per acting element is required".into(),
        });
    }
    for (b, aut) in action.auts.iter().enumerate() {
        if aut.len() != n1 {
            return Err(GroupError::BadAction {
                reason: format!("map for element {b} has wrong length"),
            });
        }
        let mut seen = vec![false; n1];
        for &im in aut {
            if im >= n1 || seen[im] {
                return Err(GroupError::BadAction {
                    reason: format!("map for element {b} is not a bijection"),
                });
            }
            seen[im] = true;
        }
        for x in 0..n1 {
            for y in 0..n1 {
                if aut[normal.mul(x, y)] != normal.mul(aut[x], aut[y]) {
                    return Err(GroupError::BadAction {
                        reason: format!("map for element {b} is not an automorphism"),
                    });
                }
            }
        }
    }
    let id = &action.auts[acting.identity()];
    if (0..n1).any(|x| id[x] != x) {
        return Err(GroupError::BadAction {
            reason: "identity must act trivially".into(),
        });
    }
    for b1 in 0..acting.order() {
        for b2 in 0..acting.order() {
            let prod = acting.mul(b1, b2);
            for x in 0..n1 {
                if action.auts[prod][x] != action.auts[b1][action.auts[b2][x]] {
                    return Err(GroupError::BadAction {
                        reason: format!("action is not multiplicative at ({b1},{b2})"),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Semidirect product `normal x| acting`; element `(a, b)` has index
/// `a * |acting| + b` and `(a1,b1)(a2,b2) = (a1 * phi_{b1}(a2), b1 b2)`.
pub fn product_semidirect(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &Action,
) -> Result<FiniteGroup, GroupError> {
    validate_action(normal, acting, action)?;
    let (n1, n2) = (normal.order(), acting.order());
    let n = n1 * n2;
    let idx = |a: usize, b: usize| a * n2 + b;
    let mut table = vec![vec![0usize; n]; n];
    for a1 in 0..n1 {
        for b1 in 0..n2 {
            for a2 in 0..n1 {
                for b2 in 0..n2 {
                    let a = normal.mul(a1, action.auts[b1][a2]);
                    table[idx(a1, b1)][idx(a2, b2)] = idx(a, acting.mul(b1, b2));
                }
            }
        }
    }
    let labels = (0..n1)
        .flat_map(|a| (0..n2).map(move |b| (a, b)))
        .map(|(a, b)| pair_label(normal.label(a), acting.label(b)))
        .collect();
    let name = format!("{}:{}", normal.name(), acting.name());
    FiniteGroup::from_mul_table(&name, table, Some(labels))
}

/// Extends automorphisms given on a generating set of the acting group to the
/// whole group by breadth-first word decomposition, then validates the result.
pub fn action_from_generators(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    gens: &[(usize, Vec<usize>)],
) -> Result<Action, GroupError> {
    let n1 = normal.order();
    let mut auts: Vec<Option<Vec<usize>>> = vec![None; acting.order()];
    auts[acting.identity()] = Some((0..n1).collect());
    let mut queue = VecDeque::from([acting.identity()]);
    while let Some(b) = queue.pop_front() {
        for (g, aut_g) in gens {
            let next = acting.mul(b, *g);
            if auts[next].is_none() {
                let aut_b = auts[b].as_ref().unwrap();
                // phi_{b g}(x) = phi_b(phi_g(x))
                let composed = (0..n1).map(|x| aut_b[aut_g[x]]).collect();
                auts[next] = Some(composed);
                queue.push_back(next);
            }
        }
    }
    if auts.iter().any(Option::is_none) {
        return Err(GroupError::BadAction {
            reason: "generators do not generate the acting group".into(),
        });
    }
    let action = Action {
        auts: auts.into_iter().map(Option::unwrap).collect(),
    };
    validate_action(normal, acting, &action)?;
    Ok(action)
}

/// Central product: quotient of the direct product identifying a central
/// subgroup of `g1` with an isomorphic central subgroup of `g2`. The
/// identification is given on generators as pairs `(z1, z2)`.
pub fn product_central(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    identify: &[(usize, usize)],
) -> Result<FiniteGroup, GroupError> {
    let z1 = g1.generated_subgroup(&identify.iter().map(|&(a, _)| a).collect::<Vec<_>>())?;
    let z2 = g2.generated_subgroup(&identify.iter().map(|&(_, b)| b).collect::<Vec<_>>())?;
    for &m in z1.members() {
        if g1.centralizer_size(m) != g1.order() {
            return Err(GroupError::NotCentral { index: m });
        }
    }
    for &m in z2.members() {
        if g2.centralizer_size(m) != g2.order() {
            return Err(GroupError::NotCentral { index: m });
        }
    }
    if z1.order() != z2.order() {
        return Err(GroupError::MismatchedIdentification {
            reason: format!(
                "identified subgroups have orders {} and {}",
                z1.order(),
                z2.order()
            ),
        });
    }
    // Close the generator pairing into a full map theta: Z1 -> Z2.
    let mut theta: Vec<Option<usize>> = vec![None; g1.order()];
    theta[g1.identity()] = Some(g2.identity());
    let mut queue = VecDeque::from([g1.identity()]);
    while let Some(x) = queue.pop_front() {
        for &(a, b) in identify {
            let nx = g1.mul(x, a);
            let img = g2.mul(theta[x].unwrap(), b);
            match theta[nx] {
                None => {
                    theta[nx] = Some(img);
                    queue.push_back(nx);
                }
                Some(prev) if prev != img => {
                    return Err(GroupError::MismatchedIdentification {
                        reason: "generator pairing does not define a map".into(),
                    });
                }
                _ => {}
            }
        }
    }
    let mut image_seen = vec![false; g2.order()];
    for &m in z1.members() {
        let img = theta[m].ok_or_else(|| GroupError::MismatchedIdentification {
            reason: "pairing does not cover the identified subgroup".into(),
        })?;
        if !z2.contains(img) || image_seen[img] {
            return Err(GroupError::MismatchedIdentification {
                reason: "pairing is not a bijection onto the target subgroup".into(),
            });
        }
        image_seen[img] = true;
    }
    for &a in z1.members() {
        for &b in z1.members() {
            let lhs = theta[g1.mul(a, b)].unwrap();
            let rhs = g2.mul(theta[a].unwrap(), theta[b].unwrap());
            if lhs != rhs {
                return Err(GroupError::MismatchedIdentification {
                    reason: "pairing is not multiplicative".into(),
                });
            }
        }
    }
    let direct = product_direct(g1, g2)?;
    let n2 = g2.order();
    // N = { (z, theta(z)^{-1}) : z in Z1 } is central in the direct product.
    let members: Vec<usize> = z1
        .members()
        .iter()
        .map(|&z| z * n2 + g2.inv(theta[z].unwrap()))
        .collect();
    let kernel = Subgroup::from_members(&direct, &members)?;
    let (mut q, _) = direct.quotient(&kernel)?;
    q.set_name(&format!("{}Y{}", g1.name(), g2.name()));
    debug_assert_eq!(q.order(), g1.order() * g2.order() / z1.order());
    Ok(q)
}
