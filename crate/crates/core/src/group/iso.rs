//! Isomorphism testing by invariant pruning and backtracking over generator
//! images.

use std::collections::BTreeMap;

use super::{FiniteGroup, GroupMap, SubgroupKind};

/// Cheap isomorphism invariants compared before any search is attempted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVector {
    pub order: usize,
    pub abelian: bool,
    pub census: BTreeMap<u32, usize>,
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_omega: Option<(usize, usize)>,
    /// Multiset of per-element profiles (order, centralizer size, square-root
    /// count, central flag, derived-membership flag).
    pub profile_census: BTreeMap<(u32, usize, usize, bool, bool), usize>,
}

fn element_profiles(g: &FiniteGroup) -> Vec<(u32, usize, usize, bool, bool)> {
    let n = g.order();
    let center = g
        .characteristic_subgroup(SubgroupKind::Center)
        .expect("total");
    let derived = g
        .characteristic_subgroup(SubgroupKind::Derived)
        .expect("total");
    let mut sqrt_count = vec![0usize; n];
    for x in 0..n {
        sqrt_count[g.mul(x, x)] += 1;
    }
    (0..n)
        .map(|x| {
            (
                g.order_of(x),
                g.centralizer_size(x),
                sqrt_count[x],
                center.contains(x),
                derived.contains(x),
            )
        })
        .collect()
}

pub fn invariant_vector(g: &FiniteGroup) -> InvariantVector {
    let profiles = element_profiles(g);
    let mut profile_census = BTreeMap::new();
    for p in &profiles {
        *profile_census.entry(*p).or_insert(0) += 1;
    }
    let frattini_omega = g.pgroup_prime().map(|_| {
        let f = g
            .characteristic_subgroup(SubgroupKind::Frattini)
            .expect("p-group");
        let o = g
            .characteristic_subgroup(SubgroupKind::Omega)
            .expect("p-group");
        (f.order(), o.order())
    });
    InvariantVector {
        order: g.order(),
        abelian: g.is_abelian(),
        census: g.order_census(),
        center_order: g
            .characteristic_subgroup(SubgroupKind::Center)
            .expect("total")
            .order(),
        derived_order: g
            .characteristic_subgroup(SubgroupKind::Derived)
            .expect("total")
            .order(),
        frattini_omega,
        profile_census,
    }
}

struct Search<'a> {
    g1: &'a FiniteGroup,
    g2: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    phi: Vec<usize>,
    used: Vec<bool>,
    domain: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl<'a> Search<'a> {
    /// Extends the partial map by `phi[gen] = target` and closes under
    /// multiplication, checking the homomorphism property on every pair whose
    /// later member enters here. Returns the undo trail, or `None` on
    /// contradiction.
    fn extend(&mut self, gen: usize, target: usize) -> Option<Vec<usize>> {
        let mut trail: Vec<usize> = Vec::new();
        if self.phi[gen] != UNSET {
            if self.phi[gen] == target {
                return Some(trail);
            }
            return None;
        }
        if self.used[target] {
            return None;
        }
        self.phi[gen] = target;
        self.used[target] = true;
        self.domain.push(gen);
        trail.push(gen);
        let mut fresh = self.domain.len() - 1;
        while fresh < self.domain.len() {
            let b = self.domain[fresh];
            fresh += 1;
            let mut k = 0;
            while k < self.domain.len() {
                let a = self.domain[k];
                k += 1;
                for (x, y) in [(a, b), (b, a)] {
                    let prod = self.g1.mul(x, y);
                    let img = self.g2.mul(self.phi[x], self.phi[y]);
                    if self.phi[prod] == UNSET {
                        if self.used[img] {
                            self.undo(&trail);
                            return None;
                        }
                        self.phi[prod] = img;
                        self.used[img] = true;
                        self.domain.push(prod);
                        trail.push(prod);
                    } else if self.phi[prod] != img {
                        self.undo(&trail);
                        return None;
                    }
                }
            }
        }
        Some(trail)
    }

    fn undo(&mut self, trail: &[usize]) {
        for &x in trail {
            self.used[self.phi[x]] = false;
            self.phi[x] = UNSET;
            self.domain.pop();
        }
    }

    fn assign(&mut self, k: usize) -> bool {
        if k == self.gens.len() {
            return self.domain.len() == self.g1.order();
        }
        let gen = self.gens[k];
        let cands = self.candidates[k].clone();
        for t in cands {
            if let Some(trail) = self.extend(gen, t) {
                if self.assign(k + 1) {
                    return true;
                }
                self.undo(&trail);
            }
        }
        false
    }
}

/// Returns an isomorphism if one exists. Intended for orders <= 256.
pub fn is_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<GroupMap> {
    assert!(
        g1.order() <= 256 && g2.order() <= 256,
        "isomorphism search is intended for orders <= 256"
    );
    if g1.order() != g2.order() {
        return None;
    }
    if invariant_vector(g1) != invariant_vector(g2) {
        return None;
    }
    let profiles1 = element_profiles(g1);
    let profiles2 = element_profiles(g2);
    let gens = g1.small_generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..g2.order())
                .filter(|&t| profiles2[t] == profiles1[g])
                .collect()
        })
        .collect();
    let mut search = Search {
        g1,
        g2,
        gens,
        candidates,
        phi: vec![UNSET; g1.order()],
        used: vec![false; g2.order()],
        domain: Vec::new(),
    };
    // Seed the identity; for the trivial group that is already the whole map.
    search.phi[g1.identity()] = g2.identity();
    search.used[g2.identity()] = true;
    search.domain.push(g1.identity());
    if search.assign(0) {
        let map = GroupMap {
            images: search.phi,
            source_order: g1.order(),
            target_order: g2.order(),
        };
        debug_assert!(map.is_bijective());
        debug_assert!(map.is_homomorphism(g1, g2));
        Some(map)
    } else {
        None
    }
}
