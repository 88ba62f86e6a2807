//! Structural predicates computed from first principles on the table.

use super::{FiniteGroup, SubgroupKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShapeFlags {
    pub abelian: bool,
    pub cyclic: bool,
    pub elementary_abelian_2: bool,
    pub dihedral: bool,
    pub generalized_quaternion: bool,
    pub semidihedral: bool,
    pub extraspecial: bool,
    pub hamiltonian: bool,
}

pub fn shape_predicates(g: &FiniteGroup) -> ShapeFlags {
    let n = g.order();
    let abelian = g.is_abelian();
    let cyclic = (0..n).any(|x| g.order_of(x) as usize == n);
    let elementary_abelian_2 = (0..n).all(|x| g.mul(x, x) == g.identity());

    ShapeFlags {
        abelian,
        cyclic,
        elementary_abelian_2,
        dihedral: is_dihedral(g),
        generalized_quaternion: is_generalized_quaternion(g, abelian),
        semidihedral: is_semidihedral(g),
        extraspecial: is_extraspecial(g),
        hamiltonian: is_hamiltonian(g, abelian),
    }
}

/// Order 2m with a cyclic normal subgroup of order m inverted by an outside
/// involution, m >= 1. Orders 2 and 4 qualify (trivial inversion).
fn is_dihedral(g: &FiniteGroup) -> bool {
    let n = g.order();
    if !n.is_multiple_of(2) {
        return false;
    }
    let m = n / 2;
    for a in 0..n {
        if g.order_of(a) as usize != m {
            continue;
        }
        let c = g
            .generated_subgroup(&[a])
            .expect("index in range");
        // index 2, hence normal
        for s in 0..n {
            if c.contains(s) || g.mul(s, s) != g.identity() {
                continue;
            }
            if c.members().iter().all(|&x| g.conj(x, s) == g.inv(x)) {
                return true;
            }
        }
    }
    false
}

fn is_generalized_quaternion(g: &FiniteGroup, abelian: bool) -> bool {
    let n = g.order();
    if abelian || n < 8 || !n.is_power_of_two() {
        return false;
    }
    let involutions = (0..n).filter(|&x| g.order_of(x) == 2).count();
    if involutions != 1 {
        return false;
    }
    (0..n).any(|x| g.order_of(x) as usize == n / 2)
}

fn is_semidihedral(g: &FiniteGroup) -> bool {
    let n = g.order();
    if n < 16 || !n.is_power_of_two() {
        return false;
    }
    // outside involution acting as a -> a^(n/4 - 1) on a cyclic index-2 <a>
    let e = (n / 4 - 1) as i64;
    for a in 0..n {
        if g.order_of(a) as usize != n / 2 {
            continue;
        }
        let c = g.generated_subgroup(&[a]).expect("index in range");
        let target = g.power(a, e);
        for t in 0..n {
            if !c.contains(t) && g.mul(t, t) == g.identity() && g.conj(a, t) == target {
                return true;
            }
        }
    }
    false
}

/// Centre, commutator subgroup and Frattini subgroup equal of order p.
fn is_extraspecial(g: &FiniteGroup) -> bool {
    let Some(p) = g.pgroup_prime() else {
        return false;
    };
    let center = g
        .characteristic_subgroup(SubgroupKind::Center)
        .expect("total");
    if center.order() != p as usize {
        return false;
    }
    let derived = g
        .characteristic_subgroup(SubgroupKind::Derived)
        .expect("total");
    let frattini = g
        .characteristic_subgroup(SubgroupKind::Frattini)
        .expect("p-group");
    center.same_set(&derived) && center.same_set(&frattini)
}

/// Nonabelian with every subgroup normal; it suffices to check the cyclic
/// subgroups, since any subgroup is generated by them.
fn is_hamiltonian(g: &FiniteGroup, abelian: bool) -> bool {
    if abelian {
        return false;
    }
    (0..g.order()).all(|x| {
        let c = g.generated_subgroup(&[x]).expect("index in range");
        g.is_normal(&c)
    })
}
