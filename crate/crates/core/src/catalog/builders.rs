//! Programmatic constructions of every named reference group, validated
//! against expected order and invariant vectors at build time.

use std::collections::BTreeMap;

use crate::group::{
    action_from_generators, close_generators, product_central, product_direct, product_semidirect,
    FiniteGroup, SubgroupKind,
};
use crate::perm::Permutation;

use super::CatalogError;

// ---------------------------------------------------------------------------
// Elementary families
// ---------------------------------------------------------------------------

pub fn cyclic(n: usize) -> Result<FiniteGroup, CatalogError> {
    if n == 0 {
        return Err(CatalogError::BadParams {
            name: "cyclic".into(),
            reason: "order must be positive".into(),
        });
    }
    let mut g = if n == 1 {
        close_generators(1, &[], None)?
    } else {
        let cycle = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        close_generators(n, &[cycle], Some(&["g"]))?
    };
    g.set_name(&format!("cyclic({n})"));
    validate(&g, &expected_cyclic(n))?;
    Ok(g)
}

pub fn elementary_abelian(k: usize) -> Result<FiniteGroup, CatalogError> {
    if k > 10 {
        return Err(CatalogError::BadParams {
            name: "elementary_abelian".into(),
            reason: "rank too large".into(),
        });
    }
    let gens: Vec<Permutation> = (0..k)
        .map(|i| {
            let mut images: Vec<usize> = (0..2 * k.max(1)).collect();
            images.swap(2 * i, 2 * i + 1);
            Permutation::from_images(images).unwrap()
        })
        .collect();
    let names: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut g = close_generators(2 * k.max(1), &gens, Some(&name_refs))?;
    g.set_name(&format!("elementary_abelian({k})"));
    validate(
        &g,
        &Expected {
            order: 1 << k,
            census: Some(if k == 0 {
                BTreeMap::from([(1, 1)])
            } else {
                BTreeMap::from([(1, 1), (2, (1 << k) - 1)])
            }),
            center: Some(1 << k),
            frattini: Some(1),
            omega: Some(1 << k),
        },
    )?;
    Ok(g)
}

pub fn dihedral(order: usize) -> Result<FiniteGroup, CatalogError> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(CatalogError::BadParams {
            name: "dihedral".into(),
            reason: "order must be even and at least 2".into(),
        });
    }
    let m = order / 2;
    let mut g = match m {
        1 => close_generators(
            2,
            &[Permutation::parse_cycles("(0 1)", 2).unwrap()],
            Some(&["s"]),
        )?,
        2 => close_generators(
            4,
            &[
                Permutation::parse_cycles("(0 1)", 4).unwrap(),
                Permutation::parse_cycles("(2 3)", 4).unwrap(),
            ],
            Some(&["r", "s"]),
        )?,
        _ => {
            let r = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect()).unwrap();
            let s = Permutation::from_images((0..m).map(|i| (m - i) % m).collect()).unwrap();
            close_generators(m, &[r, s], Some(&["r", "s"]))?
        }
    };
    g.set_name(&format!("dihedral({order})"));
    validate(&g, &expected_dihedral(order))?;
    Ok(g)
}

/// Generalized quaternion group of order 2^m, m >= 3, via the right-regular
/// representation of the normal form a^i b^j (i < 2^{m-1}, j < 2).
pub fn quaternion(order: usize) -> Result<FiniteGroup, CatalogError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(CatalogError::BadParams {
            name: "quaternion".into(),
            reason: "order must be a power of two, at least 8".into(),
        });
    }
    let half = order / 2;
    // index(i, j) = i + half * j; (x)a and (x)b by the defining relations
    // b a = a^{-1} b and b^2 = a^{half/2}.
    let ra = Permutation::from_images(
        (0..order)
            .map(|e| {
                let (i, j) = (e % half, e / half);
                if j == 0 {
                    (i + 1) % half
                } else {
                    half + (i + half - 1) % half
                }
            })
            .collect(),
    )
    .unwrap();
    let rb = Permutation::from_images(
        (0..order)
            .map(|e| {
                let (i, j) = (e % half, e / half);
                if j == 0 {
                    half + i
                } else {
                    (i + half / 2) % half
                }
            })
            .collect(),
    )
    .unwrap();
    let names: [&str; 2] = if order == 8 { ["i", "j"] } else { ["a", "b"] };
    let mut g = close_generators(order, &[ra, rb], Some(&names))?;
    g.set_name(&format!("quaternion({order})"));
    validate(&g, &expected_quaternion(order))?;
    Ok(g)
}

/// Semidihedral group of order 2^m, m >= 4: a of order 2^{m-1} with an outside
/// involution acting as a -> a^{2^{m-2}-1}. Faithful on 2^{m-1} points.
pub fn semidihedral(order: usize) -> Result<FiniteGroup, CatalogError> {
    if order < 16 || !order.is_power_of_two() {
        return Err(CatalogError::BadParams {
            name: "semidihedral".into(),
            reason: "order must be a power of two, at least 16".into(),
        });
    }
    let half = order / 2;
    let mult = half / 2 - 1;
    let a = Permutation::from_images((0..half).map(|x| (x + 1) % half).collect()).unwrap();
    let b = Permutation::from_images((0..half).map(|x| (x * mult) % half).collect()).unwrap();
    let mut g = close_generators(half, &[a, b], Some(&["a", "b"]))?;
    g.set_name(&format!("semidihedral({order})"));
    validate(&g, &expected_semidihedral(order))?;
    Ok(g)
}

/// The modular group of order 16: a^8 = b^2 = 1, a^b = a^5.
pub fn modular16() -> Result<FiniteGroup, CatalogError> {
    let a = Permutation::from_images((0..8).map(|x| (x + 1) % 8).collect()).unwrap();
    let b = Permutation::from_images((0..8).map(|x| (x * 5) % 8).collect()).unwrap();
    let mut g = close_generators(8, &[a, b], Some(&["a", "b"]))?;
    g.set_name("modular16");
    validate(
        &g,
        &Expected {
            order: 16,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 4), (8, 8)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

/// Heisenberg group of order p^3 (exponent p for odd p; D8 at p = 2), from
/// the normal form (a, b, c) with (a1,b1,c1)(a2,b2,c2) =
/// (a1+a2, b1+b2, c1+c2+a1*b2).
pub fn heisenberg(p: usize) -> Result<FiniteGroup, CatalogError> {
    if !matches!(p, 2 | 3 | 5) {
        return Err(CatalogError::BadParams {
            name: "heisenberg".into(),
            reason: "p must be one of 2, 3, 5".into(),
        });
    }
    let n = p * p * p;
    let idx = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|e1| {
            let (a1, b1, c1) = (e1 / (p * p), e1 / p % p, e1 % p);
            (0..n)
                .map(|e2| {
                    let (a2, b2, c2) = (e2 / (p * p), e2 / p % p, e2 % p);
                    idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)
                })
                .collect()
        })
        .collect();
    let mut g = FiniteGroup::from_mul_table(&format!("heisenberg({p})"), table, None)?;
    let x = idx(1, 0, 0);
    let y = idx(0, 1, 0);
    g.relabel_from_generators(&[(x, "x"), (y, "y")]);
    let expected = if p == 2 {
        Expected {
            order: 8,
            census: Some(BTreeMap::from([(1, 1), (2, 5), (4, 2)])),
            center: Some(2),
            frattini: Some(2),
            omega: Some(8),
        }
    } else {
        Expected {
            order: n,
            census: Some(BTreeMap::from([(1, 1), (p as u32, n - 1)])),
            center: Some(p),
            frattini: Some(p),
            omega: Some(n),
        }
    };
    validate(&g, &expected)?;
    Ok(g)
}

// ---------------------------------------------------------------------------
// Products used by the classification statements
// ---------------------------------------------------------------------------

fn inversion_aut(cyclic4: &FiniteGroup) -> Vec<usize> {
    (0..cyclic4.order()).map(|i| cyclic4.inv(i)).collect()
}

fn trivial_aut(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order()).collect()
}

/// Relabels a direct or semidirect product by the images of the factor
/// generators (indices `g1_gen * |G2|` and `g2_gen`).
fn relabel_pair_product(
    prod: &mut FiniteGroup,
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    names1: &[&str],
    names2: &[&str],
) {
    let n2 = g2.order();
    let mut gens: Vec<(usize, &str)> = Vec::new();
    for (k, &idx) in g1.generators().iter().enumerate() {
        gens.push((idx * n2, names1[k]));
    }
    for (k, &idx) in g2.generators().iter().enumerate() {
        gens.push((idx, names2[k]));
    }
    prod.relabel_from_generators(&gens);
}

pub fn c4xc4() -> Result<FiniteGroup, CatalogError> {
    let c4 = cyclic(4)?;
    let mut g = product_direct(&c4, &c4)?;
    relabel_pair_product(&mut g, &c4, &c4, &["a"], &["b"]);
    g.set_name("C4xC4");
    validate(
        &g,
        &Expected {
            order: 16,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 12)])),
            center: Some(16),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

/// C4 x| C4 with the acting generator inverting the normal factor.
pub fn c4sdc4() -> Result<FiniteGroup, CatalogError> {
    let c4 = cyclic(4)?;
    let action = action_from_generators(&c4, &c4, &[(1, inversion_aut(&c4))])?;
    let mut g = product_semidirect(&c4, &c4, &action)?;
    relabel_pair_product(&mut g, &c4, &c4, &["a"], &["b"]);
    g.set_name("C4sdC4");
    validate(
        &g,
        &Expected {
            order: 16,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 12)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

/// C4 x| Q8: Q8 acts through a homomorphism onto <inversion>, kernel <j>.
pub fn c4sdq8() -> Result<FiniteGroup, CatalogError> {
    let c4 = cyclic(4)?;
    let q8 = quaternion(8)?;
    let gi = q8.generators()[0];
    let gj = q8.generators()[1];
    let action = action_from_generators(
        &c4,
        &q8,
        &[(gi, inversion_aut(&c4)), (gj, trivial_aut(&c4))],
    )?;
    let mut g = product_semidirect(&c4, &q8, &action)?;
    relabel_pair_product(&mut g, &c4, &q8, &["a"], &["i", "j"]);
    g.set_name("C4sdQ8");
    validate(
        &g,
        &Expected {
            order: 32,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 28)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

pub fn q8xc4() -> Result<FiniteGroup, CatalogError> {
    let q8 = quaternion(8)?;
    let c4 = cyclic(4)?;
    let mut g = product_direct(&q8, &c4)?;
    relabel_pair_product(&mut g, &q8, &c4, &["i", "j"], &["c"]);
    g.set_name("Q8xC4");
    validate(
        &g,
        &Expected {
            order: 32,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 28)])),
            center: Some(8),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

pub fn q8xq8() -> Result<FiniteGroup, CatalogError> {
    let q8 = quaternion(8)?;
    let mut g = product_direct(&q8, &q8)?;
    relabel_pair_product(&mut g, &q8, &q8, &["i1", "j1"], &["i2", "j2"]);
    g.set_name("Q8xQ8");
    validate(
        &g,
        &Expected {
            order: 64,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 60)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

// ---------------------------------------------------------------------------
// Class-2 exponent-4 presentations realized as central extensions
// ---------------------------------------------------------------------------

/// Builds the class-2 group on pairs (a, z) in GF(2)^k x GF(2)^m with
/// generator squares `squares[i]` and commutators `[g_i, g_j] = comm(i,j)`
/// (i > j) landing in the central GF(2)^m. The cocycle is associative for any
/// data; the defining relations are enforced by the caller's validation.
fn central_extension_exp4(
    name: &str,
    gen_names: &[&str],
    z_dim: usize,
    squares: &[u32],
    comm: &[(usize, usize, u32)],
) -> Result<FiniteGroup, CatalogError> {
    let k = gen_names.len();
    let m = z_dim;
    let n = 1usize << (k + m);
    let comm_of = |i: usize, j: usize| -> u32 {
        comm.iter()
            .find(|&&(a, b, _)| a == i && b == j)
            .map(|&(_, _, v)| v)
            .unwrap_or(0)
    };
    let cocycle = |a1: u32, a2: u32| -> u32 {
        let mut z = 0u32;
        for (i, &square) in squares.iter().enumerate().take(k) {
            if a1 >> i & 1 == 0 {
                continue;
            }
            for j in 0..i {
                if a2 >> j & 1 == 1 {
                    z ^= comm_of(i, j);
                }
            }
            if a2 >> i & 1 == 1 {
                z ^= square;
            }
        }
        z
    };
    let idx = |a: u32, z: u32| ((a as usize) << m) | z as usize;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|e1| {
            let (a1, z1) = ((e1 >> m) as u32, (e1 & ((1 << m) - 1)) as u32);
            (0..n)
                .map(|e2| {
                    let (a2, z2) = ((e2 >> m) as u32, (e2 & ((1 << m) - 1)) as u32);
                    idx(a1 ^ a2, z1 ^ z2 ^ cocycle(a1, a2))
                })
                .collect()
        })
        .collect();
    let mut g = FiniteGroup::from_mul_table(name, table, None)?;
    let gens: Vec<(usize, &str)> = gen_names
        .iter()
        .enumerate()
        .map(|(i, &nm)| (idx(1 << i, 0), nm))
        .collect();
    g.relabel_from_generators(&gens);
    Ok(g)
}

/// H32: x^4 = y^4 = 1, x^2 = [y,x], y^2 = u^2 = [u,x], x^2 y^2 = [u,y].
pub fn h32() -> Result<FiniteGroup, CatalogError> {
    let z1 = 0b01u32; // x^2
    let z2 = 0b10u32; // y^2
    let mut g = central_extension_exp4(
        "H32",
        &["x", "y", "u"],
        2,
        &[z1, z2, z2],
        &[(1, 0, z1), (2, 0, z2), (2, 1, z1 ^ z2)],
    )?;
    g.set_name("H32");
    validate(
        &g,
        &Expected {
            order: 32,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 28)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

/// H245: x^4 = y^4 = [v,u] = 1, x^2 = v^2 = [y,x] = [v,y],
/// y^2 = u^2 = [u,x], x^2 y^2 = [u,y] = [v,x].
pub fn h245() -> Result<FiniteGroup, CatalogError> {
    let z1 = 0b01u32; // x^2
    let z2 = 0b10u32; // y^2
    let mut g = central_extension_exp4(
        "H245",
        &["x", "y", "u", "v"],
        2,
        &[z1, z2, z2, z1],
        &[
            (1, 0, z1),
            (2, 0, z2),
            (2, 1, z1 ^ z2),
            (3, 0, z1 ^ z2),
            (3, 1, z1),
            (3, 2, 0),
        ],
    )?;
    g.set_name("H245");
    validate(
        &g,
        &Expected {
            order: 64,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 60)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

/// The central product of <x,y | x^4 = y^4 = 1, x^2 = [y,x]> with Q8, the
/// shared central involution being x^2 y^2.
pub fn thm12_iv() -> Result<FiniteGroup, CatalogError> {
    let z1 = 0b01u32;
    let z2 = 0b10u32;
    let a = central_extension_exp4("A16", &["x", "y"], 2, &[z1, z2], &[(1, 0, z1)])?;
    let q8 = quaternion(8)?;
    let x2y2 = {
        let x = a.element_by_label("x").expect("labeled");
        let y = a.element_by_label("y").expect("labeled");
        a.mul(a.mul(x, x), a.mul(y, y))
    };
    let minus_one = {
        let i = q8.element_by_label("i").expect("labeled");
        q8.mul(i, i)
    };
    let mut g = product_central(&a, &q8, &[(x2y2, minus_one)])?;
    let gens: Vec<(usize, &str)> = ["x", "y", "i", "j"]
        .iter()
        .map(|&nm| (g.element_by_label(nm).expect("label survives quotient"), nm))
        .collect();
    g.relabel_from_generators(&gens);
    g.set_name("thm12_iv");
    validate(
        &g,
        &Expected {
            order: 64,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 60)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
    )?;
    Ok(g)
}

// ---------------------------------------------------------------------------
// The metacyclic families P(k), R(k)
// ---------------------------------------------------------------------------

/// R_k: w^4 = 1, w^y = w^{-1}, y^{2^{k+1}} = 1 (order 2^{k+3}).
pub fn r_group(k: usize) -> Result<FiniteGroup, CatalogError> {
    if k > 4 {
        return Err(CatalogError::BadParams {
            name: "R".into(),
            reason: "k must be at most 4".into(),
        });
    }
    let c4 = cyclic(4)?;
    let cy = cyclic(1 << (k + 1))?;
    let action = action_from_generators(&c4, &cy, &[(1, inversion_aut(&c4))])?;
    let mut g = product_semidirect(&c4, &cy, &action)?;
    relabel_pair_product(&mut g, &c4, &cy, &["w"], &["y"]);
    g.set_name(&format!("R({k})"));
    let expected = match k {
        1 => Expected {
            order: 16,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 12)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
        2 => Expected {
            order: 32,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 12), (8, 16)])),
            center: Some(8),
            frattini: Some(8),
            omega: Some(4),
        },
        _ => Expected {
            order: 1 << (k + 3),
            census: None,
            center: None,
            frattini: None,
            omega: None,
        },
    };
    validate(&g, &expected)?;
    check_pr_relations(&g, k, false)?;
    Ok(g)
}

/// P_k: w^4 = 1, w^y = w^{-1}, y^{2^k} = w^2 (order 2^{k+2}); realized as the
/// quotient of R_k by the central involution w^2 y^{2^k}.
pub fn p_group(k: usize) -> Result<FiniteGroup, CatalogError> {
    if k == 0 || k > 4 {
        return Err(CatalogError::BadParams {
            name: "P".into(),
            reason: "k must be between 1 and 4".into(),
        });
    }
    let r = r_group(k)?;
    let w = r.element_by_label("w").expect("labeled");
    let y = r.element_by_label("y").expect("labeled");
    let z = r.mul(r.power(w, 2), r.power(y, 1 << k));
    let n = r.generated_subgroup(&[z])?;
    let (q, proj) = r.quotient(&n)?;
    let mut g = q;
    g.relabel_from_generators(&[(proj.apply(w), "w"), (proj.apply(y), "y")]);
    g.set_name(&format!("P({k})"));
    let expected = match k {
        1 => expected_quaternion(8),
        2 => Expected {
            order: 16,
            census: Some(BTreeMap::from([(1, 1), (2, 3), (4, 4), (8, 8)])),
            center: Some(4),
            frattini: Some(4),
            omega: Some(4),
        },
        _ => Expected {
            order: 1 << (k + 2),
            census: None,
            center: None,
            frattini: None,
            omega: None,
        },
    };
    validate(&g, &expected)?;
    check_pr_relations(&g, k, true)?;
    Ok(g)
}

/// Re-derives the defining relations of P_k / R_k on the finished table.
fn check_pr_relations(g: &FiniteGroup, k: usize, is_p: bool) -> Result<(), CatalogError> {
    let w = g.element_by_label("w").expect("labeled");
    let y = g.element_by_label("y").expect("labeled");
    let ok_w4 = g.power(w, 4) == g.identity();
    let ok_conj = g.conj(w, y) == g.inv(w);
    let ok_tail = if is_p {
        g.power(y, 1 << k) == g.power(w, 2)
    } else {
        g.power(y, 1 << (k + 1)) == g.identity()
    };
    if ok_w4 && ok_conj && ok_tail {
        Ok(())
    } else {
        Err(CatalogError::Validation {
            name: g.name().to_string(),
            reason: "defining relations fail".into(),
        })
    }
}

// ---------------------------------------------------------------------------
// Extraspecial groups
// ---------------------------------------------------------------------------

fn central_involution(g: &FiniteGroup) -> usize {
    let center = g
        .characteristic_subgroup(SubgroupKind::Center)
        .expect("total");
    *center
        .members()
        .iter()
        .find(|&&m| m != g.identity())
        .expect("nontrivial centre")
}

fn extraspecial(name: &str, plus_type: bool, m: usize) -> Result<FiniteGroup, CatalogError> {
    if m == 0 || m > 3 {
        return Err(CatalogError::BadParams {
            name: name.into(),
            reason: "m must be between 1 and 3".into(),
        });
    }
    let mut acc = if plus_type {
        let mut d = dihedral(8)?;
        let gens: Vec<(usize, &str)> = vec![
            (d.element_by_label("r").unwrap(), "r1"),
            (d.element_by_label("s").unwrap(), "s1"),
        ];
        d.relabel_from_generators(&gens);
        d
    } else {
        let mut q = quaternion(8)?;
        let gens: Vec<(usize, &str)> = vec![
            (q.element_by_label("i").unwrap(), "i"),
            (q.element_by_label("j").unwrap(), "j"),
        ];
        q.relabel_from_generators(&gens);
        q
    };
    let mut gen_names: Vec<String> = if plus_type {
        vec!["r1".into(), "s1".into()]
    } else {
        vec!["i".into(), "j".into()]
    };
    for factor in 2..=m {
        let mut d = dihedral(8)?;
        let rn = format!("r{factor}");
        let sn = format!("s{factor}");
        let gens: Vec<(usize, &str)> = vec![
            (d.element_by_label("r").unwrap(), rn.as_str()),
            (d.element_by_label("s").unwrap(), sn.as_str()),
        ];
        d.relabel_from_generators(&gens);
        let z1 = central_involution(&acc);
        let z2 = central_involution(&d);
        acc = product_central(&acc, &d, &[(z1, z2)])?;
        gen_names.push(rn);
        gen_names.push(sn);
        let gens: Vec<(usize, &str)> = gen_names
            .iter()
            .map(|nm| {
                (
                    acc.element_by_label(nm).expect("label survives quotient"),
                    nm.as_str(),
                )
            })
            .collect();
        acc.relabel_from_generators(&gens);
    }
    acc.set_name(name);
    let order = 1usize << (2 * m + 1);
    // number of order<=2 elements: 2 * (2^{2m-1} +- 2^{m-1})
    let zeros = if plus_type {
        (1usize << (2 * m - 1)) + (1 << (m - 1))
    } else {
        (1usize << (2 * m - 1)) - (1 << (m - 1))
    };
    let involutions = 2 * zeros - 1;
    validate(
        &acc,
        &Expected {
            order,
            census: Some(BTreeMap::from([
                (1, 1),
                (2, involutions),
                (4, order - 2 * zeros),
            ])),
            center: Some(2),
            frattini: Some(2),
            omega: None,
        },
    )?;
    Ok(acc)
}

/// Central product of m copies of D8 (order 2^{2m+1}).
pub fn extraspecial_d8central(m: usize) -> Result<FiniteGroup, CatalogError> {
    extraspecial(&format!("extraspecial_D8central({m})"), true, m)
}

/// Q8 centrally multiplied with m-1 copies of D8 (order 2^{2m+1}).
pub fn extraspecial_q8central(m: usize) -> Result<FiniteGroup, CatalogError> {
    extraspecial(&format!("extraspecial_Q8central({m})"), false, m)
}

// ---------------------------------------------------------------------------
// Expected invariants
// ---------------------------------------------------------------------------

pub(super) struct Expected {
    pub order: usize,
    pub census: Option<BTreeMap<u32, usize>>,
    pub center: Option<usize>,
    pub frattini: Option<usize>,
    pub omega: Option<usize>,
}

fn expected_cyclic(n: usize) -> Expected {
    let mut census: BTreeMap<u32, usize> = BTreeMap::new();
    for d in 1..=n {
        if n.is_multiple_of(d) {
            census.insert(d as u32, euler_phi(d));
        }
    }
    let prime = smallest_prime_power_base(n);
    Expected {
        order: n,
        census: Some(census),
        center: Some(n),
        frattini: prime.map(|p| n / p),
        omega: prime,
    }
}

fn expected_dihedral(order: usize) -> Expected {
    let m = order / 2;
    if m == 1 {
        return expected_cyclic(2);
    }
    if m == 2 {
        return Expected {
            order: 4,
            census: Some(BTreeMap::from([(1, 1), (2, 3)])),
            center: Some(4),
            frattini: Some(1),
            omega: Some(4),
        };
    }
    let mut census: BTreeMap<u32, usize> = BTreeMap::new();
    for d in 1..=m {
        if m.is_multiple_of(d) {
            *census.entry(d as u32).or_insert(0) += euler_phi(d);
        }
    }
    *census.entry(2).or_insert(0) += m;
    let two_group = m.is_power_of_two();
    Expected {
        order,
        census: Some(census),
        center: Some(if m.is_multiple_of(2) { 2 } else { 1 }),
        frattini: two_group.then_some(m / 2),
        omega: two_group.then_some(order),
    }
}

fn expected_quaternion(order: usize) -> Expected {
    let half = order / 2;
    let mut census: BTreeMap<u32, usize> = BTreeMap::new();
    for d in 1..=half {
        if half.is_multiple_of(d) {
            *census.entry(d as u32).or_insert(0) += euler_phi(d);
        }
    }
    *census.entry(4).or_insert(0) += half;
    Expected {
        order,
        census: Some(census),
        center: Some(2),
        frattini: Some(half / 2),
        omega: Some(2),
    }
}

fn expected_semidihedral(order: usize) -> Expected {
    let half = order / 2;
    let mut census: BTreeMap<u32, usize> = BTreeMap::new();
    for d in 1..=half {
        if half.is_multiple_of(d) {
            *census.entry(d as u32).or_insert(0) += euler_phi(d);
        }
    }
    *census.entry(2).or_insert(0) += half / 2;
    *census.entry(4).or_insert(0) += half / 2;
    Expected {
        order,
        census: Some(census),
        center: Some(2),
        frattini: Some(half / 2),
        omega: Some(half),
    }
}

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn smallest_prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return (m == 1).then_some(p);
        }
        p += 1;
    }
    Some(n)
}

pub(super) fn validate(g: &FiniteGroup, expected: &Expected) -> Result<(), CatalogError> {
    let fail = |reason: String| CatalogError::Validation {
        name: g.name().to_string(),
        reason,
    };
    if g.order() != expected.order {
        return Err(fail(format!(
            "order {} differs from expected {}",
            g.order(),
            expected.order
        )));
    }
    if let Some(census) = &expected.census {
        let got = g.order_census();
        if &got != census {
            return Err(fail(format!(
                "order census {got:?} differs from expected {census:?}"
            )));
        }
    }
    if let Some(z) = expected.center {
        let got = g
            .characteristic_subgroup(SubgroupKind::Center)
            .map_err(CatalogError::Group)?
            .order();
        if got != z {
            return Err(fail(format!("|Z| = {got}, expected {z}")));
        }
    }
    if let Some(f) = expected.frattini {
        let got = g
            .characteristic_subgroup(SubgroupKind::Frattini)
            .map_err(CatalogError::Group)?
            .order();
        if got != f {
            return Err(fail(format!("|Phi| = {got}, expected {f}")));
        }
    }
    if let Some(o) = expected.omega {
        let got = g
            .characteristic_subgroup(SubgroupKind::Omega)
            .map_err(CatalogError::Group)?
            .order();
        if got != o {
            return Err(fail(format!("|Omega| = {got}, expected {o}")));
        }
    }
    Ok(())
}
