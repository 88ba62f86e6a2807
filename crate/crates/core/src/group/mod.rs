//! Finite groups as fully materialized multiplication tables.
//!
//! Groups are realized either by closing a set of permutation generators
//! (`close_generators`) or from an explicit table, and every derived
//! construction (subgroup, quotient, product) lands back in the same flat
//! representation. All values are immutable once built.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::perm::Permutation;

mod decompose;
mod iso;
mod product;
mod shape;

pub use decompose::{decompose_elem_abelian_factor, has_order2_direct_factor};
pub use iso::{invariant_vector, is_isomorphic, InvariantVector};
pub use product::{
    action_from_generators, product_central, product_direct, product_semidirect, Action,
};
pub use shape::{shape_predicates, ShapeFlags};

/// Default closure cap; every verification target is well below it.
pub const DEFAULT_ORDER_CAP: usize = 1024;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeded the order cap of {cap}")]
    ExceedsCap { cap: usize },
    #[error("generator {index} is not a permutation of the stated degree")]
    NotPermutation { index: usize },
    #[error("subgroup is not normal in the parent group")]
    NotNormal,
    #[error("group is not a p-group")]
    NotPGroup,
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("not a valid group table: {reason}")]
    BadTable { reason: String },
    #[error("action is not a homomorphism into the automorphism group: {reason}")]
    BadAction { reason: String },
    #[error("identified element is not central (index {index})")]
    NotCentral { index: usize },
    #[error("central identification is not an isomorphism: {reason}")]
    MismatchedIdentification { reason: String },
    #[error("member set is not a subgroup")]
    NotASubgroup,
}

/// The named characteristic subgroups used throughout the verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupKind {
    Center,
    Derived,
    Frattini,
    Omega,
    Squares,
}

/// A finite group of order at most `DEFAULT_ORDER_CAP`, stored as a flat
/// multiplication table over element indices.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    generators: Vec<usize>,
    elem_orders: Vec<u32>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

/// An element-index subset of a parent group, closed under its operations.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    fn from_closed_set(mask: Vec<bool>) -> Subgroup {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup { members, mask }
    }

    /// Builds a subgroup from an explicit member list, verifying closure.
    pub fn from_members(parent: &FiniteGroup, members: &[usize]) -> Result<Subgroup, GroupError> {
        let mut mask = vec![false; parent.order()];
        for &m in members {
            parent.check_index(m)?;
            mask[m] = true;
        }
        if !mask[parent.identity()] {
            return Err(GroupError::NotASubgroup);
        }
        for &a in members {
            if !mask[parent.inv(a)] {
                return Err(GroupError::NotASubgroup);
            }
            for &b in members {
                if !mask[parent.mul(a, b)] {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Subgroup::from_closed_set(mask))
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn same_set(&self, other: &Subgroup) -> bool {
        self.members == other.members
    }
}

/// A map between groups given by per-element images. Carries quotient
/// projections, subgroup embeddings and isomorphisms.
#[derive(Clone, Debug)]
pub struct GroupMap {
    pub images: Vec<usize>,
    pub source_order: usize,
    pub target_order: usize,
}

impl GroupMap {
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.source_order != source.order() || self.target_order != target.order() {
            return false;
        }
        if self.images[source.identity()] != target.identity() {
            return false;
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if self.images[source.mul(a, b)] != target.mul(self.images[a], self.images[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order != self.target_order {
            return false;
        }
        let mut seen = vec![false; self.target_order];
        for &im in &self.images {
            if im >= self.target_order || seen[im] {
                return false;
            }
            seen[im] = true;
        }
        true
    }
}

impl FiniteGroup {
    /// Builds a group from an explicit multiplication table, validating the
    /// Latin-square property, identity and inverses, and (for order <= 256)
    /// full associativity.
    pub fn from_mul_table(
        name: &str,
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::BadTable {
                reason: "empty table".into(),
            });
        }
        for row in &table {
            if row.len() != n {
                return Err(GroupError::BadTable {
                    reason: "table is not square".into(),
                });
            }
            for &e in row {
                if e >= n {
                    return Err(GroupError::BadTable {
                        reason: format!("entry {e} out of range"),
                    });
                }
            }
        }
        // Latin square: every row and column is a permutation.
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if row_seen[table[i][j]] || col_seen[table[j][i]] {
                    return Err(GroupError::BadTable {
                        reason: format!("row or column {i} is not a permutation"),
                    });
                }
                row_seen[table[i][j]] = true;
                col_seen[table[j][i]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::BadTable {
                reason: "no two-sided identity".into(),
            })?;
        let mut inv = vec![u16::MAX; n];
        for a in 0..n {
            let b = (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity);
            match b {
                Some(b) => inv[a] = b as u16,
                None => {
                    return Err(GroupError::BadTable {
                        reason: format!("element {a} has no two-sided inverse"),
                    })
                }
            }
        }
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a][b];
                    for c in 0..n {
                        if table[ab][c] != table[a][table[b][c]] {
                            return Err(GroupError::BadTable {
                                reason: format!("associativity fails at ({a},{b},{c})"),
                            });
                        }
                    }
                }
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            flat.extend(row.iter().map(|&e| e as u16));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
        if labels.len() != n {
            return Err(GroupError::BadTable {
                reason: "label count does not match order".into(),
            });
        }
        let mut g = FiniteGroup {
            name: name.to_string(),
            order: n,
            identity,
            mul: flat,
            inv,
            labels,
            generators: Vec::new(),
            elem_orders: Vec::new(),
        };
        g.elem_orders = (0..n).map(|x| g.compute_order(x)).collect();
        Ok(g)
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut k = 1u32;
        let mut acc = x;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `y^{-1} x y`.
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// `[x, y] = x^{-1} y^{-1} x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn power(&self, x: usize, k: i64) -> usize {
        let ord = self.elem_orders[x] as i64;
        let k = k.rem_euclid(ord);
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn order_of(&self, x: usize) -> u32 {
        self.elem_orders[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Designated generators (set by `close_generators` or relabeling).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn check_index(&self, x: usize) -> Result<(), GroupError> {
        if x >= self.order {
            Err(GroupError::IndexOutOfRange {
                index: x,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u32 {
        self.elem_orders
            .iter()
            .fold(1u32, |acc, &o| num_lcm(acc, o))
    }

    /// Multiset of element orders.
    pub fn order_census(&self) -> BTreeMap<u32, usize> {
        let mut census = BTreeMap::new();
        for &o in &self.elem_orders {
            *census.entry(o).or_insert(0) += 1;
        }
        census
    }

    /// `Some(p)` when the order is a nontrivial power of the prime `p`.
    pub fn pgroup_prime(&self) -> Option<u32> {
        if self.order == 1 {
            return None;
        }
        let mut n = self.order;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                while n.is_multiple_of(p) {
                    n /= p;
                }
                return if n == 1 { Some(p as u32) } else { None };
            }
            p += 1;
        }
        Some(n as u32)
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        let mut n = self.order;
        while n.is_multiple_of(p as usize) {
            n /= p as usize;
        }
        n == 1
    }

    /// Smallest subgroup containing `seed`.
    pub fn generated_subgroup(&self, seed: &[usize]) -> Result<Subgroup, GroupError> {
        for &s in seed {
            self.check_index(s)?;
        }
        let mut mask = vec![false; self.order];
        mask[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in seed {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok(Subgroup::from_closed_set(mask))
    }

    pub fn whole_subgroup(&self) -> Subgroup {
        Subgroup::from_closed_set(vec![true; self.order])
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[self.identity] = true;
        Subgroup::from_closed_set(mask)
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        (0..self.order).all(|g| s.members().iter().all(|&m| s.contains(self.conj(m, g))))
    }

    /// Whether conjugation by the single element `y` maps `s` into itself.
    pub fn normalized_by(&self, s: &Subgroup, y: usize) -> bool {
        s.members().iter().all(|&m| s.contains(self.conj(m, y)))
    }

    pub fn centralizer_size(&self, x: usize) -> usize {
        (0..self.order)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .count()
    }

    pub fn characteristic_subgroup(&self, kind: SubgroupKind) -> Result<Subgroup, GroupError> {
        if self.order == 1 {
            return Ok(self.trivial_subgroup());
        }
        match kind {
            SubgroupKind::Center => {
                let mask = (0..self.order)
                    .map(|x| (0..self.order).all(|g| self.mul(x, g) == self.mul(g, x)))
                    .collect();
                Ok(Subgroup::from_closed_set(mask))
            }
            SubgroupKind::Derived => {
                let mut seeds = Vec::new();
                for a in 0..self.order {
                    for b in 0..self.order {
                        seeds.push(self.commutator(a, b));
                    }
                }
                seeds.sort_unstable();
                seeds.dedup();
                self.generated_subgroup(&seeds)
            }
            SubgroupKind::Squares => {
                let mut seeds: Vec<usize> = (0..self.order).map(|x| self.mul(x, x)).collect();
                seeds.sort_unstable();
                seeds.dedup();
                self.generated_subgroup(&seeds)
            }
            SubgroupKind::Frattini => {
                let p = self.pgroup_prime().ok_or(GroupError::NotPGroup)?;
                // For a finite p-group, Phi(G) = <p-th powers and commutators>;
                // at p = 2 the commutators are already products of squares.
                let mut seeds = Vec::new();
                for x in 0..self.order {
                    seeds.push(self.power(x, p as i64));
                }
                for a in 0..self.order {
                    for b in 0..self.order {
                        seeds.push(self.commutator(a, b));
                    }
                }
                seeds.sort_unstable();
                seeds.dedup();
                self.generated_subgroup(&seeds)
            }
            SubgroupKind::Omega => {
                let p = self.pgroup_prime().ok_or(GroupError::NotPGroup)?;
                let seeds: Vec<usize> = (0..self.order)
                    .filter(|&x| self.power(x, p as i64) == self.identity)
                    .collect();
                self.generated_subgroup(&seeds)
            }
        }
    }

    /// Intersection of two subgroups of the same parent.
    pub fn intersect(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mask = (0..self.order)
            .map(|x| a.contains(x) && b.contains(x))
            .collect();
        Subgroup::from_closed_set(mask)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
        let mut seeds = a.members().to_vec();
        seeds.extend_from_slice(b.members());
        self.generated_subgroup(&seeds)
    }

    /// Coset group by a normal subgroup, together with the canonical
    /// projection. The coset of the identity is element 0.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, GroupMap), GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        let mut scan: Vec<usize> = Vec::with_capacity(self.order);
        scan.push(self.identity);
        scan.extend((0..self.order).filter(|&x| x != self.identity));
        for x in scan {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            for &m in n.members() {
                coset_of[self.mul(x, m)] = id;
            }
            reps.push(x);
        }
        let q = reps.len();
        let table: Vec<Vec<usize>> = (0..q)
            .map(|a| (0..q).map(|b| coset_of[self.mul(reps[a], reps[b])]).collect())
            .collect();
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let name = format!("{}/N{}", self.name, n.order());
        let group = FiniteGroup::from_mul_table(&name, table, Some(labels))?;
        let map = GroupMap {
            images: coset_of,
            source_order: self.order,
            target_order: q,
        };
        Ok((group, map))
    }

    /// Re-indexes a subgroup as a standalone group (identity first), returning
    /// the embedding back into the parent.
    pub fn subgroup_as_group(&self, s: &Subgroup) -> Result<(FiniteGroup, GroupMap), GroupError> {
        let mut members: Vec<usize> = Vec::with_capacity(s.order());
        members.push(self.identity);
        members.extend(s.members().iter().copied().filter(|&m| m != self.identity));
        let mut index_of = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            index_of[m] = i;
        }
        let table: Vec<Vec<usize>> = members
            .iter()
            .map(|&a| {
                members
                    .iter()
                    .map(|&b| {
                        let p = self.mul(a, b);
                        if index_of[p] == usize::MAX {
                            usize::MAX
                        } else {
                            index_of[p]
                        }
                    })
                    .collect()
            })
            .collect();
        if table.iter().any(|row| row.contains(&usize::MAX)) {
            return Err(GroupError::NotASubgroup);
        }
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let name = format!("{}<{}>", self.name, members.len());
        let group = FiniteGroup::from_mul_table(&name, table, Some(labels))?;
        let map = GroupMap {
            images: members,
            source_order: group.order(),
            target_order: self.order,
        };
        Ok((group, map))
    }

    /// Greedy small generating set: highest element order first, ties by index.
    pub fn small_generating_set(&self) -> Vec<usize> {
        if self.order == 1 {
            return Vec::new();
        }
        let mut candidates: Vec<usize> = (0..self.order).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.elem_orders[x]), x));
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.trivial_subgroup();
        for c in candidates {
            if !span.contains(c) {
                gens.push(c);
                span = self
                    .generated_subgroup(&gens)
                    .expect("indices are in range");
                if span.order() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// All index-2 subgroups of a 2-group: preimages of the hyperplanes of
    /// the Frattini quotient.
    pub fn maximal_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        if !self.is_p_group(2) {
            return Err(GroupError::NotPGroup);
        }
        if self.order == 1 {
            return Ok(Vec::new());
        }
        let phi = self.characteristic_subgroup(SubgroupKind::Frattini)?;
        let (q, proj) = self.quotient(&phi)?;
        let d = q.order().trailing_zeros() as usize;
        if d == 0 {
            return Ok(Vec::new());
        }
        // Coordinates in the elementary abelian quotient: greedy basis, then
        // every element is reached by exactly one basis-subset product.
        let mut basis: Vec<usize> = Vec::new();
        let mut span = q.trivial_subgroup();
        for x in 0..q.order() {
            if !span.contains(x) {
                basis.push(x);
                let members = basis.clone();
                span = q.generated_subgroup(&members)?;
            }
        }
        debug_assert_eq!(basis.len(), d);
        let mut coords = vec![0usize; q.order()];
        for subset in 0usize..(1 << d) {
            let mut acc = q.identity();
            for (bit, &b) in basis.iter().enumerate() {
                if subset >> bit & 1 == 1 {
                    acc = q.mul(acc, b);
                }
            }
            coords[acc] = subset;
        }
        let mut out = Vec::with_capacity((1 << d) - 1);
        for f in 1usize..(1 << d) {
            let mask: Vec<bool> = (0..self.order)
                .map(|x| (coords[proj.apply(x)] & f).count_ones() % 2 == 0)
                .collect();
            out.push(Subgroup::from_closed_set(mask));
        }
        Ok(out)
    }

    /// Exhaustive associativity check; intended for tests on loaded tables.
    pub fn check_associativity(&self) -> bool {
        for a in 0..self.order {
            for b in 0..self.order {
                let ab = self.mul(a, b);
                for c in 0..self.order {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Latin-square check; rows and columns of the table are permutations.
    pub fn check_latin_square(&self) -> bool {
        for i in 0..self.order {
            let mut row = vec![false; self.order];
            let mut col = vec![false; self.order];
            for j in 0..self.order {
                if row[self.mul(i, j)] || col[self.mul(j, i)] {
                    return false;
                }
                row[self.mul(i, j)] = true;
                col[self.mul(j, i)] = true;
            }
        }
        true
    }

    /// Assigns shortest-word labels from named generators (breadth-first,
    /// products grow on the right). The identity is labeled `1`.
    pub fn relabel_from_generators(&mut self, gens: &[(usize, &str)]) {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order];
        words[self.identity] = Some(Vec::new());
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (k, &(g, _)) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(k);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        for (x, word) in words.iter().enumerate() {
            self.labels[x] = match word {
                None => format!("e{x}"),
                Some(w) if w.is_empty() => "1".to_string(),
                Some(w) => render_word(w, gens),
            };
        }
        self.generators = gens.iter().map(|&(g, _)| g).collect();
    }
}

fn render_word(word: &[usize], gens: &[(usize, &str)]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let name = gens[word[i]].1;
        if j - i == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{}^{}", name, j - i));
        }
        i = j;
    }
    parts.join("*")
}

fn num_lcm(a: u32, b: u32) -> u32 {
    a / num_gcd(a, b) * b
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// Closes permutation generators into a full multiplication table. Element 0
/// is the identity; generator names default to `a`, `b`, `c`, ...
pub fn close_generators(
    degree: usize,
    generators: &[Permutation],
    names: Option<&[&str]>,
) -> Result<FiniteGroup, GroupError> {
    close_generators_capped(degree, generators, names, DEFAULT_ORDER_CAP)
}

pub fn close_generators_capped(
    degree: usize,
    generators: &[Permutation],
    names: Option<&[&str]>,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    for (index, g) in generators.iter().enumerate() {
        if g.degree() != degree {
            return Err(GroupError::NotPermutation { index });
        }
    }
    let id = Permutation::identity(degree);
    let mut elems: Vec<Permutation> = vec![id.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let w = elems[i].then(g);
            if !index.contains_key(&w) {
                if elems.len() >= cap {
                    return Err(GroupError::ExceedsCap { cap });
                }
                index.insert(w.clone(), elems.len());
                elems.push(w);
                queue.push_back(elems.len() - 1);
            }
        }
    }
    let n = elems.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| index[&elems[a].then(&elems[b])]).collect())
        .collect();
    let mut group = FiniteGroup::from_mul_table("G", table, None)?;
    let default_names: Vec<String> = (0..generators.len())
        .map(|k| {
            if k < 26 {
                ((b'a' + k as u8) as char).to_string()
            } else {
                format!("g{k}")
            }
        })
        .collect();
    let gen_pairs: Vec<(usize, &str)> = generators
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let idx = index[g];
            let name: &str = match names {
                Some(ns) => ns[k],
                None => &default_names[k],
            };
            (idx, name)
        })
        .collect();
    group.relabel_from_generators(&gen_pairs);
    group.set_name(&format!("G{n}"));
    Ok(group)
}

/// Right-regular permutation representation of designated generators; used to
/// export table-built groups back into permutation form.
pub fn regular_representation(group: &FiniteGroup, gens: &[usize]) -> Vec<Permutation> {
    gens.iter()
        .map(|&g| {
            Permutation::from_images((0..group.order()).map(|x| group.mul(x, g)).collect())
                .expect("right multiplication is a bijection")
        })
        .collect()
}
