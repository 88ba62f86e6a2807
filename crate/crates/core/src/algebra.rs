//! Arithmetic in the group algebra KG over a prime field GF(p), p in {2,3,5}.
//!
//! Elements are dense coefficient vectors indexed by group elements. The star
//! map is the linear extension of `g -> g^(-1)`. Elements of nonzero
//! augmentation are inverted by the terminating geometric series over the
//! nilpotent augmentation ideal when the group is a p-group matching the
//! field characteristic, with a dense linear solve as the general fallback.

use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("unsupported field characteristic {0} (supported: 2, 3, 5)")]
    UnsupportedPrime(u32),
    #[error("operands belong to different group-algebra contexts")]
    MixedContext,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element literal parse error: {0}")]
    Parse(String),
}

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<PrimeField, AlgebraError> {
        match p {
            2 | 3 | 5 => Ok(PrimeField { p }),
            other => Err(AlgebraError::UnsupportedPrime(other)),
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u32) -> u8 {
        (x % self.p) as u8
    }

    #[inline]
    pub fn neg(&self, x: u8) -> u8 {
        ((self.p - x as u32) % self.p) as u8
    }

    /// Multiplicative inverse of a nonzero residue (p is prime and tiny).
    pub fn inv(&self, x: u8) -> Option<u8> {
        if x == 0 {
            return None;
        }
        (1..self.p).map(|y| y as u8).find(|&y| {
            (x as u32 * y as u32) % self.p == 1
        })
    }
}

/// The group algebra KG: a group together with a coefficient field.
#[derive(Clone)]
pub struct GroupAlgebra {
    group: Arc<FiniteGroup>,
    field: PrimeField,
}

impl GroupAlgebra {
    pub fn new(group: Arc<FiniteGroup>, p: u32) -> Result<GroupAlgebra, AlgebraError> {
        Ok(GroupAlgebra {
            group,
            field: PrimeField::new(p)?,
        })
    }

    pub fn from_group(group: FiniteGroup, p: u32) -> Result<GroupAlgebra, AlgebraError> {
        GroupAlgebra::new(Arc::new(group), p)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    fn same_context(&self, other: &GroupAlgebra) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.field == other.field
    }

    /// Whether augmentation-nonzero elements are guaranteed invertible (the
    /// augmentation ideal is nilpotent): G a p-group for the field prime.
    pub fn modular_case(&self) -> bool {
        self.group.is_p_group(self.field.p)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coeffs: vec![0; self.dim()],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(self.group.identity())
    }

    /// The basis element for a single group element.
    pub fn basis(&self, g: usize) -> AlgebraElement {
        let mut coeffs = vec![0; self.dim()];
        coeffs[g] = 1;
        AlgebraElement {
            algebra: self.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(&self, coeffs: Vec<u8>) -> AlgebraElement {
        debug_assert_eq!(coeffs.len(), self.dim());
        debug_assert!(coeffs.iter().all(|&c| (c as u32) < self.field.p));
        AlgebraElement {
            algebra: self.clone(),
            coeffs,
        }
    }

    /// gbar: the sum of the distinct powers of `g`.
    pub fn gbar(&self, g: usize) -> AlgebraElement {
        let mut coeffs = vec![0; self.dim()];
        let mut x = self.group.identity();
        loop {
            coeffs[x] = 1;
            x = self.group.mul(x, g);
            if x == self.group.identity() {
                break;
            }
        }
        AlgebraElement {
            algebra: self.clone(),
            coeffs,
        }
    }

    /// Parses an element literal such as `1 + r + r^2*s` or `2*g + g^2`.
    /// Unknown labels are rejected.
    pub fn parse_literal(&self, text: &str) -> Result<AlgebraElement, AlgebraError> {
        parse_literal(self, text)
    }
}

/// A dense element of KG.
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: GroupAlgebra,
    coeffs: Vec<u8>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for AlgebraElement {}

impl std::fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

impl AlgebraElement {
    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> u8 {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        *self == self.algebra.one()
    }

    fn check(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.algebra.same_context(&other.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::MixedContext)
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(other)?;
        let f = self.algebra.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.reduce(a as u32 + b as u32))
            .collect();
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(other)?;
        let f = self.algebra.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.reduce(a as u32 + f.neg(b) as u32))
            .collect();
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, c: u8) -> AlgebraElement {
        let f = self.algebra.field;
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.reduce(a as u32 * c as u32)).collect(),
        }
    }

    /// Convolution product: `(ab)_k = sum over gh = k of a_g b_h`.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(other)?;
        let group = self.algebra.group.as_ref();
        let n = group.order();
        let mut acc = vec![0u32; n];
        for g in 0..n {
            let a = self.coeffs[g];
            if a == 0 {
                continue;
            }
            for h in 0..n {
                let b = other.coeffs[h];
                if b == 0 {
                    continue;
                }
                acc[group.mul(g, h)] += a as u32 * b as u32;
            }
        }
        let f = self.algebra.field;
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: acc.into_iter().map(|v| f.reduce(v)).collect(),
        })
    }

    /// The star anti-automorphism: coefficient of g becomes coefficient of
    /// g^{-1}.
    pub fn star(&self) -> AlgebraElement {
        let group = self.algebra.group.as_ref();
        let mut coeffs = vec![0; self.coeffs.len()];
        for g in 0..self.coeffs.len() {
            coeffs[group.inv(g)] = self.coeffs[g];
        }
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    /// Sum of coefficients in GF(p).
    pub fn augmentation(&self) -> u8 {
        let f = self.algebra.field;
        f.reduce(self.coeffs.iter().map(|&c| c as u32).sum())
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(g, &c)| (c != 0).then_some(g))
            .collect()
    }

    /// Inverts an element of nonzero augmentation. In the modular case
    /// (G a p-group over GF(p)) the geometric series over the nilpotent
    /// augmentation ideal terminates within |G| steps; otherwise a dense
    /// linear solve over GF(p) decides invertibility.
    pub fn invert_normalized(&self) -> Result<AlgebraElement, AlgebraError> {
        let aug = self.augmentation();
        if aug == 0 && self.algebra.modular_case() {
            return Err(AlgebraError::NotAUnit);
        }
        if self.algebra.modular_case() {
            let f = self.algebra.field;
            let c_inv = f.inv(aug).expect("nonzero");
            let normalized = self.scale(c_inv);
            let one = self.algebra.one();
            let x = normalized.sub(&one)?;
            let neg_x = x.scale(f.neg(1));
            let mut term = self.algebra.one();
            let mut acc = self.algebra.one();
            for _ in 0..self.algebra.dim() {
                term = term.mul(&neg_x)?;
                if term.is_zero() {
                    break;
                }
                acc = acc.add(&term)?;
            }
            if !term.is_zero() {
                // The ideal is nilpotent of index <= |G|; reaching this point
                // would mean the context check above is wrong.
                return Err(AlgebraError::NotAUnit);
            }
            let result = acc.scale(c_inv);
            debug_assert!(result.mul(self).expect("same context").is_one());
            return Ok(result);
        }
        self.invert_by_solve()
    }

    /// Dense GF(p) linear solve for `self * b = 1`; used outside the modular
    /// case. A one-sided inverse in a finite-dimensional algebra is two-sided.
    fn invert_by_solve(&self) -> Result<AlgebraElement, AlgebraError> {
        let group = self.algebra.group.as_ref();
        let n = group.order();
        let p = self.algebra.field.p;
        // (a b)_k = sum_h a_{k h^{-1}} b_h
        let mut m: Vec<Vec<u8>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|h| self.coeffs[group.mul(k, group.inv(h))])
                    .collect()
            })
            .collect();
        let mut rhs = vec![0u8; n];
        rhs[group.identity()] = 1;
        // Gaussian elimination.
        let mut row = 0;
        let mut pivots: Vec<usize> = Vec::new();
        for col in 0..n {
            let Some(pivot) = (row..n).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pivot);
            rhs.swap(row, pivot);
            let inv = self.algebra.field.inv(m[row][col]).expect("nonzero");
            for entry in m[row].iter_mut() {
                *entry = ((*entry as u32 * inv as u32) % p) as u8;
            }
            rhs[row] = ((rhs[row] as u32 * inv as u32) % p) as u8;
            let pivot_row = m[row].clone();
            for r in 0..n {
                if r != row && m[r][col] != 0 {
                    let factor = m[r][col] as u32;
                    for (entry, &pv) in m[r].iter_mut().zip(&pivot_row) {
                        let v = *entry as u32 + p * p - factor * pv as u32;
                        *entry = (v % p) as u8;
                    }
                    let v = rhs[r] as u32 + p * p - factor * rhs[row] as u32;
                    rhs[r] = (v % p) as u8;
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        if row < n {
            // Singular matrix: consistent system would be needed; check.
            return Err(AlgebraError::NotAUnit);
        }
        let mut b = vec![0u8; n];
        for (r, &col) in pivots.iter().enumerate() {
            b[col] = rhs[r];
        }
        let candidate = AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: b,
        };
        if self.mul(&candidate)?.is_one() && candidate.mul(self)?.is_one() {
            Ok(candidate)
        } else {
            Err(AlgebraError::NotAUnit)
        }
    }

    /// Renders the element as a sum of labeled terms, e.g. `1 + r + r^2*s`.
    pub fn to_literal(&self) -> String {
        let group = self.algebra.group.as_ref();
        let mut parts: Vec<String> = Vec::new();
        for (g, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let label = group.label(g);
            let term = if g == group.identity() {
                format!("{c}")
            } else if c == 1 {
                label.to_string()
            } else {
                format!("{c}*{label}")
            };
            parts.push(term);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

// ---------------------------------------------------------------------------
// Element literal parsing
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq)]
enum Token {
    Int(u32),
    Ident(String),
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(text: &str) -> Result<Vec<Token>, AlgebraError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '0'..='9' => {
                let mut v = 0u32;
                while let Some(&d) = chars.peek() {
                    if let Some(digit) = d.to_digit(10) {
                        v = v
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(digit))
                            .ok_or_else(|| AlgebraError::Parse("integer overflow".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Int(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(ident));
            }
            other => {
                return Err(AlgebraError::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(tokens)
}

fn parse_literal(algebra: &GroupAlgebra, text: &str) -> Result<AlgebraElement, AlgebraError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Parse("empty literal".into()));
    }
    let group = algebra.group();
    let f = algebra.field();
    let mut coeffs = vec![0u8; algebra.dim()];
    let mut pos = 0usize;
    let mut sign_negative = false;
    loop {
        // one term: [int] factor* with '*' or adjacency between factors
        let mut coeff: u32 = 1;
        let mut elem = group.identity();
        let mut saw_anything = false;
        if let Some(Token::Int(v)) = tokens.get(pos) {
            coeff = *v;
            pos += 1;
            saw_anything = true;
            if let Some(Token::Star) = tokens.get(pos) {
                pos += 1;
            }
        }
        while let Some(Token::Ident(name)) = tokens.get(pos) {
            pos += 1;
            let base = group
                .element_by_label(name)
                .ok_or_else(|| AlgebraError::Parse(format!("unknown label `{name}`")))?;
            let mut exp: i64 = 1;
            if let Some(Token::Caret) = tokens.get(pos) {
                pos += 1;
                match tokens.get(pos) {
                    Some(Token::Int(v)) => {
                        exp = *v as i64;
                        pos += 1;
                    }
                    Some(Token::Minus) => {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token::Int(v)) => {
                                exp = -(*v as i64);
                                pos += 1;
                            }
                            _ => return Err(AlgebraError::Parse("expected integer exponent".into())),
                        }
                    }
                    _ => return Err(AlgebraError::Parse("expected integer exponent".into())),
                }
            }
            elem = group.mul(elem, group.power(base, exp));
            saw_anything = true;
            if let Some(Token::Star) = tokens.get(pos) {
                pos += 1;
            }
        }
        if !saw_anything {
            return Err(AlgebraError::Parse("expected a term".into()));
        }
        let mut c = f.reduce(coeff);
        if sign_negative {
            c = f.neg(c);
        }
        coeffs[elem] = f.reduce(coeffs[elem] as u32 + c as u32);
        match tokens.get(pos) {
            None => break,
            Some(Token::Plus) => {
                sign_negative = false;
                pos += 1;
            }
            Some(Token::Minus) => {
                sign_negative = true;
                pos += 1;
            }
            Some(t) => {
                return Err(AlgebraError::Parse(format!("unexpected token {t:?}")));
            }
        }
    }
    Ok(algebra.from_coeffs(coeffs))
}

#[cfg(test)]
mod tests;
