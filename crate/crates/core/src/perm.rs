//! Permutations on `{0..degree-1}` with cycle-notation parsing and printing.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image list is not a bijection on 0..{degree}")]
    NotBijective { degree: usize },
    #[error("cycle notation parse error: {0}")]
    Parse(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// A permutation stored as its image list: `images[i]` is where point `i` goes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &im in &images {
            if im >= degree || seen[im] {
                return Err(PermError::NotBijective { degree });
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(0 1 2 3)(4 5)`. Points not
    /// mentioned are fixed; `()` denotes the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let s = text.trim();
        if s.is_empty() {
            return Err(PermError::Parse("empty permutation text".into()));
        }
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(PermError::Parse(format!("expected '(' at `{rest}`")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::Parse("unclosed cycle".into()))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let points: Vec<usize> = body
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad point `{tok}`")))
                })
                .collect::<Result<_, _>>()?;
            for &pt in &points {
                if pt >= degree {
                    return Err(PermError::PointOutOfRange { point: pt, degree });
                }
                if moved[pt] {
                    return Err(PermError::Parse(format!("point {pt} repeated")));
                }
                moved[pt] = true;
            }
            for (k, &pt) in points.iter().enumerate() {
                images[pt] = points[(k + 1) % points.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// `self` followed by `other`: the product `self * other` under the
    /// apply-left-factor-first convention used throughout the crate.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&im| other.images[im]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    /// Disjoint-cycle rendering; fixed points are omitted and the identity
    /// prints as `()`.
    pub fn to_cycles(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycles())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let p = Permutation::parse_cycles("(0 1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.image(0), 1);
        assert_eq!(p.image(3), 0);
        assert_eq!(p.image(4), 5);
        assert_eq!(p.to_cycles(), "(0 1 2 3)(4 5)");
        let q = Permutation::parse_cycles(&p.to_cycles(), 6).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn compose_applies_left_factor_first() {
        let a = Permutation::parse_cycles("(0 1)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).image(0), 2);
        assert_eq!(b.then(&a).image(0), 1);
    }

    #[test]
    fn inverse_undoes() {
        let p = Permutation::parse_cycles("(0 3 1)(2 4)", 5).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles("(0 1", 4).is_err());
        assert!(Permutation::parse_cycles("(0 9)", 4).is_err());
        assert!(Permutation::parse_cycles("(0 1)(1 2)", 4).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }
}
