use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

/// Exponent vector `(a_1, …, a_n)` of the monomial `x_1^{a_1} ⋯ x_n^{a_n}`.
///
/// The derived ordering is lexicographic with `x_1` most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent vector after `x_i ↦ x_{π(i)}`.
    pub fn permute(&self, pi: &Permutation) -> ExponentVector {
        let mut out = vec![0; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            out[pi.apply(i + 1) - 1] = a;
        }
        ExponentVector(out)
    }

    pub fn reversed(&self) -> ExponentVector {
        ExponentVector(self.0.iter().rev().copied().collect())
    }

    /// If this is a pure power `x_i^a` with `a > 0`, returns `(i, a)` (0-based `i`).
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &a) in self.0.iter().enumerate() {
            if a > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, a));
            }
        }
        found
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Lexicographic: compare `a_1` first, then `a_2`, …
    Lex,
    /// Total degree first, ties broken lexicographically.
    GrLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            other => Err(crate::Error::params(format!("unknown monomial order {other:?}"))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn lex_compares_first_differing_exponent() {
        assert_eq!(MonomialOrder::Lex.cmp(&ev(&[1, 0, 0]), &ev(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::GrLex.cmp(&ev(&[1, 0, 0]), &ev(&[0, 5, 5])), Ordering::Less);
        assert_eq!(MonomialOrder::GrLex.cmp(&ev(&[1, 1]), &ev(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn display() {
        assert_eq!(ev(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(ev(&[0, 0]).to_string(), "1");
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(
            a in prop::collection::vec(0u32..4, 3),
            b in prop::collection::vec(0u32..4, 3),
            m in prop::collection::vec(0u32..4, 3),
        ) {
            let (a, b, m) = (ev(&a), ev(&b), ev(&m));
            for ord in [MonomialOrder::Lex, MonomialOrder::GrLex] {
                prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&m), &b.mul(&m)));
                prop_assert_ne!(ord.cmp(&ExponentVector::zero(3), &a), Ordering::Greater);
            }
        }
    }
}
