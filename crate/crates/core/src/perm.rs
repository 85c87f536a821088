//! Permutations of `{1, …, n}` in one-line notation.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation `π` of `{1, …, n}` stored as its images `π(1), …, π(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::params(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::params(format!("transposition ({a} {b}) out of range for n = {n}")));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Self { images })
    }

    /// Canonical representative of a cycle type: cycles of the given lengths
    /// laid out on consecutive integers, so `(3, 2)` becomes `(1 2 3)(4 5)`.
    pub fn from_cycle_type(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in parts {
            for j in 0..len {
                images[start + j] = start + (j + 1) % len + 1;
            }
            start += len;
        }
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The composite `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Cycle lengths sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] - 1;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// All permutations of `{1, …, n}` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_representative() {
        let p = Permutation::from_cycle_type(&[3, 2]);
        assert_eq!(p.images(), &[2, 3, 1, 5, 4]);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(Permutation::from_cycle_type(&[1, 1, 1]), Permutation::identity(3));
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.compose(&p).images(), &[3, 1, 2]);
    }

    #[test]
    fn enumerates_all() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], Permutation::identity(4));
        assert_eq!(all[23].images(), &[4, 3, 2, 1]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::transposition(2, 1, 3).is_err());
    }
}
