use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::params(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Self { parts: (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect() }
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Size of the centralizer of a permutation of this cycle type,
    /// `Π i^{m_i} m_i!`.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            for j in 1..=m as u64 {
                z *= p as u64 * j;
            }
            i += m;
        }
        z
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn num_syt(&self) -> u64 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                hooks *= (len - c - 1 + conj.parts[c] - r - 1 + 1) as u128;
            }
        }
        num /= hooks;
        num as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
