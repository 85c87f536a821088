//! Packed words, ordered set partitions and coinversion codes.
//!
//! A packed word `w_1 … w_n` uses exactly the letters `{1, …, m}` for some
//! `m`; reading off the positions of each letter gives an ordered set
//! partition `(B_1 | … | B_m)` of `[n]` with `i ∈ B_j ⇔ w_i = j`.
//!
//! The coinversion code records, for each `i ∈ B_j`, the number of later
//! blocks whose minimum exceeds `i`, shifted by `j − 1` when `i` is not the
//! minimum of its block. The boosted code shifts non-minimal entries by `j`
//! instead, which makes the union over all block counts `>= k` injective.
//!
//! Sequences are stored 0-indexed; all documentation and external formats
//! use 1-indexed positions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A packed word over the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PackedWord {
    letters: Vec<usize>,
}

impl PackedWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::params("packed words have length at least 1"));
        }
        let max = *letters.iter().max().unwrap();
        let mut used = vec![false; max + 1];
        for &v in &letters {
            if v == 0 {
                return Err(Error::params(format!("{letters:?} has a zero letter")));
            }
            used[v] = true;
        }
        if used[1..].iter().any(|&u| !u) {
            return Err(Error::params(format!("{letters:?} is not packed")));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, i.e. the number of blocks of the matching partition.
    pub fn max_letter(&self) -> usize {
        *self.letters.iter().max().unwrap()
    }

    pub fn to_osp(&self) -> OrderedSetPartition {
        let mut blocks = vec![Vec::new(); self.max_letter()];
        for (i, &v) in self.letters.iter().enumerate() {
            blocks[v - 1].push(i + 1);
        }
        OrderedSetPartition { blocks }
    }

    /// `π · (w_1 … w_n) = w_{π(1)} … w_{π(n)}`.
    ///
    /// This satisfies `π · (ρ · w) = (ρ ∘ π) · w`.
    pub fn permute(&self, pi: &Permutation) -> Result<PackedWord> {
        if pi.len() != self.len() {
            return Err(Error::ArityMismatch { expected: self.len(), found: pi.len() });
        }
        let letters = (1..=self.len()).map(|i| self.letters[pi.apply(i) - 1]).collect();
        Ok(PackedWord { letters })
    }
}

impl TryFrom<Vec<usize>> for PackedWord {
    type Error = Error;

    fn try_from(letters: Vec<usize>) -> Result<Self> {
        PackedWord::new(letters)
    }
}

impl From<PackedWord> for Vec<usize> {
    fn from(w: PackedWord) -> Self {
        w.letters
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.letters)
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    if values.iter().all(|&v| v < 10) {
        for v in values {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An ordered set partition `(B_1 | … | B_k)` of `[n]`, blocks stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n == 0 {
            return Err(Error::params("ordered set partitions need at least one element"));
        }
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::params("blocks must be nonempty"));
            }
            block.sort_unstable();
            for &i in block.iter() {
                if i == 0 || i > n || seen[i] {
                    return Err(Error::params(format!("blocks do not partition [{n}]")));
                }
                seen[i] = true;
            }
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn to_word(&self) -> PackedWord {
        let mut letters = vec![0; self.size()];
        for (j, block) in self.blocks.iter().enumerate() {
            for &i in block {
                letters[i - 1] = j + 1;
            }
        }
        PackedWord { letters }
    }

    /// Block index (0-based) containing each element, plus each block minimum.
    fn locate(&self) -> (Vec<usize>, Vec<usize>) {
        let mut block_of = vec![0; self.size() + 1];
        for (j, block) in self.blocks.iter().enumerate() {
            for &i in block {
                block_of[i] = j;
            }
        }
        let mins = self.blocks.iter().map(|b| b[0]).collect();
        (block_of, mins)
    }
}

impl TryFrom<Vec<Vec<usize>>> for OrderedSetPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        OrderedSetPartition::new(blocks)
    }
}

impl From<OrderedSetPartition> for Vec<Vec<usize>> {
    fn from(s: OrderedSetPartition) -> Self {
        s.blocks
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, block) in self.blocks.iter().enumerate() {
            if j > 0 {
                write!(f, "|")?;
            }
            write_digits(f, block)?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeFlavor {
    Plain,
    Boosted,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeSequence {
    pub entries: Vec<usize>,
    pub flavor: CodeFlavor,
}

impl CodeSequence {
    pub fn plain(entries: Vec<usize>) -> Self {
        Self { entries, flavor: CodeFlavor::Plain }
    }

    pub fn boosted(entries: Vec<usize>) -> Self {
        Self { entries, flavor: CodeFlavor::Boosted }
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().sum()
    }
}

impl fmt::Display for CodeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Skip sequence `γ(S)` of a subset `S ⊆ [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkipSequence {
    pub entries: Vec<usize>,
    pub set: Vec<usize>,
}

impl SkipSequence {
    /// `γ(S)^*`, the entries in reverse order.
    pub fn reversed(&self) -> Vec<usize> {
        self.entries.iter().rev().copied().collect()
    }
}

/// `γ_i = i − j + 1` when `i = s_j` is the `j`-th smallest element of `S`,
/// and `0` off `S`.
pub fn skip_sequence(set: &[usize], n: usize) -> Result<SkipSequence> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != set.len() {
        return Err(Error::params(format!("{set:?} has repeated elements")));
    }
    let mut entries = vec![0; n];
    for (j, &s) in sorted.iter().enumerate() {
        if s == 0 || s > n {
            return Err(Error::params(format!("{s} is not in [1, {n}]")));
        }
        entries[s - 1] = s - j;
    }
    Ok(SkipSequence { entries, set: sorted })
}

/// Packed words of length `n` containing every letter `1..=k`, in
/// lexicographic order.
pub fn enumerate_packed_words(n: usize, k: usize) -> Result<Vec<PackedWord>> {
    check_nk(n, k)?;
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut counts = vec![0usize; n + 2];
    extend_words(n, k, &mut word, &mut counts, &mut out);
    Ok(out)
}

fn extend_words(
    n: usize,
    k: usize,
    word: &mut Vec<usize>,
    counts: &mut [usize],
    out: &mut Vec<PackedWord>,
) {
    let remaining = n - word.len();
    // letters below the current maximum (or below k) that are still missing
    let max = (1..=n).rev().find(|&v| counts[v] > 0).unwrap_or(0);
    let target = max.max(k);
    let missing = (1..=target).filter(|&v| counts[v] == 0).count();
    if missing > remaining {
        return;
    }
    if remaining == 0 {
        out.push(PackedWord { letters: word.clone() });
        return;
    }
    for v in 1..=n {
        word.push(v);
        counts[v] += 1;
        extend_words(n, k, word, counts, out);
        counts[v] -= 1;
        word.pop();
    }
}

/// Ordered set partitions of `[n]` with at least `k` blocks, in the order
/// induced by [`enumerate_packed_words`].
pub fn enumerate_osps(n: usize, k: usize) -> Result<Vec<OrderedSetPartition>> {
    Ok(enumerate_packed_words(n, k)?.iter().map(PackedWord::to_osp).collect())
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::params(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

fn code_with_shift(sigma: &OrderedSetPartition, boosted: bool) -> Vec<usize> {
    let (block_of, mins) = sigma.locate();
    (1..=sigma.size())
        .map(|i| {
            let j = block_of[i];
            let later = mins[j + 1..].iter().filter(|&&m| m > i).count();
            if mins[j] == i {
                later
            } else if boosted {
                later + j + 1
            } else {
                later + j
            }
        })
        .collect()
}

pub fn coinversion_code(sigma: &OrderedSetPartition) -> CodeSequence {
    CodeSequence::plain(code_with_shift(sigma, false))
}

pub fn boosted_code(sigma: &OrderedSetPartition) -> CodeSequence {
    CodeSequence::boosted(code_with_shift(sigma, true))
}

/// Runs the coinversion-label insertion. Empty blocks are labeled
/// `0, 1, …` from right to left; nonempty blocks continue the labels from
/// left to right, shifted up by one more when `boosted` is set.
fn insert(code: &[usize], k: usize, boosted: bool) -> Result<OrderedSetPartition> {
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (idx, &c) in code.iter().enumerate() {
        let empties = blocks.iter().filter(|b| b.is_empty()).count();
        let target = if c < empties {
            // c-th empty block counting from the right
            blocks
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, b)| b.is_empty())
                .nth(c)
                .map(|(j, _)| j)
        } else {
            let offset = if boosted { empties + 1 } else { empties };
            c.checked_sub(offset).and_then(|r| {
                blocks
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !b.is_empty())
                    .nth(r)
                    .map(|(j, _)| j)
            })
        };
        let Some(j) = target else {
            return Err(Error::InvalidCode(
                code.to_vec(),
                format!("no block carries label {c} when inserting {}", idx + 1),
            ));
        };
        blocks[j].push(idx + 1);
    }
    if blocks.iter().any(Vec::is_empty) {
        return Err(Error::InvalidCode(code.to_vec(), "insertion left an empty block".into()));
    }
    Ok(OrderedSetPartition { blocks })
}

/// Inverse of [`coinversion_code`] on ordered set partitions with `k` blocks.
pub fn insert_from_code(code: &[usize], k: usize) -> Result<OrderedSetPartition> {
    if code.is_empty() || k == 0 || k > code.len() {
        return Err(Error::params(format!("need 1 <= k <= n, got k = {k}, n = {}", code.len())));
    }
    let sigma = insert(code, k, false)?;
    if code_with_shift(&sigma, false) != code {
        return Err(Error::InvalidCode(code.to_vec(), "insertion is not inverted by the code".into()));
    }
    Ok(sigma)
}

/// Recovers the plain coinversion code and block count from a boosted code.
///
/// Scans right to left marking the first entry `<= 0`, then the first entry
/// `<= 1`, and so on; marked entries are block minima, unmarked ones get
/// decremented.
pub fn unboost(code: &[usize]) -> (Vec<usize>, usize) {
    let mut marked = vec![false; code.len()];
    let mut threshold = 0;
    for i in (0..code.len()).rev() {
        if code[i] <= threshold {
            marked[i] = true;
            threshold += 1;
        }
    }
    let plain = code
        .iter()
        .zip(&marked)
        .map(|(&c, &m)| if m { c } else { c - 1 })
        .collect();
    (plain, threshold)
}

/// Inverse of [`boosted_code`].
pub fn insert_from_boosted(code: &[usize]) -> Result<OrderedSetPartition> {
    if code.is_empty() {
        return Err(Error::params("empty code"));
    }
    let (_, blocks) = unboost(code);
    let sigma = insert(code, blocks, true)?;
    if code_with_shift(&sigma, true) != code {
        return Err(Error::InvalidCode(code.to_vec(), "insertion is not inverted by the code".into()));
    }
    Ok(sigma)
}

/// Bitmask subsets of `[m]` with exactly `size` elements, as sorted lists.
fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1u32 << m))
        .filter(move |mask| mask.count_ones() as usize == size)
        .map(move |mask| (1..=m).filter(|&i| mask & (1 << (i - 1)) != 0).collect())
}

fn dominates(code: &[usize], pattern: &[usize]) -> bool {
    pattern.iter().zip(code).all(|(p, c)| p <= c)
}

/// Precomputed forbidden patterns for the code characterizations.
#[derive(Clone, Debug)]
pub struct CodeValidator {
    n: usize,
    bound: usize,
    patterns: Vec<Vec<usize>>,
}

impl CodeValidator {
    const MAX_N: usize = 12;

    /// Conditions for plain codes of partitions with exactly `k` blocks:
    /// entries `< k` and no `γ(S)^* <= c` with `|S| = n − k + 1`.
    pub fn plain(n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        Self::check_size(n)?;
        Ok(Self { n, bound: k, patterns: Self::skip_patterns(n, k) })
    }

    /// Conditions for boosted codes of partitions with at least `k` blocks:
    /// entries `< n`, the skip-pattern condition above, and the inserted
    /// patterns `(γ_{n−1}, …, γ_i, d, γ_{i−1}, …, γ_1)` built from
    /// `γ(T)^*` for `T ⊆ [n − 1]`, `|T| = n − d`.
    pub fn boosted(n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        Self::check_size(n)?;
        let mut patterns = Self::skip_patterns(n, k);
        for i in 1..=n {
            for d in 1..=n {
                for t in subsets_of_size(n - 1, n - d) {
                    let rev = skip_sequence(&t, n - 1).expect("subset in range").reversed();
                    let mut pattern = Vec::with_capacity(n);
                    pattern.extend_from_slice(&rev[..n - i]);
                    pattern.push(d);
                    pattern.extend_from_slice(&rev[n - i..]);
                    patterns.push(pattern);
                }
            }
        }
        Ok(Self { n, bound: n, patterns })
    }

    fn check_size(n: usize) -> Result<()> {
        if n > Self::MAX_N {
            return Err(Error::params(format!("brute-force validation supports n <= {}", Self::MAX_N)));
        }
        Ok(())
    }

    fn skip_patterns(n: usize, k: usize) -> Vec<Vec<usize>> {
        subsets_of_size(n, n - k + 1)
            .map(|s| skip_sequence(&s, n).expect("subset in range").reversed())
            .collect()
    }

    pub fn is_valid(&self, code: &[usize]) -> Result<bool> {
        if code.len() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: code.len() });
        }
        Ok(code.iter().all(|&c| c < self.bound)
            && !self.patterns.iter().any(|p| dominates(code, p)))
    }
}

pub fn is_valid_code(code: &[usize], n: usize, k: usize) -> Result<bool> {
    CodeValidator::plain(n, k)?.is_valid(code)
}

pub fn is_valid_boosted_code(code: &[usize], n: usize, k: usize) -> Result<bool> {
    CodeValidator::boosted(n, k)?.is_valid(code)
}
