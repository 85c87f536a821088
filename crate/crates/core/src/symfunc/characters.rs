use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use super::Partition;
use crate::error::{Error, Result};
use crate::polyring::{int, Rational};

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::params(format!("{lambda} and {mu} have different sizes")));
    }
    Ok(mn(lambda.parts(), mu.parts(), &mut Memo::new()))
}

/// Removes border strips of length `μ_1` through the beta-set (abacus)
/// encoding: a strip is a bead moved from `b` to an empty `b − r`, with
/// height equal to the number of beads strictly between.
fn mn(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let m = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + m - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = b - r;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> =
            moved.iter().enumerate().map(|(i, &c)| c - (m - 1 - i)).filter(|&p| p > 0).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The full character table of `S_n`, rows and columns in the order of
/// [`Partition::all`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = Partition::all(n);
        let mut memo = Memo::new();
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|m| mn(l.parts(), m.parts(), &mut memo)).collect())
            .collect();
        Self { partitions, values }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn value(&self, lambda: usize, mu: usize) -> i64 {
        self.values[lambda][mu]
    }
}

/// Schur coefficients of a class function: `c_λ = Σ_μ f(μ) χ^λ(μ) / z_μ`.
pub fn schur_expand(classfn: &BTreeMap<Partition, Rational>) -> Result<BTreeMap<Partition, Rational>> {
    let n = classfn.keys().next().map_or(0, Partition::size);
    let table = CharacterTable::new(n);
    for mu in table.partitions() {
        if !classfn.contains_key(mu) {
            return Err(Error::params(format!("class function is missing the class {mu}")));
        }
    }
    if classfn.len() != table.partitions().len() {
        return Err(Error::params("class function has classes of mixed sizes"));
    }
    let mut out = BTreeMap::new();
    for (li, lambda) in table.partitions().iter().enumerate() {
        let mut c = Rational::zero();
        for (mi, mu) in table.partitions().iter().enumerate() {
            c += &classfn[mu] * int(table.value(li, mi)) / int(mu.z() as i64);
        }
        if !c.is_zero() {
            out.insert(lambda.clone(), c);
        }
    }
    Ok(out)
}

/// Number of words in `W_{n,k}` fixed by a permutation of cycle type `μ`:
/// such words are constant on cycles, so this counts surjections from the
/// cycles onto `[j]` for `j >= k`.
pub fn packed_fixed_points(n: usize, k: usize, mu: &Partition) -> Result<u64> {
    if mu.size() != n {
        return Err(Error::params(format!("{mu} is not a partition of {n}")));
    }
    if k == 0 || k > n {
        return Err(Error::params(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let m = mu.len();
    // stirling[i][j] = S(i, j)
    let mut stirling = vec![vec![0u64; m + 1]; m + 1];
    stirling[0][0] = 1;
    for i in 1..=m {
        for j in 1..=i {
            stirling[i][j] = j as u64 * stirling[i - 1][j] + stirling[i - 1][j - 1];
        }
    }
    let mut total = 0u64;
    let mut fact = 1u64;
    for j in 1..=m {
        fact *= j as u64;
        if j >= k {
            total += fact * stirling[m][j];
        }
    }
    Ok(total)
}

/// Integer form of a Schur coefficient map, failing on non-integral values.
pub(crate) fn integral(coeffs: &BTreeMap<Partition, Rational>) -> Result<BTreeMap<Partition, i64>> {
    coeffs
        .iter()
        .map(|(l, c)| {
            if !c.denom().is_one() {
                return Err(Error::Inconsistent(format!("non-integral multiplicity {c} at {l}")));
            }
            let v: i64 = c.numer().try_into().map_err(|_| Error::Inconsistent("multiplicity overflow".into()))?;
            Ok((l.clone(), v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::enumerate_packed_words;
    use crate::Permutation;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn character_examples() {
        for mu in Partition::all(4) {
            assert_eq!(mn_character(&p(&[4]), &mu).unwrap(), 1);
        }
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn identity_column_is_hook_count() {
        for n in 1..=7 {
            let ones = Partition::new(vec![1; n]).unwrap();
            for l in Partition::all(n) {
                assert_eq!(mn_character(&l, &ones).unwrap() as u64, l.num_syt());
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=6 {
            let table = CharacterTable::new(n);
            let parts = table.partitions();
            for a in 0..parts.len() {
                for b in 0..parts.len() {
                    let mut s = Rational::zero();
                    for (m, mu) in parts.iter().enumerate() {
                        s += int(table.value(a, m) * table.value(b, m)) / int(mu.z() as i64);
                    }
                    assert_eq!(s, int(i64::from(a == b)), "n={n} {} {}", parts[a], parts[b]);
                }
            }
        }
    }

    #[test]
    fn sign_character_is_conjugate_twist() {
        // χ^{λ'} = sgn · χ^λ
        for n in 1..=6 {
            for l in Partition::all(n) {
                for mu in Partition::all(n) {
                    let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        mn_character(&l.conjugate(), &mu).unwrap(),
                        sign * mn_character(&l, &mu).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn schur_expand_examples() {
        let n = 4;
        let fact: i64 = 24;
        let regular: BTreeMap<Partition, Rational> = Partition::all(n)
            .into_iter()
            .map(|m| {
                let v = if m.len() == n { fact } else { 0 };
                (m, int(v))
            })
            .collect();
        let c = schur_expand(&regular).unwrap();
        for l in Partition::all(n) {
            assert_eq!(c[&l], int(l.num_syt() as i64));
        }

        let trivial: BTreeMap<Partition, Rational> = Partition::all(n).into_iter().map(|m| (m, int(1))).collect();
        let c = schur_expand(&trivial).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&p(&[4])], int(1));

        let words: BTreeMap<Partition, Rational> =
            [(p(&[1, 1, 1]), 13), (p(&[2, 1]), 3), (p(&[3]), 1)].into_iter().map(|(m, v)| (m, int(v))).collect();
        let c = schur_expand(&words).unwrap();
        assert_eq!(c[&p(&[3])], int(4));
        assert_eq!(c[&p(&[2, 1])], int(4));
        assert_eq!(c[&p(&[1, 1, 1])], int(1));

        let mut missing = words.clone();
        missing.remove(&p(&[3]));
        assert!(schur_expand(&missing).is_err());
    }

    #[test]
    fn fixed_points_match_enumeration() {
        assert_eq!(packed_fixed_points(3, 1, &p(&[1, 1, 1])).unwrap(), 13);
        assert_eq!(packed_fixed_points(3, 1, &p(&[2, 1])).unwrap(), 3);
        assert_eq!(packed_fixed_points(3, 1, &p(&[3])).unwrap(), 1);
        for n in 1..=5 {
            for k in 1..=n {
                let words = enumerate_packed_words(n, k).unwrap();
                for mu in Partition::all(n) {
                    let pi = Permutation::from_cycle_type(mu.parts());
                    let fixed = words.iter().filter(|w| w.permute(&pi).unwrap() == **w).count() as u64;
                    assert_eq!(packed_fixed_points(n, k, &mu).unwrap(), fixed, "n={n} k={k} {mu}");
                }
            }
        }
    }
}
