//! Partitions, standard Young tableaux, `q`-analogs, Schur expansions of
//! symmetric functions with `q`-polynomial coefficients, and the `C_{n,k}`
//! functions together with the `ω` and `rev_q` operators.

mod characters;
mod partition;
mod qpoly;
mod tableaux;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use characters::{mn_character, packed_fixed_points, schur_expand, CharacterTable};
pub(crate) use characters::integral;
pub use partition::Partition;
pub use qpoly::{q_binomial, QPolynomial};
pub use tableaux::{all_syt, enumerate_syt, StandardYoungTableau};

/// A symmetric function of degree `n` in the Schur basis with coefficients
/// in `Z[q]`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SchurJson", into = "SchurJson")]
pub struct SchurSymmetricFunction {
    n: usize,
    terms: BTreeMap<Partition, QPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct SchurTerm {
    lambda: Partition,
    q: QPolynomial,
}

#[derive(Serialize, Deserialize)]
struct SchurJson {
    n: usize,
    terms: Vec<SchurTerm>,
}

impl TryFrom<SchurJson> for SchurSymmetricFunction {
    type Error = Error;
    fn try_from(json: SchurJson) -> Result<Self> {
        let mut f = Self::zero(json.n);
        for t in json.terms {
            f.add_term(t.lambda, &t.q)?;
        }
        Ok(f)
    }
}

impl From<SchurSymmetricFunction> for SchurJson {
    fn from(f: SchurSymmetricFunction) -> Self {
        SchurJson {
            n: f.n,
            terms: f.terms.into_iter().rev().map(|(lambda, q)| SchurTerm { lambda, q }).collect(),
        }
    }
}

impl SchurSymmetricFunction {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.size());
        f.terms.insert(lambda, QPolynomial::one());
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with partitions in decreasing lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPolynomial)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, lambda: &Partition) -> QPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, q: &QPolynomial) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::params(format!("{lambda} is not a partition of {}", self.n)));
        }
        let sum = &self.coefficient(&lambda) + q;
        if sum.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, sum);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ArityMismatch { expected: self.n, found: other.n });
        }
        let mut out = self.clone();
        for (l, q) in &other.terms {
            out.add_term(l.clone(), q)?;
        }
        Ok(out)
    }

    /// Multiplication by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        Self { n: self.n, terms: self.terms.iter().map(|(l, q)| (l.clone(), q.shift(d))).collect() }
    }

    /// `s_λ ↦ s_{λ'}`.
    pub fn omega(&self) -> Self {
        Self { n: self.n, terms: self.terms.iter().map(|(l, q)| (l.conjugate(), q.clone())).collect() }
    }

    /// Largest `q`-degree over all coefficients.
    pub fn q_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(QPolynomial::degree).max()
    }

    /// Reflects every coefficient about `d`, defaulting to [`Self::q_degree`].
    pub fn rev_q(&self, d: Option<usize>) -> Result<Self> {
        let Some(top) = self.q_degree() else {
            return Ok(self.clone());
        };
        let d = d.unwrap_or(top);
        let terms = self
            .terms
            .iter()
            .map(|(l, q)| Ok((l.clone(), q.rev(Some(d))?)))
            .collect::<Result<_>>()?;
        Ok(Self { n: self.n, terms })
    }

    /// Multiplicities at `q = 1`.
    pub fn at_q_one(&self) -> BTreeMap<Partition, i64> {
        self.terms
            .iter()
            .map(|(l, q)| (l.clone(), q.eval_at_one()))
            .filter(|(_, v)| *v != 0)
            .collect()
    }
}

impl fmt::Display for SchurSymmetricFunction {
    /// Grouped by powers of `q`, e.g. `s[2] + q*(s[2] + s[1,1])`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let top = self.q_degree().unwrap_or(0);
        let mut groups = Vec::new();
        for d in 0..=top {
            let parts: Vec<String> = self
                .terms()
                .filter(|(_, q)| q.coefficient(d) != 0)
                .map(|(l, q)| match q.coefficient(d) {
                    1 => format!("s{l}"),
                    -1 => format!("-s{l}"),
                    c => format!("{c}*s{l}"),
                })
                .collect();
            if parts.is_empty() {
                continue;
            }
            let body = parts.join(" + ").replace("+ -", "- ");
            let power = match d {
                0 => String::new(),
                1 => "q*".to_string(),
                _ => format!("q^{d}*"),
            };
            if d > 0 && parts.len() > 1 {
                groups.push(format!("{power}({body})"));
            } else {
                groups.push(format!("{power}{body}"));
            }
        }
        write!(f, "{}", groups.join(" + "))
    }
}

/// Which partition a tableau contributes to `C_{n,k}`: its own shape or
/// the conjugate shape. Descents and major index are always the standard
/// statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeRule {
    Shape,
    ConjugateShape,
}

/// Sign of the `(n − k) · des(T)` term in the exponent of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DescentWeight {
    Plus,
    Minus,
}

/// A reading of the `C_{n,k}` generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Convention {
    pub shape: ShapeRule,
    pub descent_weight: DescentWeight,
}

impl Convention {
    /// `s_{shape(T)'}` with `+ (n − k) des(T)`.
    pub const LITERAL: Convention = Convention { shape: ShapeRule::ConjugateShape, descent_weight: DescentWeight::Plus };

    pub const fn new(shape: ShapeRule, descent_weight: DescentWeight) -> Self {
        Self { shape, descent_weight }
    }

    pub fn candidates() -> [Convention; 4] {
        [
            Self::new(ShapeRule::Shape, DescentWeight::Plus),
            Self::new(ShapeRule::ConjugateShape, DescentWeight::Plus),
            Self::new(ShapeRule::Shape, DescentWeight::Minus),
            Self::new(ShapeRule::ConjugateShape, DescentWeight::Minus),
        ]
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = match self.shape {
            ShapeRule::Shape => "shape",
            ShapeRule::ConjugateShape => "conjugate-shape",
        };
        let sign = match self.descent_weight {
            DescentWeight::Plus => "+",
            DescentWeight::Minus => "-",
        };
        write!(f, "standard-descents+{shape}, q^(maj + C(n-k,2) {sign} (n-k)des)")
    }
}

/// `C_{n,k} = Σ_T q^{maj(T) + C(n−k, 2) ± (n−k) des(T)} [des(T) choose n−k]_q s_{λ(T)}`
/// over standard Young tableaux `T` with `n` boxes.
pub fn c_function(n: usize, k: usize, convention: Convention) -> Result<SchurSymmetricFunction> {
    if k == 0 || k > n {
        return Err(Error::params(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let m = n - k;
    let mut out = SchurSymmetricFunction::zero(n);
    for t in all_syt(n) {
        let (des, maj) = t.des_maj();
        let binom = q_binomial(des as i64, m as i64);
        if binom.is_zero() {
            continue;
        }
        // nonnegative whenever des >= m, since maj >= des(des+1)/2
        let exponent = match convention.descent_weight {
            DescentWeight::Plus => maj + m * m.saturating_sub(1) / 2 + m * des,
            DescentWeight::Minus => maj + m * m.saturating_sub(1) / 2 - m * des,
        };
        let lambda = match convention.shape {
            ShapeRule::Shape => t.shape(),
            ShapeRule::ConjugateShape => t.shape().conjugate(),
        };
        out.add_term(lambda, &binom.shift(exponent))?;
    }
    Ok(out)
}

pub fn omega(f: &SchurSymmetricFunction) -> SchurSymmetricFunction {
    f.omega()
}

pub fn rev_q(f: &SchurSymmetricFunction, d: Option<usize>) -> Result<SchurSymmetricFunction> {
    f.rev_q(d)
}

/// The graded Frobenius image of a module from its degree-wise Schur
/// multiplicities, rejecting negative entries.
pub(crate) fn from_graded_multiplicities(
    n: usize,
    by_degree: &[BTreeMap<Partition, i64>],
) -> Result<SchurSymmetricFunction> {
    let mut out = SchurSymmetricFunction::zero(n);
    for (d, mults) in by_degree.iter().enumerate() {
        for (l, &c) in mults {
            if c < 0 {
                return Err(Error::Inconsistent(format!("negative multiplicity {c} of {l} in degree {d}")));
            }
            out.add_term(l.clone(), &QPolynomial::monomial(c, d))?;
        }
    }
    Ok(out)
}
