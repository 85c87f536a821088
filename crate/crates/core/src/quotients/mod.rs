//! The ideals `J_{n,k}` and `I_{n,k}`, the point loci `X_{n,k}` built from
//! packed words, the quotient rings they define and their graded
//! symmetric-group structure.

mod verify;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::codes::{enumerate_packed_words, PackedWord};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, hilbert_series, normal_form, standard_monomials, GroebnerBasis, GroebnerCache,
    IdealPresentation, StandardMonomialSet,
};
use crate::polyring::{
    complete_homogeneous_eval, elementary_symmetric, int, MonomialOrder, Polynomial, Rational,
};
use crate::symfunc::{
    from_graded_multiplicities, integral, schur_expand, Partition, QPolynomial, SchurSymmetricFunction,
};
use crate::Permutation;

pub use verify::{
    calibration, check_vanishing_polys, coinvariant_twist, Calibration, Reflection, Report, Suite, Verifier,
};

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::params(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

fn all_vars(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn vars_without(n: usize, i: usize) -> Vec<usize> {
    (1..=n).filter(|&v| v != i).collect()
}

/// `J_{n,k}`: the products `x_i^d e_{n−r}^{(i)}` for `1 <= r <= d <= n`
/// together with `e_n, e_{n−1}, …, e_{n−k+1}`.
pub fn ideal_j(n: usize, k: usize) -> Result<IdealPresentation> {
    check_nk(n, k)?;
    let mut gens = Vec::new();
    for i in 1..=n {
        let others = vars_without(n, i);
        for d in 1..=n {
            let power = Polynomial::var(n, i).pow(d as u32);
            for r in 1..=d {
                gens.push(&power * &elementary_symmetric(n, (n - r) as i64, &others)?);
            }
        }
    }
    for j in (n - k + 1..=n).rev() {
        gens.push(elementary_symmetric(n, j as i64, &all_vars(n))?);
    }
    IdealPresentation::new(n, gens)
}

/// `I_{n,k} = ⟨x_1^k, …, x_n^k, e_n, …, e_{n−k+1}⟩`.
pub fn ideal_i(n: usize, k: usize) -> Result<IdealPresentation> {
    check_nk(n, k)?;
    let mut gens: Vec<Polynomial> = (1..=n).map(|i| Polynomial::var(n, i).pow(k as u32)).collect();
    for j in (n - k + 1..=n).rev() {
        gens.push(elementary_symmetric(n, j as i64, &all_vars(n))?);
    }
    IdealPresentation::new(n, gens)
}

/// `α = (1, 2, …, n)`.
pub fn default_alpha(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(int).collect()
}

/// The points `(α_{w_1}, …, α_{w_n})` for `w ∈ W_{n,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointLocus {
    n: usize,
    k: usize,
    alpha: Vec<Rational>,
    words: Vec<PackedWord>,
    points: Vec<Vec<Rational>>,
}

impl PointLocus {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn words(&self) -> &[PackedWord] {
        &self.words
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_alpha(alpha: &[Rational], needed: usize) -> Result<()> {
    if alpha.len() < needed {
        return Err(Error::params(format!("need at least {needed} parameters, got {}", alpha.len())));
    }
    let distinct: HashSet<&Rational> = alpha.iter().collect();
    if distinct.len() != alpha.len() {
        return Err(Error::params("parameters must be distinct"));
    }
    Ok(())
}

pub fn locus(n: usize, k: usize, alpha: &[Rational]) -> Result<PointLocus> {
    check_nk(n, k)?;
    check_alpha(alpha, n)?;
    let words = enumerate_packed_words(n, k)?;
    let points = words.iter().map(|w| w.letters().iter().map(|&l| alpha[l - 1].clone()).collect()).collect();
    Ok(PointLocus { n, k, alpha: alpha[..n].to_vec(), words, points })
}

/// `(x_i − α_1)⋯(x_i − α_d) · Σ_{a+b=n−r} (−1)^a e_a^{(i)} h_b(α_1, …, α_d)`,
/// which vanishes on every `X_{n,k}` when `r <= d`.
pub fn vanishing_poly_f(i: usize, d: usize, r: usize, alpha: &[Rational], n: usize) -> Result<Polynomial> {
    if i == 0 || i > n || r == 0 || r > d || d > n {
        return Err(Error::params(format!("need 1 <= i <= n and 1 <= r <= d <= n, got i={i} d={d} r={r} n={n}")));
    }
    check_alpha(alpha, d)?;
    let xi = Polynomial::var(n, i);
    let mut prod = Polynomial::one(n);
    for a in &alpha[..d] {
        prod = &prod * &(&xi - &Polynomial::constant(n, a.clone()));
    }
    let others = vars_without(n, i);
    let top = (n - r) as i64;
    let mut sum = Polynomial::zero(n);
    for a in 0..=top {
        let h = complete_homogeneous_eval(top - a, &alpha[..d]);
        let sign = if a % 2 == 0 { h } else { -h };
        sum = &sum + &elementary_symmetric(n, a, &others)?.scale(&sign);
    }
    Ok(&prod * &sum)
}

/// `Σ_{a+b=d} (−1)^a e_a h_b(α_1, …, α_k)`, which vanishes on `X_{n,k}`
/// for `d > n − k`.
pub fn vanishing_poly_g(d: usize, k: usize, alpha: &[Rational], n: usize) -> Result<Polynomial> {
    check_nk(n, k)?;
    if d + k <= n || d > n {
        return Err(Error::params(format!("need n - k < d <= n, got d = {d}, n = {n}, k = {k}")));
    }
    check_alpha(alpha, k)?;
    let mut sum = Polynomial::zero(n);
    for a in 0..=d as i64 {
        let h = complete_homogeneous_eval(d as i64 - a, &alpha[..k]);
        let sign = if a % 2 == 0 { h } else { -h };
        sum = &sum + &elementary_symmetric(n, a, &all_vars(n))?.scale(&sign);
    }
    Ok(sum)
}

/// Which family an ideal belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingKind {
    /// `S_{n,k} = Q[x]/J_{n,k}`.
    #[serde(rename = "S")]
    Packed,
    /// `R_{n,k} = Q[x]/I_{n,k}`.
    #[serde(rename = "R")]
    Coinvariant,
    #[serde(rename = "custom")]
    Custom,
}

impl RingKind {
    /// File-name prefix for cached bases.
    pub fn cache_tag(self) -> &'static str {
        match self {
            RingKind::Packed => "J",
            RingKind::Coinvariant => "I",
            RingKind::Custom => "custom",
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::Packed => "S",
            RingKind::Coinvariant => "R",
            RingKind::Custom => "custom",
        })
    }
}

/// A zero-dimensional graded quotient `Q[x_1, …, x_n]/I` with its lex
/// Gröbner basis and standard monomial basis.
#[derive(Debug)]
pub struct QuotientRing {
    kind: RingKind,
    n: usize,
    k: usize,
    ideal: IdealPresentation,
    gb: GroebnerBasis,
    standard: StandardMonomialSet,
    hilbert: QPolynomial,
    stable: OnceLock<bool>,
}

impl QuotientRing {
    pub fn new(
        kind: RingKind,
        n: usize,
        k: usize,
        ideal: IdealPresentation,
        cache: Option<&GroebnerCache>,
    ) -> Result<Self> {
        let order = MonomialOrder::Lex;
        let gb = match cache {
            Some(c) => c.get_or_compute(kind.cache_tag(), n, k, &ideal, order)?,
            None => buchberger(&ideal, order)?,
        };
        let standard = standard_monomials(&gb)?;
        let hilbert = hilbert_series(&gb)?;
        Ok(Self { kind, n, k, ideal, gb, standard, hilbert, stable: OnceLock::new() })
    }

    /// `S_{n,k}`.
    pub fn packed(n: usize, k: usize, cache: Option<&GroebnerCache>) -> Result<Self> {
        Self::new(RingKind::Packed, n, k, ideal_j(n, k)?, cache)
    }

    /// `R_{n,k}`.
    pub fn coinvariant(n: usize, k: usize, cache: Option<&GroebnerCache>) -> Result<Self> {
        Self::new(RingKind::Coinvariant, n, k, ideal_i(n, k)?, cache)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn standard_monomials(&self) -> &StandardMonomialSet {
        &self.standard
    }

    pub fn hilbert_series(&self) -> &QPolynomial {
        &self.hilbert
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// Whether every adjacent transposition maps the ideal into itself.
    pub fn is_stable(&self) -> Result<bool> {
        if let Some(&s) = self.stable.get() {
            return Ok(s);
        }
        let mut stable = true;
        'outer: for i in 1..self.n {
            let s = Permutation::transposition(self.n, i, i + 1)?;
            for g in self.gb.basis() {
                if !normal_form(&g.apply_permutation(&s)?, &self.gb)?.is_zero() {
                    stable = false;
                    break 'outer;
                }
            }
        }
        Ok(*self.stable.get_or_init(|| stable))
    }

    /// Graded trace of `x_i ↦ x_{π(i)}` on the standard monomial basis.
    pub fn trace(&self, pi: &Permutation) -> Result<QPolynomial> {
        if !self.is_stable()? {
            return Err(Error::NotStable);
        }
        if pi.len() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: pi.len() });
        }
        let mut coeffs = Vec::with_capacity(self.standard.by_degree().len());
        for group in self.standard.by_degree() {
            let mut tr = Rational::zero();
            for m in group {
                let image = Polynomial::monomial(m.permute(pi));
                tr += normal_form(&image, &self.gb)?.coefficient(m);
            }
            coeffs.push(rational_to_i64(&tr)?);
        }
        Ok(QPolynomial::new(coeffs))
    }

    /// Coordinates of `f mod I` on the standard monomials of degree `d`.
    pub(crate) fn coordinates_in_degree(&self, f: &Polynomial, d: usize) -> Result<Vec<Rational>> {
        let nf = normal_form(f, &self.gb)?;
        Ok(match self.standard.by_degree().get(d) {
            Some(group) => group.iter().map(|m| nf.coefficient(m)).collect(),
            None => Vec::new(),
        })
    }
}

fn rational_to_i64(r: &Rational) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::Inconsistent(format!("non-integral trace {r}")));
    }
    r.to_integer().try_into().map_err(|_| Error::Inconsistent("trace overflow".into()))
}

/// Graded character value at the canonical permutation of cycle type `μ`.
pub fn graded_character(q: &QuotientRing, mu: &Partition) -> Result<QPolynomial> {
    if mu.size() != q.n {
        return Err(Error::params(format!("{mu} is not a partition of {}", q.n)));
    }
    q.trace(&Permutation::from_cycle_type(mu.parts()))
}

/// Graded character on every conjugacy class.
pub fn graded_characters(q: &QuotientRing) -> Result<BTreeMap<Partition, QPolynomial>> {
    Partition::all(q.n).into_iter().map(|mu| Ok((mu.clone(), graded_character(q, &mu)?))).collect()
}

/// `grFrob(Q; q) = Σ_d Frob(Q_d) q^d`.
pub fn graded_frobenius(q: &QuotientRing) -> Result<SchurSymmetricFunction> {
    let chars = graded_characters(q)?;
    let top = chars.values().filter_map(QPolynomial::degree).max().unwrap_or(0);
    let mut by_degree = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let classfn: BTreeMap<Partition, Rational> =
            chars.iter().map(|(mu, ch)| (mu.clone(), int(ch.coefficient(d)))).collect();
        by_degree.push(integral(&schur_expand(&classfn)?)?);
    }
    from_graded_multiplicities(q.n, &by_degree)
}

#[cfg(test)]
mod tests;
