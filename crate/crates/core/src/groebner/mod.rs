//! Gröbner bases over `Q`, normal forms, standard monomials and Hilbert
//! series, vanishing ideals of finite point sets and associated graded ideals.

mod buchberger;
mod cache;
mod moller;
mod sparse;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, MonomialOrder, Polynomial, Rational};
use crate::symfunc::QPolynomial;

pub use buchberger::buchberger;
pub use cache::{GroebnerCache, CACHE_DIR_ENV};
pub use moller::vanishing_ideal;

use sparse::SortedPoly;

/// A finite list of generators of a common arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealPresentation {
    arity: usize,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl IdealPresentation {
    /// Drops zero and repeated generators, keeping first occurrences.
    pub fn new(arity: usize, generators: Vec<Polynomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for g in generators {
            if g.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: g.arity() });
            }
            if !g.is_zero() && seen.insert(g.clone()) {
                kept.push(g);
            }
        }
        if kept.is_empty() {
            return Err(Error::params("ideal presentation needs a nonzero generator"));
        }
        let homogeneous = kept.iter().all(Polynomial::is_homogeneous);
        Ok(Self { arity, generators: kept, homogeneous })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }
}

/// A reduced Gröbner basis together with its monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    arity: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    reduced: bool,
    sorted: Vec<SortedPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    /// Wraps polynomials already known to form a reduced Gröbner basis,
    /// sorting them by decreasing leading monomial.
    pub(crate) fn from_reduced(arity: usize, order: MonomialOrder, mut sorted: Vec<SortedPoly>) -> Self {
        sorted.sort_by(|a, b| b.leading_key().cmp(a.leading_key()));
        let basis = sorted.iter().map(|p| p.to_polynomial(arity)).collect();
        Self { arity, order, basis, reduced: true, sorted }
    }

    pub(crate) fn from_polynomials(arity: usize, order: MonomialOrder, basis: Vec<Polynomial>) -> Self {
        let sorted = basis.iter().map(|p| SortedPoly::from_polynomial(p, order)).collect();
        Self::from_reduced(arity, order, sorted)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.sorted.iter().map(|p| p.leading_key().exponents().clone()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.basis.iter().all(Polynomial::is_homogeneous)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    pub fn as_ideal(&self) -> Result<IdealPresentation> {
        IdealPresentation::new(self.arity, self.basis.clone())
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|p| p.leading_key().exponents().degree() == 0)
    }
}

/// Remainder of `f` on division by `G`: no remaining term is divisible by a
/// leading monomial of `G`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.arity() != gb.arity {
        return Err(Error::ArityMismatch { expected: gb.arity, found: f.arity() });
    }
    let sorted = SortedPoly::from_polynomial(f, gb.order);
    Ok(sparse::reduce(sorted, &gb.sorted).to_polynomial(gb.arity))
}

/// Standard monomials grouped by total degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardMonomialSet {
    by_degree: Vec<Vec<ExponentVector>>,
}

impl StandardMonomialSet {
    pub fn by_degree(&self) -> &[Vec<ExponentVector>] {
        &self.by_degree
    }

    pub fn degree_counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.by_degree.iter().flatten()
    }
}

/// Monomials outside the leading-monomial ideal. Requires a
/// zero-dimensional ideal.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<StandardMonomialSet> {
    let leads = gb.leading_monomials();
    let n = gb.arity;
    let mut bounds = vec![None; n];
    for lm in &leads {
        if lm.degree() == 0 {
            return Ok(StandardMonomialSet { by_degree: Vec::new() });
        }
        if let Some((i, a)) = lm.pure_power() {
            bounds[i] = Some(bounds[i].map_or(a, |b: u32| b.min(a)));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>().ok_or(Error::InfiniteQuotient)?;

    let mut found = Vec::new();
    let mut current = vec![0u32; n];
    collect_standard(0, &mut current, &bounds, &leads, &mut found);

    let max_deg = found.iter().map(ExponentVector::degree).max().unwrap_or(0) as usize;
    let mut by_degree = vec![Vec::new(); if found.is_empty() { 0 } else { max_deg + 1 }];
    for m in found {
        by_degree[m.degree() as usize].push(m);
    }
    for group in &mut by_degree {
        group.sort_by(|a, b| gb.order.cmp(a, b));
    }
    Ok(StandardMonomialSet { by_degree })
}

fn collect_standard(
    var: usize,
    current: &mut Vec<u32>,
    bounds: &[u32],
    leads: &[ExponentVector],
    out: &mut Vec<ExponentVector>,
) {
    let divisible = |v: &[u32]| leads.iter().any(|lm| lm.as_slice().iter().zip(v).all(|(a, b)| a <= b));
    if var == current.len() {
        out.push(ExponentVector::new(current.clone()));
        return;
    }
    for a in 0..bounds[var] {
        current[var] = a;
        // completing with zeros is the smallest extension; once it is
        // divisible every larger exponent here is too
        if divisible(current) {
            break;
        }
        collect_standard(var + 1, current, bounds, leads, out);
    }
    current[var] = 0;
}

/// Degree census of the standard monomials of a homogeneous ideal.
pub fn hilbert_series(gb: &GroebnerBasis) -> Result<QPolynomial> {
    if !gb.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let sm = standard_monomials(gb)?;
    Ok(QPolynomial::new(sm.degree_counts().into_iter().map(|c| c as i64).collect()))
}

/// Top-degree forms of a graded-lex Gröbner basis of the ideal, which
/// generate its associated graded ideal.
pub fn associated_graded(ideal: &IdealPresentation) -> Result<IdealPresentation> {
    let gb = buchberger(ideal, MonomialOrder::GrLex)?;
    graded_from_basis(&gb)
}

/// `T(X)` for a finite point set `X`.
pub fn associated_graded_of_points(points: &[Vec<Rational>]) -> Result<IdealPresentation> {
    let gb = vanishing_ideal(points, MonomialOrder::GrLex)?;
    let graded = graded_from_basis(&gb)?;
    let dim = standard_monomials(&buchberger(&graded, MonomialOrder::GrLex)?)?.len();
    if dim != points.len() {
        return Err(Error::Inconsistent(format!(
            "associated graded quotient has dimension {dim}, expected {}",
            points.len()
        )));
    }
    Ok(graded)
}

fn graded_from_basis(gb: &GroebnerBasis) -> Result<IdealPresentation> {
    if gb.order != MonomialOrder::GrLex {
        return Err(Error::params("top forms need a degree-compatible order"));
    }
    let original = standard_monomials(gb)?.len();
    let tops: Vec<Polynomial> = gb.basis.iter().map(Polynomial::top_form).collect();
    let graded = IdealPresentation::new(gb.arity, tops)?;
    let check = standard_monomials(&buchberger(&graded, MonomialOrder::GrLex)?)?.len();
    if check != original {
        return Err(Error::Inconsistent(format!(
            "associated graded quotient has dimension {check}, expected {original}"
        )));
    }
    Ok(graded)
}

/// Whether two presentations generate the same ideal: every generator of
/// each reduces to zero modulo a Gröbner basis of the other.
pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation, order: MonomialOrder) -> Result<bool> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch { expected: a.arity, found: b.arity });
    }
    let ga = buchberger(a, order)?;
    let gb = buchberger(b, order)?;
    for g in &b.generators {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in &a.generators {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
