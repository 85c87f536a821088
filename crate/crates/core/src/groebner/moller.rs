//! Buchberger–Möller: the reduced Gröbner basis of the vanishing ideal of a
//! finite point set, by row-reducing evaluation vectors of monomials taken
//! in increasing order.

use std::collections::{BTreeSet, HashSet};

use num::{One, Zero};

use super::sparse::{OrderKey, SortedPoly};
use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, MonomialOrder, Rational};

struct Row {
    values: Vec<Rational>,
    pivot: usize,
    /// Coefficients over the standard monomials found so far.
    combo: Vec<Rational>,
}

fn evaluate_monomial(e: &ExponentVector, points: &[Vec<Rational>]) -> Vec<Rational> {
    points
        .iter()
        .map(|p| {
            let mut v = Rational::one();
            for (x, &a) in p.iter().zip(e.as_slice()) {
                for _ in 0..a {
                    v *= x;
                }
            }
            v
        })
        .collect()
}

/// Reduced Gröbner basis of `I(X) = { f : f(x) = 0 for all x ∈ X }`.
pub fn vanishing_ideal(points: &[Vec<Rational>], order: MonomialOrder) -> Result<GroebnerBasis> {
    let Some(first) = points.first() else {
        return Err(Error::params("vanishing ideal needs at least one point"));
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::params("points must have at least one coordinate"));
    }
    let mut seen = HashSet::new();
    for p in points {
        if p.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: p.len() });
        }
        if !seen.insert(p) {
            return Err(Error::DuplicatePoint(p.iter().map(|c| c.to_string()).collect()));
        }
    }

    let mut standard: Vec<ExponentVector> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut leads: Vec<ExponentVector> = Vec::new();
    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut candidates: BTreeSet<OrderKey> = BTreeSet::new();
    candidates.insert(OrderKey::new(ExponentVector::zero(n), order));

    while let Some(key) = candidates.pop_first() {
        let t = key.exponents().clone();
        if leads.iter().any(|l| l.divides(&t)) {
            continue;
        }
        let mut values = evaluate_monomial(&t, points);
        let mut combo = vec![Rational::zero(); standard.len()];
        for row in &rows {
            let factor = values[row.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, r) in values.iter_mut().zip(&row.values) {
                if !r.is_zero() {
                    *v -= &factor * r;
                }
            }
            for (c, r) in combo.iter_mut().zip(&row.combo) {
                if !r.is_zero() {
                    *c -= &factor * r;
                }
            }
        }
        match values.iter().position(|v| !v.is_zero()) {
            None => {
                // t + Σ combo_j s_j vanishes on every point
                let mut terms: Vec<(OrderKey, Rational)> = vec![(key.clone(), Rational::one())];
                for (s, c) in standard.iter().zip(combo) {
                    if !c.is_zero() {
                        terms.push((OrderKey::new(s.clone(), order), c));
                    }
                }
                terms[1..].sort_by(|a, b| b.0.cmp(&a.0));
                basis.push(SortedPoly { order, terms });
                leads.push(t);
            }
            Some(pivot) => {
                let inv = values[pivot].recip();
                for v in &mut values {
                    *v *= &inv;
                }
                combo.push(Rational::one());
                for c in &mut combo {
                    *c *= &inv;
                }
                for r in &mut rows {
                    r.combo.push(Rational::zero());
                }
                rows.push(Row { values, pivot, combo });
                standard.push(t.clone());
                for i in 0..n {
                    let mut e = t.as_slice().to_vec();
                    e[i] += 1;
                    candidates.insert(OrderKey::new(ExponentVector::new(e), order));
                }
            }
        }
    }
    Ok(GroebnerBasis::from_reduced(n, order, basis))
}
