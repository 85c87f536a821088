//! Order-aware term lists used inside the Gröbner engine.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::polyring::{ExponentVector, MonomialOrder, Polynomial, Rational};

/// Sort key realizing a monomial order through the derived tuple ordering:
/// the degree slot is zero under lex and the total degree under grlex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct OrderKey(u32, ExponentVector);

impl OrderKey {
    pub fn new(e: ExponentVector, order: MonomialOrder) -> Self {
        let deg = match order {
            MonomialOrder::Lex => 0,
            MonomialOrder::GrLex => e.degree(),
        };
        OrderKey(deg, e)
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.1
    }

    pub fn mul(&self, m: &ExponentVector, order: MonomialOrder) -> Self {
        OrderKey::new(self.1.mul(m), order)
    }
}

/// Terms in strictly decreasing order; the first term is the leading one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SortedPoly {
    pub order: MonomialOrder,
    pub terms: Vec<(OrderKey, Rational)>,
}

impl SortedPoly {
    pub fn from_polynomial(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms: Vec<(OrderKey, Rational)> =
            p.terms().map(|(e, c)| (OrderKey::new(e.clone(), order), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Self { order, terms }
    }

    pub fn to_polynomial(&self, arity: usize) -> Polynomial {
        Polynomial::from_terms(arity, self.terms.iter().map(|(k, c)| (c.clone(), k.exponents().clone())))
            .expect("arity is uniform")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_key(&self) -> &OrderKey {
        &self.terms[0].0
    }

    pub fn leading_exponents(&self) -> &ExponentVector {
        self.terms[0].0.exponents()
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.terms[0].1.is_one() {
            return;
        }
        let inv = self.terms[0].1.recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// S-polynomial of two monic polynomials.
    pub fn s_polynomial(&self, other: &SortedPoly) -> SortedPoly {
        let order = self.order;
        let lcm = self.leading_exponents().lcm(other.leading_exponents());
        let m1 = lcm.div(self.leading_exponents());
        let m2 = lcm.div(other.leading_exponents());
        let mut acc: BTreeMap<OrderKey, Rational> = BTreeMap::new();
        for (k, c) in self.terms.iter().skip(1) {
            add(&mut acc, k.mul(&m1, order), c.clone());
        }
        for (k, c) in other.terms.iter().skip(1) {
            add(&mut acc, k.mul(&m2, order), -c.clone());
        }
        SortedPoly { order, terms: acc.into_iter().rev().collect() }
    }
}

fn add(acc: &mut BTreeMap<OrderKey, Rational>, k: OrderKey, c: Rational) {
    use std::collections::btree_map::Entry;
    match acc.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Full reduction of `f` by `basis` (monic elements). The result has no
/// term divisible by any basis leading monomial.
pub(crate) fn reduce(f: SortedPoly, basis: &[SortedPoly]) -> SortedPoly {
    reduce_by(f, basis.iter())
}

pub(crate) fn reduce_by<'a>(f: SortedPoly, basis: impl Iterator<Item = &'a SortedPoly> + Clone) -> SortedPoly {
    let order = f.order;
    let mut work: BTreeMap<OrderKey, Rational> = f.terms.into_iter().collect();
    let mut remainder = Vec::new();
    while let Some((key, c)) = work.pop_last() {
        let divisor = basis.clone().find(|g| g.leading_exponents().divides(key.exponents()));
        match divisor {
            Some(g) => {
                let quotient = key.exponents().div(g.leading_exponents());
                let scale = &c / &g.terms[0].1;
                for (gk, gc) in g.terms.iter().skip(1) {
                    add(&mut work, gk.mul(&quotient, order), -(&scale * gc));
                }
            }
            None => remainder.push((key, c)),
        }
    }
    SortedPoly { order, terms: remainder }
}
