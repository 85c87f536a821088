//! Sparse multivariate polynomials over the rationals.

mod demazure;
mod monomial;
mod symmetric;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use demazure::{demazure_character, demazure_operator, key_polynomial};
pub use monomial::{ExponentVector, MonomialOrder};
pub use symmetric::{complete_homogeneous_eval, elementary_eval, elementary_symmetric};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A polynomial in `Q[x_1, …, x_n]` stored as a map from exponent vectors
/// to nonzero coefficients. Iteration is in increasing lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::term(ExponentVector::zero(arity), c)
    }

    /// The variable `x_i`, `1 <= i <= arity`.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= arity, "variable x_{i} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[i - 1] = 1;
        Self::monomial(ExponentVector::new(e))
    }

    pub fn monomial(e: ExponentVector) -> Self {
        Self::term(e, Rational::one())
    }

    pub fn term(e: ExponentVector, c: Rational) -> Self {
        let arity = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { arity, terms }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// repeated exponent vectors.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Rational, ExponentVector)>,
    ) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (c, e) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted in decreasing order under `order`.
    pub fn terms_descending(&self, order: MonomialOrder) -> Vec<(&ExponentVector, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(ExponentVector::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Component of a given total degree.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// `τ(f)`: the highest degree component.
    pub fn top_form(&self) -> Polynomial {
        match self.degree() {
            None => self.clone(),
            Some(d) => self.homogeneous_component(d),
        }
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Result<&ExponentVector> {
        self.leading_term(order).map(|(e, _)| e)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Result<(&ExponentVector, &Rational)> {
        match order {
            MonomialOrder::Lex => self.terms.iter().next_back(),
            MonomialOrder::GrLex => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
        .ok_or(Error::ZeroPolynomial)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &ExponentVector) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.mul(m), c.clone())).collect(),
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact substitution `x_i := point[i-1]`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: point.len() });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut value = c.clone();
            for (x, &a) in point.iter().zip(e.as_slice()) {
                if a > 0 {
                    value *= num::pow(x.clone(), a as usize);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// The ring morphism `x_i ↦ x_{π(i)}`.
    pub fn apply_permutation(&self, pi: &Permutation) -> Result<Polynomial> {
        if pi.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: pi.len() });
        }
        Ok(Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.permute(pi), c.clone())).collect(),
        })
    }

    /// Substitutes `x_i ↦ x_{n+1-i}`.
    pub fn reverse_variables(&self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.reversed(), c.clone())).collect(),
        }
    }

    /// Reinterprets a polynomial in `arity` variables as one in
    /// `arity + 1` variables, inserting a fresh variable at position `i`
    /// (1-based). Used to realize `f(x_1, …, x̂_i, …, x_n)`.
    pub fn insert_variable(&self, i: usize) -> Polynomial {
        assert!(i >= 1 && i <= self.arity + 1);
        Polynomial {
            arity: self.arity + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.as_slice().to_vec();
                    v.insert(i - 1, 0);
                    (ExponentVector::new(v), c.clone())
                })
                .collect(),
        }
    }

    /// Multiplies every coefficient by the lcm of denominators and divides
    /// by the gcd of numerators, leaving a positive leading coefficient
    /// under `order`.
    pub fn primitive_part(&self, order: MonomialOrder) -> Polynomial {
        use num::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        let mut factor = Rational::new(lcm, gcd);
        if self.leading_term(order).unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let is_const = e.degree() == 0;
            if is_const {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs).expect("polynomial arity mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn format_rational(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Malformed(format!("bad rational {s:?}")))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    expt: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    arity: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermJson { coeff: format_rational(c), expt: e.as_slice().to_vec() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolynomialJson::deserialize(deserializer)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok((parse_rational(&t.coeff)?, ExponentVector::new(t.expt))))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Polynomial::from_terms(raw.arity, terms).map_err(D::Error::custom)
    }
}
