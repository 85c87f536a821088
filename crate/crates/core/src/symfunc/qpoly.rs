use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial in `q` with integer coefficients; `coeffs[i]` is the
/// coefficient of `q^i` and the last stored coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl From<Vec<i64>> for QPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}

impl From<QPolynomial> for Vec<i64> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs
    }
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · q^d`.
    pub fn monomial(c: i64, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// `[n]_q = 1 + q + … + q^{n−1}`.
    pub fn q_int(n: usize) -> Self {
        Self::new(vec![1; n])
    }

    /// `[n]!_q = [1]_q [2]_q ⋯ [n]_q`.
    pub fn q_factorial(n: usize) -> Self {
        (1..=n).fold(Self::one(), |acc, i| &acc * &Self::q_int(i))
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; d];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Reflects the coefficient sequence about `d` (default: own degree),
    /// sending `q^i` to `q^{d−i}`.
    pub fn rev(&self, d: Option<usize>) -> Result<Self> {
        let Some(top) = self.degree() else {
            return Ok(Self::zero());
        };
        let d = d.unwrap_or(top);
        if d < top {
            return Err(Error::params(format!("reflection degree {d} is below the degree {top}")));
        }
        let mut coeffs = vec![0; d + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c;
        }
        Ok(Self::new(coeffs))
    }

    /// Exact quotient by a divisor with leading coefficient `±1`.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<Self> {
        let dd = divisor.degree().ok_or_else(|| Error::params("division by zero"))?;
        let lead = divisor.coeffs[dd];
        if lead.abs() != 1 {
            return Err(Error::params("divisor must have unit leading coefficient"));
        }
        let Some(top) = self.degree() else {
            return Ok(Self::zero());
        };
        if top < dd {
            return Err(Error::Inconsistent(format!("{divisor} does not divide {self}")));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; top - dd + 1];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd] * lead;
            quot[i] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::Inconsistent(format!("{divisor} does not divide {self}")));
        }
        Ok(Self::new(quot))
    }
}

/// Gaussian binomial `[n choose k]_q`; zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> QPolynomial {
    if n < 0 || k < 0 || k > n {
        return QPolynomial::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let den = &QPolynomial::q_factorial(k) * &QPolynomial::q_factorial(n - k);
    QPolynomial::q_factorial(n).div_exact(&den).expect("q-factorials divide")
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, other: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPolynomial::new((0..len).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, other: &QPolynomial) -> QPolynomial {
        self + &(-other)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, other: &QPolynomial) -> QPolynomial {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::new(coeffs)
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, other: &QPolynomial) {
        *self = &*self + other;
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            let var = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            match (a, d) {
                (_, 0) => write!(f, "{a}")?,
                (1, _) => write!(f, "{var}")?,
                _ => write!(f, "{a}{var}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> QPolynomial {
        QPolynomial::new(c.to_vec())
    }

    #[test]
    fn q_binomial_examples() {
        assert!(q_binomial(0, 1).is_zero());
        assert_eq!(q_binomial(2, 1), qp(&[1, 1]));
        assert_eq!(q_binomial(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 0), QPolynomial::one());
        assert!(q_binomial(3, -1).is_zero());
    }

    #[test]
    fn q_binomial_pascal_recurrence() {
        for n in 1..10i64 {
            for k in 0..=n {
                let rhs = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k as usize);
                assert_eq!(q_binomial(n, k), rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn factorial_and_display() {
        assert_eq!(QPolynomial::q_factorial(3), qp(&[1, 2, 2, 1]));
        assert_eq!(QPolynomial::q_factorial(4).eval_at_one(), 24);
        assert_eq!(qp(&[1, 3, 6, 3]).to_string(), "1 + 3q + 6q^2 + 3q^3");
        assert_eq!(qp(&[1, -1]).to_string(), "1 - q");
        assert_eq!(qp(&[0, 0, -2]).to_string(), "-2q^2");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(qp(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn rev_examples() {
        assert_eq!(qp(&[1, 2]).rev(None).unwrap(), qp(&[2, 1]));
        assert_eq!(qp(&[1, 3, 2]).rev(None).unwrap(), qp(&[2, 3, 1]));
        assert_eq!(qp(&[0, 0, 1]).rev(None).unwrap(), QPolynomial::one());
        assert_eq!(qp(&[1, 2]).rev(Some(3)).unwrap(), qp(&[0, 0, 2, 1]));
        assert!(qp(&[1, 2, 3]).rev(Some(1)).is_err());
    }

    #[test]
    fn json_is_coefficient_list() {
        let p = qp(&[1, 0, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,0,2]");
        let back: QPolynomial = serde_json::from_str("[1,0,2,0]").unwrap();
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn rev_with_explicit_degree_is_involution(c in prop::collection::vec(-5i64..5, 0..8), extra in 0usize..4) {
            let p = qp(&c);
            let d = p.degree().unwrap_or(0) + extra;
            prop_assert_eq!(p.rev(Some(d)).unwrap().rev(Some(d)).unwrap(), p);
        }

        #[test]
        fn multiplication_distributes(a in prop::collection::vec(-5i64..5, 0..6),
                                      b in prop::collection::vec(-5i64..5, 0..6),
                                      c in prop::collection::vec(-5i64..5, 0..6)) {
            let (a, b, c) = (qp(&a), qp(&b), qp(&c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }
    }
}
