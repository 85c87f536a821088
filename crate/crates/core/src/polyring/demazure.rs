//! Key polynomials (Demazure characters).
//!
//! [`key_polynomial`] is the textbook convention: `κ_λ = x^λ` for weakly
//! decreasing `λ`, and `κ_γ = π_i κ_{s_i γ}` whenever `γ_i < γ_{i+1}`, with
//! `π_i f = (x_i f − x_{i+1} s_i f) / (x_i − x_{i+1})`.
//!
//! [`demazure_character`] is the same polynomial with the variable order
//! reversed. In that convention the lex-leading exponent of `κ_{γ(S)}` is
//! the reversed skip sequence `γ(S)^*`, which is what the standard
//! monomial argument for `J_{n,k}` needs.

use super::{ExponentVector, Polynomial};
use crate::error::{Error, Result};

/// The isobaric divided difference `π_i` (1-based `i`, `1 <= i < n`).
pub fn demazure_operator(f: &Polynomial, i: usize) -> Polynomial {
    let n = f.arity();
    assert!(i >= 1 && i < n, "π_{i} undefined in {n} variables");
    let (p, q) = (i - 1, i);
    let mut out = Polynomial::zero(n);
    for (e, c) in f.terms() {
        let (a, b) = (e.as_slice()[p], e.as_slice()[q]);
        let mut push = |ea: u32, eb: u32, negate: bool| {
            let mut v = e.as_slice().to_vec();
            v[p] = ea;
            v[q] = eb;
            out.add_term(ExponentVector::new(v), if negate { -c.clone() } else { c.clone() });
        };
        if a >= b {
            for j in 0..=(a - b) {
                push(a - j, b + j, false);
            }
        } else {
            for j in 1..(b - a) {
                push(a + j, b - j, true);
            }
        }
    }
    out
}

pub fn key_polynomial(gamma: &[u32]) -> Polynomial {
    match gamma.windows(2).position(|w| w[0] < w[1]) {
        None => Polynomial::monomial(ExponentVector::new(gamma.to_vec())),
        Some(p) => {
            let mut swapped = gamma.to_vec();
            swapped.swap(p, p + 1);
            demazure_operator(&key_polynomial(&swapped), p + 1)
        }
    }
}

/// Key polynomial of `γ` in the reversed variables `x_n, …, x_1`.
pub fn demazure_character(gamma: &[i64]) -> Result<Polynomial> {
    if gamma.is_empty() {
        return Err(Error::params("empty composition"));
    }
    let gamma = gamma
        .iter()
        .map(|&g| u32::try_from(g).map_err(|_| Error::params(format!("negative entry {g}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(key_polynomial(&gamma).reverse_variables())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::skip_sequence;
    use crate::polyring::MonomialOrder;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn key_polynomial_examples() {
        assert_eq!(key_polynomial(&[2, 0]), x(2, 1).pow(2));
        let sym2 = &(&x(2, 1).pow(2) + &(&x(2, 1) * &x(2, 2))) + &x(2, 2).pow(2);
        assert_eq!(key_polynomial(&[0, 2]), sym2);
        assert_eq!(key_polynomial(&[0, 1]), &x(2, 1) + &x(2, 2));
    }

    #[test]
    fn demazure_character_examples() {
        let sym2 = &(&x(2, 1).pow(2) + &(&x(2, 1) * &x(2, 2))) + &x(2, 2).pow(2);
        assert_eq!(demazure_character(&[0, 2]).unwrap(), sym2);
        assert_eq!(demazure_character(&[0, 1]).unwrap(), &x(2, 1) + &x(2, 2));
        assert_eq!(demazure_character(&[2, 0]).unwrap(), x(2, 2).pow(2));
        assert!(demazure_character(&[1, -1]).is_err());
    }

    // Oracle: π_i f = (x_i f − x_{i+1} s_i f) / (x_i − x_{i+1}), checked by
    // multiplying the output back by the denominator.
    #[test]
    fn operator_matches_defining_quotient() {
        let f = &(&x(3, 1).pow(3) * &x(3, 2)) + &(&x(3, 2).pow(2) * &x(3, 3));
        for i in 1..3 {
            let swap = crate::Permutation::transposition(3, i, i + 1).unwrap();
            let numer = &(&x(3, i) * &f) - &(&x(3, i + 1) * &f.apply_permutation(&swap).unwrap());
            let denom = &x(3, i) - &x(3, i + 1);
            assert_eq!(&demazure_operator(&f, i) * &denom, numer);
        }
    }

    #[test]
    fn full_key_polynomial_is_schur() {
        // κ of an antidominant weight is the Schur polynomial s_{(2,1)} in
        // three variables; its coefficient sum is #SSYT((2,1), [3]) = 8.
        let k = key_polynomial(&[0, 1, 2]);
        let total: num::BigRational = k.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, crate::polyring::int(8));
        for p in crate::Permutation::all(3) {
            assert_eq!(k.apply_permutation(&p).unwrap(), k);
        }
    }

    #[test]
    fn leading_monomial_is_reversed_skip_sequence() {
        for n in 1..=6usize {
            for mask in 0u32..(1 << n) {
                let set: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
                let gamma = skip_sequence(&set, n).unwrap();
                let g: Vec<i64> = gamma.entries.iter().map(|&v| v as i64).collect();
                let kappa = demazure_character(&g).unwrap();
                let lm = kappa.leading_monomial(MonomialOrder::Lex).unwrap();
                let expected: Vec<u32> = gamma.reversed().iter().map(|&v| v as u32).collect();
                assert_eq!(lm.as_slice(), expected.as_slice(), "S = {set:?}");
            }
        }
    }
}
