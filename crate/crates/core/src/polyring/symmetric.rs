use num::{One, Zero};

use super::{ExponentVector, Polynomial, Rational};
use crate::error::{Error, Result};

/// `e_d` in the variables `vars ⊆ {1, …, n}` as a polynomial in `n` variables.
///
/// `e_0 = 1`, and `e_d = 0` for `d < 0` or `d > |vars|`. Passing
/// `{1..n} ∖ {i}` yields `e_d^{(i)}`.
pub fn elementary_symmetric(n: usize, d: i64, vars: &[usize]) -> Result<Polynomial> {
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vars.len() || sorted.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::params(format!("{vars:?} is not a subset of [1, {n}]")));
    }
    let mut out = Polynomial::zero(n);
    if d < 0 || d as usize > sorted.len() {
        return Ok(out);
    }
    let d = d as usize;
    let mut chosen = Vec::with_capacity(d);
    choose(&sorted, d, 0, &mut chosen, &mut |subset| {
        let mut e = vec![0; n];
        for &v in subset {
            e[v - 1] = 1;
        }
        out.add_term(ExponentVector::new(e), Rational::one());
    });
    Ok(out)
}

fn choose(items: &[usize], d: usize, start: usize, chosen: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if chosen.len() == d {
        emit(chosen);
        return;
    }
    for idx in start..items.len() {
        if items.len() - idx < d - chosen.len() {
            break;
        }
        chosen.push(items[idx]);
        choose(items, d, idx + 1, chosen, emit);
        chosen.pop();
    }
}

/// `h_b(values)`: the sum of all degree-`b` monomials in the given values.
/// Returns 1 for `b = 0` and 0 for `b < 0`.
pub fn complete_homogeneous_eval(b: i64, values: &[Rational]) -> Rational {
    if b < 0 {
        return Rational::zero();
    }
    // table[j] = h_j(values seen so far)
    let b = b as usize;
    let mut table = vec![Rational::zero(); b + 1];
    table[0] = Rational::one();
    for v in values {
        for j in 1..=b {
            let prev = &table[j - 1] * v;
            table[j] += prev;
        }
    }
    table.swap_remove(b)
}

/// `e_d(values)` evaluated exactly.
pub fn elementary_eval(d: i64, values: &[Rational]) -> Rational {
    if d < 0 || d as usize > values.len() {
        return Rational::zero();
    }
    let d = d as usize;
    let mut table = vec![Rational::zero(); d + 1];
    table[0] = Rational::one();
    for v in values {
        for j in (1..=d).rev() {
            let prev = &table[j - 1] * v;
            table[j] += prev;
        }
    }
    table.swap_remove(d)
}
