//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! normal selection strategy (smallest lcm first).

use std::collections::BTreeSet;

use super::sparse::{self, OrderKey, SortedPoly};
use super::{GroebnerBasis, IdealPresentation};
use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    lcm: OrderKey,
    i: usize,
    j: usize,
}

struct State {
    order: MonomialOrder,
    polys: Vec<SortedPoly>,
    active: Vec<usize>,
    pairs: BTreeSet<Pair>,
}

impl State {
    fn lm(&self, i: usize) -> &ExponentVector {
        self.polys[i].leading_exponents()
    }

    fn reduce(&self, f: SortedPoly) -> SortedPoly {
        sparse::reduce_by(f, self.active.iter().map(|&i| &self.polys[i]))
    }

    /// Gebauer–Möller update after adding a new (monic, reduced) element.
    fn update(&mut self, mut h: SortedPoly) {
        h.make_monic();
        let hi = self.polys.len();
        self.polys.push(h);
        let lm_h = self.lm(hi).clone();

        let mut pending: std::collections::VecDeque<(usize, ExponentVector)> =
            self.active.iter().map(|&g| (g, lm_h.lcm(self.lm(g)))).collect();

        // Chain criterion among the new pairs.
        let mut kept: Vec<(usize, ExponentVector)> = Vec::new();
        while let Some((g1, l1)) = pending.pop_front() {
            let coprime = lm_h.is_coprime(self.lm(g1));
            let dominated = pending.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        // Product criterion.
        let new_pairs: Vec<(usize, ExponentVector)> =
            kept.into_iter().filter(|(g, _)| !lm_h.is_coprime(self.lm(*g))).collect();

        // Old pairs made redundant by h.
        let order = self.order;
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let l = p.lcm.exponents();
            !(lm_h.divides(l)
                && &lm_h.lcm(polys[p.i].leading_exponents()) != l
                && &lm_h.lcm(polys[p.j].leading_exponents()) != l)
        });
        for (g, l) in new_pairs {
            self.pairs.insert(Pair { lcm: OrderKey::new(l, order), i: g, j: hi });
        }

        let lm_h = self.lm(hi).clone();
        let polys = &self.polys;
        self.active.retain(|&g| !lm_h.divides(polys[g].leading_exponents()));
        self.active.push(hi);
    }
}

/// Reduced Gröbner basis of the ideal under `order`.
pub fn buchberger(ideal: &IdealPresentation, order: MonomialOrder) -> Result<GroebnerBasis> {
    let arity = ideal.arity();
    let mut gens: Vec<SortedPoly> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut s = SortedPoly::from_polynomial(g, order);
            s.make_monic();
            s
        })
        .collect();
    gens.sort_by(|a, b| a.leading_key().cmp(b.leading_key()));

    let mut state = State { order, polys: Vec::new(), active: Vec::new(), pairs: BTreeSet::new() };
    for g in gens {
        let h = state.reduce(g);
        if !h.is_zero() {
            state.update(h);
        }
    }
    while let Some(pair) = state.pairs.pop_first() {
        let s = state.polys[pair.i].s_polynomial(&state.polys[pair.j]);
        let h = state.reduce(s);
        if !h.is_zero() {
            state.update(h);
        }
    }

    let basis = interreduce(state.active.iter().map(|&i| state.polys[i].clone()).collect());
    let gb = GroebnerBasis::from_reduced(arity, order, basis);
    for g in ideal.generators() {
        if !gb.contains(g)? {
            return Err(Error::Inconsistent(format!("generator {g} does not reduce to zero")));
        }
    }
    Ok(gb)
}

/// Minimalizes and fully reduces a Gröbner basis.
pub(crate) fn interreduce(mut basis: Vec<SortedPoly>) -> Vec<SortedPoly> {
    basis.sort_by(|a, b| a.leading_key().cmp(b.leading_key()));
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for p in basis {
        if !minimal.iter().any(|m| m.leading_exponents().divides(p.leading_exponents())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others = minimal.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, p)| p);
        let head = minimal[idx].terms[0].clone();
        let tail = SortedPoly { order: minimal[idx].order, terms: minimal[idx].terms[1..].to_vec() };
        let mut reduced = sparse::reduce_by(tail, others);
        reduced.terms.insert(0, head);
        reduced.make_monic();
        out.push(reduced);
    }
    out
}
