//! Buchberger's algorithm over term lists, generic in the monomial order.
//!
//! Pairs are processed by the normal strategy (smallest lcm weight first)
//! and pruned with the Gebauer–Möller installation of Buchberger's coprime
//! and chain criteria.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::{Elem, PrimeField};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{sub_scaled, Term};

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn lead(f: &[Term]) -> &Monomial {
    &f[0].mono
}

fn make_monic(f: &mut [Term], field: PrimeField) {
    if let Some(t) = f.first() {
        if t.coeff != Elem::ONE {
            let inv = field.inv(t.coeff).expect("nonzero");
            for t in f.iter_mut() {
                t.coeff = field.mul(t.coeff, inv);
            }
        }
    }
}

/// Full reduction of `f` by monic `basis` elements. Returns the remainder,
/// in which no term is divisible by a leading monomial of the basis.
pub(crate) fn reduce_full(f: &[Term], basis: &[&[Term]], field: PrimeField, order: MonomialOrder) -> Vec<Term> {
    let mut rem: Vec<Term> = f.to_vec();
    let mut start = 0;
    let mut out = Vec::new();
    while start < rem.len() {
        let t = rem[start];
        match basis.iter().find(|g| lead(g).divides(&t.mono)) {
            Some(g) => {
                let q = t.mono.div_unchecked(lead(g));
                rem = sub_scaled(&rem[start..], t.coeff, &q, g, field, order);
                start = 0;
            }
            None => {
                out.push(t);
                start += 1;
            }
        }
    }
    out
}

/// Division by a list of not necessarily monic polynomials.
pub(crate) fn reduce_general(f: &[Term], basis: &[&[Term]], field: PrimeField, order: MonomialOrder) -> Vec<Term> {
    let mut rem: Vec<Term> = f.to_vec();
    let mut start = 0;
    let mut out = Vec::new();
    while start < rem.len() {
        let t = rem[start];
        match basis.iter().find(|g| !g.is_empty() && lead(g).divides(&t.mono)) {
            Some(g) => {
                let q = t.mono.div_unchecked(lead(g));
                let c = field.div(t.coeff, g[0].coeff).expect("nonzero leading coefficient");
                rem = sub_scaled(&rem[start..], c, &q, g, field, order);
                start = 0;
            }
            None => {
                out.push(t);
                start += 1;
            }
        }
    }
    out
}

fn s_polynomial(f: &[Term], g: &[Term], lcm: &Monomial, field: PrimeField, order: MonomialOrder) -> Vec<Term> {
    // both monic
    let mf = lcm.div_unchecked(lead(f));
    let mg = lcm.div_unchecked(lead(g));
    let fm: Vec<Term> = f.iter().map(|t| Term { coeff: t.coeff, mono: t.mono.mul_unchecked(&mf) }).collect();
    sub_scaled(&fm, Elem::ONE, &mg, g, field, order)
}

struct State {
    order: MonomialOrder,
    field: PrimeField,
    polys: Vec<Vec<Term>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        // descending so that the best pair sits at the end of the vector
        let wa = self.order.weight(&a.lcm);
        let wb = self.order.weight(&b.lcm);
        wb.cmp(&wa)
            .then_with(|| self.order.cmp(&a.lcm, &b.lcm))
            .then_with(|| (b.i, b.j).cmp(&(a.i, a.j)))
    }

    /// Gebauer–Möller update with a new element at index `h`.
    fn update(&mut self, h: usize) {
        let lh = *lead(&self.polys[h]);
        let candidates: Vec<Pair> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| Pair { i: g, j: h, lcm: lh.lcm_unchecked(lead(&self.polys[g])) })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = lh.coprime(lead(&self.polys[p.i]));
            let dominated = candidates[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|(q, _)| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push((*p, coprime));
            }
        }

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm_unchecked(lead(&polys[p.i])) != p.lcm
                && lh.lcm_unchecked(lead(&polys[p.j])) != p.lcm)
        });

        self.pairs.extend(kept.into_iter().filter(|(_, coprime)| !coprime).map(|(p, _)| p));

        for g in 0..h {
            if self.active[g] && lh.divides(lead(&self.polys[g])) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;

        let mut pairs = core::mem::take(&mut self.pairs);
        pairs.sort_by(|a, b| self.pair_cmp(a, b));
        self.pairs = pairs;
    }

    fn basis_refs(&self) -> Vec<&[Term]> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p.as_slice()).collect()
    }

    fn insert(&mut self, mut f: Vec<Term>) {
        make_monic(&mut f, self.field);
        self.polys.push(f);
        self.active.push(false);
        let h = self.polys.len() - 1;
        self.update(h);
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
///
/// When `degree_bound` is set, S-pairs whose lcm has weight above it are
/// discarded, giving a basis that is correct in all degrees up to the bound
/// (inputs are graded).
pub(crate) fn groebner_basis(
    gens: &[Vec<Term>],
    field: PrimeField,
    order: MonomialOrder,
    degree_bound: Option<u32>,
) -> Vec<Vec<Term>> {
    let mut sorted: Vec<Vec<Term>> = gens.iter().filter(|g| !g.is_empty()).cloned().collect();
    sorted.sort_by(|a, b| {
        order.weight(lead(a)).cmp(&order.weight(lead(b))).then_with(|| order.cmp(lead(b), lead(a)))
    });
    let mut st = State { order, field, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    let mut pending = sorted.into_iter().peekable();
    loop {
        // feed input generators whose weight does not exceed the next pair
        let next_pair_weight = st.pairs.last().map(|p| order.weight(&p.lcm));
        let next_gen_weight = pending.peek().map(|g| order.weight(lead(g)));
        let take_gen = match (next_gen_weight, next_pair_weight) {
            (Some(gw), Some(pw)) => gw <= pw,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let candidate = if take_gen {
            let g = pending.next().expect("peeked");
            reduce_full(&g, &st.basis_refs(), field, order)
        } else {
            let p = st.pairs.pop().expect("nonempty");
            if degree_bound.is_some_and(|b| order.weight(&p.lcm) > b) {
                continue;
            }
            let s = s_polynomial(&st.polys[p.i], &st.polys[p.j], &p.lcm, field, order);
            reduce_full(&s, &st.basis_refs(), field, order)
        };
        if !candidate.is_empty() {
            st.insert(candidate);
        }
    }

    interreduce(st.basis_refs().into_iter().map(|p| p.to_vec()).collect(), field, order)
}

/// Turns a Gröbner basis into the reduced one: minimal leading monomials,
/// fully tail-reduced, monic, sorted by (weight, order descending).
pub(crate) fn interreduce(mut basis: Vec<Vec<Term>>, field: PrimeField, order: MonomialOrder) -> Vec<Vec<Term>> {
    basis.retain(|g| !g.is_empty());
    for g in basis.iter_mut() {
        make_monic(g, field);
    }
    basis.sort_by(|a, b| {
        order.weight(lead(a)).cmp(&order.weight(lead(b))).then_with(|| order.cmp(lead(b), lead(a)))
    });
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| lead(m).divides(lead(&g))) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<&[Term]> =
            minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, p)| p.as_slice()).collect();
        let head = minimal[idx][0];
        let tail = reduce_full(&minimal[idx][1..], &others, field, order);
        let mut g = Vec::with_capacity(tail.len() + 1);
        g.push(head);
        g.extend(tail);
        out.push(g);
    }
    out
}

/// True when every S-polynomial of `basis` reduces to zero.
pub(crate) fn is_groebner(basis: &[Vec<Term>], field: PrimeField, order: MonomialOrder) -> bool {
    let mut monic: Vec<Vec<Term>> = basis.iter().filter(|g| !g.is_empty()).cloned().collect();
    for g in monic.iter_mut() {
        make_monic(g, field);
    }
    let refs: Vec<&[Term]> = monic.iter().map(|g| g.as_slice()).collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let lcm = lead(&monic[i]).lcm_unchecked(lead(&monic[j]));
            let s = s_polynomial(&monic[i], &monic[j], &lcm, field, order);
            if !reduce_full(&s, &refs, field, order).is_empty() {
                return false;
            }
        }
    }
    true
}
