use alloc::vec;
use alloc::vec::Vec;

use super::{basis_up_to, groebner_basis, Ideal};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::monomial::MonomialOrder;
use crate::poly::{combine, LinearForm, Polynomial, Ring, Term};

/// Terms of `f` lifted into a ring with one extra trailing variable `t`,
/// multiplied by `t^e`.
fn lift(f: &Polynomial, e: u32, scale: Elem) -> impl Iterator<Item = Term> + '_ {
    let field = f.ring().field();
    f.terms().iter().map(move |t| Term { coeff: field.mul(scale, t.coeff), mono: t.mono.push_var(e) })
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.ring.check(&j.ring)?;
    let ring = i.ring;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let field = ring.field();
    ring.with_nvars(ring.nvars() + 1)?;
    let order = MonomialOrder::EliminateLast;
    let mut gens: Vec<Vec<Term>> = Vec::new();
    for f in &i.gens {
        let mut ts: Vec<Term> = lift(f, 1, Elem::ONE).collect();
        combine(&mut ts, field, order);
        gens.push(ts);
    }
    let minus_one = field.neg(Elem::ONE);
    for g in &j.gens {
        let mut ts: Vec<Term> = lift(g, 0, Elem::ONE).chain(lift(g, 1, minus_one)).collect();
        combine(&mut ts, field, order);
        gens.push(ts);
    }
    let last = ring.nvars();
    let basis: Vec<Polynomial> = groebner_basis(&gens, field, order, None)
        .into_iter()
        .filter(|g| g[0].mono.exp(last) == 0)
        .map(|g| {
            let mut ts: Vec<Term> = g.into_iter().map(|t| Term { coeff: t.coeff, mono: t.mono.remove_var(last) }).collect();
            combine(&mut ts, field, MonomialOrder::Revlex);
            Polynomial::from_sorted(ring, ts)
        })
        .collect();
    if basis.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    Ok(Ideal::from_basis(ring, basis))
}

/// `(I : f) = {g : g·f ∈ I}`, computed as `(I ∩ (f)) / f`.
pub fn ideal_quotient(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    i.ring.check(&f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) || i.is_zero() {
        return Ok(i.clone());
    }
    let principal = Ideal::new(i.ring, vec![f.clone()])?;
    let meet = intersect(i, &principal)?;
    let gens = meet
        .groebner_basis()
        .iter()
        .map(|g| g.exact_div(f).map(|q| q.expect("elements of I ∩ (f) are multiples of f")))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(i.ring, gens)
}

/// `(I : f^p)` as `p` iterated quotients by `f`.
pub fn quotient_by_power(i: &Ideal, f: &Polynomial, p: u32) -> Result<Ideal> {
    let mut cur = i.clone();
    for _ in 0..p {
        cur = ideal_quotient(&cur, f)?;
    }
    Ok(cur)
}

/// `(I : f^∞)`: quotients by `f` until the reduced basis stops changing.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cur = i.clone();
    loop {
        let next = ideal_quotient(&cur, f)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// `I|_h`: the ideal generated by the restrictions of the generators, with
/// no saturation.
pub fn restrict_ideal(i: &Ideal, h: &LinearForm) -> Result<Ideal> {
    i.ring.check(&h.ring())?;
    let ring = i.ring.drop_last()?;
    let gens: Vec<Polynomial> =
        i.gens.iter().map(|g| g.restrict(h)).collect::<Result<Vec<_>>>()?.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    Ideal::new(ring, gens)
}

/// `I_{<δ}` (strict) or `I_{≤δ}`: the ideal generated by the elements of
/// `I` of degree below the cutoff, presented by a minimal generating set.
pub fn truncate(i: &Ideal, delta: u32, strict: bool) -> Ideal {
    let keep = |d: u32| if strict { d < delta } else { d <= delta };
    let low: Vec<Polynomial> =
        i.groebner_basis().iter().filter(|g| g.degree().is_some_and(keep)).cloned().collect();
    if low.is_empty() {
        return Ideal::zero(i.ring);
    }
    let gens = minimalize(i.ring, low);
    Ideal { ring: i.ring, gens, gb: Default::default() }
}

/// Drops generators that lie in the ideal generated by the ones kept before
/// them (processed by increasing degree).
pub(crate) fn minimalize(ring: Ring, mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    gens.retain(|g| !g.is_zero());
    gens.sort_by_key(|g| g.degree());
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in gens {
        let d = g.degree().expect("nonzero");
        let redundant = !kept.is_empty() && {
            let sub = Ideal { ring, gens: kept.clone(), gb: Default::default() };
            let basis = basis_up_to(&sub, Some(d));
            super::normal_form(&g, &basis).expect("same ring").is_zero()
        };
        if !redundant {
            kept.push(g);
        }
    }
    kept
}
