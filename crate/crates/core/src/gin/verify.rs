use alloc::vec::Vec;

use super::{gin, GinConfig, SeedStream};
use crate::error::Result;
use crate::groebner::{ideal_quotient, intersect, restrict_ideal, truncate, Ideal};
use crate::monomial::Monomial;
use crate::monomial_ideal::{MonomialIdeal, MultiIndex, Violation};
use crate::poly::LinearForm;

/// `gin`, except that the unit ideal maps to the unit monomial ideal.
pub(crate) fn gin_or_unit(ideal: &Ideal, config: &GinConfig) -> Result<MonomialIdeal> {
    if ideal.is_unit() {
        return Ok(MonomialIdeal::unit(ideal.ring().nvars()));
    }
    Ok(gin(ideal, config)?.gin)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceCheck {
    pub form: usize,
    pub p: u32,
    /// `gin((I : h^p)|_h)`
    pub lhs: MonomialIdeal,
    /// `(gin(I) : x_n^p)|_{x_n}`
    pub rhs: MonomialIdeal,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceReport {
    pub checks: Vec<SliceCheck>,
}

impl SliceReport {
    pub fn all_equal(&self) -> bool {
        self.checks.iter().all(|c| c.equal)
    }
}

/// Compares `gin((I : h^p)|_h)` computed from the ideal with
/// `(gin(I) : x_n^p)|_{x_n}` computed from the monomial ideal, for `forms`
/// random linear forms `h` and every `p <= p_max`.
pub fn verify_slice_identity(
    ideal: &Ideal,
    gin_i: &MonomialIdeal,
    forms: usize,
    p_max: u32,
    config: &GinConfig,
) -> Result<SliceReport> {
    let ring = ideal.ring();
    let stream = SeedStream::new(config.seed);
    let last = ring.nvars() - 1;
    let mut checks = Vec::new();
    for k in 0..forms {
        let h = LinearForm::random(ring, &mut stream.child("slice-form", k as u64).rng());
        let hp = h.to_polynomial();
        let mut quotient = ideal.clone();
        for p in 0..=p_max {
            if p > 0 {
                quotient = ideal_quotient(&quotient, &hp)?;
            }
            let restricted = restrict_ideal(&quotient, &h)?;
            let sub = config.derive("slice-gin", (k as u64) << 16 | p as u64);
            let lhs = gin_or_unit(&restricted, &sub)?;
            let xn = Monomial::one(ring.nvars())?.with_exp(last, p);
            let rhs = gin_i.colon_by_monomial(&xn)?.restrict_last()?;
            checks.push(SliceCheck { form: k, p, equal: lhs == rhs, lhs, rhs });
        }
    }
    Ok(SliceReport { checks })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCheck {
    pub delta: u32,
    /// `gin(I_{≤δ})`
    pub lhs: MonomialIdeal,
    /// `gin(I)_{≤δ}`
    pub rhs: MonomialIdeal,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub checks: Vec<GapCheck>,
}

impl GapReport {
    /// No internal gap degree to test.
    pub fn vacuous(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn all_equal(&self) -> bool {
        self.checks.iter().all(|c| c.equal)
    }
}

/// For every internal gap degree `δ` of `gin(I)`, compares `gin(I_{≤δ})`
/// with `gin(I)_{≤δ}`.
pub fn verify_gap_truncation(ideal: &Ideal, gin_i: &MonomialIdeal, config: &GinConfig) -> Result<GapReport> {
    let mut checks = Vec::new();
    for (k, &delta) in gin_i.gap_degrees().internal.iter().enumerate() {
        checks.push(gap_check(ideal, gin_i, delta, &config.derive("gap-gin", k as u64))?);
    }
    Ok(GapReport { checks })
}

/// A single truncation comparison at an arbitrary degree.
pub fn gap_check(ideal: &Ideal, gin_i: &MonomialIdeal, delta: u32, config: &GinConfig) -> Result<GapCheck> {
    let truncated = truncate(ideal, delta, false);
    let lhs = gin_or_unit(&truncated, config)?;
    let rhs = gin_i.truncate(delta, false);
    Ok(GapCheck { delta, equal: lhs == rhs, lhs, rhs })
}

/// One ideal `(I|_h : m^k)` of the chain ending at the saturation of a
/// general hyperplane section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionQuotientCheck {
    pub k: u32,
    pub gin: MonomialIdeal,
    pub violations: Vec<(MultiIndex, Violation)>,
}

/// Runs the chain `I|_h ⊆ (I|_h : m) ⊆ (I|_h : m^2) ⊆ ...` for a general
/// hyperplane `h` and the irrelevant ideal `m`, until it stabilizes, and
/// records the connectedness of the monomial invariants of each member
/// (taken over all axes, since the members need not be saturated).
pub fn verify_section_quotients(ideal: &Ideal, config: &GinConfig) -> Result<Vec<SectionQuotientCheck>> {
    let ring = ideal.ring();
    let h = LinearForm::random(ring, &mut SeedStream::new(config.seed).child("section-form", 0).rng());
    let mut cur = restrict_ideal(ideal, &h)?;
    let sub = cur.ring();
    let mut out = Vec::new();
    for k in 0u32.. {
        let g = gin_or_unit(&cur, &config.derive("section-gin", k as u64))?;
        let table = g.invariant_table_full()?;
        out.push(SectionQuotientCheck { k, violations: table.violations(), gin: g });
        // (J : m) = ∩_i (J : x_i)
        let mut next: Option<Ideal> = None;
        for i in 0..sub.nvars() {
            let q = ideal_quotient(&cur, &sub.var(i)?)?;
            next = Some(match next {
                None => q,
                Some(acc) => intersect(&acc, &q)?,
            });
        }
        let next = next.expect("at least one variable");
        if next == cur {
            break;
        }
        cur = next;
    }
    Ok(out)
}
