//! Generic initial ideals by randomized coordinates with unanimity voting,
//! the monomial invariants of a variety, and the verification harnesses
//! built on them.

mod seeds;
mod trace;
mod verify;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial_ideal::{InvariantTable, MonomialIdeal, MultiIndex, Violation};
use crate::poly::LinearChange;

pub use seeds::SeedStream;
pub use trace::{gcd_two_vars, proof_trace, ProofTrace};
pub use verify::{
    gap_check, verify_gap_truncation, verify_section_quotients, verify_slice_identity, GapCheck, GapReport,
    SectionQuotientCheck, SliceCheck, SliceReport,
};

/// Default number of agreeing coordinate samples.
pub const DEFAULT_VOTES: usize = 2;
/// Samples drawn in total before giving up on unanimity.
pub const ESCALATED_VOTES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GinConfig {
    pub seed: u64,
    /// Independent samples that must agree; at least 2.
    pub votes: usize,
    /// Total samples allowed when the first `votes` disagree.
    pub max_samples: usize,
}

impl Default for GinConfig {
    fn default() -> Self {
        GinConfig { seed: 0, votes: DEFAULT_VOTES, max_samples: ESCALATED_VOTES }
    }
}

impl GinConfig {
    pub fn new(seed: u64, votes: usize) -> Result<Self> {
        if votes < 2 {
            return Err(Error::InvalidArgument("at least two votes are required"));
        }
        Ok(GinConfig { seed, votes, max_samples: votes.max(ESCALATED_VOTES) })
    }

    /// Same vote settings with the seed replaced by a labeled child seed.
    pub fn derive(&self, label: &str, index: u64) -> GinConfig {
        GinConfig { seed: SeedStream::new(self.seed).child(label, index).value(), ..*self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinResult {
    pub gin: MonomialIdeal,
    pub samples_used: usize,
    pub seed: u64,
    /// Every sample produced the same initial ideal.
    pub agreed: bool,
}

/// `gin(I)`: initial ideals after uniformly random changes of coordinates,
/// accepted when `votes` samples agree. On disagreement more samples are
/// drawn up to `max_samples` and a strict majority is returned with
/// `agreed = false`.
pub fn gin(ideal: &Ideal, config: &GinConfig) -> Result<GinResult> {
    if config.votes < 2 {
        return Err(Error::InvalidArgument("at least two votes are required"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let ring = ideal.ring();
    let stream = SeedStream::new(config.seed);
    let sample = |k: usize| -> Result<MonomialIdeal> {
        let mut rng = stream.child("coordinates", k as u64).rng();
        let g = LinearChange::random(ring, &mut rng);
        Ok(ideal.apply_change(&g)?.initial_ideal())
    };

    let mut results: Vec<MonomialIdeal> = Vec::new();
    for k in 0..config.votes {
        results.push(sample(k)?);
    }
    let unanimous = results.iter().all(|r| *r == results[0]);
    if !unanimous {
        for k in config.votes..config.max_samples.max(config.votes) {
            results.push(sample(k)?);
        }
    }
    let samples_used = results.len();
    let winner = if unanimous {
        results.swap_remove(0)
    } else {
        let best = results
            .iter()
            .map(|r| (results.iter().filter(|q| *q == r).count(), r))
            .max_by_key(|(c, _)| *c)
            .map(|(c, r)| (c, r.clone()))
            .expect("at least one sample");
        if best.0 * 2 <= samples_used {
            return Err(Error::GinUnstable { samples: samples_used });
        }
        best.1
    };
    if !winner.is_borel_fixed() {
        return Err(Error::NotBorelFixed);
    }
    Ok(GinResult { gin: winner, samples_used, seed: config.seed, agreed: unanimous })
}

/// Monomial invariants of the variety cut out by a saturated ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyInvariants {
    pub gin: GinResult,
    pub table: InvariantTable,
    /// `s(0)`: least degree of a form vanishing on the variety.
    pub s_z: u32,
    /// `s` at the stabilized corner: the same for the general 2-plane section.
    pub s_gamma: u32,
}

pub fn variety_invariants(ideal: &Ideal, config: &GinConfig) -> Result<VarietyInvariants> {
    let g = gin(ideal, config)?;
    invariants_of_gin(g)
}

pub(crate) fn invariants_of_gin(g: GinResult) -> Result<VarietyInvariants> {
    if !g.gin.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let table = g.gin.invariant_table()?;
    let (s_z, s_gamma) = (table.s_zero(), table.s_stable());
    Ok(VarietyInvariants { gin: g, table, s_z, s_gamma })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectednessReport {
    pub s_z: u32,
    pub s_gamma: u32,
    /// `s_Z == s_Γ`.
    pub hypothesis: bool,
    /// Verdict for every entry of the table.
    pub verdicts: Vec<(MultiIndex, Option<Violation>)>,
    pub violations: Vec<(MultiIndex, Violation)>,
    /// Entries with `|p_hat| <= 1`, which are connected without the
    /// hypothesis.
    pub low_levels_connected: bool,
    pub connected: bool,
}

pub fn connectedness_report(inv: &VarietyInvariants) -> ConnectednessReport {
    let verdicts: Vec<(MultiIndex, Option<Violation>)> =
        inv.table.entries.iter().map(|e| (e.p_hat.clone(), e.profile.first_violation())).collect();
    let violations: Vec<(MultiIndex, Violation)> =
        verdicts.iter().filter_map(|(p, v)| v.map(|v| (p.clone(), v))).collect();
    let low_levels_connected = verdicts.iter().filter(|(p, _)| p.total() <= 1).all(|(_, v)| v.is_none());
    ConnectednessReport {
        s_z: inv.s_z,
        s_gamma: inv.s_gamma,
        hypothesis: inv.s_z == inv.s_gamma,
        connected: violations.is_empty(),
        verdicts,
        violations,
        low_levels_connected,
    }
}

pub fn check_connectedness(ideal: &Ideal, config: &GinConfig) -> Result<ConnectednessReport> {
    Ok(connectedness_report(&variety_invariants(ideal, config)?))
}

#[cfg(test)]
mod tests;
