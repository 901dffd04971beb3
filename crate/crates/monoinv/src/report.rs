//! Full per-ideal runs and their JSON reports.

use serde::Serialize;

use monoinv_core::corpus::{CorpusEntry, Expected};
use monoinv_core::gin::{
    connectedness_report, proof_trace, verify_gap_truncation, verify_slice_identity, GinConfig, VarietyInvariants,
};
use monoinv_core::{Ideal, MonomialIdeal, MultiIndex, Result};

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub votes: usize,
    /// Random linear forms tried by the slice check.
    pub slice_forms: usize,
    /// Largest colon exponent in the slice check.
    pub slice_p_max: u32,
    /// Proof traces cover every `p_hat` with entries `<= trace_level`.
    pub trace_level: u32,
    pub specializations: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, votes: 2, slice_forms: 3, slice_p_max: 3, trace_level: 2, specializations: 3 }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableRow {
    pub p_hat: Vec<u32>,
    pub s: u32,
    pub lambda: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ViolationRow {
    pub p_hat: Vec<u32>,
    pub index: usize,
    pub lambda_i: u32,
    pub lambda_next: u32,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SliceRow {
    pub form: usize,
    pub p: u32,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SliceSummary {
    pub passed: bool,
    pub checks: Vec<SliceRow>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GapRow {
    pub delta: u32,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GapSummary {
    pub passed: bool,
    pub vacuous: bool,
    pub checks: Vec<GapRow>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TraceRow {
    pub p_hat: Vec<u32>,
    pub gin_j: Vec<String>,
    pub step1: bool,
    pub delta: u32,
    pub delta_internal: bool,
    pub truncation: bool,
    pub f: String,
    pub f_degree: u32,
    pub expected_f_degree: u32,
    pub step2: bool,
    pub family_degrees: Vec<u32>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TraceSummary {
    pub passed: bool,
    pub traces: Vec<TraceRow>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Checks {
    pub slice: SliceSummary,
    pub gap_truncation: GapSummary,
    pub proof_trace: TraceSummary,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ideal: Vec<String>,
    pub seed: u64,
    pub prime: u32,
    pub gin: Vec<String>,
    pub agreed: bool,
    pub samples_used: usize,
    pub borel_fixed: bool,
    pub saturated: bool,
    pub invariant_table: Vec<TableRow>,
    #[serde(rename = "s_Z")]
    pub s_z: u32,
    #[serde(rename = "s_Gamma")]
    pub s_gamma: u32,
    pub hypothesis: bool,
    pub connected: bool,
    pub low_levels_connected: bool,
    pub violations: Vec<ViolationRow>,
    pub checks: Checks,
    /// Mismatches against the expectations of a corpus file.
    pub expectation_mismatches: Vec<String>,
    pub passed: bool,
}

pub fn monomials(m: &MonomialIdeal) -> Vec<String> {
    m.generators().iter().map(|g| g.to_string()).collect()
}

pub fn table_rows(inv: &VarietyInvariants) -> Vec<TableRow> {
    inv.table
        .entries
        .iter()
        .map(|e| TableRow { p_hat: e.p_hat.0.clone(), s: e.profile.s, lambda: e.profile.lambdas.clone() })
        .collect()
}

/// Every multi-index of length `len` with entries in `0..=level`, last
/// entry varying fastest.
pub fn level_box(len: usize, level: u32) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=level).map(move |p| {
                    let mut w = v.clone();
                    w.push(p);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(MultiIndex).collect()
}

pub fn slice_summary(ideal: &Ideal, gin_i: &MonomialIdeal, opts: &RunOptions, cfg: &GinConfig) -> Result<SliceSummary> {
    let r = verify_slice_identity(ideal, gin_i, opts.slice_forms, opts.slice_p_max, cfg)?;
    let checks = r
        .checks
        .iter()
        .map(|c| SliceRow { form: c.form, p: c.p, lhs: monomials(&c.lhs), rhs: monomials(&c.rhs), equal: c.equal })
        .collect();
    Ok(SliceSummary { passed: r.all_equal(), checks })
}

pub fn gap_summary(ideal: &Ideal, gin_i: &MonomialIdeal, cfg: &GinConfig) -> Result<GapSummary> {
    let r = verify_gap_truncation(ideal, gin_i, cfg)?;
    let checks = r.checks.iter().map(|c| GapRow { delta: c.delta, equal: c.equal }).collect();
    Ok(GapSummary { passed: r.all_equal(), vacuous: r.vacuous(), checks })
}

pub fn trace_row(ideal: &Ideal, gin_i: &MonomialIdeal, p_hat: &MultiIndex, opts: &RunOptions, cfg: &GinConfig) -> Result<TraceRow> {
    let t = proof_trace(ideal, gin_i, p_hat, opts.specializations, cfg)?;
    Ok(TraceRow {
        p_hat: p_hat.0.clone(),
        gin_j: monomials(&t.gin_j),
        step1: t.step1_ok,
        delta: t.delta,
        delta_internal: t.delta_internal,
        truncation: t.truncation_ok,
        f: t.f.to_string(),
        f_degree: t.f_degree,
        expected_f_degree: t.expected_f_degree,
        step2: t.step2_ok,
        passed: t.ok(),
        family_degrees: t.family_degrees,
    })
}

pub fn trace_summary(ideal: &Ideal, gin_i: &MonomialIdeal, opts: &RunOptions, cfg: &GinConfig) -> Result<TraceSummary> {
    let len = ideal.ring().nvars().saturating_sub(3);
    let traces = level_box(len, opts.trace_level)
        .iter()
        .enumerate()
        .map(|(k, p)| trace_row(ideal, gin_i, p, opts, &cfg.derive("trace", k as u64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceSummary { passed: traces.iter().all(|t| t.passed), traces })
}

fn mismatches(expected: &Expected, inv: &VarietyInvariants) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(g) = &expected.gin {
        if g.as_slice() != inv.gin.gin.generators() {
            out.push(format!("gin: expected {:?}, found {}", g.iter().map(|m| m.to_string()).collect::<Vec<_>>(), inv.gin.gin));
        }
    }
    if expected.s_z.is_some_and(|s| s != inv.s_z) {
        out.push(format!("s_Z: expected {}, found {}", expected.s_z.unwrap_or(0), inv.s_z));
    }
    if expected.s_gamma.is_some_and(|s| s != inv.s_gamma) {
        out.push(format!("s_Gamma: expected {}, found {}", expected.s_gamma.unwrap_or(0), inv.s_gamma));
    }
    if let Some(l) = &expected.stable_lambdas {
        if l != &inv.table.stable_profile().lambdas {
            out.push(format!("lambda: expected {l:?}, found {:?}", inv.table.stable_profile().lambdas));
        }
    }
    out
}

/// Runs gin, the invariant table and every check on one ideal.
pub fn full_report(name: Option<&str>, ideal: &Ideal, expected: Option<&Expected>, opts: &RunOptions) -> Result<Report> {
    let base = GinConfig::new(opts.seed, opts.votes)?;
    let cfg = match name {
        Some(n) => base.derive(n, 0),
        None => base,
    };
    let inv = monoinv_core::variety_invariants(ideal, &cfg)?;
    let conn = connectedness_report(&inv);
    let g = &inv.gin.gin;
    let checks = Checks {
        slice: slice_summary(ideal, g, opts, &cfg.derive("slice", 0))?,
        gap_truncation: gap_summary(ideal, g, &cfg.derive("gap", 0))?,
        proof_trace: trace_summary(ideal, g, opts, &cfg.derive("trace", 0))?,
    };
    let expectation_mismatches = expected.map(|e| mismatches(e, &inv)).unwrap_or_default();
    let borel_fixed = g.is_borel_fixed();
    let saturated = g.is_saturated();
    let passed = checks.slice.passed
        && checks.gap_truncation.passed
        && checks.proof_trace.passed
        && (!conn.hypothesis || conn.connected)
        && borel_fixed
        && saturated
        && expectation_mismatches.is_empty();
    Ok(Report {
        name: name.map(str::to_string),
        ideal: ideal.generators().iter().map(|f| f.to_string()).collect(),
        seed: opts.seed,
        prime: ideal.ring().field().characteristic(),
        gin: monomials(g),
        agreed: inv.gin.agreed,
        samples_used: inv.gin.samples_used,
        borel_fixed,
        saturated,
        invariant_table: table_rows(&inv),
        s_z: conn.s_z,
        s_gamma: conn.s_gamma,
        hypothesis: conn.hypothesis,
        connected: conn.connected,
        low_levels_connected: conn.low_levels_connected,
        violations: conn
            .violations
            .iter()
            .map(|(p, v)| ViolationRow { p_hat: p.0.clone(), index: v.index, lambda_i: v.lambda_i, lambda_next: v.lambda_next })
            .collect(),
        checks,
        expectation_mismatches,
        passed,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CorpusReport {
    pub seed: u64,
    pub entries: Vec<EntryOutcome>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum EntryOutcome {
    Report(Box<Report>),
    Error { name: String, error: String },
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, EntryOutcome::Report(r) if r.passed)
    }

    pub fn name(&self) -> &str {
        match self {
            EntryOutcome::Report(r) => r.name.as_deref().unwrap_or(""),
            EntryOutcome::Error { name, .. } => name,
        }
    }
}

/// Runs every entry in parallel; the output order is the input order.
pub fn corpus_report(entries: &[CorpusEntry], opts: &RunOptions) -> CorpusReport {
    use rayon::prelude::*;
    let outcomes: Vec<EntryOutcome> = entries
        .par_iter()
        .map(|e| match full_report(Some(&e.name), &e.ideal, Some(&e.expected), opts) {
            Ok(r) => EntryOutcome::Report(Box::new(r)),
            Err(err) => EntryOutcome::Error { name: e.name.clone(), error: err.to_string() },
        })
        .collect();
    CorpusReport { seed: opts.seed, passed: outcomes.iter().all(EntryOutcome::passed), entries: outcomes }
}
