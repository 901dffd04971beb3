//! Monomial ideals and the combinatorics of Borel-fixed ideals: elementary
//! moves, colons by monomials, slices, gap degrees, and the two-variable
//! staircases whose exponents are the monomial invariants.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::groebner::{hilbert_function, HilbertFunction};
use crate::monomial::{revlex, Monomial};

/// A monomial ideal stored by its minimal generators, sorted by degree and
/// then by descending revlex. The zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Staircase rendering, e.g. `(x0^2, x0*x1, x1^2)`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

fn gen_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| revlex(b, a))
}

/// Keeps only the divisibility-minimal monomials, sorted.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(gen_order);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|k| k.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// `e_j(m)`: moves one power of `x_j` to `x_{j-1}`; `None` when `x_j ∤ m`.
pub fn elementary_move(m: &Monomial, j: usize) -> Result<Option<Monomial>> {
    let n = m.nvars();
    if j == 0 || j >= n {
        return Err(Error::VariableOutOfRange { index: j, nvars: n });
    }
    if m.exp(j) == 0 {
        return Ok(None);
    }
    Ok(Some(m.with_exp(j, m.exp(j) - 1).with_exp(j - 1, m.exp(j - 1) + 1)))
}

/// A generator `g` and move index `j` with `e_j(g) ∉ M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BorelWitness {
    pub generator: Monomial,
    pub move_index: usize,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::RingMismatch { expected: nvars, found: g.nvars() });
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(gens) })
    }

    /// Builds from exponent vectors.
    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Result<Self> {
        let gens = gens.iter().map(|e| Monomial::new(e)).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(nvars, gens)
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars).expect("valid ring size")] }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(|g| g.degree())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.last().map(|g| g.degree())
    }

    /// No generator involves the last variable.
    pub fn is_saturated(&self) -> bool {
        let last = self.nvars - 1;
        self.gens.iter().all(|g| g.exp(last) == 0)
    }

    /// Largest exponent of `x_j` among the generators.
    pub fn max_exponent(&self, j: usize) -> u32 {
        self.gens.iter().map(|g| g.exp(j)).max().unwrap_or(0)
    }

    pub fn hilbert_function(&self, dmax: u32) -> HilbertFunction {
        hilbert_function(self, dmax)
    }

    /// Returns the first generator/move pair violating Borel-fixedness, or
    /// `None` if the ideal is Borel-fixed. Checking generators suffices
    /// since `e_j(g·w)` is a multiple of `e_j(g)` or of `g`.
    pub fn borel_violation(&self) -> Option<BorelWitness> {
        for g in &self.gens {
            for j in 1..self.nvars {
                if let Some(moved) = elementary_move(g, j).expect("j in range") {
                    if !self.contains(&moved) {
                        return Some(BorelWitness { generator: *g, move_index: j });
                    }
                }
            }
        }
        None
    }

    pub fn is_borel_fixed(&self) -> bool {
        self.borel_violation().is_none()
    }

    /// `(M : m)`, generated by `g / gcd(g, m)`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars {
            return Err(Error::RingMismatch { expected: self.nvars, found: m.nvars() });
        }
        let gens = self.gens.iter().map(|g| g.div_unchecked(&g.gcd(m).expect("same ring"))).collect();
        Ok(MonomialIdeal { nvars: self.nvars, gens: minimalize(gens) })
    }

    /// Image under `x_j = 0`, in the ring without `x_j`.
    pub fn restrict_variable(&self, j: usize) -> Result<MonomialIdeal> {
        if j >= self.nvars || self.nvars < 2 {
            return Err(Error::VariableOutOfRange { index: j, nvars: self.nvars });
        }
        let gens = self.gens.iter().filter(|g| g.exp(j) == 0).map(|g| g.remove_var(j)).collect();
        Ok(MonomialIdeal { nvars: self.nvars - 1, gens: minimalize(gens) })
    }

    /// `M|_{x_n}`.
    pub fn restrict_last(&self) -> Result<MonomialIdeal> {
        self.restrict_variable(self.nvars - 1)
    }

    /// `(M : x_j^p)|_{x_j}`, the level-`p` cross-section along `x_j`.
    pub fn slice(&self, j: usize, p: u32) -> Result<MonomialIdeal> {
        if j < 2 || j >= self.nvars {
            return Err(Error::VariableOutOfRange { index: j, nvars: self.nvars });
        }
        let m = Monomial::one(self.nvars)?.with_exp(j, p);
        self.colon_by_monomial(&m)?.restrict_variable(j)
    }

    /// Iterated slices along the last axes: `levels[k]` is the colon
    /// exponent for the variable `x_{n-k}`, each step restricting the then
    /// last variable.
    pub fn iterated_slice(&self, levels: &[u32]) -> Result<MonomialIdeal> {
        let mut cur = self.clone();
        for &p in levels {
            let last = cur.nvars - 1;
            let m = Monomial::one(cur.nvars)?.with_exp(last, p);
            cur = cur.colon_by_monomial(&m)?.restrict_last()?;
        }
        Ok(cur)
    }

    /// Generators of degree `< delta` (strict) or `<= delta`.
    pub fn truncate(&self, delta: u32, strict: bool) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| if strict { g.degree() < delta } else { g.degree() <= delta })
            .copied()
            .collect();
        MonomialIdeal { nvars: self.nvars, gens }
    }

    pub fn gap_degrees(&self) -> GapDegrees {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return GapDegrees { min: None, max: None, internal: Vec::new() };
        };
        let internal = (lo..=hi).filter(|&d| !self.gens.iter().any(|g| g.degree() == d)).collect();
        GapDegrees { min: Some(lo), max: Some(hi), internal }
    }

    /// The profile `(s, λ)` of `M ∩ K[x0, x1]`, read from the generators
    /// supported on `{x0, x1}`.
    pub fn staircase(&self) -> Result<InvariantProfile> {
        if self.nvars < 2 {
            return Err(Error::InvalidArgument("staircase needs at least two variables"));
        }
        if self.is_unit() {
            return Err(Error::DegenerateStaircase("the ideal is the unit ideal"));
        }
        let planar: Vec<(u32, u32)> = self
            .gens
            .iter()
            .filter(|g| g.support().all(|i| i < 2))
            .map(|g| (g.exp(0), g.exp(1)))
            .collect();
        let s = planar
            .iter()
            .filter(|(_, b)| *b == 0)
            .map(|(a, _)| *a)
            .min()
            .ok_or(Error::DegenerateStaircase("no pure power of x0"))?;
        let mut lambdas = Vec::with_capacity(s as usize);
        for i in 0..s {
            let l = planar
                .iter()
                .filter(|(a, _)| *a <= i)
                .map(|(_, b)| *b)
                .min()
                .ok_or(Error::DegenerateStaircase("no pure power of x1"))?;
            lambdas.push(l);
        }
        Ok(InvariantProfile { s, lambdas })
    }

    /// Monomial invariants at `p_hat = (p_2, ..., p_{n-1})`, with `p_n = 0`.
    /// The ideal must be saturated, so that the profile does not depend on
    /// `p_n`.
    pub fn invariants(&self, p_hat: &MultiIndex) -> Result<InvariantProfile> {
        if self.nvars < 3 {
            return Err(Error::InvalidArgument("invariants need at least three variables"));
        }
        if p_hat.0.len() != self.nvars - 3 {
            return Err(Error::InvalidArgument("multi-index length must be n - 2"));
        }
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        self.profile_at(&p_hat.0)
    }

    /// Invariants at `p_tilde = (p_2, ..., p_n)`, including the last variable;
    /// no saturation is required.
    pub fn invariants_full(&self, p_tilde: &MultiIndex) -> Result<InvariantProfile> {
        if self.nvars < 2 || p_tilde.0.len() != self.nvars - 2 {
            return Err(Error::InvalidArgument("multi-index length must be n - 1"));
        }
        self.profile_at(&p_tilde.0)
    }

    fn profile_at(&self, levels: &[u32]) -> Result<InvariantProfile> {
        let mut m = Monomial::one(self.nvars)?;
        for (k, &p) in levels.iter().enumerate() {
            m = m.with_exp(k + 2, p);
        }
        self.colon_by_monomial(&m)?.staircase()
    }

    /// Profiles for every `p_hat` in the box `0 <= p_j <= max_j(x_j) + 1`.
    pub fn invariant_table(&self) -> Result<InvariantTable> {
        if self.nvars < 3 {
            return Err(Error::InvalidArgument("invariants need at least three variables"));
        }
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        self.table_over(self.nvars - 1)
    }

    /// Like [`MonomialIdeal::invariant_table`] but ranging over all axes
    /// `x_2 .. x_n`, for ideals that need not be saturated.
    pub fn invariant_table_full(&self) -> Result<InvariantTable> {
        if self.nvars < 2 {
            return Err(Error::InvalidArgument("invariants need at least two variables"));
        }
        self.table_over(self.nvars)
    }

    fn table_over(&self, axis_end: usize) -> Result<InvariantTable> {
        let bounds: Vec<u32> = (2..axis_end).map(|j| self.max_exponent(j) + 1).collect();
        let mut entries = Vec::new();
        let mut idx = vec![0u32; bounds.len()];
        loop {
            let p_hat = MultiIndex(idx.clone());
            let profile = self.profile_at(&p_hat.0)?;
            entries.push(TableEntry { p_hat, profile });
            // odometer increment, last axis fastest
            let mut k = bounds.len();
            loop {
                if k == 0 {
                    return Ok(InvariantTable { bounds, entries });
                }
                k -= 1;
                if idx[k] < bounds[k] {
                    idx[k] += 1;
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapDegrees {
    pub min: Option<u32>,
    pub max: Option<u32>,
    /// Degrees strictly between `min` and `max` with no minimal generator.
    pub internal: Vec<u32>,
}

impl GapDegrees {
    /// Every degree outside `[min, max]` is a gap; so are the internal ones.
    pub fn is_gap(&self, d: u32) -> bool {
        match (self.min, self.max) {
            (Some(lo), Some(hi)) if (lo..=hi).contains(&d) => self.internal.contains(&d),
            _ => true,
        }
    }
}

/// `p_hat = (p_2, ..., p_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(len: usize) -> Self {
        MultiIndex(vec![0; len])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// The staircase `x0^s, x0^{s-1} x1^{λ_{s-1}}, ..., x1^{λ_0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantProfile {
    pub s: u32,
    pub lambdas: Vec<u32>,
}

/// Where `λ_{i+1} + 2 >= λ_i >= λ_{i+1} + 1` fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub lambda_i: u32,
    pub lambda_next: u32,
}

impl InvariantProfile {
    pub fn new(lambdas: Vec<u32>) -> Self {
        InvariantProfile { s: lambdas.len() as u32, lambdas }
    }

    /// The minimal generators in `K[x0, x1]` embedded in `nvars` variables.
    pub fn generators(&self, nvars: usize) -> Result<Vec<Monomial>> {
        let one = Monomial::one(nvars)?;
        let mut out = vec![one.with_exp(0, self.s)];
        for (i, &l) in self.lambdas.iter().enumerate().rev() {
            out.push(one.with_exp(0, i as u32).with_exp(1, l));
        }
        Ok(out)
    }

    /// First index where the connectedness inequalities fail.
    pub fn first_violation(&self) -> Option<Violation> {
        self.lambdas.windows(2).enumerate().find_map(|(i, w)| {
            let (li, ln) = (w[0], w[1]);
            (li > ln + 2 || li < ln + 1).then_some(Violation { index: i, lambda_i: li, lambda_next: ln })
        })
    }

    pub fn is_connected(&self) -> bool {
        self.first_violation().is_none()
    }
}

/// `is_connected` as a free function returning the first violation.
pub fn is_connected(profile: &InvariantProfile) -> core::result::Result<(), Violation> {
    match profile.first_violation() {
        None => Ok(()),
        Some(v) => Err(v),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub p_hat: MultiIndex,
    pub profile: InvariantProfile,
}

/// Monomial invariants over the stabilization box, in lexicographic order
/// of `p_hat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    /// Per-axis upper bound (inclusive); the last slot is the stabilized
    /// value.
    pub bounds: Vec<u32>,
    pub entries: Vec<TableEntry>,
}

impl InvariantTable {
    pub fn get(&self, p_hat: &MultiIndex) -> Option<&InvariantProfile> {
        self.entries.iter().find(|e| &e.p_hat == p_hat).map(|e| &e.profile)
    }

    /// `s(0)`.
    pub fn s_zero(&self) -> u32 {
        self.entries[0].profile.s
    }

    /// `s` at the stabilized corner of the box.
    pub fn s_stable(&self) -> u32 {
        self.entries.last().expect("table is never empty").profile.s
    }

    pub fn stable_profile(&self) -> &InvariantProfile {
        &self.entries.last().expect("table is never empty").profile
    }

    pub fn violations(&self) -> Vec<(MultiIndex, Violation)> {
        self.entries
            .iter()
            .filter_map(|e| e.profile.first_violation().map(|v| (e.p_hat.clone(), v)))
            .collect()
    }

    /// `s(p) >= s(q)` whenever `p <= q` componentwise.
    pub fn is_monotone(&self) -> bool {
        self.entries.iter().all(|a| {
            self.entries.iter().all(|b| !a.p_hat.le(&b.p_hat) || a.profile.s >= b.profile.s)
        })
    }

    pub fn distinct_profiles(&self) -> Vec<&InvariantProfile> {
        let mut out: Vec<&InvariantProfile> = Vec::new();
        for e in &self.entries {
            if !out.contains(&&e.profile) {
                out.push(&e.profile);
            }
        }
        out
    }
}
