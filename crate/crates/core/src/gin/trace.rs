//! The constructive steps behind the connectedness argument: the iterated
//! quotient–restriction ideal `J`, its gap degree, and the gcd `F` of the
//! generators of `J_{≤δ}`.

use alloc::vec;
use alloc::vec::Vec;

use super::verify::gin_or_unit;
use super::{GinConfig, SeedStream};
use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::groebner::{quotient_by_power, restrict_ideal, truncate, Ideal};
use crate::monomial::Monomial;
use crate::monomial_ideal::{MonomialIdeal, MultiIndex};
use crate::poly::{LinearForm, Polynomial};

#[derive(Clone, Debug)]
pub struct ProofTrace {
    pub p_hat: MultiIndex,
    /// `J` for the first specialization of the linear forms.
    pub j: Ideal,
    pub gin_j: MonomialIdeal,
    /// The iterated slice of `gin(I)` that `gin(J)` must equal.
    pub slice_of_gin: MonomialIdeal,
    pub step1_ok: bool,
    pub delta: u32,
    /// `delta` is an internal gap of `gin(J)` rather than the fallback one
    /// past the last generator.
    pub delta_internal: bool,
    pub truncation_ok: bool,
    pub f: Polynomial,
    pub f_degree: u32,
    /// Least `x0`-exponent among generators of `gin(J)` of degree `<= δ`.
    pub expected_f_degree: u32,
    pub step2_ok: bool,
    /// `deg F` for every specialization, the first one included.
    pub family_degrees: Vec<u32>,
}

impl ProofTrace {
    pub fn family_consistent(&self) -> bool {
        self.family_degrees.iter().all(|&d| d == self.f_degree)
    }

    pub fn ok(&self) -> bool {
        self.step1_ok && self.step2_ok && self.truncation_ok && self.family_consistent()
    }
}

/// `J = ((I|_h : l_{n-1}^{p_{n-1}})|_{l_{n-1}} : ...)|_{l_2}` for random
/// linear forms drawn from `stream`.
fn build_j(ideal: &Ideal, p_hat: &MultiIndex, stream: SeedStream) -> Result<Ideal> {
    let mut rng = stream.rng();
    let h = LinearForm::random(ideal.ring(), &mut rng);
    let mut j = restrict_ideal(ideal, &h)?;
    for &p in p_hat.0.iter().rev() {
        let l = LinearForm::random(j.ring(), &mut rng);
        j = quotient_by_power(&j, &l.to_polynomial(), p)?;
        j = restrict_ideal(&j, &l)?;
    }
    Ok(j)
}

fn gcd_of_truncation(j: &Ideal, delta: u32) -> Result<Polynomial> {
    let t = truncate(j, delta, false);
    if t.is_zero() {
        return Err(Error::DegenerateStaircase("J has no elements of degree at most delta"));
    }
    gcd_two_vars(t.generators())
}

/// Reproduces the computable steps for one multi-index `p_hat`:
/// `gin(J)` against the iterated slice of `gin(I)`, the choice of a gap
/// degree `δ`, and `deg gcd(J_{≤δ})` against the staircase of `gin(J)`.
/// `specializations` independent choices of the linear forms are drawn and
/// their gcd degrees compared.
pub fn proof_trace(
    ideal: &Ideal,
    gin_i: &MonomialIdeal,
    p_hat: &MultiIndex,
    specializations: usize,
    config: &GinConfig,
) -> Result<ProofTrace> {
    let nvars = ideal.ring().nvars();
    if nvars < 3 {
        return Err(Error::InvalidArgument("proof trace needs at least three variables"));
    }
    if p_hat.0.len() != nvars - 3 {
        return Err(Error::InvalidArgument("multi-index length must be n - 2"));
    }
    let stream = SeedStream::new(config.seed);
    let label = |s: usize| stream.child("trace-forms", s as u64);

    let j = build_j(ideal, p_hat, label(0))?;
    if j.is_zero() || j.is_unit() {
        return Err(Error::DegenerateStaircase("J is zero or the unit ideal"));
    }
    let gin_j = gin_or_unit(&j, &config.derive("trace-gin", 0))?;

    let mut levels = vec![0];
    levels.extend(p_hat.0.iter().rev());
    let slice_of_gin = gin_i.iterated_slice(&levels)?;
    let step1_ok = gin_j == slice_of_gin;

    let gaps = gin_j.gap_degrees();
    let (delta, delta_internal) = match gaps.internal.last() {
        Some(&d) => (d, true),
        None => (gin_j.max_degree().expect("nonzero") + 1, false),
    };

    let truncated_gin = gin_or_unit(&truncate(&j, delta, false), &config.derive("trace-gin", 1))?;
    let truncation_ok = truncated_gin == gin_j.truncate(delta, false);

    let f = gcd_of_truncation(&j, delta)?;
    let f_degree = f.degree().expect("gcd is nonzero");
    let expected_f_degree = gin_j
        .generators()
        .iter()
        .filter(|g| g.degree() <= delta)
        .map(|g| g.exp(0))
        .min()
        .expect("some generator lies below delta");

    let mut family_degrees = vec![f_degree];
    for s in 1..specializations {
        let js = build_j(ideal, p_hat, label(s))?;
        family_degrees.push(gcd_of_truncation(&js, delta)?.degree().expect("nonzero"));
    }

    Ok(ProofTrace {
        p_hat: p_hat.clone(),
        j,
        gin_j,
        slice_of_gin,
        step1_ok,
        delta,
        delta_internal,
        truncation_ok,
        step2_ok: f_degree == expected_f_degree,
        f,
        f_degree,
        expected_f_degree,
        family_degrees,
    })
}

/// Dense univariate polynomial, coefficient of `x^i` at index `i`, no
/// trailing zeros.
type Univariate = Vec<Elem>;

fn trim(mut u: Univariate) -> Univariate {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
    u
}

fn rem(field: PrimeField, mut a: Univariate, b: &Univariate) -> Univariate {
    let lead_inv = field.inv(*b.last().expect("nonzero divisor")).expect("nonzero");
    while a.len() >= b.len() {
        let c = field.mul(*a.last().expect("nonempty"), lead_inv);
        let shift = a.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            a[shift + i] = field.sub(a[shift + i], field.mul(c, bc));
        }
        a = trim(a);
    }
    a
}

fn univariate_gcd(field: PrimeField, mut a: Univariate, mut b: Univariate) -> Univariate {
    while !b.is_empty() {
        let r = rem(field, a, &b);
        a = b;
        b = r;
    }
    a
}

/// Monic gcd of forms in `K[x0, x1]` by the Euclidean algorithm on the
/// dehomogenizations at `x1 = 1`. The monomial factor `x0^a x1^b` common to
/// all inputs is tracked separately and restored at the end.
pub fn gcd_two_vars(fs: &[Polynomial]) -> Result<Polynomial> {
    let nonzero: Vec<&Polynomial> = fs.iter().filter(|f| !f.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Err(Error::ZeroPolynomial);
    };
    let ring = first.ring();
    if ring.nvars() != 2 {
        return Err(Error::InvalidArgument("gcd_two_vars needs polynomials in two variables"));
    }
    let field = ring.field();
    let mut common: Option<Monomial> = None;
    let mut g: Option<Univariate> = None;
    for f in &nonzero {
        ring.check(&f.ring())?;
        let content = f.monomial_content().expect("nonzero");
        common = Some(match common {
            None => content,
            Some(c) => c.gcd(&content)?,
        });
        let mut u = vec![Elem::ZERO; (f.degree().expect("nonzero") + 1) as usize];
        for t in f.terms() {
            let i = (t.mono.exp(0) - content.exp(0)) as usize;
            u[i] = field.add(u[i], t.coeff);
        }
        let u = trim(u);
        g = Some(match g {
            None => u,
            Some(acc) => univariate_gcd(field, acc, u),
        });
    }
    let g = g.expect("at least one input");
    let e = (g.len() - 1) as u32;
    let common = common.expect("at least one input");
    let terms = g
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| (c, Monomial::new(&[i as u32 + common.exp(0), e - i as u32 + common.exp(1)]).expect("two variables")));
    Ok(Polynomial::from_terms(ring, terms)?.monic())
}
