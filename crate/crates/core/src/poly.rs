//! Homogeneous polynomials over a prime field, linear changes of coordinates
//! and restriction to hyperplanes.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::linalg::{self, Matrix};
use crate::monomial::{revlex, Monomial, MonomialOrder, MAX_VARS};

/// A polynomial ring `F_p[x_0, ..., x_{nvars-1}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    nvars: usize,
}

impl Ring {
    pub fn new(field: PrimeField, nvars: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument("a ring needs at least one variable"));
        }
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables { requested: nvars, max: MAX_VARS });
        }
        Ok(Ring { field, nvars })
    }

    /// The coordinate ring of `P^n`, i.e. `n + 1` variables.
    pub fn projective(field: PrimeField, n: usize) -> Result<Self> {
        Ring::new(field, n + 1)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The ring with the last variable removed.
    pub fn drop_last(&self) -> Result<Ring> {
        Ring::new(self.field, self.nvars - 1)
    }

    pub(crate) fn with_nvars(&self, nvars: usize) -> Result<Ring> {
        Ring::new(self.field, nvars)
    }

    pub fn var(&self, i: usize) -> Result<Polynomial> {
        Ok(Polynomial::monomial(*self, Elem::ONE, Monomial::var(self.nvars, i)?))
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::monomial(*self, Elem::ONE, Monomial::one(self.nvars).expect("checked"))
    }

    pub(crate) fn check(&self, other: &Ring) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch { expected: self.nvars, found: other.nvars });
        }
        if self.field != other.field {
            return Err(Error::InvalidArgument("polynomials over different prime fields"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Elem,
    pub mono: Monomial,
}

/// A homogeneous polynomial with terms strictly descending in revlex.
/// The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text form, e.g. `x1^2 - x0*x2`. Coefficients are printed as
/// their symmetric representatives modulo `p`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field;
        for (i, t) in self.terms.iter().enumerate() {
            let c = field.signed(t.coeff);
            let (neg, mag) = if c < 0 { (true, -c) } else { (false, c) };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{mag}*{}", t.mono)?;
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn monomial(ring: Ring, coeff: Elem, mono: Monomial) -> Self {
        assert_eq!(mono.nvars(), ring.nvars, "monomial ring mismatch");
        let terms = if coeff.is_zero() { Vec::new() } else { vec![Term { coeff, mono }] };
        Polynomial { ring, terms }
    }

    /// Builds a homogeneous polynomial from arbitrary (possibly repeated)
    /// terms.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Elem, Monomial)>) -> Result<Self> {
        let mut ts = Vec::new();
        for (coeff, mono) in terms {
            if mono.nvars() != ring.nvars {
                return Err(Error::RingMismatch { expected: ring.nvars, found: mono.nvars() });
            }
            ts.push(Term { coeff: ring.field.elem(coeff.0), mono });
        }
        combine(&mut ts, ring.field, MonomialOrder::Revlex);
        if let Some(first) = ts.first() {
            let d = first.mono.degree();
            if ts.iter().any(|t| t.mono.degree() != d) {
                return Err(Error::Inhomogeneous);
            }
        }
        Ok(Polynomial { ring, terms: ts })
    }

    /// Convenience constructor from integer coefficients and exponent vectors.
    pub fn from_coeffs<'a>(ring: Ring, terms: impl IntoIterator<Item = (i64, &'a [u32])>) -> Result<Self> {
        let mut ts = Vec::new();
        for (c, e) in terms {
            ts.push((ring.field.from_i64(c), Monomial::new(e)?));
        }
        Polynomial::from_terms(ring, ts)
    }

    /// Wraps terms already sorted descending under `Revlex`, combined and
    /// nonzero.
    pub(crate) fn from_sorted(ring: Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| revlex(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial { ring, terms }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.mono.degree())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// The revlex-greatest monomial of `self`.
    pub fn initial_monomial(&self) -> Result<Monomial> {
        self.terms.first().map(|t| t.mono).ok_or(Error::ZeroPolynomial)
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|t| Term { coeff: field.neg(t.coeff), mono: t.mono }).collect(),
        }
    }

    pub fn scale(&self, c: Elem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let field = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|t| Term { coeff: field.mul(c, t.coeff), mono: t.mono }).collect(),
        }
    }

    /// Scales so that the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(self.ring.field.inv(t.coeff).expect("nonzero")),
        }
    }

    fn check_add(&self, other: &Polynomial) -> Result<()> {
        self.ring.check(&other.ring)?;
        match (self.degree(), other.degree()) {
            (Some(a), Some(b)) if a != b => Err(Error::DegreeMismatch(a, b)),
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_add(other)?;
        let one = Monomial::one(self.ring.nvars)?;
        let neg_one = self.ring.field.neg(Elem::ONE);
        Ok(Polynomial {
            ring: self.ring,
            terms: sub_scaled(&self.terms, neg_one, &one, &other.terms, self.ring.field, MonomialOrder::Revlex),
        })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_add(other)?;
        let one = Monomial::one(self.ring.nvars)?;
        Ok(Polynomial {
            ring: self.ring,
            terms: sub_scaled(&self.terms, Elem::ONE, &one, &other.terms, self.ring.field, MonomialOrder::Revlex),
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(Polynomial {
            ring: self.ring,
            terms: mul_terms(&self.terms, &other.terms, self.ring.field, MonomialOrder::Revlex),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        if m.nvars() != self.ring.nvars {
            return Err(Error::RingMismatch { expected: self.ring.nvars, found: m.nvars() });
        }
        Ok(Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|t| Term { coeff: t.coeff, mono: t.mono.mul_unchecked(m) }).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = Polynomial {
                ring: self.ring,
                terms: mul_terms(&acc.terms, &self.terms, self.ring.field, MonomialOrder::Revlex),
            };
        }
        acc
    }

    /// Exact quotient `self / divisor` when `divisor` divides `self`,
    /// `None` otherwise.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.ring.check(&divisor.ring)?;
        let Some(lead) = divisor.terms.first() else {
            return Err(Error::ZeroPolynomial);
        };
        let field = self.ring.field;
        let lead_inv = field.inv(lead.coeff).expect("nonzero");
        let mut rem = self.terms.clone();
        let mut quot = Vec::new();
        while let Some(r) = rem.first() {
            if !lead.mono.divides(&r.mono) {
                return Ok(None);
            }
            let t = Term { coeff: field.mul(r.coeff, lead_inv), mono: r.mono.div_unchecked(&lead.mono) };
            rem = sub_scaled(&rem, t.coeff, &t.mono, &divisor.terms, field, MonomialOrder::Revlex);
            quot.push(t);
        }
        Ok(Some(Polynomial::from_sorted(self.ring, quot)))
    }

    /// Greatest common monomial divisor of the terms.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.mono;
        Some(it.fold(first, |acc, t| acc.gcd(&t.mono).expect("same ring")))
    }

    pub fn eval(&self, point: &[Elem]) -> Result<Elem> {
        if point.len() != self.ring.nvars {
            return Err(Error::RingMismatch { expected: self.ring.nvars, found: point.len() });
        }
        let field = self.ring.field;
        let mut acc = Elem::ZERO;
        for t in &self.terms {
            let mut v = t.coeff;
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                v = field.mul(v, field.pow(point[i], e as u64));
            }
            acc = field.add(acc, v);
        }
        Ok(acc)
    }

    /// `f(x_i -> g[i] . x)`: each variable is replaced by the linear form in
    /// row `i` of the matrix.
    pub fn apply_change(&self, g: &LinearChange) -> Result<Polynomial> {
        self.ring.check(&g.ring)?;
        Ok(substitute_linear(self, &g.matrix, self.ring))
    }

    /// Restriction to the hyperplane `h = 0`, expressed in one fewer
    /// variable. The variable eliminated is the last one with a nonzero
    /// coefficient in `h`; later variables shift down by one index.
    pub fn restrict(&self, h: &LinearForm) -> Result<Polynomial> {
        self.ring.check(&h.ring)?;
        let target = self.ring.drop_last()?;
        Ok(substitute_linear(self, &h.restriction_images(), target))
    }
}

/// Sorts descending under `order`, merges equal monomials and drops zeros.
pub(crate) fn combine(terms: &mut Vec<Term>, field: PrimeField, order: MonomialOrder) {
    terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms.drain(..) {
        match out.last_mut() {
            Some(last) if last.mono == t.mono => last.coeff = field.add(last.coeff, t.coeff),
            _ => {
                if let Some(last) = out.last() {
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                out.push(t);
            }
        }
    }
    if out.last().is_some_and(|t| t.coeff.is_zero()) {
        out.pop();
    }
    *terms = out;
}

/// `a - c * m * b` for term lists sorted under `order`.
pub(crate) fn sub_scaled(
    a: &[Term],
    c: Elem,
    m: &Monomial,
    b: &[Term],
    field: PrimeField,
    order: MonomialOrder,
) -> Vec<Term> {
    let neg_c = field.neg(c);
    let scaled = |t: &Term| Term { coeff: field.mul(neg_c, t.coeff), mono: t.mono.mul_unchecked(m) };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let tb = scaled(&b[j]);
        match order.cmp(&a[i].mono, &tb.mono) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(tb);
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(a[i].coeff, tb.coeff);
                if !s.is_zero() {
                    out.push(Term { coeff: s, mono: a[i].mono });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(scaled));
    out
}

pub(crate) fn mul_terms(a: &[Term], b: &[Term], field: PrimeField, order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for ta in a {
        for tb in b {
            out.push(Term { coeff: field.mul(ta.coeff, tb.coeff), mono: ta.mono.mul_unchecked(&tb.mono) });
        }
    }
    combine(&mut out, field, order);
    out
}

/// Substitutes `x_i -> sum_j images[i][j] * y_j` into `f`, producing a
/// polynomial in `target`.
fn substitute_linear(f: &Polynomial, images: &Matrix, target: Ring) -> Polynomial {
    let field = target.field;
    let order = MonomialOrder::Revlex;
    let linear: Vec<Vec<Term>> = images
        .iter()
        .map(|row| {
            let mut ts: Vec<Term> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, &c)| Term { coeff: c, mono: Monomial::var(target.nvars, j).expect("in range") })
                .collect();
            combine(&mut ts, field, order);
            ts
        })
        .collect();
    // powers[i][e] = (image of x_i)^e, built lazily
    let one = vec![Term { coeff: Elem::ONE, mono: Monomial::one(target.nvars).expect("checked") }];
    let mut powers: Vec<Vec<Vec<Term>>> = vec![vec![one.clone()]; images.len()];
    let mut acc: Vec<Term> = Vec::new();
    for t in &f.terms {
        let mut prod = vec![Term { coeff: t.coeff, mono: one[0].mono }];
        for (i, &e) in t.mono.exponents().iter().enumerate() {
            let e = e as usize;
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e {
                let next = mul_terms(powers[i].last().expect("nonempty"), &linear[i], field, order);
                powers[i].push(next);
            }
            prod = mul_terms(&prod, &powers[i][e], field, order);
        }
        acc.extend(prod);
    }
    combine(&mut acc, field, order);
    Polynomial { ring: target, terms: acc }
}

/// An invertible linear change of coordinates `x_i -> sum_j m[i][j] x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    ring: Ring,
    matrix: Matrix,
}

impl LinearChange {
    pub fn new(ring: Ring, matrix: Matrix) -> Result<Self> {
        let n = ring.nvars;
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix shape does not match the ring"));
        }
        let matrix: Matrix = matrix.into_iter().map(|r| r.into_iter().map(|c| ring.field.elem(c.0)).collect()).collect();
        if linalg::rank(ring.field, &matrix) < n {
            return Err(Error::SingularMatrix);
        }
        Ok(LinearChange { ring, matrix })
    }

    pub fn identity(ring: Ring) -> Self {
        let n = ring.nvars;
        let matrix = (0..n).map(|i| (0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }).collect()).collect();
        LinearChange { ring, matrix }
    }

    /// The permutation `x_i -> x_{perm[i]}`.
    pub fn permutation(ring: Ring, perm: &[usize]) -> Result<Self> {
        let n = ring.nvars;
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if perm.get(i) == Some(&j) { Elem::ONE } else { Elem::ZERO }).collect())
            .collect();
        LinearChange::new(ring, matrix)
    }

    /// Uniformly random invertible matrix (rejection sampling on singular
    /// draws).
    pub fn random<R: Rng + ?Sized>(ring: Ring, rng: &mut R) -> Self {
        let n = ring.nvars;
        let p = ring.field.characteristic();
        loop {
            let matrix: Matrix = (0..n).map(|_| (0..n).map(|_| Elem(rng.gen_range(0..p))).collect()).collect();
            if linalg::rank(ring.field, &matrix) == n {
                return LinearChange { ring, matrix };
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> LinearChange {
        let matrix = linalg::inverse(self.ring.field, &self.matrix).expect("invertible by construction");
        LinearChange { ring: self.ring, matrix }
    }
}

/// A nonzero linear form `sum_i c_i x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl LinearForm {
    pub fn new(ring: Ring, coeffs: Vec<Elem>) -> Result<Self> {
        if coeffs.len() != ring.nvars {
            return Err(Error::RingMismatch { expected: ring.nvars, found: coeffs.len() });
        }
        let coeffs: Vec<Elem> = coeffs.into_iter().map(|c| ring.field.elem(c.0)).collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroLinearForm);
        }
        Ok(LinearForm { ring, coeffs })
    }

    pub fn from_ints(ring: Ring, coeffs: &[i64]) -> Result<Self> {
        LinearForm::new(ring, coeffs.iter().map(|&c| ring.field.from_i64(c)).collect())
    }

    /// The coordinate `x_i`.
    pub fn variable(ring: Ring, i: usize) -> Result<Self> {
        if i >= ring.nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars: ring.nvars });
        }
        let mut coeffs = vec![Elem::ZERO; ring.nvars];
        coeffs[i] = Elem::ONE;
        Ok(LinearForm { ring, coeffs })
    }

    /// Uniform random form with nonzero last coefficient.
    pub fn random<R: Rng + ?Sized>(ring: Ring, rng: &mut R) -> Self {
        let p = ring.field.characteristic();
        let mut coeffs: Vec<Elem> = (0..ring.nvars).map(|_| Elem(rng.gen_range(0..p))).collect();
        coeffs[ring.nvars - 1] = Elem(rng.gen_range(1..p));
        LinearForm { ring, coeffs }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, Monomial::var(self.ring.nvars, i).expect("in range")));
        Polynomial::from_terms(self.ring, terms).expect("linear forms are homogeneous")
    }

    /// Index of the variable eliminated by restriction.
    pub fn pivot(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).expect("nonzero form")
    }

    /// Images of `x_0..x_n` in the ring of the hyperplane `self = 0`.
    fn restriction_images(&self) -> Matrix {
        let field = self.ring.field;
        let n = self.ring.nvars;
        let k = self.pivot();
        let scale = field.neg(field.inv(self.coeffs[k]).expect("pivot nonzero"));
        let reindex = |i: usize| if i < k { i } else { i - 1 };
        (0..n)
            .map(|i| {
                let mut row = vec![Elem::ZERO; n - 1];
                if i == k {
                    for (j, &c) in self.coeffs.iter().enumerate() {
                        if j != k {
                            row[reindex(j)] = field.mul(scale, c);
                        }
                    }
                } else {
                    row[reindex(i)] = Elem::ONE;
                }
                row
            })
            .collect()
    }
}
