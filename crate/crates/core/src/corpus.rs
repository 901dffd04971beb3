//! Explicit varieties: general points in the plane, space curves and
//! surfaces in `P^4`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::gin::SeedStream;
use crate::groebner::{hilbert_function, intersect, Ideal};
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::{LinearForm, Polynomial, Ring};

/// Expected results pinned for a corpus entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub gin: Option<Vec<Monomial>>,
    pub s_z: Option<u32>,
    pub s_gamma: Option<u32>,
    /// Profile at the stabilized corner of the invariant table.
    pub stable_lambdas: Option<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tags {
    pub integral: bool,
    pub codim2: bool,
    pub satisfies_hypothesis: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    /// Ambient projective dimension.
    pub n: usize,
    pub seed: u64,
    pub ideal: Ideal,
    pub tags: Tags,
    pub expected: Expected,
}

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `dim S_d` for `S = K[x_0..x_n]`, zero for negative `d`.
fn dim_forms(n: usize, d: i64) -> u64 {
    if d < 0 {
        0
    } else {
        binom(d + n as i64, n as i64)
    }
}

fn random_form<R: Rng + ?Sized>(ring: Ring, degree: u32, rng: &mut R) -> Polynomial {
    let p = ring.field().characteristic();
    let monos = crate::groebner::monomials_of_degree(ring.nvars(), degree);
    Polynomial::from_terms(ring, monos.into_iter().map(|m| (Elem(rng.gen_range(0..p)), m))).expect("homogeneous")
}

/// The ideal of `N` points of `P^2` with uniformly random coordinates,
/// together with the points.
pub fn general_points(field: PrimeField, count: usize, seed: u64) -> Result<(Ideal, Vec<[Elem; 3]>)> {
    if count == 0 {
        return Err(Error::InvalidArgument("at least one point is required"));
    }
    let ring = Ring::new(field, 3)?;
    let p = field.characteristic();
    let mut rng = SeedStream::new(seed).child("points", 0).rng();
    let mut points: Vec<[Elem; 3]> = Vec::new();
    let mut attempts = 0usize;
    while points.len() < count {
        attempts += 1;
        if attempts > 100 * count + 1000 {
            return Err(Error::InvalidArgument("field too small for the requested number of points"));
        }
        let pt = [Elem(rng.gen_range(0..p)), Elem(rng.gen_range(0..p)), Elem(rng.gen_range(0..p))];
        if pt.iter().all(|c| c.is_zero()) {
            continue;
        }
        // reject projectively coincident points
        let coincident = points.iter().any(|q| {
            linalg::rank(field, &vec![pt.to_vec(), q.to_vec()]) < 2
        });
        if !coincident {
            points.push(pt);
        }
    }
    let mut acc: Option<Ideal> = None;
    for pt in &points {
        let pi = point_ideal(ring, pt)?;
        acc = Some(match acc {
            None => pi,
            Some(i) => intersect(&i, &pi)?,
        });
    }
    let ideal = acc.expect("count >= 1");
    let gens = ideal.minimal_generators();
    Ok((Ideal::new(ring, gens)?, points))
}

/// The two linear forms cutting out a point.
pub fn point_ideal(ring: Ring, point: &[Elem]) -> Result<Ideal> {
    let field = ring.field();
    let kernel = linalg::kernel(field, &vec![point.to_vec()], ring.nvars());
    let gens = kernel
        .into_iter()
        .map(|v| Ok(LinearForm::new(ring, v)?.to_polynomial()))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// The three 2×2 minors of `[[x0, x1, x2], [x1, x2, x3]]`.
pub fn twisted_cubic(field: PrimeField) -> Result<Ideal> {
    let ring = Ring::new(field, 4)?;
    let q = |a: &[u32], b: &[u32]| Polynomial::from_coeffs(ring, [(1, a), (-1, b)]);
    Ideal::new(
        ring,
        vec![
            q(&[1, 0, 1, 0], &[0, 2, 0, 0])?,
            q(&[1, 0, 0, 1], &[0, 1, 1, 0])?,
            q(&[0, 1, 0, 1], &[0, 0, 2, 0])?,
        ],
    )
}

/// The smooth rational quartic `(s^4 : s^3 t : s t^3 : t^4)` in `P^3`.
pub fn rational_quartic(field: PrimeField) -> Result<Ideal> {
    let ring = Ring::new(field, 4)?;
    let b = |a: &[u32], c: &[u32]| Polynomial::from_coeffs(ring, [(1, a), (-1, c)]);
    Ideal::new(
        ring,
        vec![
            b(&[1, 0, 0, 1], &[0, 1, 1, 0])?,
            b(&[0, 3, 0, 0], &[2, 0, 1, 0])?,
            b(&[0, 0, 3, 0], &[0, 1, 0, 2])?,
            b(&[1, 0, 2, 0], &[0, 2, 0, 1])?,
        ],
    )
}

/// Two random forms of degrees `a <= b` in `P^n`, resampled until their
/// Hilbert function is that of a complete intersection.
pub fn complete_intersection(field: PrimeField, a: u32, b: u32, n: usize, seed: u64) -> Result<Ideal> {
    if !(2 <= a && a <= b) || n < 3 {
        return Err(Error::InvalidArgument("complete intersection needs 2 <= a <= b and n >= 3"));
    }
    let ring = Ring::projective(field, n)?;
    let stream = SeedStream::new(seed).child("complete-intersection", 0);
    for attempt in 0..16 {
        let mut rng = stream.child("attempt", attempt).rng();
        let f = random_form(ring, a, &mut rng);
        let g = random_form(ring, b, &mut rng);
        let ideal = Ideal::new(ring, vec![f, g])?;
        let expected = |d: i64| {
            dim_forms(n, d) + dim_forms(n, d - (a + b) as i64) - dim_forms(n, d - a as i64) - dim_forms(n, d - b as i64)
        };
        if hilbert_matches(&ideal, a + b, expected) {
            return Ok(ideal);
        }
    }
    Err(Error::InvalidArgument("could not draw a complete intersection"))
}

/// The 2×2 minors of a 2×3 matrix of linear forms.
pub fn determinantal(rows: &[[LinearForm; 3]; 2]) -> Result<Ideal> {
    let ring = rows[0][0].ring();
    let e: Vec<Vec<Polynomial>> = rows.iter().map(|r| r.iter().map(|l| l.to_polynomial()).collect()).collect();
    let minor = |i: usize, j: usize| -> Result<Polynomial> { e[0][i].mul(&e[1][j])?.sub(&e[0][j].mul(&e[1][i])?) };
    Ideal::new(ring, vec![minor(0, 1)?, minor(0, 2)?, minor(1, 2)?])
}

/// Minors of a random 2×3 linear matrix in `P^n`, resampled until the
/// Hilbert function is that of a codimension-two determinantal variety.
pub fn random_determinantal(field: PrimeField, n: usize, seed: u64) -> Result<Ideal> {
    if n < 3 {
        return Err(Error::InvalidArgument("determinantal varieties need n >= 3"));
    }
    let ring = Ring::projective(field, n)?;
    let stream = SeedStream::new(seed).child("determinantal", 0);
    for attempt in 0..16 {
        let mut rng = stream.child("attempt", attempt).rng();
        let mut draw = || LinearForm::random(ring, &mut rng);
        let rows = [[draw(), draw(), draw()], [draw(), draw(), draw()]];
        let ideal = determinantal(&rows)?;
        // 0 -> S(-3)^2 -> S(-2)^3 -> S
        let expected = |d: i64| dim_forms(n, d) + 2 * dim_forms(n, d - 3) - 3 * dim_forms(n, d - 2);
        if hilbert_matches(&ideal, 5, expected) {
            return Ok(ideal);
        }
    }
    Err(Error::InvalidArgument("could not draw a generic determinantal ideal"))
}

/// The ideal of the curve `(s^e ... ) -> (phi_0(s,t) : ... : phi_n(s,t))` for
/// binary forms `phi_i` of a common degree `e`, given by coefficient lists
/// (coefficient of `s^{e-k} t^k` at index `k`). Each graded piece `I_d` is
/// the kernel of evaluation on the parametrization; pieces up to degree
/// `e - 1` generate the ideal of a nondegenerate curve of degree `e`.
pub fn rational_curve(field: PrimeField, params: &[Vec<Elem>]) -> Result<Ideal> {
    let nvars = params.len();
    let e = params.first().map_or(0, |p| p.len().saturating_sub(1));
    if nvars < 3 || e < 2 || params.iter().any(|p| p.len() != e + 1) {
        return Err(Error::InvalidArgument("rational curve needs at least three binary forms of a common degree >= 2"));
    }
    let ring = Ring::new(field, nvars)?;
    let mul = |a: &[Elem], b: &[Elem]| {
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(x, y));
            }
        }
        out
    };
    let mut gens = Vec::new();
    for d in 1..e as u32 {
        let monos = crate::groebner::monomials_of_degree(nvars, d);
        let images: Vec<Vec<Elem>> = monos
            .iter()
            .map(|m| {
                let mut acc = vec![Elem::ONE];
                for (i, p) in params.iter().enumerate() {
                    for _ in 0..m.exp(i) {
                        acc = mul(&acc, p);
                    }
                }
                acc
            })
            .collect();
        let width = e * d as usize + 1;
        let equations: Vec<Vec<Elem>> = (0..width).map(|k| images.iter().map(|img| img[k]).collect()).collect();
        for v in linalg::kernel(field, &equations, monos.len()) {
            let terms = v.into_iter().zip(monos.iter().copied()).filter(|(c, _)| !c.is_zero());
            gens.push(Polynomial::from_terms(ring, terms)?);
        }
    }
    if gens.iter().any(|g| g.degree() == Some(1)) {
        return Err(Error::InvalidArgument("the curve is degenerate"));
    }
    let ideal = Ideal::new(ring, gens)?;
    Ideal::new(ring, ideal.minimal_generators())
}

/// A rational curve of degree `e` in `P^n` with random parametrization,
/// resampled until its Hilbert function is `e d + 1` from degree `e - 1` on.
pub fn random_rational_curve(field: PrimeField, e: usize, n: usize, seed: u64) -> Result<Ideal> {
    let p = field.characteristic();
    let stream = SeedStream::new(seed).child("rational-curve", 0);
    for attempt in 0..16 {
        let mut rng = stream.child("attempt", attempt).rng();
        let params: Vec<Vec<Elem>> = (0..=n).map(|_| (0..=e).map(|_| Elem(rng.gen_range(0..p))).collect()).collect();
        let Ok(ideal) = rational_curve(field, &params) else { continue };
        let h = hilbert_function(&ideal.initial_ideal(), e as u32 + 2);
        if (e - 1..=e + 2).all(|d| h.values[d] == (e * d + 1) as u64) {
            return Ok(ideal);
        }
    }
    Err(Error::InvalidArgument("could not draw a smooth rational curve"))
}

fn hilbert_matches(ideal: &Ideal, dmax: u32, expected: impl Fn(i64) -> u64) -> bool {
    let h = hilbert_function(&ideal.initial_ideal(), dmax);
    h.values.iter().enumerate().all(|(d, &v)| v == expected(d as i64))
}

/// The built-in corpus, generated from `seed`.
pub fn builtin_corpus(field: PrimeField, seed: u64) -> Result<Vec<CorpusEntry>> {
    let codim2 = Tags { integral: true, codim2: true, satisfies_hypothesis: true };
    let stream = SeedStream::new(seed);
    let sub = |label: &str| stream.child(label, 0).value();
    let mut out = Vec::new();
    let mut push = |name: &str, n: usize, seed: u64, ideal: Ideal, tags: Tags| {
        out.push(CorpusEntry { name: name.into(), n, seed, ideal, tags, expected: Expected::default() });
    };
    push("twisted_cubic", 3, 0, twisted_cubic(field)?, codim2);
    push("rational_quartic", 3, 0, rational_quartic(field)?, codim2);
    for (a, b) in [(2, 2), (2, 3), (3, 3), (2, 4), (2, 5)] {
        let name = alloc::format!("ci_{a}_{b}_p3");
        let s = sub(&name);
        push(&name, 3, s, complete_intersection(field, a, b, 3, s)?, codim2);
    }
    let s = sub("rational_quintic_p3");
    let tags = Tags { satisfies_hypothesis: false, ..codim2 };
    push("rational_quintic_p3", 3, s, random_rational_curve(field, 5, 3, s)?, tags);
    let s = sub("determinantal_p3");
    push("determinantal_p3", 3, s, random_determinantal(field, 3, s)?, codim2);
    let s = sub("ci_2_2_p4");
    push("ci_2_2_p4", 4, s, complete_intersection(field, 2, 2, 4, s)?, codim2);
    let s = sub("ci_2_3_p4");
    push("ci_2_3_p4", 4, s, complete_intersection(field, 2, 3, 4, s)?, codim2);
    let s = sub("cubic_scroll_p4");
    push("cubic_scroll_p4", 4, s, random_determinantal(field, 4, s)?, codim2);
    for count in [3usize, 5, 6, 10] {
        let name = alloc::format!("points_{count}_p2");
        let s = sub(&name);
        let (ideal, _) = general_points(field, count, s)?;
        // reduced points in the plane: codimension two, not irreducible
        let tags = Tags { integral: count == 1, codim2: true, satisfies_hypothesis: true };
        push(&name, 2, s, ideal, tags);
    }
    Ok(out)
}
