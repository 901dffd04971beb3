//! Independent reference computations by dense linear algebra over `F_p`,
//! one graded piece at a time. Nothing here calls into Gröbner bases.

#![allow(dead_code)]

use std::collections::HashMap;

use monoinv_core::{Polynomial, PrimeField};

pub struct Oracle {
    pub p: u64,
    pub nvars: usize,
}

/// Exponent vectors of degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Sparse polynomial with exponent-vector keys and residues mod `p`.
pub type Sparse = HashMap<Vec<u32>, u64>;

pub fn sparse(f: &Polynomial) -> Sparse {
    f.terms()
        .iter()
        .map(|t| (t.mono.exponents().iter().map(|&e| e as u32).collect(), t.coeff.value() as u64))
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Oracle {
    pub fn new(field: PrimeField, nvars: usize) -> Self {
        Oracle { p: field.characteristic() as u64, nvars }
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn degree(f: &Sparse) -> Option<u32> {
        f.keys().next().map(|m| m.iter().sum())
    }

    pub fn mul(&self, a: &Sparse, b: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                let e = out.entry(m).or_insert(0);
                *e = (*e + ca * cb) % self.p;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn vector(&self, f: &Sparse, index: &HashMap<Vec<u32>, usize>, len: usize) -> Vec<u64> {
        let mut v = vec![0; len];
        for (m, c) in f {
            v[index[m]] = *c;
        }
        v
    }

    /// Reduced row echelon form; zero rows dropped. Canonical for the span.
    pub fn rref(&self, mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..ncols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = *x * inv % self.p;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for k in 0..ncols {
                        rows[i][k] = (rows[i][k] + self.p - f * rows[r][k] % self.p) % self.p;
                    }
                }
            }
            r += 1;
        }
        rows.truncate(r);
        rows
    }

    /// Relations `c` with `sum c_i v_i = 0`, as a basis.
    pub fn left_kernel(&self, vs: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let k = vs.len();
        let width = vs.first().map_or(0, |v| v.len());
        let aug: Vec<Vec<u64>> = vs
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut row = v.clone();
                row.extend((0..k).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        self.rref(aug).into_iter().filter(|r| r[..width].iter().all(|&x| x == 0)).map(|r| r[width..].to_vec()).collect()
    }

    fn index(&self, d: u32) -> (Vec<Vec<u32>>, HashMap<Vec<u32>, usize>) {
        let basis = monomials(self.nvars, d);
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        (basis, index)
    }

    fn monomial(&self, m: &[u32]) -> Sparse {
        Sparse::from([(m.to_vec(), 1)])
    }

    /// RREF basis of `I_d` for `I` generated by `gens`.
    pub fn ideal_piece(&self, gens: &[Sparse], d: u32) -> Vec<Vec<u64>> {
        let (basis, index) = self.index(d);
        let mut rows = Vec::new();
        for g in gens {
            let Some(e) = Self::degree(g).filter(|&e| e <= d) else { continue };
            for m in monomials(self.nvars, d - e) {
                rows.push(self.vector(&self.mul(g, &self.monomial(&m)), &index, basis.len()));
            }
        }
        self.rref(rows)
    }

    pub fn hilbert(&self, gens: &[Sparse], dmax: u32) -> Vec<u64> {
        (0..=dmax).map(|d| (monomials(self.nvars, d).len() - self.ideal_piece(gens, d).len()) as u64).collect()
    }

    /// RREF basis of `(I : f)_d = { g in S_d : g f in I_{d + deg f} }`.
    pub fn quotient_piece(&self, gens: &[Sparse], f: &Sparse, d: u32) -> Vec<Vec<u64>> {
        let e = Self::degree(f).expect("nonzero divisor");
        let (basis, _) = self.index(d);
        let (big, big_index) = self.index(d + e);
        let ideal = self.ideal_piece(gens, d + e);
        // g f lies in I_{d+e} iff it is a combination of the basis of I_{d+e}
        let mut vs: Vec<Vec<u64>> = basis.iter().map(|m| self.vector(&self.mul(f, &self.monomial(m)), &big_index, big.len())).collect();
        vs.extend(ideal.iter().cloned());
        let relations = self.left_kernel(&vs);
        let rows = relations.into_iter().map(|r| r[..basis.len()].to_vec()).collect();
        self.rref(rows)
    }

    /// `(I : f^k)_d` for the `k` at which the chain has stabilized up to
    /// `k_max`; `None` if it had not.
    pub fn saturation_piece(&self, gens: &[Sparse], f: &Sparse, d: u32, k_max: u32) -> Option<Vec<Vec<u64>>> {
        let mut power = Sparse::from([(vec![0; self.nvars], 1)]);
        let mut prev: Option<Vec<Vec<u64>>> = None;
        for _ in 0..=k_max {
            let cur = if Self::degree(&power) == Some(0) { self.ideal_piece(gens, d) } else { self.quotient_piece(gens, &power, d) };
            if prev.as_ref() == Some(&cur) {
                return Some(cur);
            }
            prev = Some(cur);
            power = self.mul(&power, f);
        }
        None
    }

    /// RREF basis of the intersection of two subspaces given by RREF bases.
    pub fn intersection(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut vs = a.to_vec();
        vs.extend(b.iter().cloned());
        let width = a[0].len();
        let rows = self
            .left_kernel(&vs)
            .into_iter()
            .map(|c| {
                let mut v = vec![0u64; width];
                for (ci, ai) in c.iter().zip(a) {
                    for k in 0..width {
                        v[k] = (v[k] + ci * ai[k]) % self.p;
                    }
                }
                v
            })
            .collect();
        self.rref(rows)
    }

    /// Whether `f` lies in `I_{deg f}`.
    pub fn contains(&self, gens: &[Sparse], f: &Sparse) -> bool {
        let Some(d) = Self::degree(f) else { return true };
        let (basis, index) = self.index(d);
        let piece = self.ideal_piece(gens, d);
        let mut with = piece.clone();
        with.push(self.vector(f, &index, basis.len()));
        self.rref(with).len() == piece.len()
    }
}

/// Reverse lexicographic comparison written from the definition: lower
/// degree is greater; at equal degree the last differing exponent decides
/// and the smaller exponent wins. `true` iff `a > b`.
pub fn revlex_greater(a: &[u32], b: &[u32]) -> bool {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return da < db;
    }
    for k in (0..a.len()).rev() {
        if a[k] != b[k] {
            return a[k] < b[k];
        }
    }
    false
}
