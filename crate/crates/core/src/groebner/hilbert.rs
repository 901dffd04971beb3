use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;

/// `H(d) = dim_K (S/M)_d` for `0 <= d <= dmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn at(&self, d: usize) -> Option<u64> {
        self.values.get(d).copied()
    }

    pub fn dmax(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

/// Counts, degree by degree, the monomials not divisible by any generator
/// of `m`.
pub fn hilbert_function(m: &MonomialIdeal, dmax: u32) -> HilbertFunction {
    let n = m.nvars();
    let values = (0..=dmax)
        .map(|d| {
            let mut count = 0u64;
            for_each_monomial(n, d, &mut |mono| {
                if !m.contains(mono) {
                    count += 1;
                }
            });
            count
        })
        .collect();
    HilbertFunction { values }
}

/// Calls `f` on every monomial of degree `d` in `n` variables.
pub fn for_each_monomial(n: usize, d: u32, f: &mut dyn FnMut(&Monomial)) {
    let mut exps = alloc::vec![0u32; n];
    fn rec(exps: &mut [u32], idx: usize, left: u32, f: &mut dyn FnMut(&Monomial)) {
        if idx + 1 == exps.len() {
            exps[idx] = left;
            f(&Monomial::new(exps).expect("bounded size"));
            return;
        }
        for e in (0..=left).rev() {
            exps[idx] = e;
            rec(exps, idx + 1, left - e, f);
        }
        exps[idx] = 0;
    }
    if n == 0 {
        return;
    }
    rec(&mut exps, 0, d, f);
}

/// All monomials of degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for_each_monomial(n, d, &mut |m| out.push(*m));
    out
}
