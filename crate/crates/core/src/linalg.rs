//! Dense linear algebra over a prime field.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Elem, PrimeField};

pub type Matrix = Vec<Vec<Elem>>;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are removed.
pub fn row_reduce(field: PrimeField, rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(rows[rank][col]).expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v = field.sub(*v, field.mul(c, pv));
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank(field: PrimeField, rows: &Matrix) -> usize {
    let mut m = rows.clone();
    row_reduce(field, &mut m).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(field: PrimeField, m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
            r
        })
        .collect();
    let pivots = row_reduce(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A basis of the right kernel `{v : M v = 0}`.
pub fn kernel(field: PrimeField, m: &Matrix, ncols: usize) -> Matrix {
    let mut r = m.clone();
    let pivots = row_reduce(field, &mut r);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Elem::ZERO; ncols];
        v[free] = Elem::ONE;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = field.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let f = PrimeField::new(101).unwrap();
        let m: Matrix = vec![vec![f.elem(1), f.elem(2)], vec![f.elem(3), f.elem(4)]];
        let inv = inverse(f, &m).unwrap();
        // m * inv = I
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Elem::ZERO;
                for k in 0..2 {
                    s = f.add(s, f.mul(m[i][k], inv[k][j]));
                }
                assert_eq!(s, if i == j { Elem::ONE } else { Elem::ZERO });
            }
        }
        let sing: Matrix = vec![vec![f.elem(1), f.elem(2)], vec![f.elem(2), f.elem(4)]];
        assert!(inverse(f, &sing).is_none());
        let k = kernel(f, &sing, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(f.add(k[0][0], f.mul(f.elem(2), k[0][1])), Elem::ZERO);
    }
}
