//! Exact linear algebra over ℚ, used by the Verma-module solver.

use num_traits::{One, Zero};

use super::Rational;

/// Reduced row echelon form of a dense rational matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

/// Row-reduce `m` (each inner vector one row of length `cols`). Pivot
/// columns are searched in the order given by `col_order`, which lets the
/// caller prefer some coordinates as pivots.
pub fn rref_with_order(mut m: Vec<Vec<Rational>>, cols: usize, col_order: &[usize]) -> Rref {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for &col in col_order {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let inv = m[rank][col].recip();
        if !inv.is_one() {
            for x in m[rank].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    Rref { rows: m, pivots, cols }
}

pub fn rref(m: Vec<Vec<Rational>>, cols: usize) -> Rref {
    let order: Vec<usize> = (0..cols).collect();
    rref_with_order(m, cols, &order)
}

pub fn rank(m: Vec<Vec<Rational>>, cols: usize) -> usize {
    rref(m, cols).pivots.len()
}

/// Basis of `{x : A x = 0}` where `a` has `cols` columns.
pub fn nullspace(a: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let r = rref(a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !r.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in r.rows.iter().zip(&r.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

impl Rref {
    /// Subtract multiples of the echelon rows so that `v` vanishes on every
    /// pivot column.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
}
