use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use num_traits::{One, Zero};

use super::{poly, ExactError, Rational};

/// Dense row-major matrix over a single cyclotomic field.
#[derive(Clone, Debug)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    field: Arc<CyclotomicField>,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    /// Build from a row-major entry list; entries of mixed conductor are
    /// rebased to the lcm of all conductors.
    pub fn new(rows: usize, cols: usize, entries: Vec<Cyclotomic>) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let conductor = entries.iter().map(Cyclotomic::conductor).fold(1, poly::lcm);
        let field = entries
            .iter()
            .find(|e| e.conductor() == conductor)
            .map(|e| e.field().clone())
            .unwrap_or_else(|| CyclotomicField::new(conductor));
        let entries = entries.iter().map(|e| e.rebase(&field)).collect();
        Ok(CycMatrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Cyclotomic) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self::new(rows, cols, entries).expect("sizes match by construction")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| Cyclotomic::from_int((i == j) as i64))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .filter(|&k| !self.get(i, k).is_zero() && !other.get(k, j).is_zero())
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        }))
    }

    /// Submatrix picking the given rows and columns, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        CycMatrix {
            rows: rows.len(),
            cols: cols.len(),
            field: self.field.clone(),
            entries,
        }
    }

    /// `[self other]`.
    pub fn hcat(&self, other: &Self) -> Result<Self, ExactError> {
        if self.rows != other.rows {
            return Err(ExactError::DimensionMismatch("hcat row counts differ".into()));
        }
        let cols = self.cols + other.cols;
        let entries = (0..self.rows)
            .flat_map(|i| self.row(i).iter().chain(other.row(i)).cloned())
            .collect::<Vec<_>>();
        Self::new(self.rows, cols, entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyclotomic::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First `(i, j)` with `m[i][j] != m[j][i]`.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    /// Exact rank and, for square matrices, determinant.
    pub fn rank_det(&self) -> (usize, Option<Cyclotomic>) {
        let mut m: Vec<Vec<Cyclotomic>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        let mut det = Cyclotomic::rational_in(&self.field, Rational::one());
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            if p != rank {
                m.swap(p, rank);
                det = -det;
            }
            let pivot = m[rank][col].clone();
            det = &det * &pivot;
            let pivot_inv = pivot.inv().expect("pivot is nonzero");
            for r in rank + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &pivot_inv;
                for c in col..self.cols {
                    if !m[rank][c].is_zero() {
                        let delta = &factor * &m[rank][c];
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
            rank += 1;
        }
        let det = (self.rows == self.cols).then(|| {
            if rank < self.rows {
                Cyclotomic::rational_in(&self.field, Rational::zero())
            } else {
                det
            }
        });
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.rank_det().0
    }

    /// Square and of full rank.
    pub fn is_nonsingular(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Entrywise exact equality, independent of the conductor each side is stored at.
impl PartialEq for CycMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for CycMatrix {}

impl Serialize for CycMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let grid: Vec<&[Cyclotomic]> = (0..self.rows).map(|i| self.row(i)).collect();
        grid.serialize(s)
    }
}

/// Matrix rank and determinant, the free-function form.
pub fn matrix_rank_det(m: &CycMatrix) -> (usize, Option<Cyclotomic>) {
    m.rank_det()
}
