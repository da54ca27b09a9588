//! Exact rational matrices and Gaussian elimination.
//!
//! The certification pipeline reduces "is the zero set of a candidate sum of
//! squares forced to be trivial?" to the rank of a constraint matrix, so the
//! only linear algebra needed here is exact rank computation and, for
//! inspection and testing, an explicit kernel basis.  Elimination is fully
//! deterministic: rows are processed in order and the pivot is always the
//! first nonzero column, so repeated runs produce identical certificates.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::Rational;

/// A dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl RatMatrix {
    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, data: Vec<Vec<Rational>>) -> Result<Self, Error> {
        for row in &data {
            if row.len() != cols {
                return Err(Error::VarCountMismatch {
                    left: cols,
                    right: row.len(),
                });
            }
        }
        Ok(RatMatrix {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, Error> {
        if v.len() != self.cols {
            return Err(Error::VarCountMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Exact rank, by incremental row reduction.
    ///
    /// Each row is reduced against the pivot rows accumulated so far and
    /// either contributes a new pivot or vanishes.  Once there are as many
    /// pivots as columns the remaining rows cannot change the answer, so the
    /// scan stops early — the common case here, where tall 0/1 constraint
    /// matrices have full column rank.
    pub fn rank(&self) -> usize {
        // (pivot column, normalized reduced row), kept sorted by column.
        let mut pivots: Vec<(usize, Vec<Rational>)> = Vec::new();
        for row in &self.data {
            let mut r = row.clone();
            for (col, prow) in &pivots {
                if !r[*col].is_zero() {
                    let factor = std::mem::replace(&mut r[*col], Rational::zero());
                    for j in (*col + 1)..self.cols {
                        if !prow[j].is_zero() {
                            let delta = &prow[j] * &factor;
                            r[j] -= delta;
                        }
                    }
                }
            }
            if let Some(lead) = r.iter().position(|c| !c.is_zero()) {
                let inv = Rational::one() / &r[lead];
                for c in r.iter_mut().skip(lead) {
                    *c *= &inv;
                }
                let at = pivots.partition_point(|(c, _)| *c < lead);
                pivots.insert(at, (lead, r));
                if pivots.len() == self.cols {
                    return self.cols;
                }
            }
        }
        pivots.len()
    }

    /// Dimension of the right kernel: `cols - rank`.
    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the right kernel, one vector per free column of the
    /// reduced row echelon form (empty exactly when the kernel is trivial).
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivot_cols) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &(_, c) in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for &(prow, pcol) in &pivot_cols {
                v[pcol] = -&rref[prow][free];
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form plus the list of `(row, pivot column)`
    /// pairs, with the deterministic first-nonzero pivot choice.
    fn rref(&self) -> (Vec<Vec<Rational>>, Vec<(usize, usize)>) {
        let mut m = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(sel) = (next_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(next_row, sel);
            let inv = Rational::one() / &m[next_row][col];
            for c in m[next_row].iter_mut() {
                *c *= &inv;
            }
            for r in 0..self.rows {
                if r != next_row && !m[r][col].is_zero() {
                    let factor = std::mem::replace(&mut m[r][col], Rational::zero());
                    for j in (col + 1)..self.cols {
                        if !m[next_row][j].is_zero() {
                            let delta = &m[next_row][j] * &factor;
                            m[r][j] -= delta;
                        }
                    }
                }
            }
            pivot_cols.push((next_row, col));
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        (m, pivot_cols)
    }
}
