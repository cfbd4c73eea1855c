//! Integer relation matrices and their Smith normal form.
//!
//! A [`PresentationMatrix`] with `rows` relations on `cols` generators
//! presents the abelian group `Z^cols / rowspace`. Entries are arbitrary
//! precision; elimination on even small matrices overflows machine words.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PresentationMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl PresentationMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    /// Row-major constructor; fails unless `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from relation rows. Every row must have length `cols`.
    pub fn from_rows<T, R>(cols: usize, rows: R) -> Result<Self>
    where
        T: Into<BigInt> + Clone,
        R: IntoIterator,
        R::Item: AsRef<[T]>,
    {
        let mut entries = Vec::new();
        let mut count = 0;
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::InvalidMatrix(format!(
                    "row {count} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().cloned().map(Into::into));
            count += 1;
        }
        Ok(Self { rows: count, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.entries[i * self.cols + j] = value.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidMatrix(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt, from_col: usize) {
        for j in from_col..self.cols {
            let v = q * &self.entries[src * self.cols + j];
            self.entries[dst * self.cols + j] -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt, from_row: usize) {
        for i in from_row..self.rows {
            let v = q * &self.entries[i * self.cols + src];
            self.entries[i * self.cols + dst] -= v;
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, from_col: usize) {
        for j in from_col..self.cols {
            let v = self.entries[src * self.cols + j].clone();
            self.entries[dst * self.cols + j] += v;
        }
    }
}

impl fmt::Debug for PresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "PresentationMatrix({}x{}, {:?})", self.rows, self.cols, rows)
    }
}

/// Diagonal `d_1 | d_2 | ... | d_r` of the Smith normal form, `r = min(rows, cols)`.
///
/// Trailing zeros are kept, so the length is always `r`.
pub fn smith_normal_form(matrix: &PresentationMatrix) -> Vec<BigUint> {
    let mut a = matrix.clone();
    let r = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(r);

    for t in 0..r {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        loop {
            let mut dirty = false;

            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                a.sub_row(i, t, &q, t);
                if !a.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                a.sub_col(j, t, &q, t);
                if !a.get(t, j).is_zero() {
                    dirty = true;
                }
            }

            if dirty {
                // a remainder is smaller than the pivot: move it in and retry
                let (pi, pj) = min_abs_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }

            // Row and column t are clear; the pivot must divide the rest.
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..a.rows).find(|&i| {
                (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => a.add_row(t, i, t),
                None => break,
            }
        }

        diag.push(a.get(t, t).abs().to_biguint().expect("absolute value"));
    }

    diag.resize(r, BigUint::zero());
    diag
}

fn min_abs_entry(a: &PresentationMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &PresentationMatrix, t: usize) -> (usize, usize) {
    let cells = (t..a.rows)
        .map(|i| (i, t))
        .chain((t + 1..a.cols).map(|j| (t, j)));
    cells
        .filter(|&(i, j)| !a.get(i, j).is_zero())
        .min_by(|&(i, j), &(k, l)| a.get(i, j).abs().cmp(&a.get(k, l).abs()))
        .expect("cross has a nonzero entry")
}
