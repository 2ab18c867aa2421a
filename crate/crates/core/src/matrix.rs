//! Sparse matrices over exact rationals.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("cannot multiply {left_rows}x{left_cols} by {right_rows}x{right_cols}")]
    ProductShape {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrices in a span must share one shape, found {0:?} and {1:?}")]
    SpanShape((usize, usize), (usize, usize)),
    #[error("entry ({row}, {col}) is outside a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("bad entry: {0}")]
    BadEntry(String),
}

/// A `rows x cols` matrix; absent entries are zero and zeros are never
/// stored. Indices are 0-based in the API and 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    pub fn scalar(c: Rational) -> Self {
        let mut m = Self::zero(1, 1);
        m.set(0, 0, c);
        m
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self, MatrixError> {
        let mut m = Self::zero(rows, cols);
        for (row, col, v) in entries {
            if row >= rows || col >= cols {
                return Err(MatrixError::OutOfRange {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            m.set(row, col, v);
        }
        Ok(m)
    }

    /// Dense row-major construction, convenient for small fixed matrices.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, v: Rational) {
        if v.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), v);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rows, self.cols);
        }
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Entrywise sum. Panics on a shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            let sum = out.get(i, j) + v;
            out.set(i, j, sum);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ProductShape {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut by_row: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); other.rows];
        for (&(l, j), v) in &other.entries {
            by_row[l].push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(i, l), a) in &self.entries {
            for &(j, b) in &by_row[l] {
                *acc.entry((i, j)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            entries: acc,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.len() == self.rows
            && self.entries.iter().all(|(&(i, j), v)| i == j && v.is_one())
    }

    /// Dense CSV, one matrix row per line, entries as `num/den`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&rational::to_text(&self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }

    /// Dense aligned grid, integers printed bare.
    pub fn to_grid(&self) -> String {
        let cell = |v: &Rational| {
            if v.is_integer() {
                v.numer().to_string()
            } else {
                rational::to_text(v)
            }
        };
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| cell(&self.get(i, j))).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on a shape mismatch; use [`ExactMatrix::mul`] to handle it.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        ExactMatrix::mul(self, rhs).expect("matrix product shape mismatch")
    }
}

/// Kronecker product; the left factor indexes the most significant digit.
pub fn kron(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let mut entries = BTreeMap::new();
    for (&(i, j), x) in &a.entries {
        for (&(k, l), y) in &b.entries {
            entries.insert((i * b.rows + k, j * b.cols + l), x * y);
        }
    }
    ExactMatrix {
        rows: a.rows * b.rows,
        cols: a.cols * b.cols,
        entries,
    }
}

/// `g^T g = I`, exactly.
pub fn orthogonal_check(g: &ExactMatrix) -> bool {
    g.rows == g.cols && (&g.transpose() * g).is_identity()
}

/// Dimension of the linear span of the given same-shape matrices, by exact
/// Gaussian elimination on their vectorizations.
pub fn rank_of_span(mats: &[ExactMatrix]) -> Result<usize, MatrixError> {
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    let cols = first.cols;
    // pivot column -> reduced row whose leading entry (at that column) is 1
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
    for m in mats {
        if m.shape() != first.shape() {
            return Err(MatrixError::SpanShape(first.shape(), m.shape()));
        }
        let mut v: BTreeMap<usize, Rational> = m
            .entries
            .iter()
            .map(|(&(i, j), x)| (i * cols + j, x.clone()))
            .collect();
        while let Some((&lead, c)) = v.iter().next() {
            let c = c.clone();
            let Some(row) = pivots.get(&lead) else {
                let inv = c.recip();
                for x in v.values_mut() {
                    *x *= &inv;
                }
                pivots.insert(lead, v);
                break;
            };
            for (&k, x) in row {
                let e = v.entry(k).or_insert_with(Rational::zero);
                *e -= &c * x;
                if e.is_zero() {
                    v.remove(&k);
                }
            }
        }
    }
    Ok(pivots.len())
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| (i + 1, j + 1, rational::to_text(v)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let json = MatrixJson::deserialize(d)?;
        let entries = json
            .entries
            .into_iter()
            .map(|(i, j, v)| {
                if i == 0 || j == 0 {
                    return Err(MatrixError::BadEntry("indices are 1-based".into()));
                }
                let v =
                    rational::from_text(&v).map_err(|e| MatrixError::BadEntry(e.to_string()))?;
                Ok((i - 1, j - 1, v))
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        ExactMatrix::from_entries(json.rows, json.cols, entries).map_err(D::Error::custom)
    }
}
