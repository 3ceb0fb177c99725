//! Exact rational linear algebra for the interpolation steps.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{binomial, pow2};
use crate::Count;

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigRational>>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

pub type ExactVector = Vec<BigRational>;

impl ExactMatrix {
    pub fn new(data: Vec<Vec<BigRational>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter("matrix rows have different lengths".into()));
        }
        Ok(Self {
            rows,
            cols,
            data,
            row_labels: (0..rows).map(|i| i.to_string()).collect(),
            col_labels: (0..cols).map(|j| j.to_string()).collect(),
        })
    }

    pub fn from_integers(data: Vec<Vec<BigInt>>) -> Result<Self> {
        Self::new(data.into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect())
    }

    pub fn from_counts(data: Vec<Vec<Count>>) -> Result<Self> {
        Self::from_integers(data.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        Self::new(data).expect("square")
    }

    pub fn with_labels(mut self, rows: Vec<String>, cols: Vec<String>) -> Self {
        assert_eq!(rows.len(), self.rows);
        assert_eq!(cols.len(), self.cols);
        self.row_labels = rows;
        self.col_labels = cols;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i][j]
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<ExactVector> {
        if x.len() != self.cols {
            return Err(Error::InvalidParameter("vector length does not match matrix".into()));
        }
        Ok(self.data.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect())
    }

    /// Entries rendered as exact decimal or `p/q` strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.data.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
    }

    pub fn determinant(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::InvalidParameter("determinant of a non-square matrix".into()));
        }
        let mut a = self.data.clone();
        let n = self.rows;
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        Ok(det)
    }
}

/// Solves `M x = w` by Gaussian elimination over the rationals.
pub fn solve_exact(m: &ExactMatrix, w: &[BigRational]) -> Result<ExactVector> {
    if m.rows != m.cols || w.len() != m.rows {
        return Err(Error::InvalidParameter("solve needs a square matrix and matching vector".into()));
    }
    let n = m.rows;
    let mut a: Vec<Vec<BigRational>> =
        m.data.iter().zip(w).map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(p, col);
        let pivot = a[col][col].clone();
        for c in col..=n {
            a[col][c] = &a[col][c] / &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..=n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

/// Converts a solved vector to counts, failing unless every entry is a non-negative integer.
pub fn to_counts(x: &[BigRational]) -> Result<Vec<Count>> {
    x.iter()
        .enumerate()
        .map(|(i, v)| {
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Internal(format!("interpolated entry {i} = {v} is not a non-negative integer")));
            }
            Ok(v.to_integer().to_biguint().expect("non-negative"))
        })
        .collect()
}

pub fn counts_to_rationals(v: &[Count]) -> ExactVector {
    v.iter().map(|c| BigRational::from_integer(BigInt::from(c.clone()))).collect()
}

/// `M_{i,j} = C(s + i, j)` for `i, j ∈ 0..=s`.
pub fn binomial_matrix(s: usize) -> ExactMatrix {
    let data = (0..=s).map(|i| (0..=s).map(|j| binomial(s + i, j)).collect()).collect();
    ExactMatrix::from_counts(data)
        .expect("square")
        .with_labels((0..=s).map(|i| format!("i={i}")).collect(), (0..=s).map(|j| format!("j={j}")).collect())
}

/// `M_{i,r} = 2^{i(n - r)}` for `i ∈ 1..=n+1`, `r ∈ 0..=n`.
pub fn clone_matrix(n: usize) -> ExactMatrix {
    let data: Vec<Vec<BigUint>> = (1..=n + 1).map(|i| (0..=n).map(|r| pow2(i * (n - r))).collect()).collect();
    ExactMatrix::from_counts(data)
        .expect("square")
        .with_labels((1..=n + 1).map(|i| format!("i={i}")).collect(), (0..=n).map(|r| format!("r={r}")).collect())
}
