//! Dense square matrices over the rationals.
//!
//! The JSON form is an n x n grid of `"p/q"` strings in lowest terms, with
//! integer entries rendered bare. Everything here is exact; there are no
//! floats anywhere in the crate.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    size: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(size: usize) -> Self {
        RationalMatrix {
            size,
            entries: vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        for row in &rows {
            if row.len() != size {
                return Err(Error::MalformedMatrix(format!(
                    "row of width {} in a matrix of size {size}",
                    row.len()
                )));
            }
        }
        Ok(RationalMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.size + col] = value;
    }

    /// Row-major flattening, the coordinate order used for rank and for the
    /// separation program's functional.
    pub fn flatten(&self) -> &[Rational] {
        &self.entries
    }

    pub fn scale(&self, factor: &Rational) -> RationalMatrix {
        RationalMatrix {
            size: self.size,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Entrywise inner product `sum_ij self[i][j] * other[i][j]`.
    pub fn inner_product(&self, other: &RationalMatrix) -> Rational {
        assert_eq!(self.size, other.size, "inner product of unequal sizes");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// True when all entries are nonnegative and every row and column sums
    /// to one.
    pub fn is_doubly_stochastic(&self) -> bool {
        let one = Rational::one();
        let zero = Rational::zero();
        if self.entries.iter().any(|e| e < &zero) {
            return false;
        }
        for k in 0..self.size {
            let row: Rational = (0..self.size)
                .map(|j| self.get(k, j).clone())
                .fold(zero.clone(), |acc, x| acc + x);
            let col: Rational = (0..self.size)
                .map(|i| self.get(i, k).clone())
                .fold(zero.clone(), |acc, x| acc + x);
            if row != one || col != one {
                return false;
            }
        }
        true
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.size, other.size, "adding matrices of unequal sizes");
        RationalMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.size, other.size, "multiplying matrices of unequal sizes");
        let mut out = RationalMatrix::zeros(self.size);
        for i in 0..self.size {
            for k in 0..self.size {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.size {
                    let add = a * other.get(k, j);
                    out.set(i, j, out.get(i, j) + add);
                }
            }
        }
        out
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            for j in 0..self.size {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let grid: Vec<Vec<String>> = (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        grid.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let grid = Vec::<Vec<String>>::deserialize(de)?;
        let size = grid.len();
        let mut rows = Vec::with_capacity(size);
        for row in grid {
            if row.len() != size {
                return Err(D::Error::custom("matrix is not square"));
            }
            rows.push(
                row.iter()
                    .map(|cell| parse_rational(cell))
                    .collect::<Result<Vec<Rational>>>()
                    .map_err(D::Error::custom)?,
            );
        }
        RationalMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Rank of the row span, by Gauss-Jordan elimination over the rationals.
/// All rows must have equal length.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    assert!(m.iter().all(|r| r.len() == width), "ragged rows");
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for c in col..width {
            let v = &m[rank][c] / &lead;
            m[rank][c] = v;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..width {
                    let v = &m[r][c] - &(&m[rank][c] * &factor);
                    m[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
