use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::sign::Sign;
use crate::error::{Error, Result};

/// A dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                left: entries.len(),
                right: rows * cols,
            });
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: cols,
                });
            }
            entries.extend(row.iter().map(|&x| BigRational::from_integer(x.into())));
        }
        RationalMatrix::new(rows.len(), cols, entries)
    }

    pub fn identity(r: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        RationalMatrix::from_rows(&rows).expect("square rows")
    }

    /// Rows `t^0, t^1, ..., t^(r-1)` evaluated at nodes `t = 1..=n`.
    pub fn vandermonde(r: usize, n: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|p| (1..=n as i64).map(|t| t.pow(p as u32)).collect())
            .collect();
        RationalMatrix::from_rows(&rows).expect("rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    fn row_vecs(&self) -> Vec<Vec<BigRational>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|c| c.to_vec())
            .collect()
    }

    /// Matrix formed by the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> RationalMatrix {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        RationalMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// Reduced row echelon form; returns the non-zero rows and the pivot columns.
    fn echelon(&self) -> (Vec<Vec<BigRational>>, Vec<usize>) {
        let mut m = self.row_vecs();
        let mut pivots = vec![];
        let mut row = 0;
        for col in 0..self.cols {
            if row == m.len() {
                break;
            }
            let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            let pivot = m[row].clone();
            for (i, r) in m.iter_mut().enumerate() {
                if i != row && !r[col].is_zero() {
                    let factor = r[col].clone();
                    for (x, p) in r[col..].iter_mut().zip(&pivot[col..]) {
                        *x -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        m.truncate(row);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// A full-row-rank matrix with the same row space (hence the same
    /// oriented matroid on the columns).
    pub fn row_basis(&self) -> RationalMatrix {
        let (rows, _) = self.echelon();
        let r = rows.len();
        RationalMatrix {
            rows: r,
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Sign of the determinant of the square submatrix on `cols` (in that order).
    pub fn minor_sign(&self, cols: &[usize]) -> Sign {
        assert_eq!(cols.len(), self.rows, "minor must be square");
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        let k = m.len();
        let mut negate = false;
        for col in 0..k {
            let Some(p) = (col..k).find(|&i| !m[i][col].is_zero()) else {
                return Sign::Zero;
            };
            if p != col {
                m.swap(p, col);
                negate = !negate;
            }
            if m[col][col].is_negative() {
                negate = !negate;
            }
            let (upper, lower) = m.split_at_mut(col + 1);
            let pivot = &upper[col];
            for r in lower.iter_mut() {
                if r[col].is_zero() {
                    continue;
                }
                let factor = &r[col] / &pivot[col];
                for (x, p) in r[col..k].iter_mut().zip(&pivot[col..k]) {
                    *x -= &factor * p;
                }
            }
        }
        Sign::from_parity(negate)
    }

    /// A rational basis of the right kernel `{x : Mx = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (rows, pivots) = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![BigRational::zero(); self.cols];
                x[f] = BigRational::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }
}

impl FromStr for RationalMatrix {
    type Err = Error;

    /// Rows of whitespace-separated integers or `p/q` rationals; blank lines are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows: Vec<Vec<BigRational>> = vec![];
        for (lineno, line) in s.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    parse_rational(tok)
                        .map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::parse(format!(
                        "line {}: {} entries, expected {}",
                        lineno + 1,
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::parse("empty matrix"));
        }
        let cols = rows[0].len();
        RationalMatrix::new(rows.len(), cols, rows.into_iter().flatten().collect())
    }
}

fn parse_rational(tok: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("bad rational {tok:?}");
    match tok.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(format!("zero denominator in {tok:?}"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(tok.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
