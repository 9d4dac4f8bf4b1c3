//! Dense exact integer and rational matrices.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invariant("ragged matrix rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|k| self.get(k, k)).sum()
    }

    /// True when every entry is -1, 0 or +1.
    pub fn is_reduced(&self) -> bool {
        self.entries.iter().all(|e| e.abs() <= BigInt::one())
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(Signed::abs).max().unwrap_or_default()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c).is_zero()))
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.is_square() && self.is_lower_triangular() && (0..self.rows).all(|k| self.get(k, k).is_one())
    }

    /// Exact inverse of a unit lower triangular matrix by forward
    /// substitution. The result is again unit lower triangular and integral.
    pub fn unit_lower_inverse(&self) -> Result<IntMatrix> {
        if !self.is_unit_lower_triangular() {
            return Err(Error::Invariant("matrix is not unit lower triangular".into()));
        }
        let n = self.rows;
        let mut inv = IntMatrix::identity(n);
        for c in 0..n {
            for r in c + 1..n {
                let mut acc = BigInt::zero();
                for k in c..r {
                    let a = self.get(r, k);
                    if !a.is_zero() {
                        acc += a * inv.get(k, c);
                    }
                }
                inv.set(r, c, -acc);
            }
        }
        Ok(inv)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Invariant("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| (0..n).map(|c| self.get(r, c).clone()).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| BigRational::from_integer(e.clone())).collect(),
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// JSON entry: a plain number when it fits in i64, otherwise a decimal string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<JsonInt>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let e = self.get(r, c);
                        e.to_i64().map_or_else(|| JsonInt::Big(e.to_string()), JsonInt::Small)
                    })
                    .collect()
            })
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows = Vec::<Vec<JsonInt>>::deserialize(deserializer)?;
        let rows = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| match e {
                        JsonInt::Small(v) => Ok(BigInt::from(v)),
                        JsonInt::Big(s) => s.parse::<BigInt>().map_err(D::Error::custom),
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        IntMatrix::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// Dense matrix over the rationals, used only where exact division is needed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn checked_mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = RatMatrix::from_fn(self.rows, other.cols, |_, _| BigRational::zero());
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse; `None` for singular input.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> =
            (0..n).map(|r| (0..n).map(|c| self.get(r, c).clone()).collect()).collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    a[r][c] -= da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        Some(RatMatrix {
            rows: n,
            cols: n,
            entries: inv.into_iter().flatten().collect(),
        })
    }
}
