//! Dense integer matrices with exact determinants and characteristic
//! polynomials.
//!
//! Determinants use Bareiss fraction-free elimination. Characteristic
//! polynomials use the Samuelson-Berkowitz recurrence, which needs no
//! division at all.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const CHAR_POLY_LIMIT: usize = 128;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.order)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        f.debug_struct("IntMatrix").field("rows", &rows).finish()
    }
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.entries[i * order + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        IntMatrix { order, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::NotSquareMatrix);
        }
        Ok(Self::from_fn(order, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.order + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let rows: Vec<usize> = (0..self.order).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.order).filter(|&j| j != c).collect();
        IntMatrix::from_fn(self.order - 1, |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// `x I - self` evaluated at an integer point.
    pub fn shifted(&self, x: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.order, |i, j| {
            let d = if i == j { x.clone() } else { BigInt::zero() };
            d - self.get(i, j)
        })
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|v| v.to_i64()).collect())
            .collect()
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.order, self.order, |i, j| {
            self.get(i, j).to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Matrix Market coordinate format. Symmetric matrices store the lower
    /// triangle only.
    pub fn to_matrix_market(&self) -> String {
        let symmetric = self.is_symmetric();
        let mut body = String::new();
        let mut count = 0usize;
        for j in 0..self.order {
            let start = if symmetric { j } else { 0 };
            for i in start..self.order {
                let v = self.get(i, j);
                if !v.is_zero() {
                    count += 1;
                    let _ = writeln!(body, "{} {} {}", i + 1, j + 1, v);
                }
            }
        }
        let kind = if symmetric { "symmetric" } else { "general" };
        format!(
            "%%MatrixMarket matrix coordinate integer {kind}\n{} {} {count}\n{body}",
            self.order, self.order
        )
    }
}

/// Exact determinant via Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match ((k + 1)..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Monic integer polynomial, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// `coeffs[k]` multiplies `x^k`; the last entry must be 1.
    pub fn from_ascending(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(coeffs.last().is_some_and(One::is_one));
        CharPoly { coeffs }
    }

    /// `prod (x - root)^mult`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a BigInt, usize)>) -> Self {
        let mut p = vec![BigInt::one()];
        for (root, mult) in roots {
            for _ in 0..mult {
                let mut next = vec![BigInt::zero(); p.len() + 1];
                for (k, c) in p.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * root;
                }
                p = next;
            }
        }
        CharPoly { coeffs: p }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

/// `det(x I - m)` with exact integer coefficients.
pub fn char_poly_exact(m: &IntMatrix) -> Result<CharPoly> {
    let n = m.order();
    if n > CHAR_POLY_LIMIT {
        return Err(Error::TooLarge {
            operation: "char_poly_exact",
            size: n,
            limit: CHAR_POLY_LIMIT,
        });
    }
    if n == 0 {
        return Ok(CharPoly::from_ascending(vec![BigInt::one()]));
    }
    // Coefficients from the highest degree down while recursing; the
    // trailing principal submatrix A[k.., k..] grows one row at a time.
    let last = n - 1;
    let mut p = vec![BigInt::one(), -m.get(last, last)];
    for k in (0..last).rev() {
        let size = n - k - 1;
        let idx = |t: usize| k + 1 + t;
        // t = (1, -a_kk, -R C, -R A C, ..., -R A^{size-1} C)
        let mut t = Vec::with_capacity(size + 2);
        t.push(BigInt::one());
        t.push(-m.get(k, k));
        let mut v: Vec<BigInt> = (0..size).map(|i| m.get(idx(i), k).clone()).collect();
        for step in 0..size {
            let rc: BigInt = (0..size).map(|j| m.get(k, idx(j)) * &v[j]).sum();
            t.push(-rc);
            if step + 1 < size {
                v = (0..size)
                    .map(|i| (0..size).map(|j| m.get(idx(i), idx(j)) * &v[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); size + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                *slot += &t[i - j] * pj;
            }
        }
        p = next;
    }
    p.reverse();
    Ok(CharPoly::from_ascending(p))
}
