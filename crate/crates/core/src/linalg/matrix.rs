use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// Dense vector of rationals. Whether it acts as a row or a column is decided
/// by the operation it is used in ([`Matrix::mul_vec`] vs [`Vector::mul_mat`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    /// Wraps entries.
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    /// The zero vector of length `n`.
    pub fn zeros(n: usize) -> Self {
        Vector((0..n).map(|_| Rational::zero()).collect())
    }

    /// The `i`-th canonical basis vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    /// Builds a vector from integers.
    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| super::int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Inner product. Panics on length mismatch.
    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// Row vector times matrix, `x·M`. Panics on shape mismatch.
    pub fn mul_mat(&self, m: &Matrix) -> Vector {
        assert_eq!(self.len(), m.rows(), "row vector times matrix: shape mismatch");
        let mut out = Self::zeros(m.cols());
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..m.cols() {
                out.0[j] += x * m.get(i, j);
            }
        }
        out
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Vector(v)
    }

    /// Entries `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Vector {
        Vector(self.0[start..end].to_vec())
    }

    /// Index of the last nonzero entry.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.0.iter().rposition(|x| !x.is_zero())
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(v: Vec<Rational>) -> Self {
        Vector(v)
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<T: IntoIterator<Item = Rational>>(iter: T) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = &'a Rational;
    type IntoIter = core::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector add: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector sub: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Dense row-major rational matrix. Zero-sized shapes are allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    /// Wraps row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| Rational::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected {cols} entries, found {}",
                bad.len()
            )));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Square or rectangular matrix from rows of `(numerator, denominator)` pairs.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&(p, q)| super::ratio(p, q)).collect())
            .collect();
        Self::from_rows(&rows).expect("from_ratios: ragged rows")
    }

    /// Matrix from integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| super::int(x)).collect())
            .collect();
        Self::from_rows(&rows).expect("from_ints: ragged rows")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    /// Matrix whose rows are the given vectors, each of length `cols`.
    pub fn from_row_vectors(cols: usize, rows: &[Vector]) -> Self {
        Self::from_fn(rows.len(), cols, |i, j| rows[i][j].clone())
    }

    /// Diagonal matrix.
    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
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

    /// Row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Product with shape checking.
    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector, `M·x`. Panics on shape mismatch.
    pub fn mul_vec(&self, x: &Vector) -> Vector {
        assert_eq!(self.cols, x.len(), "matrix times vector: shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &x[j]))
            .collect()
    }

    /// `self^k` for square matrices.
    pub fn pow(&self, mut k: u32) -> Matrix {
        assert!(self.is_square(), "pow: matrix is not square");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch(format!(
                "blocks {}x{} {}x{} / {}x{} {}x{}",
                a.rows, a.cols, b.rows, b.cols, c.rows, c.cols, d.rows, d.cols
            )));
        }
        let (r1, c1) = (a.rows, a.cols);
        Ok(Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < r1, j < c1) {
                (true, true) => a.get(i, j).clone(),
                (true, false) => b.get(i, j - c1).clone(),
                (false, true) => c.get(i - r1, j).clone(),
                (false, false) => d.get(i - r1, j - c1).clone(),
            }
        }))
    }

    /// Block-diagonal matrix `[[a, 0], [0, b]]`.
    pub fn direct_sum(a: &Matrix, b: &Matrix) -> Matrix {
        Self::block(a, &Matrix::zeros(a.rows, b.cols), &Matrix::zeros(b.rows, a.cols), b)
            .expect("direct sum blocks always fit")
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Sum of squared entries.
    ///
    /// This is the squared Frobenius norm, which dominates the squared spectral
    /// norm and is submultiplicative, so `norm_bound_sq(P) < 1` certifies
    /// `‖P‖₂ < 1` exactly.
    pub fn norm_bound_sq(&self) -> Rational {
        self.data.iter().fold(Rational::zero(), |acc, x| acc + x * x)
    }
}

/// Free-function form of [`Matrix::norm_bound_sq`].
pub fn norm_bound_sq(a: &Matrix) -> Rational {
    a.norm_bound_sq()
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product: shape mismatch")
    }
}

impl Mul<&Vector> for &Matrix {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        self.mul_vec(rhs)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "matrix add: shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "matrix sub: shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
