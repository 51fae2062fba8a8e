use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Matrix, Rational, Vector};
use crate::{Error, Result};

/// Reduced row echelon form and the pivot column of each nonzero row.
pub(crate) fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m.get(p, j).clone();
                m.set(p, j, m.get(r, j).clone());
                m.set(r, j, tmp);
            }
        }
        let inv = m.get(r, c).recip();
        for j in c..cols {
            let v = m.get(r, j) * &inv;
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = m.get(i, j) - &f * m.get(r, j);
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).1.len()
}

/// Basis of the right kernel `{x : A·x = 0}`, one vector per free column in
/// increasing column order.
pub fn kernel(a: &Matrix) -> Vec<Vector> {
    let (r, pivots) = rref(a);
    let n = a.cols();
    let mut is_pivot = alloc::vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = Vector::zeros(n).into_entries();
            x[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -r.get(i, f).clone();
            }
            Vector::new(x)
        })
        .collect()
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    /// One exact solution, or `None` when the system is inconsistent.
    pub particular: Option<Vector>,
    /// Basis of `ker(A)`.
    pub kernel: Vec<Vector>,
}

/// Solves `A·x = b` exactly.
pub fn solve_linear(a: &Matrix, b: &Vector) -> Result<LinearSolution> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let n = a.cols();
    let aug = Matrix::from_fn(
        a.rows(),
        n + 1,
        |i, j| {
            if j < n {
                a.get(i, j).clone()
            } else {
                b[i].clone()
            }
        },
    );
    let (r, pivots) = rref(&aug);
    let particular = if pivots.last() == Some(&n) {
        None
    } else {
        let mut x = Vector::zeros(n).into_entries();
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, n).clone();
        }
        Some(Vector::new(x))
    };
    Ok(LinearSolution {
        particular,
        kernel: kernel(a),
    })
}

/// Exact inverse; `None` when `a` is singular or not square.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n.saturating_sub(1)..].iter().any(|&p| p >= n) {
        return None;
    }
    Some(r.submatrix(0, n, n, 2 * n))
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    row: Vector,
    // `row` expressed in the inserted basis vectors
    coeffs: Vec<Rational>,
}

/// Incrementally built subspace of `ℚⁿ`.
///
/// Vectors are offered one at a time; independent ones are kept in discovery
/// order and form the basis. Membership and coordinates with respect to that
/// basis are exact.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    basis: Vec<Vector>,
    rows: Vec<EchelonRow>,
}

impl Span {
    /// Empty subspace of `ℚ^dim`.
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            basis: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Kept vectors in discovery order.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn reduce(&self, v: &Vector) -> (Vector, Vec<Rational>) {
        assert_eq!(v.len(), self.dim, "span: vector of wrong length");
        let mut rem = v.clone().into_entries();
        let mut coeffs = Vector::zeros(self.basis.len()).into_entries();
        for r in &self.rows {
            let c = rem[r.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in rem.iter_mut().zip(r.row.iter()) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            for (k, y) in r.coeffs.iter().enumerate() {
                coeffs[k] += &c * y;
            }
        }
        (Vector::new(rem), coeffs)
    }

    /// Adds `v` if it is independent of the current basis; reports whether it was added.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let (rem, coeffs) = self.reduce(v);
        let Some(pivot) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rem[pivot].recip();
        let row = rem.scale(&inv);
        // rem = v - Σ coeffs_i basis_i, and v becomes basis vector k
        let mut row_coeffs: Vec<Rational> = coeffs.iter().map(|c| -(c * &inv)).collect();
        row_coeffs.push(inv);
        self.basis.push(v.clone());
        self.rows.push(EchelonRow {
            pivot,
            row,
            coeffs: row_coeffs,
        });
        true
    }

    /// The same subspace with the reduced row echelon basis, which depends
    /// only on the subspace and not on the order vectors were offered.
    pub fn to_echelon(&self) -> Span {
        let (r, pivots) = rref(&Matrix::from_row_vectors(self.dim, &self.basis));
        let mut out = Span::new(self.dim);
        for i in 0..pivots.len() {
            out.insert(&r.row(i));
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coefficients `c` with `v = Σ c_i basis_i`, if `v` lies in the span.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        let (rem, coeffs) = self.reduce(v);
        rem.is_zero().then(|| Vector::new(coeffs))
    }
}
