use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{one, roots_inside_unit_disk, Matrix, Polynomial, Rational, Span, Vector};
use crate::{Error, Result};

/// Exact `lim_{k→∞} Mᵏ·x`, or `Ok(None)` when the limit does not exist.
///
/// Works on the cyclic subspace `Z = ⟨x, Mx, M²x, …⟩`, the smallest
/// `M`-invariant subspace containing `x`. The minimal polynomial of `x` factors
/// as `(λ−1)^e·q(λ)` with `q(1) ≠ 0`. The powers converge iff `e ≤ 1` and every
/// root of `q` lies strictly inside the unit disk; the limit is then the
/// projection of `x` onto `ker(M−E)` along `ker q(M)`, i.e. `q(M)x / q(1)`
/// (and `0` when `e = 0`).
pub fn power_limit_vec(m: &Matrix, x: &Vector) -> Result<Option<Vector>> {
    if !m.is_square() || m.cols() != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with vector of length {}",
            m.rows(),
            m.cols(),
            x.len()
        )));
    }
    let n = x.len();
    let mut span = Span::new(n);
    let mut krylov: Vec<Vector> = Vec::new();
    let mut v = x.clone();
    let relation = loop {
        if let Some(c) = span.coordinates(&v) {
            break c;
        }
        span.insert(&v);
        krylov.push(v.clone());
        v = m.mul_vec(&v);
    };
    // minimal polynomial of x: λ^r − Σ c_i λ^i
    let r = krylov.len();
    let mut coeffs: Vec<Rational> = relation.iter().map(|c| -c.clone()).collect();
    coeffs.push(Rational::one());
    let mut q = Polynomial::new(coeffs);
    let mut mult = 0usize;
    loop {
        let (quot, rem) = q.div_linear(&one());
        if !rem.is_zero() {
            break;
        }
        q = quot;
        mult += 1;
        if mult > 1 {
            return Ok(None);
        }
    }
    if !roots_inside_unit_disk(&q)? {
        return Ok(None);
    }
    if mult == 0 {
        return Ok(Some(Vector::zeros(n)));
    }
    debug_assert!(q.degree().is_some_and(|d| d < r));
    let scale = q.eval(&one()).recip();
    let mut out = Vector::zeros(n);
    for (c, kv) in q.coeffs().iter().zip(&krylov) {
        if !c.is_zero() {
            out = &out + &kv.scale(c);
        }
    }
    Ok(Some(out.scale(&scale)))
}

/// Exact `lim_{k→∞} Mᵏ`, computed column by column. `Ok(None)` when some
/// column diverges.
pub fn power_limit_matrix(m: &Matrix) -> Result<Option<Matrix>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix has no powers",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        match power_limit_vec(m, &Vector::unit(n, j))? {
            Some(c) => cols.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(Matrix::from_columns(n, &cols)))
}
