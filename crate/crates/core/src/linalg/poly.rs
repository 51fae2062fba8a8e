use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{Matrix, Rational};
use crate::{Error, Result};

/// Polynomial with rational coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    /// `∏ (λ − r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::new(alloc::vec![Rational::one()]), |p, r| {
            p.mul(&Self::new(alloc::vec![-r.clone(), Rational::one()]))
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + other.coeffs.len() - 1);
        out.resize(self.coeffs.len() + other.coeffs.len() - 1, Rational::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Synthetic division by `(λ − r)`: quotient and remainder `p(r)`.
    pub fn div_linear(&self, r: &Rational) -> (Polynomial, Rational) {
        if self.coeffs.is_empty() {
            return (self.clone(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut q = alloc::vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i == 0 {
                carry = v;
            } else {
                q[i - 1] = v.clone();
                carry = v;
            }
        }
        (Polynomial::new(q), carry)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}·")?,
            }
            match k {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(λE − A)` by the Faddeev–LeVerrier recurrence.
///
/// Panics if `a` is not square.
pub fn char_poly(a: &Matrix) -> Polynomial {
    assert!(a.is_square(), "char_poly: matrix is not square");
    let n = a.rows();
    let mut c = alloc::vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        m = &(a * &m) + &id.scale(&c[n - k + 1]);
        let am = a * &m;
        c[n - k] = -am.trace() / Rational::from_integer(k.into());
    }
    Polynomial::new(c)
}

/// Whether every complex root of the monic polynomial `p` has modulus strictly
/// below one.
///
/// Exact Schur–Cohn reduction: with `p*` the reversed polynomial, `p` is Schur
/// iff `|p(0)| < |lead(p)|` and `(lead·p − p(0)·p*)/λ` is Schur. Roots on the
/// unit circle count as outside.
pub fn roots_inside_unit_disk(p: &Polynomial) -> Result<bool> {
    if !p.is_monic() {
        return Err(Error::NonMonic);
    }
    let mut cur: Vec<Rational> = p.coeffs().to_vec();
    while cur.len() > 1 {
        let n = cur.len() - 1;
        let lead = cur[n].clone();
        let low = cur[0].clone();
        if low.abs() >= lead.abs() {
            return Ok(false);
        }
        // coefficient k of lead·p − low·p*, shifted down by one
        let next: Vec<Rational> = (1..=n).map(|k| &lead * &cur[k] - &low * &cur[n - k]).collect();
        cur = next;
    }
    Ok(true)
}
