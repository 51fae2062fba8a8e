//! Construction of continuous, nonconstant ap automata from a stable pair of
//! blocks.

use alloc::vec::Vec;

use crate::canonical::assemble;
use crate::linalg::{inverse, kernel, one, Matrix, Vector};
use crate::stability::{decide_stability, MatrixSet, StabilityVerdict};
use crate::wfa::{is_left_minimal, Alphabet, Wfa};
use crate::Error;

/// Blocks `B₀`, `B₁`, a kernel vector `k` of `B₀+B₁−E` and a free column `b₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisInput {
    pub b0_block: Matrix,
    pub b1_block: Matrix,
    pub kernel_vector: Vector,
    pub b0: Vector,
    /// Initial distribution; `e₁` when absent.
    pub initial: Option<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesized {
    pub wfa: Wfa,
    /// The derived column `b₁`.
    pub b1: Vector,
    /// `F'`, the final distribution without its trailing 1.
    pub final_head: Vector,
    /// Depth of the stability certificate for `{B₀, B₁}`.
    pub certificate_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SynthesisError {
    /// `det(B₀+B₁−E) ≠ 0`, so every continuous ap automaton on these blocks
    /// is constant.
    #[error("B0 + B1 - E is invertible: only constant functions are possible")]
    NonconstantImpossible,
    #[error("kernel vector is zero or not in the kernel of B0 + B1 - E")]
    InvalidKernelVector,
    #[error("{{B0, B1}} has no stability certificate: {0:?}")]
    NotCertified(StabilityVerdict),
    /// `B₀+B₁−2E` is singular, which a stable pair never allows.
    #[error("B0 + B1 - 2E is singular for a stable pair")]
    RegularityViolated,
    #[error(transparent)]
    Core(#[from] Error),
}

fn check_pair(b0: &Matrix, b1: &Matrix) -> Result<usize, Error> {
    let n = b0.rows();
    if !b0.is_square() || b1.rows() != n || b1.cols() != n {
        return Err(Error::DimensionMismatch(alloc::format!(
            "blocks {}x{} and {}x{}",
            b0.rows(),
            b0.cols(),
            b1.rows(),
            b1.cols()
        )));
    }
    Ok(n)
}

fn sum_minus(b0: &Matrix, b1: &Matrix, times: i64) -> Matrix {
    let n = b0.rows();
    &(b0 + b1) - &Matrix::identity(n).scale(&crate::linalg::int(times))
}

/// Basis of `ker(B₀+B₁−E)`; empty when the matrix is invertible.
pub fn kernel_of_sum_minus_identity(b0: &Matrix, b1: &Matrix) -> Result<Vec<Vector>, Error> {
    check_pair(b0, b1)?;
    Ok(kernel(&sum_minus(b0, b1, 1)))
}

/// Builds the binary ap automaton `[[B_i | b_i], [0 | 1]]` with
/// `b₁ = (E−B₁)[k + (E−B₀)⁻¹b₀]` and `F = (−(B₀+B₁−2E)⁻¹(b₀+b₁), 1)`.
///
/// For a stable pair the result is continuous in both senses, and it is
/// nonconstant because `k ≠ 0`.
pub fn synthesize_continuous(inp: &SynthesisInput, max_depth: usize) -> Result<Synthesized, SynthesisError> {
    let (b0m, b1m) = (&inp.b0_block, &inp.b1_block);
    let n = check_pair(b0m, b1m)?;
    for (name, v) in [("kernel vector", &inp.kernel_vector), ("b0", &inp.b0)] {
        if v.len() != n {
            return Err(Error::DimensionMismatch(alloc::format!("{name} has length {}, expected {n}", v.len())).into());
        }
    }
    let sum = sum_minus(b0m, b1m, 1);
    if inverse(&sum).is_some() {
        return Err(SynthesisError::NonconstantImpossible);
    }
    let k = &inp.kernel_vector;
    if k.is_zero() || !sum.mul_vec(k).is_zero() {
        return Err(SynthesisError::InvalidKernelVector);
    }
    let pair = MatrixSet::new(Alphabet::binary(), alloc::vec![b0m.clone(), b1m.clone()])?;
    let certificate_depth = match decide_stability(&pair, max_depth)? {
        StabilityVerdict::Stable { certificate_depth } => certificate_depth,
        other => return Err(SynthesisError::NotCertified(other)),
    };
    let e = Matrix::identity(n);
    let stable_inverse = |b: &Matrix| inverse(&(&e - b)).ok_or(SynthesisError::RegularityViolated);
    let b1 = (&e - b1m).mul_vec(&(k + &stable_inverse(b0m)?.mul_vec(&inp.b0)));
    let regular = inverse(&sum_minus(b0m, b1m, 2)).ok_or(SynthesisError::RegularityViolated)?;
    let final_head = -&regular.mul_vec(&(&inp.b0 + &b1));
    let matrices = alloc::vec![assemble(b0m, &inp.b0)?, assemble(b1m, &b1)?];
    let initial = inp.initial.clone().unwrap_or_else(|| Vector::unit(n + 1, 0));
    let final_weights = final_head.concat(&Vector::new(alloc::vec![one()]));
    let wfa = Wfa::new(Alphabet::binary(), initial, final_weights, matrices)?;
    Ok(Synthesized {
        wfa,
        b1,
        final_head,
        certificate_depth,
    })
}

/// Whether a left minimal ap automaton computes a constant function, decided
/// by `A_a·F = F` for every letter.
pub fn is_constant_function(a: &Wfa) -> Result<bool, Error> {
    if !a.is_ap() {
        return Err(Error::NotAp);
    }
    if !is_left_minimal(a) {
        return Err(Error::NotLeftMinimal);
    }
    let f = a.final_weights();
    Ok(a.matrices().iter().all(|m| &m.mul_vec(f) == f))
}
