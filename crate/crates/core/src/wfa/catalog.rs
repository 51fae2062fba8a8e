//! Small named automata used as regression fixtures.

use super::{Alphabet, Wfa};
use crate::linalg::{Matrix, Vector};

/// One state, `I = F = (1)`, every letter weighted `1/2`: `F(v) = 2^{-|v|}`.
/// Minimal, not ap, and its ω-function is identically zero.
pub fn half_scaling() -> Wfa {
    let half = Matrix::from_ratios(&[&[(1, 2)]]);
    Wfa::new(
        Alphabet::binary(),
        Vector::from_ints(&[1]),
        Vector::from_ints(&[1]),
        alloc::vec![half.clone(), half],
    )
    .expect("fixture shapes")
}

/// Two states with `F(0ⁿ1) = (−1)ⁿ` and zero elsewhere.
///
/// Minimal but not ap; the ω-function is zero everywhere, yet convergence is
/// not uniform at `0^ω` and the transition set is not RCP.
pub fn alternating_not_uniform() -> Wfa {
    Wfa::new(
        Alphabet::binary(),
        Vector::from_ints(&[1, 0]),
        Vector::from_ints(&[0, 1]),
        alloc::vec![
            Matrix::from_ints(&[&[-1, 0], &[0, 0]]),
            Matrix::from_ints(&[&[0, 1], &[0, 0]]),
        ],
    )
    .expect("fixture shapes")
}

/// Ap but not minimal: computes the constant `1` while `{diag(−1, 1)}` is not RCP.
pub fn constant_flip() -> Wfa {
    let flip = Matrix::from_ints(&[&[-1, 0], &[0, 1]]);
    Wfa::new(
        Alphabet::binary(),
        Vector::from_ints(&[0, 1]),
        Vector::from_ints(&[0, 1]),
        alloc::vec![flip.clone(), flip],
    )
    .expect("fixture shapes")
}

/// Ternary minimal ap automaton, defined everywhere but discontinuous at `0^ω`.
pub fn three_letter_discontinuous() -> Wfa {
    Wfa::new(
        Alphabet::new(["0", "1", "2"]).expect("distinct letters"),
        Vector::from_ints(&[1, 0]),
        Vector::from_ints(&[0, 1]),
        alloc::vec![
            Matrix::from_ints(&[&[-1, 0], &[0, 1]]),
            Matrix::from_ints(&[&[0, 1], &[0, 1]]),
            Matrix::from_ints(&[&[0, -1], &[0, 1]]),
        ],
    )
    .expect("fixture shapes")
}

/// Three-state binary ap automaton in canonical form whose ω-function and
/// real function are both continuous and nonconstant.
///
/// Built from the stable pair `B₀ = [[1/3, 1/3], [1/3, 1/3]]`,
/// `B₁ = [[2/3, 0], [−1/3, 2/3]]` with `b₀ = (3, 0)`, `b₁ = (5, 6)` and
/// `F = (10, 6, 1)`.
pub fn synthesized_continuous() -> Wfa {
    Wfa::new(
        Alphabet::binary(),
        Vector::from_ints(&[1, 0, 0]),
        Vector::from_ints(&[10, 6, 1]),
        alloc::vec![
            Matrix::from_ratios(&[
                &[(1, 3), (1, 3), (3, 1)],
                &[(1, 3), (1, 3), (0, 1)],
                &[(0, 1), (0, 1), (1, 1)],
            ]),
            Matrix::from_ratios(&[
                &[(2, 3), (0, 1), (5, 1)],
                &[(-1, 3), (2, 3), (6, 1)],
                &[(0, 1), (0, 1), (1, 1)],
            ]),
        ],
    )
    .expect("fixture shapes")
}

/// Stable block pair of [`synthesized_continuous`].
pub fn synthesized_blocks() -> (Matrix, Matrix) {
    (
        Matrix::from_ratios(&[&[(1, 3), (1, 3)], &[(1, 3), (1, 3)]]),
        Matrix::from_ratios(&[&[(2, 3), (0, 1)], &[(-1, 3), (2, 3)]]),
    )
}
