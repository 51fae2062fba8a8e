//! Automaton families that tie questions about automata to the stability of a
//! matrix set.

use alloc::vec::Vec;

use crate::linalg::{int, one, ratio, zero, Matrix, Vector};
use crate::stability::MatrixSet;
use crate::wfa::{Alphabet, Wfa};
use crate::{Error, Result};

/// Which construction produced a [`GadgetFamily`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetOrigin {
    /// Set stable iff every member computes the zero ω-function.
    ZeroTest,
    /// Pair stable iff every member has a continuous ω-function.
    ApContinuity,
    /// Pair stable iff every member has continuous `f` and `f̂`.
    UniformContinuity,
}

/// Automata `A_ij` indexed by pairs of basis positions (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetFamily {
    origin: GadgetOrigin,
    size: usize,
    members: Vec<Wfa>,
}

impl GadgetFamily {
    fn build(origin: GadgetOrigin, size: usize, mut make: impl FnMut(usize, usize) -> Result<Wfa>) -> Result<Self> {
        let mut members = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                members.push(make(i, j)?);
            }
        }
        Ok(GadgetFamily { origin, size, members })
    }

    pub fn origin(&self) -> GadgetOrigin {
        self.origin
    }

    /// Range of each index.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Wfa {
        &self.members[i * self.size + j]
    }

    /// Members as `((i, j), automaton)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Wfa)> {
        let size = self.size;
        self.members
            .iter()
            .enumerate()
            .map(move |(k, a)| ((k / size, k % size), a))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `A_ij = (e_i, S, e_jᵀ)`, so `F_ij(w) = (A_w)_ij`.
pub fn zero_test_gadgets(set: &MatrixSet) -> Result<GadgetFamily> {
    let n = set.dim();
    GadgetFamily::build(GadgetOrigin::ZeroTest, n, |i, j| {
        Wfa::new(
            set.alphabet().clone(),
            Vector::unit(n, i),
            Vector::unit(n, j),
            set.matrices().to_vec(),
        )
    })
}

fn binary_pair(b0: &Matrix, b1: &Matrix) -> Result<usize> {
    let n = b0.rows();
    if !b0.is_square() || b1.rows() != n || b1.cols() != n {
        return Err(Error::DimensionMismatch(alloc::format!(
            "pair of {}x{} and {}x{}",
            b0.rows(),
            b0.cols(),
            b1.rows(),
            b1.cols()
        )));
    }
    Ok(n)
}

/// `A_a = [[B_a | ±e_j], [0 | 1]]` (plus for letter 0), initial `e_i`, final
/// `e_{n+1}`. Every member is ap since the two columns cancel.
pub fn stability_to_ap_continuity_gadgets(b0: &Matrix, b1: &Matrix) -> Result<GadgetFamily> {
    let n = binary_pair(b0, b1)?;
    let d = MatrixSet::new(Alphabet::binary(), alloc::vec![Matrix::identity(1); 2])?;
    GadgetFamily::build(GadgetOrigin::ApContinuity, n, |i, j| {
        let column = |sign: i64| {
            let mut c = Matrix::zeros(n, 1);
            c.set(j, 0, int(sign));
            c
        };
        coupled(
            b0,
            b1,
            [column(1), column(-1)],
            &d,
            Vector::unit(n + 1, i),
            Vector::unit(n + 1, n),
        )
    })
}

fn coupled(
    b0: &Matrix,
    b1: &Matrix,
    c: [Matrix; 2],
    d: &MatrixSet,
    initial: Vector,
    final_weights: Vector,
) -> Result<Wfa> {
    let b = MatrixSet::new(Alphabet::binary(), alloc::vec![b0.clone(), b1.clone()])?;
    let set = crate::stability::block_compose(&b, &c, d)?;
    Wfa::new(Alphabet::binary(), initial, final_weights, set.matrices().to_vec())
}

/// The 3-state ap automaton whose real function is a tent-shaped broken line
/// vanishing at both ends of `[0, 1]`.
pub fn d_automaton() -> Wfa {
    let (d0, d1) = d_matrices();
    Wfa::new(
        Alphabet::binary(),
        Vector::from_ints(&[1, 0, 0]),
        Vector::new(alloc::vec![ratio(1, 2), ratio(1, 2), one()]),
        alloc::vec![d0, d1],
    )
    .expect("fixed shapes")
}

fn d_matrices() -> (Matrix, Matrix) {
    let d0 = Matrix::from_ratios(&[
        &[(0, 1), (1, 1), (0, 1)],
        &[(0, 1), (1, 2), (0, 1)],
        &[(0, 1), (0, 1), (1, 1)],
    ]);
    let d1 = Matrix::from_ratios(&[
        &[(0, 1), (-1, 1), (1, 1)],
        &[(0, 1), (1, 2), (1, 2)],
        &[(0, 1), (0, 1), (1, 1)],
    ]);
    (d0, d1)
}

/// `A_a = [[B_a | C_a], [0 | D_a]]` with the [`d_automaton`] matrices as
/// `D_a`, `C₀` the `n×3` matrix with a single 1 at row `j`, column 0, and
/// `C₁ = −C₀`. Initial `e_i`, final `(0, …, 0, 1/2, 1/2, 1)`.
pub fn stability_to_uniform_gadgets(b0: &Matrix, b1: &Matrix) -> Result<GadgetFamily> {
    let n = binary_pair(b0, b1)?;
    let (d0, d1) = d_matrices();
    let d = MatrixSet::new(Alphabet::binary(), alloc::vec![d0, d1])?;
    let final_weights = Vector::zeros(n).concat(&Vector::new(alloc::vec![ratio(1, 2), ratio(1, 2), one()]));
    GadgetFamily::build(GadgetOrigin::UniformContinuity, n, |i, j| {
        let c0 = Matrix::from_fn(n, 3, |r, c| if r == j && c == 0 { one() } else { zero() });
        let c1 = c0.scale(&int(-1));
        coupled(b0, b1, [c0, c1], &d, Vector::unit(n + 3, i), final_weights.clone())
    })
}
