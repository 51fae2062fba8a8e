//! Three-valued matrix product stability, continuous RCP, and the matrix set
//! constructions built on them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::linalg::{char_poly, inverse, kernel, one, rank, roots_inside_unit_disk, zero, Matrix, Rational, Vector};
use crate::wfa::{Alphabet, Word};
use crate::{Error, Result};

/// Finite family of square matrices of a common size, indexed by letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixSet {
    alphabet: Alphabet,
    matrices: Vec<Matrix>,
}

impl MatrixSet {
    pub fn new(alphabet: Alphabet, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::EmptySet);
        }
        if matrices.len() != alphabet.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} letters",
                matrices.len(),
                alphabet.len()
            )));
        }
        let n = matrices[0].rows();
        if let Some(bad) = matrices.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n}, found {}x{}",
                bad.rows(),
                bad.cols()
            )));
        }
        Ok(MatrixSet { alphabet, matrices })
    }

    /// Set over the letters `"0"`, `"1"`, … in order.
    pub fn indexed(matrices: Vec<Matrix>) -> Result<Self> {
        let alphabet = Alphabet::new((0..matrices.len().max(1)).map(|i| format!("{i}")))?;
        Self::new(alphabet, matrices)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, letter: usize) -> &Matrix {
        &self.matrices[letter]
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// `A_{w₁}·A_{w₂}⋯A_{w_k}`; the identity for the empty word.
    pub fn product(&self, w: &Word) -> Result<Matrix> {
        self.alphabet.check(w)?;
        Ok(w.letters()
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, &a| &acc * &self.matrices[a]))
    }

    /// The set `{f(A_a)}` over the same alphabet.
    pub fn map(&self, f: impl FnMut(&Matrix) -> Matrix) -> Result<MatrixSet> {
        MatrixSet::new(self.alphabet.clone(), self.matrices.iter().map(f).collect())
    }
}

/// Outcome of the stability search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StabilityVerdict {
    /// Every product of length exactly `certificate_depth` has `norm_bound_sq < 1`.
    Stable { certificate_depth: usize },
    /// The product over `witness` has a characteristic root of modulus ≥ 1.
    NotStable { witness: Word },
    /// Neither certificate was found up to `explored_depth`.
    Unknown { explored_depth: usize },
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, StabilityVerdict::Stable { .. })
    }

    pub fn is_decisive(&self) -> bool {
        !matches!(self, StabilityVerdict::Unknown { .. })
    }
}

// One representative per distinct product, words in lexicographic order.
struct Products<'a> {
    set: &'a MatrixSet,
    level: Vec<(Word, Matrix)>,
}

impl<'a> Products<'a> {
    fn new(set: &'a MatrixSet) -> Self {
        Products { set, level: Vec::new() }
    }

    // Extending the representatives in order keeps each kept word the least
    // one with its matrix: a dropped duplicate w' of w < w' has extensions
    // w'u with the same matrices as the smaller wu.
    fn advance(&mut self) -> &[(Word, Matrix)] {
        let prev = core::mem::take(&mut self.level);
        let seeds = if prev.is_empty() {
            alloc::vec![(Word::empty(), Matrix::identity(self.set.dim()))]
        } else {
            prev
        };
        let mut seen = BTreeSet::new();
        for (w, p) in &seeds {
            for (a, m) in self.set.matrices.iter().enumerate() {
                let next = p * m;
                if seen.insert(next.clone()) {
                    let mut w = w.clone();
                    w.push(a);
                    self.level.push((w, next));
                }
            }
        }
        &self.level
    }
}

fn is_contraction(m: &Matrix) -> bool {
    m.norm_bound_sq() < one()
}

fn has_root_outside_open_disk(m: &Matrix) -> bool {
    !roots_inside_unit_disk(&char_poly(m)).expect("characteristic polynomials are monic")
}

/// Breadth-first search over product lengths `1..=max_depth` for a
/// contraction certificate or an instability witness.
///
/// The witness is the lexicographically least word of the least length whose
/// product has a characteristic root of modulus at least 1.
pub fn decide_stability(set: &MatrixSet, max_depth: usize) -> Result<StabilityVerdict> {
    if max_depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let mut products = Products::new(set);
    for depth in 1..=max_depth {
        let level = products.advance();
        if level.iter().all(|(_, p)| is_contraction(p)) {
            return Ok(StabilityVerdict::Stable {
                certificate_depth: depth,
            });
        }
        // a contraction has spectral radius below 1, so only the others can witness
        if let Some((w, _)) = level
            .iter()
            .find(|(_, p)| !is_contraction(p) && has_root_outside_open_disk(p))
        {
            return Ok(StabilityVerdict::NotStable { witness: w.clone() });
        }
    }
    Ok(StabilityVerdict::Unknown {
        explored_depth: max_depth,
    })
}

/// Maximum of `norm_bound_sq` over all products of lengths `1..=depth`.
///
/// Diagnostic only: a bounded scan says nothing about longer products.
pub fn product_bound_scan(set: &MatrixSet, depth: usize) -> Result<Rational> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let mut products = Products::new(set);
    let mut best = zero();
    for _ in 0..depth {
        for (_, p) in products.advance() {
            let b = p.norm_bound_sq();
            if b > best {
                best = b;
            }
        }
    }
    Ok(best)
}

/// Why a set fails to be continuous RCP.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RcpWitness {
    /// The projected set is not stable; the product over this word shows it.
    Product(Word),
    /// The letters' left 1-eigenspaces differ.
    EigenspacesDiffer,
    /// The 1-eigenspace of this letter's matrix has a nontrivial Jordan chain.
    NotSimple(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RcpVerdict {
    ContinuousRcp,
    NotRcp { witness: RcpWitness },
    Unknown { explored_depth: usize },
}

fn left_one_eigenspace(m: &Matrix) -> Vec<Vector> {
    kernel(&(m - &Matrix::identity(m.rows())).transpose())
}

fn same_span(a: &[Vector], b: &[Vector], dim: usize) -> bool {
    let stacked = |vs: &[Vector]| Matrix::from_row_vectors(dim, vs);
    let both: Vec<Vector> = a.iter().chain(b).cloned().collect();
    let r = rank(&stacked(&both));
    r == rank(&stacked(a)) && r == rank(&stacked(b))
}

/// Projection `P` acting on row vectors (`x ↦ x·P`) onto the orthogonal
/// complement `V` of `eigenspace`, along the eigenspace.
pub(crate) fn complement_projection(eigenspace: &[Vector], dim: usize) -> Matrix {
    let complement = kernel(&Matrix::from_row_vectors(dim, eigenspace));
    let rows: Vec<Vector> = complement.iter().chain(eigenspace).cloned().collect();
    let t = Matrix::from_row_vectors(dim, &rows);
    let t_inv = inverse(&t).expect("a rational subspace meets its orthogonal complement trivially");
    let keep: Vec<Rational> = (0..dim)
        .map(|i| if i < complement.len() { one() } else { zero() })
        .collect();
    &(&t_inv * &Matrix::diag(&keep)) * &t
}

/// Continuous right-convergent-products test.
///
/// All matrices must share their left 1-eigenspace `E₁`, with no Jordan chain
/// above eigenvalue 1 for any of them; then the set is continuous RCP iff the
/// projections `P·A_a·P` onto a complement of `E₁` form a stable set.
pub fn is_continuous_rcp(set: &MatrixSet, max_depth: usize) -> Result<RcpVerdict> {
    if max_depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let n = set.dim();
    let e1 = left_one_eigenspace(set.matrix(0));
    for m in &set.matrices[1..] {
        if !same_span(&e1, &left_one_eigenspace(m), n) {
            return Ok(RcpVerdict::NotRcp {
                witness: RcpWitness::EigenspacesDiffer,
            });
        }
    }
    for (a, m) in set.matrices.iter().enumerate() {
        let shifted = m - &Matrix::identity(n);
        if rank(&shifted) != rank(&(&shifted * &shifted)) {
            return Ok(RcpVerdict::NotRcp {
                witness: RcpWitness::NotSimple(a),
            });
        }
    }
    let p = complement_projection(&e1, n);
    let projected = set.map(|m| &(&p * m) * &p)?;
    Ok(match decide_stability(&projected, max_depth)? {
        StabilityVerdict::Stable { .. } => RcpVerdict::ContinuousRcp,
        StabilityVerdict::NotStable { witness } => RcpVerdict::NotRcp {
            witness: RcpWitness::Product(witness),
        },
        StabilityVerdict::Unknown { explored_depth } => RcpVerdict::Unknown { explored_depth },
    })
}

/// Encodes `m` matrices of size `n` as a binary pair of size `mn`.
///
/// `B₀` shifts block rows up by one (identity of size `(m−1)n` in the top
/// right corner) and `B₁` carries `A₁ … A_m` stacked in its first block
/// column. Blocks of products of the pair enumerate the products of the set.
pub fn reduce_to_pair(set: &MatrixSet) -> Result<MatrixSet> {
    let m = set.len();
    let n = set.dim();
    let size = m * n;
    let shift = (m - 1) * n;
    let b0 = Matrix::from_fn(size, size, |i, j| if i < shift && j == i + n { one() } else { zero() });
    let b1 = Matrix::from_fn(size, size, |i, j| {
        if j < n {
            set.matrix(i / n).get(i % n, j).clone()
        } else {
            zero()
        }
    });
    MatrixSet::new(Alphabet::binary(), alloc::vec![b0, b1])
}

/// The set `{[[B_a | C_a], [0 | D_a]]}`.
pub fn block_compose(b: &MatrixSet, c: &[Matrix], d: &MatrixSet) -> Result<MatrixSet> {
    if b.alphabet != d.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    if c.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coupling blocks for {} letters",
            c.len(),
            b.len()
        )));
    }
    let matrices = b
        .matrices
        .iter()
        .zip(c)
        .zip(&d.matrices)
        .map(|((ba, ca), da)| Matrix::block(ba, ca, &Matrix::zeros(da.rows(), ba.cols()), da))
        .collect::<Result<Vec<_>>>()?;
    MatrixSet::new(b.alphabet.clone(), matrices)
}
