//! Canonical form `[[B_a | b_a], [0 | 1]]` of automata with a common left
//! 1-eigenvector.

use alloc::vec::Vec;

use crate::continuity::ContinuityVerdict;
use crate::linalg::{inverse, kernel, one, power_limit_matrix, rank, Matrix, Span, Vector};
use crate::stability::MatrixSet;
use crate::wfa::{is_minimal, Alphabet, Wfa, Word};
use crate::{Error, Result};

/// An automaton whose transition matrices all have last row `(0, …, 0, 1)`,
/// with the blocks split out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    wfa: Wfa,
    blocks: Vec<Matrix>,
    columns: Vec<Vector>,
    multiplicity: usize,
}

impl CanonicalForm {
    /// Wraps an automaton that is already in canonical shape.
    pub fn from_wfa(wfa: Wfa) -> Result<Self> {
        let n = wfa.dim();
        if n == 0 {
            return Err(Error::Precondition("canonical form needs at least one state".into()));
        }
        let last = Vector::unit(n, n - 1);
        if wfa.matrices().iter().any(|m| m.row(n - 1) != last) {
            return Err(Error::Precondition("last rows must be (0, …, 0, 1)".into()));
        }
        let blocks = wfa.matrices().iter().map(|m| m.submatrix(0, n - 1, 0, n - 1)).collect();
        let columns = wfa.matrices().iter().map(|m| m.column(n - 1).slice(0, n - 1)).collect();
        Ok(CanonicalForm {
            wfa,
            blocks,
            columns,
            multiplicity: 1,
        })
    }

    /// Assembles `[[B_a | b_a], [0 | 1]]` with the given distributions.
    pub fn from_parts(
        alphabet: Alphabet,
        blocks: Vec<Matrix>,
        columns: Vec<Vector>,
        initial: Vector,
        final_weights: Vector,
    ) -> Result<Self> {
        if blocks.len() != columns.len() {
            return Err(Error::DimensionMismatch("one column per block expected".into()));
        }
        let matrices = blocks
            .iter()
            .zip(&columns)
            .map(|(b, c)| assemble(b, c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_wfa(Wfa::new(alphabet, initial, final_weights, matrices)?)
    }

    pub fn wfa(&self) -> &Wfa {
        &self.wfa
    }

    pub fn into_wfa(self) -> Wfa {
        self.wfa
    }

    /// `B_a` per letter, `(n−1)×(n−1)`.
    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// `b_a` per letter, length `n−1`.
    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    /// The common left 1-eigenvector in the new basis, `(0, …, 0, 1)`.
    pub fn eigenrow(&self) -> Vector {
        Vector::unit(self.wfa.dim(), self.wfa.dim() - 1)
    }

    /// Dimension of the common left 1-eigenspace of the source automaton.
    /// Above 1 the source cannot be minimal, continuous and nonzero.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// `{B_a}` as a matrix set.
    pub fn block_set(&self) -> MatrixSet {
        MatrixSet::new(self.wfa.alphabet().clone(), self.blocks.clone())
            .expect("blocks share the automaton's alphabet and size")
    }
}

/// `[[b, c], [0, 1]]`.
pub(crate) fn assemble(b: &Matrix, c: &Vector) -> Result<Matrix> {
    let n = b.rows();
    let col = Matrix::from_columns(c.len(), core::slice::from_ref(c));
    let mut bottom = Matrix::zeros(1, n + 1);
    bottom.set(0, n, one());
    Matrix::block(
        b,
        &col,
        &bottom.submatrix(0, 1, 0, n),
        &bottom.submatrix(0, 1, n, n + 1),
    )
}

/// Basis of `{x : x·A_a = x for every letter a}` in elimination order.
pub fn common_left_one_eigenspace(a: &Wfa) -> Vec<Vector> {
    let n = a.dim();
    if n == 0 {
        return Vec::new();
    }
    let shifted: Vec<Matrix> = a.matrices().iter().map(|m| m - &Matrix::identity(n)).collect();
    // x·(A_a − E) = 0 for all a  ⇔  (A_a − E)ᵀ·xᵀ = 0 stacked vertically
    let rows = shifted.len() * n;
    let stacked = Matrix::from_fn(rows, n, |i, j| shifted[i / n].get(j, i % n).clone());
    kernel(&stacked)
}

fn normalize_last(v: Vector) -> Vector {
    let k = v.last_nonzero().expect("kernel vectors are nonzero");
    let scale = v[k].recip();
    v.scale(&scale)
}

/// First vector of [`common_left_one_eigenspace`], scaled so its last nonzero
/// entry is 1.
pub fn common_left_one_eigenvector(a: &Wfa) -> Option<Vector> {
    common_left_one_eigenspace(a).into_iter().next().map(normalize_last)
}

/// Changes basis so that the common left 1-eigenvector becomes `(0, …, 0, 1)`.
///
/// The new basis rows are the unit vectors independent of the eigenvector
/// (scanned in order) followed by the eigenvector itself. Intended for minimal
/// automata; returns `None` without a common left 1-eigenvector.
pub fn to_canonical_form(a: &Wfa) -> Result<Option<CanonicalForm>> {
    let space = common_left_one_eigenspace(a);
    let multiplicity = space.len();
    let Some(ic) = space.into_iter().next().map(normalize_last) else {
        return Ok(None);
    };
    let n = a.dim();
    let mut span = Span::new(n);
    span.insert(&ic);
    let mut rows: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).filter(|e| span.insert(e)).collect();
    rows.push(ic);
    let t = Matrix::from_row_vectors(n, &rows);
    let m = inverse(&t).expect("rows form a basis");
    let mut form = CanonicalForm::from_wfa(a.change_basis(&m)?)?;
    form.multiplicity = multiplicity;
    Ok(Some(form))
}

/// Outcome of [`limit_matrix_checks`] for one period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodCheck {
    pub period: Word,
    /// `lim_k A_vᵏ`, if it exists.
    pub limit: Option<Matrix>,
    /// `L·A_a = L` for every letter.
    pub absorbs_letters: bool,
    /// `rank(L) ≤ 1`.
    pub rank_at_most_one: bool,
    /// Every row of `L` is a multiple of the common left 1-eigenvector.
    pub rows_follow_eigenrow: bool,
}

impl PeriodCheck {
    pub fn passed(&self) -> bool {
        self.limit.is_some() && self.absorbs_letters && self.rank_at_most_one && self.rows_follow_eigenrow
    }
}

/// Consistency checks on limit matrices of a minimal automaton already judged
/// continuous. A failed check contradicts the verdict.
pub fn limit_matrix_checks(a: &Wfa, verdict: &ContinuityVerdict, periods: &[Word]) -> Result<Vec<PeriodCheck>> {
    if !matches!(verdict, ContinuityVerdict::ContinuousEverywhere { .. }) {
        return Err(Error::Precondition("checks need a continuous verdict".into()));
    }
    if !is_minimal(a) {
        return Err(Error::NotMinimal);
    }
    if a.dim() == 0 {
        return Ok(Vec::new());
    }
    let ic = common_left_one_eigenvector(a);
    let mut out = Vec::with_capacity(periods.len());
    for v in periods {
        if v.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let limit = power_limit_matrix(&a.word_matrix(v)?)?;
        let (absorbs, low_rank, follows) = match (&limit, &ic) {
            (Some(l), ic) => {
                let absorbs = a.matrices().iter().all(|m| &(l * m) == l);
                let low_rank = rank(l) <= 1;
                let follows = match ic {
                    Some(ic) => (0..l.rows()).all(|i| {
                        let row = l.row(i);
                        row.is_zero() || rank(&Matrix::from_row_vectors(a.dim(), &[row, ic.clone()])) == 1
                    }),
                    None => l.is_zero(),
                };
                (absorbs, low_rank, follows)
            }
            (None, _) => (false, false, false),
        };
        out.push(PeriodCheck {
            period: v.clone(),
            limit,
            absorbs_letters: absorbs,
            rank_at_most_one: low_rank,
            rows_follow_eigenrow: follows,
        });
    }
    Ok(out)
}
