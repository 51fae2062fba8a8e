//! Continuity decisions for average preserving automata.

use crate::canonical::{to_canonical_form, CanonicalForm};
use crate::linalg::{inverse, Matrix, Vector};
use crate::stability::{decide_stability, StabilityVerdict};
use crate::wfa::{minimize, omega_eval, OmegaValue, UltimatelyPeriodicWord, Wfa, Word};
use crate::{Error, Result};

/// Why an ω-function is not continuous.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DiscontinuityReason {
    /// The minimal automaton has no common left 1-eigenvector.
    NoEigenrow,
    /// The canonical blocks are unstable along this word.
    StabilityWitness(Word),
    /// The common left 1-eigenspace has dimension above 1.
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ContinuityVerdict {
    /// `certificate_depth` is the stability certificate of the canonical
    /// blocks, absent for the zero function.
    ContinuousEverywhere {
        certificate_depth: Option<usize>,
    },
    NotContinuous {
        reason: DiscontinuityReason,
    },
    Unknown {
        explored_depth: usize,
    },
}

/// Joint verdict on the ω-function `f` and the real function `f̂` on `[0, 1)`.
///
/// Only uniform continuity of `f̂` is decided; a real function that is
/// continuous but not uniformly so is reported as [`OmegaOnlyContinuous`].
///
/// [`OmegaOnlyContinuous`]: UniformContinuityVerdict::OmegaOnlyContinuous
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UniformContinuityVerdict {
    BothContinuous {
        certificate_depth: Option<usize>,
    },
    /// `f` is continuous but `f̂` jumps at some dyadic point.
    OmegaOnlyContinuous {
        certificate_depth: Option<usize>,
    },
    NotContinuous {
        reason: DiscontinuityReason,
    },
    Unknown {
        explored_depth: usize,
    },
}

fn omega_pipeline(a: &Wfa, max_depth: usize) -> Result<(ContinuityVerdict, Option<CanonicalForm>)> {
    if !a.is_ap() {
        return Err(Error::NotAp);
    }
    if max_depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let min = minimize(a);
    if min.dim() == 0 {
        return Ok((
            ContinuityVerdict::ContinuousEverywhere {
                certificate_depth: None,
            },
            None,
        ));
    }
    let Some(form) = to_canonical_form(&min)? else {
        let reason = DiscontinuityReason::NoEigenrow;
        return Ok((ContinuityVerdict::NotContinuous { reason }, None));
    };
    let verdict = match decide_stability(&form.block_set(), max_depth)? {
        StabilityVerdict::Stable { certificate_depth } => ContinuityVerdict::ContinuousEverywhere {
            certificate_depth: Some(certificate_depth),
        },
        StabilityVerdict::NotStable { witness } => ContinuityVerdict::NotContinuous {
            reason: DiscontinuityReason::StabilityWitness(witness),
        },
        StabilityVerdict::Unknown { .. } if form.multiplicity() > 1 => ContinuityVerdict::NotContinuous {
            reason: DiscontinuityReason::Structural,
        },
        StabilityVerdict::Unknown { explored_depth } => ContinuityVerdict::Unknown { explored_depth },
    };
    Ok((verdict, Some(form)))
}

/// Decides whether the ω-function of an ap automaton is continuous on `Σ^ω`.
///
/// Minimizes, moves to canonical form and runs the stability search on the
/// blocks `{B_a}`; never guesses when that search is inconclusive.
pub fn analyze_omega_continuity(a: &Wfa, max_depth: usize) -> Result<ContinuityVerdict> {
    omega_pipeline(a, max_depth).map(|(v, _)| v)
}

fn neumann(b: &Matrix) -> Result<Matrix> {
    inverse(&(&Matrix::identity(b.rows()) - b))
        .ok_or_else(|| Error::Singular("E − B for a block with eigenvalue 1".into()))
}

/// Whether `b₀ + B₀(E−B₁)⁻¹b₁ = b₁ + B₁(E−B₀)⁻¹b₀` for a binary canonical form.
///
/// The two sides are the limits `A_0·lim A_1ᵏ·F` and `A_1·lim A_0ᵏ·F` in block
/// coordinates, so equality is exactly `f(v10^ω) = f(v01^ω)` for all `v`.
pub fn check_dyadic_matching(form: &CanonicalForm) -> Result<bool> {
    if !form.wfa().alphabet().is_binary() {
        return Err(Error::NotBinary);
    }
    let (b0, b1) = (&form.blocks()[0], &form.blocks()[1]);
    let (c0, c1) = (&form.columns()[0], &form.columns()[1]);
    let left: Vector = c0 + &b0.mul_vec(&neumann(b1)?.mul_vec(c1));
    let right: Vector = c1 + &b1.mul_vec(&neumann(b0)?.mul_vec(c0));
    Ok(left == right)
}

/// Decides continuity of both `f` and `f̂` for a binary ap automaton.
pub fn analyze_uniform_continuity(a: &Wfa, max_depth: usize) -> Result<UniformContinuityVerdict> {
    if !a.alphabet().is_binary() {
        return Err(Error::NotBinary);
    }
    let (verdict, form) = omega_pipeline(a, max_depth)?;
    Ok(match verdict {
        ContinuityVerdict::ContinuousEverywhere { certificate_depth } => match form {
            Some(form) if !check_dyadic_matching(&form)? => {
                UniformContinuityVerdict::OmegaOnlyContinuous { certificate_depth }
            }
            _ => UniformContinuityVerdict::BothContinuous { certificate_depth },
        },
        ContinuityVerdict::NotContinuous { reason } => UniformContinuityVerdict::NotContinuous { reason },
        ContinuityVerdict::Unknown { explored_depth } => UniformContinuityVerdict::Unknown { explored_depth },
    })
}

/// `f(v·10^ω)` and `f(v·01^ω)`: the values at the two binary expansions of
/// one dyadic point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneSidedValues {
    /// Limit from the right, `f(v·10^ω)`.
    pub right: OmegaValue,
    /// Limit from the left, `f(v·01^ω)`.
    pub left: OmegaValue,
}

pub fn dyadic_one_sided_values(a: &Wfa, v: &Word) -> Result<OneSidedValues> {
    if !a.alphabet().is_binary() {
        return Err(Error::NotBinary);
    }
    let tail = |first: usize, rest: usize| {
        let mut head = v.clone();
        head.push(first);
        UltimatelyPeriodicWord::new(head, Word::new(alloc::vec![rest]))
    };
    Ok(OneSidedValues {
        right: omega_eval(a, &tail(1, 0)?)?,
        left: omega_eval(a, &tail(0, 1)?)?,
    })
}

/// Left limit of `f̂` at `x = 1`, i.e. `f(1^ω)`.
pub fn endpoint_left_limit(a: &Wfa) -> Result<OmegaValue> {
    if !a.alphabet().is_binary() {
        return Err(Error::NotBinary);
    }
    omega_eval(a, &UltimatelyPeriodicWord::constant(1))
}
