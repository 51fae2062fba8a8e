use super::{minimize, Wfa};
use crate::linalg::int;
use crate::{Error, Result};

/// Automaton computing `F_A − F_B`: initial `(I_A, −I_B)`, block-diagonal
/// transitions, stacked finals.
pub fn difference(a: &Wfa, b: &Wfa) -> Result<Wfa> {
    a.direct_sum(&b.scaled(&int(-1)))
}

/// Whether an ap automaton computes the zero function.
///
/// The zero ω-function has exactly one ap word function, the zero one, so
/// this is decided by minimizing down to 0 states.
pub fn is_zero_ap(a: &Wfa) -> Result<bool> {
    if !a.is_ap() {
        return Err(Error::NotAp);
    }
    Ok(minimize(a).dim() == 0)
}

/// Decides `f_A = f_B` for ap automata over the same alphabet.
///
/// Correct when at least one of the two ω-functions is everywhere defined;
/// that precondition is the caller's to establish.
pub fn equal_ap(a: &Wfa, b: &Wfa) -> Result<bool> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if !a.is_ap() || !b.is_ap() {
        return Err(Error::NotAp);
    }
    is_zero_ap(&difference(a, b)?)
}
