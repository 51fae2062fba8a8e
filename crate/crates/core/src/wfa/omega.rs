use alloc::vec::Vec;

use super::{OmegaValue, UltimatelyPeriodicWord, Wfa, Word};
use crate::linalg::{power_limit_vec, Vector};
use crate::Result;

/// For each proper prefix `p` of `period` (shortest first, starting with ε),
/// the limit `l_p = lim_k A_periodᵏ·A_p·F`. `None` if any of them diverges.
///
/// The prefixes of `u·v^ω` split into `|v|` subsequences
/// `A_u·A_vᵏ·A_p·F`, one per residue `p`.
pub fn period_limits(a: &Wfa, period: &Word) -> Result<Option<Vec<Vector>>> {
    a.alphabet().check(period)?;
    let av = a.word_matrix(period)?;
    let mut out = Vec::with_capacity(period.len());
    for j in 0..period.len() {
        let x = a.final_before(&period.prefix(j))?;
        match power_limit_vec(&av, &x)? {
            Some(l) => out.push(l),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// ω-function value `f(u·v^ω) = lim_k F(pref_k(u·v^ω))`.
///
/// Defined iff every residue subsequence converges and all of them agree.
pub fn omega_eval(a: &Wfa, w: &UltimatelyPeriodicWord) -> Result<OmegaValue> {
    let row = a.initial_after(w.head())?;
    let Some(limits) = period_limits(a, w.period())? else {
        return Ok(OmegaValue::Undefined);
    };
    let mut values = limits.iter().map(|l| row.dot(l));
    let first = values.next().expect("period is nonempty");
    if values.all(|v| v == first) {
        Ok(OmegaValue::Defined(first))
    } else {
        Ok(OmegaValue::Undefined)
    }
}

/// `G = lim_k A_{pref_k(w)}·F` as a vector, when every residue subsequence
/// converges to the same vector.
pub fn omega_limit_vector(a: &Wfa, w: &UltimatelyPeriodicWord) -> Result<Option<Vector>> {
    let Some(limits) = period_limits(a, w.period())? else {
        return Ok(None);
    };
    let au = a.word_matrix(w.head())?;
    let mut vecs = limits.iter().map(|l| au.mul_vec(l));
    let first = vecs.next().expect("period is nonempty");
    Ok(vecs.all(|v| v == first).then_some(first))
}
