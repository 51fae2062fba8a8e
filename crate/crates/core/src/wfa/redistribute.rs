use super::{is_left_minimal, minimize, omega_limit_vector, UltimatelyPeriodicWord, Wfa};
use crate::linalg::{int, power_limit_vec};
use crate::Result;

/// Replaces the final distribution so that the automaton becomes ap while
/// keeping the ω-function on `Σ*·anchor`.
///
/// With `G = lim_k A_{pref_k(anchor)}·F` and `P = (Σ_a A_a)/|Σ|`, the new final
/// distribution is `F' = lim_i Pⁱ·G`. Non-left-minimal inputs are minimized
/// first. Returns `None` when either limit does not exist or the result fails
/// the ap check.
pub fn ap_redistribute(a: &Wfa, anchor: &UltimatelyPeriodicWord) -> Result<Option<Wfa>> {
    a.alphabet().check(anchor.head())?;
    a.alphabet().check(anchor.period())?;
    let base = if is_left_minimal(a) { a.clone() } else { minimize(a) };
    if base.dim() == 0 {
        return Ok(Some(base));
    }
    let Some(g) = omega_limit_vector(&base, anchor)? else {
        return Ok(None);
    };
    let avg = base.letter_sum().scale(&int(base.alphabet().len() as i64).recip());
    let Some(f) = power_limit_vec(&avg, &g)? else {
        return Ok(None);
    };
    let out = base.with_final(f)?;
    Ok(out.is_ap().then_some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;
    use crate::wfa::{catalog, omega_eval, Alphabet};

    #[test]
    fn ap_continuous_input_is_a_fixed_point() {
        let c = catalog::synthesized_continuous();
        let r = ap_redistribute(&c, &UltimatelyPeriodicWord::constant(0))
            .unwrap()
            .unwrap();
        assert_eq!(r, c);
        let r = ap_redistribute(&c, &UltimatelyPeriodicWord::constant(1))
            .unwrap()
            .unwrap();
        assert_eq!(r, c);
    }

    #[test]
    fn half_scaling_becomes_zero() {
        let h = catalog::half_scaling();
        let r = ap_redistribute(&h, &UltimatelyPeriodicWord::constant(0))
            .unwrap()
            .unwrap();
        assert_eq!(r.final_weights(), &Vector::zeros(1));
        assert!(r.is_ap());
        let w = UltimatelyPeriodicWord::constant(1);
        assert_eq!(omega_eval(&r, &w).unwrap(), omega_eval(&h, &w).unwrap());
    }

    #[test]
    fn zero_automaton_unchanged() {
        let z = Wfa::zero(Alphabet::binary());
        assert_eq!(
            ap_redistribute(&z, &UltimatelyPeriodicWord::constant(0)).unwrap(),
            Some(z)
        );
    }

    #[test]
    fn divergent_anchor_gives_none() {
        let a = Wfa::new(
            Alphabet::binary(),
            Vector::from_ints(&[1]),
            Vector::from_ints(&[1]),
            alloc::vec![crate::Matrix::from_ints(&[&[-1]]), crate::Matrix::from_ints(&[&[1]])],
        )
        .unwrap();
        assert_eq!(ap_redistribute(&a, &UltimatelyPeriodicWord::constant(0)).unwrap(), None);
    }
}
