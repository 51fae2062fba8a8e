use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{period_limits, OmegaValue, UltimatelyPeriodicWord, Wfa, Word};
use crate::linalg::Rational;
use crate::{Error, Result};

/// Binary expansion of a dyadic `x = p/2^m ∈ [0, 1)`: the `m`-bit word `v`
/// with `bin(x) = v·0^ω`.
pub(crate) fn dyadic_digits(x: &Rational) -> Result<Word> {
    let not_dyadic = || Error::NotDyadic(alloc::format!("{x}"));
    if x.is_negative() || *x >= Rational::one() {
        return Err(not_dyadic());
    }
    let den = x.denom();
    let mut m = 0usize;
    let mut d = den.clone();
    let two = BigInt::from(2);
    while d > BigInt::one() {
        let (q, r) = d.div_rem(&two);
        if !r.is_zero() {
            return Err(not_dyadic());
        }
        d = q;
        m += 1;
    }
    let num = x.numer();
    let bits = (0..m).map(|i| usize::from(num.bit((m - 1 - i) as u64))).collect();
    Ok(Word::new(bits))
}

fn require_binary(a: &Wfa) -> Result<()> {
    if a.alphabet().is_binary() {
        Ok(())
    } else {
        Err(Error::NotBinary)
    }
}

/// Real function `f̂(x) = f(bin(x))` at a dyadic point, using the expansion
/// that ends in `0^ω`.
pub fn real_eval_dyadic(a: &Wfa, x: &Rational) -> Result<OmegaValue> {
    require_binary(a)?;
    let digits = dyadic_digits(x)?;
    super::omega_eval(a, &UltimatelyPeriodicWord::new(digits, Word::new(alloc::vec![0]))?)
}

/// `f̂(i/2^m)` for `i = 0 … 2^m − 1`.
pub fn sample(a: &Wfa, depth: u32) -> Result<Vec<(Rational, OmegaValue)>> {
    require_binary(a)?;
    let count = 1usize << depth;
    let den = BigInt::one() << depth;
    // every point shares the tail 0^ω, so lim A_0ᵏ·F is computed once
    let tail = period_limits(a, &Word::new(alloc::vec![0]))?.map(|mut v| v.remove(0));
    let mut out = Vec::with_capacity(count);
    for (i, w) in a.alphabet().words_of_length(depth as usize).enumerate() {
        let x = Rational::new(BigInt::from(i), den.clone());
        let value = match &tail {
            Some(g) => OmegaValue::Defined(a.initial_after(&w)?.dot(g)),
            None => OmegaValue::Undefined,
        };
        out.push((x, value));
    }
    debug_assert_eq!(out.len(), count);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};
    use crate::wfa::{catalog, Alphabet};

    #[test]
    fn digits_of_dyadics() {
        assert_eq!(dyadic_digits(&int(0)).unwrap(), Word::empty());
        assert_eq!(dyadic_digits(&ratio(1, 2)).unwrap(), Word::new(alloc::vec![1]));
        assert_eq!(dyadic_digits(&ratio(3, 8)).unwrap(), Word::new(alloc::vec![0, 1, 1]));
        assert!(dyadic_digits(&ratio(1, 3)).is_err());
        assert!(dyadic_digits(&int(1)).is_err());
        assert!(dyadic_digits(&ratio(-1, 2)).is_err());
    }

    #[test]
    fn synthesized_at_zero_is_six() {
        let c = catalog::synthesized_continuous();
        assert_eq!(real_eval_dyadic(&c, &int(0)).unwrap(), OmegaValue::Defined(int(6)));
    }

    #[test]
    fn zero_automaton_samples() {
        let z = Wfa::zero(Alphabet::binary());
        let s = sample(&z, 3).unwrap();
        assert_eq!(s.len(), 8);
        assert!(s.iter().all(|(_, v)| *v == OmegaValue::Defined(int(0))));
        assert_eq!(s[5].0, ratio(5, 8));
    }

    #[test]
    fn sample_agrees_with_pointwise_evaluation() {
        let c = catalog::synthesized_continuous();
        for (x, v) in sample(&c, 4).unwrap() {
            assert_eq!(real_eval_dyadic(&c, &x).unwrap(), v);
        }
    }

    #[test]
    fn non_binary_rejected() {
        let t = catalog::three_letter_discontinuous();
        assert_eq!(real_eval_dyadic(&t, &int(0)), Err(Error::NotBinary));
        assert_eq!(sample(&t, 2).unwrap_err(), Error::NotBinary);
    }
}
