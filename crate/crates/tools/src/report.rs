//! Tagged JSON for verdicts. Words are rendered with the owning alphabet.

use serde_json::{json, Value};

use wfa_core::continuity::{ContinuityVerdict, DiscontinuityReason, UniformContinuityVerdict};
use wfa_core::stability::{RcpVerdict, RcpWitness, StabilityVerdict};
use wfa_core::{Alphabet, Word};

/// Whether a verdict settled the question; undecided verdicts exit with 2.
pub trait Decisive {
    fn decisive(&self) -> bool;
}

impl Decisive for StabilityVerdict {
    fn decisive(&self) -> bool {
        self.is_decisive()
    }
}

impl Decisive for RcpVerdict {
    fn decisive(&self) -> bool {
        !matches!(self, RcpVerdict::Unknown { .. })
    }
}

impl Decisive for ContinuityVerdict {
    fn decisive(&self) -> bool {
        !matches!(self, ContinuityVerdict::Unknown { .. })
    }
}

impl Decisive for UniformContinuityVerdict {
    fn decisive(&self) -> bool {
        !matches!(self, UniformContinuityVerdict::Unknown { .. })
    }
}

fn word(alphabet: &Alphabet, w: &Word) -> Value {
    Value::String(alphabet.format_word(w))
}

pub fn stability(v: &StabilityVerdict, alphabet: &Alphabet, budget: usize) -> Value {
    match v {
        StabilityVerdict::Stable { certificate_depth } => {
            json!({"verdict": "Stable", "certificate_depth": certificate_depth, "budget": budget})
        }
        StabilityVerdict::NotStable { witness } => {
            json!({"verdict": "NotStable", "witness": word(alphabet, witness), "budget": budget})
        }
        StabilityVerdict::Unknown { explored_depth } => {
            json!({"verdict": "Unknown", "explored_depth": explored_depth, "budget": budget})
        }
    }
}

pub fn rcp(v: &RcpVerdict, alphabet: &Alphabet, budget: usize) -> Value {
    match v {
        RcpVerdict::ContinuousRcp => json!({"verdict": "ContinuousRcp", "budget": budget}),
        RcpVerdict::NotRcp { witness } => {
            let w = match witness {
                RcpWitness::Product(p) => json!({"kind": "UnstableProduct", "word": word(alphabet, p)}),
                RcpWitness::EigenspacesDiffer => json!({"kind": "EigenspacesDiffer"}),
                RcpWitness::NotSimple(l) => json!({"kind": "NotSimple", "letter": alphabet.symbol(*l)}),
            };
            json!({"verdict": "NotRcp", "witness": w, "budget": budget})
        }
        RcpVerdict::Unknown { explored_depth } => {
            json!({"verdict": "Unknown", "explored_depth": explored_depth, "budget": budget})
        }
    }
}

fn reason(r: &DiscontinuityReason, alphabet: &Alphabet) -> Value {
    match r {
        DiscontinuityReason::NoEigenrow => json!({"kind": "NoEigenrow"}),
        DiscontinuityReason::StabilityWitness(w) => json!({"kind": "StabilityWitness", "word": word(alphabet, w)}),
        DiscontinuityReason::Structural => json!({"kind": "Structural"}),
    }
}

pub fn continuity(v: &ContinuityVerdict, alphabet: &Alphabet, budget: usize) -> Value {
    match v {
        ContinuityVerdict::ContinuousEverywhere { certificate_depth } => {
            json!({"verdict": "ContinuousEverywhere", "certificate_depth": certificate_depth, "budget": budget})
        }
        ContinuityVerdict::NotContinuous { reason: r } => {
            json!({"verdict": "NotContinuous", "reason": reason(r, alphabet), "budget": budget})
        }
        ContinuityVerdict::Unknown { explored_depth } => {
            json!({"verdict": "Unknown", "explored_depth": explored_depth, "budget": budget})
        }
    }
}

pub fn uniform_continuity(v: &UniformContinuityVerdict, alphabet: &Alphabet, budget: usize) -> Value {
    match v {
        UniformContinuityVerdict::BothContinuous { certificate_depth } => {
            json!({"verdict": "BothContinuous", "certificate_depth": certificate_depth, "budget": budget})
        }
        UniformContinuityVerdict::OmegaOnlyContinuous { certificate_depth } => {
            json!({"verdict": "OmegaOnlyContinuous", "certificate_depth": certificate_depth, "budget": budget})
        }
        UniformContinuityVerdict::NotContinuous { reason: r } => {
            json!({"verdict": "NotContinuous", "reason": reason(r, alphabet), "budget": budget})
        }
        UniformContinuityVerdict::Unknown { explored_depth } => {
            json!({"verdict": "Unknown", "explored_depth": explored_depth, "budget": budget})
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_use_letter_symbols() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let v = StabilityVerdict::NotStable {
            witness: Word::new(vec![1, 0]),
        };
        assert_eq!(
            stability(&v, &ab, 12),
            json!({"verdict": "NotStable", "witness": "ba", "budget": 12})
        );
        let v = ContinuityVerdict::NotContinuous {
            reason: DiscontinuityReason::StabilityWitness(Word::new(vec![0])),
        };
        assert_eq!(continuity(&v, &ab, 4)["reason"]["word"], "a");
        assert!(!UniformContinuityVerdict::Unknown { explored_depth: 3 }.decisive());
        let v = ContinuityVerdict::ContinuousEverywhere {
            certificate_depth: None,
        };
        assert_eq!(continuity(&v, &ab, 4)["certificate_depth"], Value::Null);
    }
}
