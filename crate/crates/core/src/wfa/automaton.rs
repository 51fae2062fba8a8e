use alloc::format;
use alloc::vec::Vec;

use super::{Alphabet, Word};
use crate::linalg::{int, inverse, Matrix, Rational, Vector};
use crate::{Error, Result};

/// Weighted finite automaton `(I, {A_a}, F)` with `n ≥ 0` states.
///
/// `I` is a row vector, `F` a column vector and there is exactly one `n×n`
/// transition matrix per letter, stored in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wfa {
    alphabet: Alphabet,
    initial: Vector,
    final_weights: Vector,
    transitions: Vec<Matrix>,
}

impl Wfa {
    pub fn new(alphabet: Alphabet, initial: Vector, final_weights: Vector, transitions: Vec<Matrix>) -> Result<Self> {
        let n = initial.len();
        if final_weights.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "initial has {n} entries, final has {}",
                final_weights.len()
            )));
        }
        if transitions.len() != alphabet.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} letters but {} transition matrices",
                alphabet.len(),
                transitions.len()
            )));
        }
        if let Some((i, m)) = transitions
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != n || m.cols() != n)
        {
            return Err(Error::DimensionMismatch(format!(
                "matrix for `{}` is {}x{}, expected {n}x{n}",
                alphabet.symbol(i),
                m.rows(),
                m.cols()
            )));
        }
        Ok(Wfa {
            alphabet,
            initial,
            final_weights,
            transitions,
        })
    }

    /// The unique automaton with no states.
    pub fn zero(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Wfa {
            alphabet,
            initial: Vector::zeros(0),
            final_weights: Vector::zeros(0),
            transitions: (0..k).map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.initial.len()
    }

    pub fn initial(&self) -> &Vector {
        &self.initial
    }

    pub fn final_weights(&self) -> &Vector {
        &self.final_weights
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.transitions
    }

    pub fn matrix(&self, letter: usize) -> &Matrix {
        &self.transitions[letter]
    }

    /// Same automaton with another final distribution.
    pub fn with_final(&self, final_weights: Vector) -> Result<Wfa> {
        Wfa::new(
            self.alphabet.clone(),
            self.initial.clone(),
            final_weights,
            self.transitions.clone(),
        )
    }

    /// Same automaton with another initial distribution.
    pub fn with_initial(&self, initial: Vector) -> Result<Wfa> {
        Wfa::new(
            self.alphabet.clone(),
            initial,
            self.final_weights.clone(),
            self.transitions.clone(),
        )
    }

    /// `A_v = A_{v₁}···A_{v_m}`; the identity for the empty word.
    pub fn word_matrix(&self, v: &Word) -> Result<Matrix> {
        self.alphabet.check(v)?;
        Ok(v.letters()
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, &a| &acc * &self.transitions[a]))
    }

    /// Row vector `I·A_v`.
    pub fn initial_after(&self, v: &Word) -> Result<Vector> {
        self.alphabet.check(v)?;
        Ok(v.letters()
            .iter()
            .fold(self.initial.clone(), |x, &a| x.mul_mat(&self.transitions[a])))
    }

    /// Column vector `A_v·F`.
    pub fn final_before(&self, v: &Word) -> Result<Vector> {
        self.alphabet.check(v)?;
        Ok(v.letters()
            .iter()
            .rev()
            .fold(self.final_weights.clone(), |x, &a| self.transitions[a].mul_vec(&x)))
    }

    /// Word function `F(v) = I·A_v·F`.
    pub fn eval_word(&self, v: &Word) -> Result<Rational> {
        Ok(self.initial_after(v)?.dot(&self.final_weights))
    }

    /// `Σ_a A_a`.
    pub fn letter_sum(&self) -> Matrix {
        self.transitions
            .iter()
            .fold(Matrix::zeros(self.dim(), self.dim()), |acc, m| &acc + m)
    }

    /// Average preservation: `Σ_a A_a·F = |Σ|·F`.
    pub fn is_ap(&self) -> bool {
        let k = int(self.alphabet.len() as i64);
        self.letter_sum().mul_vec(&self.final_weights) == self.final_weights.scale(&k)
    }

    /// The automaton `(I·M, {M⁻¹A_aM}, M⁻¹F)`, which computes the same word function.
    pub fn change_basis(&self, m: &Matrix) -> Result<Wfa> {
        let n = self.dim();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "basis change {}x{} for a {n}-state automaton",
                m.rows(),
                m.cols()
            )));
        }
        let inv = inverse(m).ok_or_else(|| Error::Singular("basis change matrix".into()))?;
        Ok(Wfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial.mul_mat(m),
            final_weights: inv.mul_vec(&self.final_weights),
            transitions: self.transitions.iter().map(|a| &(&inv * a) * m).collect(),
        })
    }

    /// Direct sum: block-diagonal transitions, concatenated distributions.
    /// Computes the sum of the two word functions.
    pub fn direct_sum(&self, other: &Wfa) -> Result<Wfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Wfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial.concat(&other.initial),
            final_weights: self.final_weights.concat(&other.final_weights),
            transitions: self
                .transitions
                .iter()
                .zip(&other.transitions)
                .map(|(a, b)| Matrix::direct_sum(a, b))
                .collect(),
        })
    }

    /// Scales the initial distribution, and so the word function, by `c`.
    pub fn scaled(&self, c: &Rational) -> Wfa {
        Wfa {
            initial: self.initial.scale(c),
            ..self.clone()
        }
    }
}
