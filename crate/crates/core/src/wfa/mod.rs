//! Weighted finite automata over exact rationals and their semantics.

mod automaton;
pub mod catalog;
mod dyadic;
mod equivalence;
mod minimize;
mod omega;
mod redistribute;

pub use automaton::Wfa;
pub use dyadic::{real_eval_dyadic, sample};
pub use equivalence::{difference, equal_ap, is_zero_ap};
pub use minimize::{is_left_minimal, is_minimal, is_right_minimal, minimize};
pub use omega::{omega_eval, omega_limit_vector, period_limits};
pub use redistribute::ap_redistribute;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Rational, Result};

/// Ordered list of distinct letter symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<String>);

impl Alphabet {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Result<Self> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("no letters".into()));
        }
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidAlphabet("empty letter symbol".into()));
            }
            if letters[..i].contains(l) {
                return Err(Error::InvalidAlphabet(alloc::format!("letter `{l}` repeated")));
            }
        }
        Ok(Alphabet(letters))
    }

    /// The alphabet `["0", "1"]` used for real functions on `[0, 1)`.
    pub fn binary() -> Self {
        Alphabet(alloc::vec!["0".into(), "1".into()])
    }

    pub fn is_binary(&self) -> bool {
        self.0.len() == 2 && self.0[0] == "0" && self.0[1] == "1"
    }

    pub fn letters(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, letter: &str) -> Option<usize> {
        self.0.iter().position(|l| l == letter)
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.0[index]
    }

    /// Parses a word. With single-character letters the text is read character
    /// by character; otherwise letters are separated by commas or whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let single = self.0.iter().all(|l| l.chars().count() == 1);
        let mut out = Vec::new();
        if single {
            for ch in text.chars().filter(|c| !c.is_whitespace()) {
                let mut buf = [0u8; 4];
                let s: &str = ch.encode_utf8(&mut buf);
                out.push(self.index_of(s).ok_or_else(|| Error::ForeignLetter(s.to_string()))?);
            }
        } else {
            for tok in text
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                out.push(
                    self.index_of(tok)
                        .ok_or_else(|| Error::ForeignLetter(tok.to_string()))?,
                );
            }
        }
        Ok(Word(out))
    }

    /// Renders a word with this alphabet's symbols.
    pub fn format_word(&self, w: &Word) -> String {
        let single = self.0.iter().all(|l| l.chars().count() == 1);
        let sep = if single { "" } else { "," };
        w.0.iter()
            .map(|&i| self.0.get(i).map_or("?", String::as_str))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// All words of length `len` in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> + '_ {
        let k = self.len();
        let total = k.checked_pow(len as u32).expect("too many words");
        (0..total).map(move |mut idx| {
            let mut letters = alloc::vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = idx % k;
                idx /= k;
            }
            Word(letters)
        })
    }

    pub(crate) fn check(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&i| i >= self.len()) {
            Some(i) => Err(Error::ForeignLetter(alloc::format!("#{i}"))),
            None => Ok(()),
        }
    }
}

/// Finite word, stored as letter indices into an [`Alphabet`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    /// `self` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// The infinite word `head · period^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UltimatelyPeriodicWord {
    head: Word,
    period: Word,
}

impl UltimatelyPeriodicWord {
    pub fn new(head: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(UltimatelyPeriodicWord { head, period })
    }

    /// `letter^ω`.
    pub fn constant(letter: usize) -> Self {
        UltimatelyPeriodicWord {
            head: Word::empty(),
            period: Word(alloc::vec![letter]),
        }
    }

    pub fn head(&self) -> &Word {
        &self.head
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Prefix of length `k` of the infinite word.
    pub fn prefix(&self, k: usize) -> Word {
        let mut out = Vec::with_capacity(k);
        out.extend(self.head.0.iter().take(k));
        let p = &self.period.0;
        let mut i = 0;
        while out.len() < k {
            out.push(p[i % p.len()]);
            i += 1;
        }
        Word(out)
    }
}

/// Value of an ω-function: the limit along prefixes, if it exists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OmegaValue {
    Defined(Rational),
    Undefined,
}

impl OmegaValue {
    pub fn as_defined(&self) -> Option<&Rational> {
        match self {
            OmegaValue::Defined(r) => Some(r),
            OmegaValue::Undefined => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, OmegaValue::Defined(_))
    }
}

impl From<Option<Rational>> for OmegaValue {
    fn from(v: Option<Rational>) -> Self {
        v.map_or(OmegaValue::Undefined, OmegaValue::Defined)
    }
}

impl fmt::Display for OmegaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaValue::Defined(r) => write!(f, "{r}"),
            OmegaValue::Undefined => f.write_str("undefined"),
        }
    }
}
