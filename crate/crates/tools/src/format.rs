//! JSON file formats for automata, matrix sets, canonical forms and synthesis
//! seeds. Rationals are `"p/q"` strings, or `"p"` when `q = 1`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use wfa_core::canonical::CanonicalForm;
use wfa_core::stability::MatrixSet;
use wfa_core::synthesis::SynthesisInput;
use wfa_core::{Alphabet, Matrix, Rational, Vector, Wfa};

pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (num, den) = t.split_once('/').unwrap_or((t, "1"));
    let num: num_bigint::BigInt = num.trim().parse().with_context(|| format!("bad rational {text:?}"))?;
    let den: num_bigint::BigInt = den.trim().parse().with_context(|| format!("bad rational {text:?}"))?;
    if den == num_bigint::BigInt::from(0) {
        bail!("zero denominator in {text:?}");
    }
    Ok(Rational::new(num, den))
}

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

type Rows = Vec<Vec<String>>;

fn vector_strings(v: &Vector) -> Vec<String> {
    v.iter().map(rational_string).collect()
}

fn matrix_strings(m: &Matrix) -> Rows {
    (0..m.rows()).map(|i| vector_strings(&m.row(i))).collect()
}

fn parse_vector(v: &[String], what: &str) -> Result<Vector> {
    let entries = v
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()
        .with_context(|| format!("in {what}"))?;
    Ok(Vector::new(entries))
}

fn parse_matrix(rows: &Rows, what: &str) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|r| parse_vector(r, what).map(Vector::into_entries))
        .collect::<Result<Vec<_>>>()?;
    if parsed.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(&parsed).with_context(|| format!("{what} is not rectangular"))
}

fn square(m: Matrix, n: usize, what: &str) -> Result<Matrix> {
    if m.rows() != n || m.cols() != n {
        bail!("{what} is {}x{}, expected {n}x{n}", m.rows(), m.cols());
    }
    Ok(m)
}

/// Matrices keyed by letter, in alphabet order.
fn lettered(alphabet: &Alphabet, table: &BTreeMap<String, Rows>, n: Option<usize>, what: &str) -> Result<Vec<Matrix>> {
    if let Some(extra) = table.keys().find(|k| alphabet.index_of(k).is_none()) {
        bail!("{what} has foreign letter {extra:?}");
    }
    let mut dim = n;
    alphabet
        .letters()
        .iter()
        .map(|l| {
            let rows = table
                .get(l)
                .ok_or_else(|| anyhow!("{what} has no matrix for letter {l:?}"))?;
            let m = parse_matrix(rows, &format!("{what}[{l:?}]"))?;
            let want = *dim.get_or_insert(m.rows());
            square(m, want, &format!("{what}[{l:?}]"))
        })
        .collect()
}

fn lettered_table(alphabet: &Alphabet, matrices: &[Matrix]) -> BTreeMap<String, Rows> {
    alphabet
        .letters()
        .iter()
        .cloned()
        .zip(matrices.iter().map(matrix_strings))
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WfaFile {
    pub alphabet: Vec<String>,
    pub dim: usize,
    pub initial: Vec<String>,
    #[serde(rename = "final")]
    pub final_weights: Vec<String>,
    pub transitions: BTreeMap<String, Rows>,
}

impl WfaFile {
    pub fn from_wfa(a: &Wfa) -> Self {
        WfaFile {
            alphabet: a.alphabet().letters().to_vec(),
            dim: a.dim(),
            initial: vector_strings(a.initial()),
            final_weights: vector_strings(a.final_weights()),
            transitions: lettered_table(a.alphabet(), a.matrices()),
        }
    }

    pub fn to_wfa(&self) -> Result<Wfa> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let n = self.dim;
        let initial = parse_vector(&self.initial, "initial")?;
        let final_weights = parse_vector(&self.final_weights, "final")?;
        if initial.len() != n || final_weights.len() != n {
            bail!(
                "dim is {n} but initial has {} and final has {} entries",
                initial.len(),
                final_weights.len()
            );
        }
        let mats = lettered(&alphabet, &self.transitions, Some(n), "transitions")?;
        Ok(Wfa::new(alphabet, initial, final_weights, mats)?)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixSetFile {
    pub alphabet: Vec<String>,
    pub matrices: BTreeMap<String, Rows>,
}

impl MatrixSetFile {
    pub fn from_set(s: &MatrixSet) -> Self {
        MatrixSetFile {
            alphabet: s.alphabet().letters().to_vec(),
            matrices: lettered_table(s.alphabet(), s.matrices()),
        }
    }

    pub fn to_set(&self) -> Result<MatrixSet> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let mats = lettered(&alphabet, &self.matrices, None, "matrices")?;
        Ok(MatrixSet::new(alphabet, mats)?)
    }
}

/// Automaton JSON plus the block decomposition `A_a = [[blocks_a, columns_a], [0, 1]]`.
#[derive(Debug, Serialize)]
pub struct CanonicalFile {
    #[serde(flatten)]
    pub automaton: WfaFile,
    pub blocks: BTreeMap<String, Rows>,
    pub columns: BTreeMap<String, Vec<String>>,
    pub multiplicity: usize,
}

impl CanonicalFile {
    pub fn from_form(form: &CanonicalForm) -> Self {
        let alphabet = form.wfa().alphabet();
        CanonicalFile {
            automaton: WfaFile::from_wfa(form.wfa()),
            blocks: lettered_table(alphabet, form.blocks()),
            columns: alphabet
                .letters()
                .iter()
                .cloned()
                .zip(form.columns().iter().map(vector_strings))
                .collect(),
            multiplicity: form.multiplicity(),
        }
    }
}

/// Seed for `synthesize`: the stable pair, a kernel vector of `B0+B1−E`,
/// the first translation column and an optional initial distribution.
#[derive(Debug, Serialize, Deserialize)]
pub struct SynthesisFile {
    #[serde(rename = "B0")]
    pub b0_block: Rows,
    #[serde(rename = "B1")]
    pub b1_block: Rows,
    pub k: Vec<String>,
    pub b0: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<String>>,
}

impl SynthesisFile {
    pub fn to_input(&self) -> Result<SynthesisInput> {
        Ok(SynthesisInput {
            b0_block: parse_matrix(&self.b0_block, "B0")?,
            b1_block: parse_matrix(&self.b1_block, "B1")?,
            kernel_vector: parse_vector(&self.k, "k")?,
            b0: parse_vector(&self.b0, "b0")?,
            initial: self
                .initial
                .as_deref()
                .map(|v| parse_vector(v, "initial"))
                .transpose()?,
        })
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed {}", path.display()))
}

pub fn read_wfa(path: &std::path::Path) -> Result<Wfa> {
    read_json::<WfaFile>(path)?
        .to_wfa()
        .with_context(|| format!("invalid automaton in {}", path.display()))
}

pub fn read_set(path: &std::path::Path) -> Result<MatrixSet> {
    read_json::<MatrixSetFile>(path)?
        .to_set()
        .with_context(|| format!("invalid matrix set in {}", path.display()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use wfa_core::wfa::catalog;

    #[test]
    fn rationals_round_trip() {
        for (text, canon) in [("3", "3"), ("-6/4", "-3/2"), ("0/5", "0"), (" 2 / 3 ", "2/3")] {
            assert_eq!(rational_string(&parse_rational(text).unwrap()), canon);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn automaton_round_trip_is_exact() {
        let a = catalog::synthesized_continuous();
        let text = to_json(&WfaFile::from_wfa(&a));
        let back: WfaFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_wfa().unwrap(), a);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn schema_violations_are_rejected() {
        let good = WfaFile::from_wfa(&catalog::half_scaling());
        let mut bad = WfaFile {
            dim: 2,
            ..WfaFile::from_wfa(&catalog::half_scaling())
        };
        assert!(bad.to_wfa().is_err());
        bad = WfaFile {
            transitions: BTreeMap::new(),
            ..WfaFile::from_wfa(&catalog::half_scaling())
        };
        assert!(bad.to_wfa().is_err());
        let mut extra = good.transitions.clone();
        extra.insert("2".into(), vec![vec!["1".into()]]);
        bad = WfaFile {
            transitions: extra,
            ..WfaFile::from_wfa(&catalog::half_scaling())
        };
        assert!(bad.to_wfa().is_err());
        assert!(good.to_wfa().is_ok());
    }

    #[test]
    fn matrix_sets_round_trip() {
        let (b0, b1) = catalog::synthesized_blocks();
        let set = MatrixSet::indexed(vec![b0, b1]).unwrap();
        let file = MatrixSetFile::from_set(&set);
        assert_eq!(file.to_set().unwrap(), set);
        let ragged = MatrixSetFile {
            alphabet: vec!["a".into()],
            matrices: [("a".to_string(), vec![vec!["1".to_string()], vec![]])]
                .into_iter()
                .collect(),
        };
        assert!(ragged.to_set().is_err());
    }
}
