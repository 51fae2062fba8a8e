//! Random instance generators and floating-point oracles shared by the
//! integration tests.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use wfa_core::linalg::{inverse, ratio};
use wfa_core::stability::{decide_stability, MatrixSet, StabilityVerdict};
use wfa_core::wfa::{Alphabet, UltimatelyPeriodicWord, Word};
use wfa_core::{Matrix, Rational, Vector, Wfa};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ num`, `1 ≤ q ≤ den`.
pub fn small_rational(rng: &mut StdRng, num: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, num: i64, den: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng, num, den))
}

pub fn random_vector(rng: &mut StdRng, n: usize, num: i64, den: i64) -> Vector {
    (0..n).map(|_| small_rational(rng, num, den)).collect()
}

/// Product of random unit lower and upper triangular integer matrices:
/// invertible with determinant 1 and small entries.
pub fn random_unimodular(rng: &mut StdRng, n: usize) -> Matrix {
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        core::cmp::Ordering::Equal => ratio(1, 1),
        core::cmp::Ordering::Greater => ratio(rng.gen_range(-1..=1), 1),
        core::cmp::Ordering::Less => ratio(0, 1),
    });
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        core::cmp::Ordering::Equal => ratio(1, 1),
        core::cmp::Ordering::Less => ratio(rng.gen_range(-1..=1), 1),
        core::cmp::Ordering::Greater => ratio(0, 1),
    });
    &lower * &upper
}

/// Random invertible rational matrix (rejection sampled).
pub fn random_invertible(rng: &mut StdRng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n, 3, 2);
        if inverse(&m).is_some() {
            return m;
        }
    }
}

/// Random ap automaton: all letters random except the last, which is
/// corrected along one coordinate so that `Σ_a A_a·F = |Σ|·F`.
pub fn random_ap(rng: &mut StdRng, letters: usize, n: usize) -> Wfa {
    let alphabet = Alphabet::new((0..letters).map(|i| i.to_string())).unwrap();
    loop {
        let f = random_vector(rng, n, 3, 2);
        let Some(pivot) = (0..n).find(|&i| *f.entries()[i].numer() != 0.into()) else {
            continue;
        };
        let mut mats: Vec<Matrix> = (0..letters).map(|_| random_matrix(rng, n, n, 2, 3)).collect();
        let target = f.scale(&ratio(letters as i64, 1));
        let partial = mats.iter().fold(Vector::zeros(n), |acc, m| &acc + &m.mul_vec(&f));
        let fix = &target - &partial;
        let last = mats.last_mut().unwrap();
        let inv = f.entries()[pivot].recip();
        for i in 0..n {
            let v = last.get(i, pivot) + &fix.entries()[i] * &inv;
            last.set(i, pivot, v);
        }
        let initial = random_vector(rng, n, 3, 2);
        let a = Wfa::new(alphabet.clone(), initial, f, mats).unwrap();
        assert!(a.is_ap());
        return a;
    }
}

pub fn random_word(rng: &mut StdRng, letters: usize, max_len: usize, min_len: usize) -> Word {
    let len = rng.gen_range(min_len..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(0..letters)).collect())
}

pub fn random_up_word(rng: &mut StdRng, letters: usize, max_head: usize, max_period: usize) -> UltimatelyPeriodicWord {
    let head = random_word(rng, letters, max_head, 0);
    let period = random_word(rng, letters, max_period, 1);
    UltimatelyPeriodicWord::new(head, period).unwrap()
}

/// A binary stable pair whose sum minus the identity is singular, together
/// with a kernel vector. Upper triangular pairs with first diagonal entries
/// summing to 1 and contractive diagonals, conjugated by a unimodular matrix.
/// Every diagonal entry is at most 5/8 in modulus, so products decay fast.
pub fn random_stable_singular_pair(rng: &mut StdRng, n: usize, max_depth: usize) -> (Matrix, Matrix, Vector) {
    loop {
        let a = ratio(rng.gen_range(3..=5), 8);
        let tri = |rng: &mut StdRng, first: Rational| {
            Matrix::from_fn(n, n, |i, j| match (i, j) {
                (0, 0) => first.clone(),
                _ if i == j => ratio(rng.gen_range(-1..=1), 4),
                _ if i < j => ratio(rng.gen_range(-1..=1), 4),
                _ => ratio(0, 1),
            })
        };
        let one = ratio(1, 1);
        let b0 = tri(rng, a.clone());
        let b1 = tri(rng, &one - &a);
        let q = random_unimodular(rng, n);
        let qi = inverse(&q).unwrap();
        let c0 = &(&qi * &b0) * &q;
        let c1 = &(&qi * &b1) * &q;
        let k = qi.mul_vec(&Vector::unit(n, 0));
        let set = MatrixSet::new(Alphabet::binary(), vec![c0.clone(), c1.clone()]).unwrap();
        if decide_stability(&set, max_depth).unwrap().is_stable() {
            return (c0, c1, k);
        }
    }
}

/// Random matrix set with every letter a strict contraction, so stable at
/// depth 1.
pub fn random_contractive_set(rng: &mut StdRng, m: usize, n: usize) -> MatrixSet {
    loop {
        let mats: Vec<Matrix> = (0..m).map(|_| random_matrix(rng, n, n, 1, 3)).collect();
        if mats.iter().all(|x| x.norm_bound_sq() < ratio(1, 1)) {
            return MatrixSet::indexed(mats).unwrap();
        }
    }
}

pub fn verdict_kind(v: &StabilityVerdict) -> &'static str {
    match v {
        StabilityVerdict::Stable { .. } => "stable",
        StabilityVerdict::NotStable { .. } => "not-stable",
        StabilityVerdict::Unknown { .. } => "unknown",
    }
}

// ---- floating-point oracles ----

pub fn f64_of(r: &Rational) -> f64 {
    r.to_f64().expect("finite")
}

pub fn to_dmatrix(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| f64_of(m.get(i, j)))
}

pub fn to_f64_vec(v: &Vector) -> Vec<f64> {
    v.iter().map(f64_of).collect()
}

pub fn spectral_radius(m: &Matrix) -> f64 {
    if m.rows() == 0 {
        return 0.0;
    }
    to_dmatrix(m)
        .complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

/// `A_w` evaluated in floating point.
pub fn numeric_product(set: &MatrixSet, w: &Word) -> DMatrix<f64> {
    let n = set.dim();
    w.letters()
        .iter()
        .fold(DMatrix::identity(n, n), |acc, &a| acc * to_dmatrix(set.matrix(a)))
}

/// `F(pref_k(w))` in floating point for `k = 0..len`.
pub fn numeric_prefix_values(a: &Wfa, w: &UltimatelyPeriodicWord, len: usize) -> Vec<f64> {
    let mut row: Vec<f64> = to_f64_vec(a.initial());
    let f = to_f64_vec(a.final_weights());
    let mats: Vec<DMatrix<f64>> = a.matrices().iter().map(to_dmatrix).collect();
    let prefix = w.prefix(len);
    let mut out = Vec::with_capacity(len + 1);
    let dot = |r: &[f64]| r.iter().zip(&f).map(|(x, y)| x * y).sum::<f64>();
    out.push(dot(&row));
    for &l in prefix.letters() {
        let m = &mats[l];
        row = (0..m.ncols())
            .map(|j| (0..m.nrows()).map(|i| row[i] * m[(i, j)]).sum())
            .collect();
        out.push(dot(&row));
    }
    out
}

/// Ap automaton `[[B_a | b_a], [0 | 1]]` with random blocks and columns and
/// `F = (F', 1)`, `F' = −(Σ B_a − |Σ|E)⁻¹ Σ b_a`. Blocks are drawn with entries
/// `p/q`, `|p| ≤ num`, `q ≤ den`.
pub fn random_canonical_ap(rng: &mut StdRng, letters: usize, n: usize, num: i64, den: i64) -> Wfa {
    let alphabet = Alphabet::new((0..letters).map(|i| i.to_string())).unwrap();
    loop {
        let blocks: Vec<Matrix> = (0..letters).map(|_| random_matrix(rng, n, n, num, den)).collect();
        let cols: Vec<Vector> = (0..letters).map(|_| random_vector(rng, n, 3, 1)).collect();
        let sum = blocks.iter().fold(Matrix::zeros(n, n), |acc, b| &acc + b);
        let shifted = &sum - &Matrix::identity(n).scale(&ratio(letters as i64, 1));
        let Some(inv) = inverse(&shifted) else { continue };
        let col_sum = cols.iter().fold(Vector::zeros(n), |acc, c| &acc + c);
        let head = -&inv.mul_vec(&col_sum);
        let mats: Vec<Matrix> = blocks
            .iter()
            .zip(&cols)
            .map(|(b, c)| {
                Matrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
                    (true, true) => b.get(i, j).clone(),
                    (true, false) => c.entries()[i].clone(),
                    (false, true) => ratio(0, 1),
                    (false, false) => ratio(1, 1),
                })
            })
            .collect();
        let f = head.concat(&Vector::new(vec![ratio(1, 1)]));
        let initial = random_vector(rng, n + 1, 2, 1);
        let a = Wfa::new(alphabet.clone(), initial, f, mats).unwrap();
        assert!(a.is_ap());
        return a;
    }
}
