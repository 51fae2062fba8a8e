use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::Wfa;
use crate::linalg::{Matrix, Span, Vector};

/// Breadth-first closure of `start` under `step(letter, v)`.
fn closure(dim: usize, letters: usize, start: &Vector, step: impl Fn(usize, &Vector) -> Vector) -> Span {
    let mut span = Span::new(dim);
    let mut queue = VecDeque::new();
    if span.insert(start) {
        queue.push_back(start.clone());
    }
    while let Some(v) = queue.pop_front() {
        for a in 0..letters {
            let next = step(a, &v);
            if span.insert(&next) {
                queue.push_back(next);
            }
        }
    }
    span
}

fn forward_span(a: &Wfa) -> Span {
    closure(a.dim(), a.alphabet().len(), a.initial(), |l, v| v.mul_mat(a.matrix(l)))
}

fn backward_span(a: &Wfa) -> Span {
    closure(a.dim(), a.alphabet().len(), a.final_weights(), |l, v| {
        a.matrix(l).mul_vec(v)
    })
}

/// `dim⟨I·A_u⟩ = n`.
pub fn is_left_minimal(a: &Wfa) -> bool {
    forward_span(a).dim() == a.dim()
}

/// `dim⟨A_u·F⟩ = n`.
pub fn is_right_minimal(a: &Wfa) -> bool {
    backward_span(a).dim() == a.dim()
}

pub fn is_minimal(a: &Wfa) -> bool {
    is_left_minimal(a) && is_right_minimal(a)
}

// Restricts to ⟨A_u·F⟩: with R the basis columns, A_a·R = R·A'_a.
fn restrict_backward(a: &Wfa) -> Wfa {
    let span = backward_span(a).to_echelon();
    let basis = span.basis();
    let r = basis.len();
    let coords = |v: &Vector| span.coordinates(v).expect("closure is invariant");
    let transitions: Vec<Matrix> = a
        .matrices()
        .iter()
        .map(|m| {
            let cols: Vec<Vector> = basis.iter().map(|b| coords(&m.mul_vec(b))).collect();
            Matrix::from_columns(r, &cols)
        })
        .collect();
    let initial: Vector = basis.iter().map(|b| a.initial().dot(b)).collect();
    let final_weights = coords(a.final_weights());
    Wfa::new(a.alphabet().clone(), initial, final_weights, transitions).expect("consistent shapes")
}

// Quotients by ⟨I·A_u⟩: with L the basis rows, L·A_a = A''_a·L.
fn restrict_forward(a: &Wfa) -> Wfa {
    let span = forward_span(a).to_echelon();
    let basis = span.basis();
    let s = basis.len();
    let coords = |v: &Vector| span.coordinates(v).expect("closure is invariant");
    let transitions: Vec<Matrix> = a
        .matrices()
        .iter()
        .map(|m| {
            let rows: Vec<Vector> = basis.iter().map(|l| coords(&l.mul_mat(m))).collect();
            Matrix::from_row_vectors(s, &rows)
        })
        .collect();
    let initial = coords(a.initial());
    let final_weights: Vector = basis.iter().map(|l| l.dot(a.final_weights())).collect();
    Wfa::new(a.alphabet().clone(), initial, final_weights, transitions).expect("consistent shapes")
}

/// Minimal automaton with the same word function.
///
/// First restricts to the backward closure `⟨A_u·F⟩`, then to the forward
/// closure `⟨I·A_u⟩` of the result. States are the reduced row echelon basis
/// of each closure, so the output depends only on the two subspaces. This
/// basis also keeps entries small, which shortens contraction certificates
/// downstream. An automaton computing the zero function becomes the 0-state
/// automaton.
pub fn minimize(a: &Wfa) -> Wfa {
    restrict_forward(&restrict_backward(a))
}
