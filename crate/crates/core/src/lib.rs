//! Exact-arithmetic weighted finite automata over the rationals.
//!
//! The crate covers word and ω-function evaluation, minimization, the
//! average-preserving (ap) property, canonical forms of uniformly convergent
//! automata, a three-valued matrix product stability engine, the continuity
//! decision pipelines built on top of it, synthesis of continuous ap automata
//! and the gadget constructions linking automata questions to stability.
//!
//! Everything is `no_std` with `alloc`; all values are exact [`Rational`]s.

#![no_std]

extern crate alloc;

pub mod canonical;
pub mod continuity;
mod error;
pub mod linalg;
pub mod reductions;
pub mod stability;
pub mod synthesis;
pub mod wfa;

pub use error::Error;
pub use linalg::{Matrix, Polynomial, Rational, Vector};
pub use wfa::{Alphabet, OmegaValue, UltimatelyPeriodicWord, Wfa, Word};

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
