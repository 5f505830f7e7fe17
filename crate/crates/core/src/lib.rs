//! Exact linear algebra for distance matrices of helm graphs.
//!
//! The helm graph `H_n` is the wheel on `n` vertices with a pendant vertex
//! attached to every rim vertex. This crate builds `D(H_n)`, constructs the
//! closed-form inverse (even `n`) and Moore-Penrose inverse (odd `n`) of the
//! shape `-1/2 L + 4/(3(n-1)) w w'`, and checks every identity, rank,
//! inertia and spectral property of those objects against independent exact
//! oracles: breadth-first search, rational elimination, full-rank
//! factorization and congruence reduction.

pub mod characterization;
pub mod circulant;
pub mod closed_form;
pub mod error;
pub mod exact;
pub mod graphs;
pub mod report;

pub use error::{HelmError, Result};
pub use exact::{InertiaTriple, RatMatrix, Rational};
