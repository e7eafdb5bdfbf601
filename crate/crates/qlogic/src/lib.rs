//! Exact-arithmetic subspace lattices, quantum-logic compatibility and
//! Grassmann-graph combinatorics over Q, Q(i) and GF(p).
//!
//! Everything in this crate computes with exact field elements: rationals,
//! Gaussian rationals and prime-field residues. There is no floating point
//! anywhere, so every equality test is a real equality and every verification
//! sweep either passes exactly or produces a concrete counterexample witness.
//!
//! The main layers, bottom up:
//!
//! * [`scalar`] — the three coefficient fields and their textual syntax.
//! * [`matrix`] — dense exact matrices: RREF, rank, kernel, solve, adjoints.
//! * [`subspace`] — canonical subspaces of `F^n`, lattice operations,
//!   annihilators and the GF(p) Grassmannian enumeration.
//! * [`hermitian`] — the Hermitian structure on Q(i)^n: orthocomplements,
//!   projections, compatibility, `{X,Y}^cc` and orthogonal frames.
//! * [`graph`] — Grassmann graphs over GF(p): distances, opposites, maximal
//!   cliques (stars and tops) and annihilator duality.
//! * [`apartment`] — apartments and orthogonal apartments with inexactness
//!   certificates and (ortho)complementary subset counts.
//! * [`transform`] — semilinear maps, unitarity certificates and relation
//!   preservation checkers.
//! * [`suites`] — the seeded verification suites behind the `qlogic` binary,
//!   producing machine-readable [`report::Report`]s.
//!
//! The `examples/` directory contains one runnable walk-through per layer;
//! `cargo run --example grassmann_graph` is a good place to start.

pub mod apartment;
pub mod cache;
pub mod error;
pub mod graph;
pub mod hermitian;
pub mod matrix;
pub mod report;
pub mod rng;
pub mod sample;
pub mod scalar;
pub mod subspace;
pub mod suites;
pub mod transform;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{Field, FieldTag, GaussianRational, GaussianRationals, PrimeField, Rational, Rationals, Scalar};
pub use subspace::Subspace;
