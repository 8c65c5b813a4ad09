//! Numerical invariants of row contractions on non-commutative Fock space.
//!
//! An n-tuple A = (A₁, …, Aₙ) of operators with Σ AᵢAᵢ* ≤ I carries two
//! numerical invariants defined through the completely positive map
//! Φ(X) = Σ AᵢXAᵢ*:
//!
//! * curvature `K(A) = (n−1)·lim tr(I − Φᵏ(I))/nᵏ`,
//! * Euler characteristic `χ(A)`, the same limit with rank in place of trace,
//!
//! together with the pure rank `rk(I − Φ(I))` and, for subspaces of Fock
//! space invariant under the left creation operators, the companion quantity
//! `K̃(M) = (n−1)·lim tr(P_M Q_k P_M)/nᵏ`. The chain
//! `0 ≤ K(A) ≤ χ(A) ≤ pure rank` always holds, and `K(A) = pure rank`
//! detects exactly the tuples unitarily equivalent to copies of the left
//! regular representation.
//!
//! The crate computes the finite-level quantities behind these limits —
//! exactly over complex rationals or in floating point — for several
//! representation families:
//!
//! * the left regular representation and its restrictions ([`operators`]),
//! * dense matrix tuples with Φ iterated explicitly ([`cpmap`]),
//! * decaying atomic (ring) representations,
//! * compressions of the left regular representation to co-invariant
//!   subspaces described by wandering generators or monomial word sets.
//!
//! Every level-k value comes with a one-sided tail bound (the limit exceeds
//! no level value by more than `pure_rank/nᵏ`), so estimates are reported as
//! brackets rather than bare truncations ([`invariants`]). A catalog of
//! worked examples with closed-form expected values ([`catalog`]) doubles as
//! the verification suite, and [`report`] serializes runs to JSON/CSV.
//!
//! Start with the `examples/` directory: each example exercises one
//! capability end to end. The `ncurv` binary exposes the same functionality
//! as `compute`, `verify`, `sweep`, and `catalog` subcommands.

pub mod catalog;
pub mod cpmap;
pub mod densify;
pub mod error;
pub mod fock;
pub mod invariants;
pub mod matrix;
pub mod operators;
pub mod random;
pub mod report;
pub mod scalar;
pub mod word;

pub use error::{Error, Result};
pub use matrix::{Backend, Mat};
pub use scalar::{Exact, Scalar, F64};
