//! Exact permanents of rectangular matrices over pluggable algebras.
//!
//! The permanent of an `m x n` matrix (`m <= n`) sums, over all injections
//! of rows into columns, the product of the selected entries in row order.
//! Everything here is exact and generic over an [`algebra::Algebra`], so the
//! same code computes ordinary integer permanents, modular permanents,
//! minimum assignment costs in the tropical semiring, and permanents of
//! matrices whose entries are themselves matrices and refuse to commute.
//!
//! The [`perm`] module houses two brute-force oracles and four fast
//! families: dynamic programming over column subsets (any semiring),
//! dynamic programming over row subsets (transposed products), Ryser's
//! inclusion-exclusion (rings), a row-splitting variant built on the
//! [`disjoint`] summation engine that wins on wide matrices, and the
//! transposed inclusion-exclusion with an elementary-symmetric inner loop
//! (commutative rings, or transposed permanents in any ring).
//!
//! Each evaluator reports measured addition/multiplication counts when an
//! operation-counting algebra is attached, next to a predicted bound for
//! its shape, so the asymptotic claims are checkable on the desk.
//!
//! Start with the runnable examples (`cargo run --example compute_permanent`
//! and friends); the `perm` binary wraps the same entry points for shell
//! use.

pub mod algebra;
pub mod cli;
pub mod disjoint;
pub mod matrix;
pub mod perm;
pub mod rng;
pub mod subsets;

pub use algebra::{law_check, make_counting, Algebra, OpCounter};
pub use matrix::{parse_matrix, Matrix, SplitPlan};
pub use perm::{
    esym_accumulate, per_bruteforce, per_dp_columns, per_dp_rows, per_ryser, per_ryser_split,
    per_ryser_transposed, per_transposed_bruteforce, predict_ops, Algorithm, AlgoReport,
    PermError, Variant,
};
