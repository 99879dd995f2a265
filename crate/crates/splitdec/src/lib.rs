//! Strict n-split decompositions of finite nonabelian groups.
//!
//! An *n-split decomposition* of a nonabelian group `G` is a partition
//! `G = A ⊎ B₁ ⊎ … ⊎ Bₙ` where `A` is an abelian subgroup and each `Bᵢ` is a
//! nonempty set in which no two distinct elements commute. It is *strict*
//! when every `|Bᵢ| ≥ 2`. Equivalently, the `Bᵢ` are independent sets of the
//! commuting graph on `G ∖ A`, so the minimal `n` for a fixed `A` is an
//! exact graph-coloring problem with a class-size constraint.
//!
//! The crate provides:
//!
//! - [`group`]: concrete permutation groups with centralizer, conjugacy,
//!   and subgroup enumeration queries;
//! - [`catalog`]: constructors for the group families of interest
//!   (dihedral/quaternion families, extraspecial `p³`, `PSL₂`/`PGL₂` over
//!   finite fields, Frobenius semidirect products, a shipped `Sz(8)`) plus
//!   group-file I/O;
//! - [`graph`]: the commuting graph and its components;
//! - [`decomp`]: the constructive decompositions (coset partitions,
//!   maximal-abelian, Frobenius cosets, TI covers, promotion) and a
//!   validator;
//! - [`minimize`]: exact minimal `n` for a fixed `A` and over all abelian
//!   `A`, with machine-checkable lower-bound certificates and an audit;
//! - [`classify`]: the `n = 1, 2, 3` classification rules and a sweep that
//!   compares them against the exact solver.
//!
//! Run `cargo run -- --help` for the command-line front end, or see the
//! `examples/` directory for one runnable example per capability.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod decomp;
pub mod field;
pub mod gens;
pub mod graph;
pub mod group;
pub mod minimize;
pub mod perm;

pub use group::{Group, SubgroupRef};
pub use perm::Permutation;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid input data (bad permutation, reducible modulus, ...).
    #[error("{0}")]
    Validation(String),
    /// An operation's precondition does not hold.
    #[error("{0}")]
    Precondition(String),
    /// A configured resource cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Text parse failure with a 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// The search budget ran out before the result was proven.
    #[error("budget exhausted: {0}")]
    Budget(String),
    /// No decomposition of the requested kind exists.
    #[error("{0}")]
    Infeasible(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
