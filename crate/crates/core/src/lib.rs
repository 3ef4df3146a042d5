//! Decides, from the prime factorization of `n` alone, whether every group of
//! order `n` is cyclic, abelian, nilpotent, supersolvable, or has an ordered
//! Sylow tower, and builds an explicit group of order `n` for every negative
//! answer.
//!
//! The crate is split along the same lines as the work:
//!
//! - [`arith`]: factorization, Euler's totient, the `psi` function, orders mod m.
//! - [`classify`]: the five arithmetic predicates and violation diagnosis.
//! - [`kernel`]: finite groups as validated Cayley tables.
//! - [`analysis`]: Sylow, Hall, transfer, and group-level property tests.
//! - [`constructors`]: the counterexample families as concrete tables.
//! - [`crosscheck`]: binds predicates to group-level ground truth.
//!
//! Data-parallel loops (range classification, associativity checks, the
//! verification suite) run on rayon when the `parallel` feature is enabled,
//! and sequentially otherwise. [`Execution`] selects the path explicitly.

pub mod analysis;
pub mod arith;
pub mod classify;
pub mod constructors;
pub mod crosscheck;
mod error;
pub mod kernel;
pub mod par;

pub use error::{Error, Result};
pub use par::Execution;

pub use arith::Factorization;
pub use classify::{ClassificationReport, Property, Violation, ViolationDiagnosis, ViolationKind};
pub use constructors::{WitnessBase, WitnessRecipe};
pub use crosscheck::{SuiteConfig, SuiteReport, VerificationRecord, VerificationStatus};
pub use kernel::{FiniteGroup, Quotient, Subgroup};
