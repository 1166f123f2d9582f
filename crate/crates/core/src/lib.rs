//! Exact character values of the symmetric groups and the classes on which
//! every irreducible character takes a value in `{0, 1, -1}`.
//!
//! Partitions label both characters `[λ]` and classes `μ`. Character values
//! are computed by the Murnaghan–Nakayama rule over beta-sets with
//! arbitrary-precision arithmetic; everything else (sign, unique-path and
//! strongly decreasing classes, the signed generalized characters `Θ_μ`,
//! odd-degree characters, counting identities) is built on top of that.
//!
//! With the default `parallel` feature, sweeps over partitions run on the
//! current rayon thread pool. Results never depend on the number of workers.

pub mod beta;
pub mod classify;
pub mod counting;
pub mod error;
pub mod exec;
pub mod mn;
pub mod odd2;
pub mod partition;
pub mod theta;

pub use beta::{add_hooks, remove_hooks, BetaSet, HookAddition, HookRemoval};
pub use classify::{
    classify, conjecture_clause, conjecture_predicate, count_paths, enumerate_class,
    is_exceptional, is_sd, is_sign, is_up, verify_conjecture, ClassKind, ClassificationReport,
    Discrepancy,
};
pub use error::{Error, Result};
pub use mn::{
    centralizer_order, char_value, degree, degree_is_odd, orthogonality_check, CharValue,
    Evaluator, MemoKey,
};
pub use partition::{enumerate_partitions, Partition};
pub use theta::{evaluate_theta, theta_decompose, ThetaDecomposition};
