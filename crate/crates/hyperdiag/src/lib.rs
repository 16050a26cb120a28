//! Exact computation of diagonals of products of powers of linear forms,
//! their generalized hypergeometric closed forms, and algebraicity analysis.
//!
//! Everything here is exact rational arithmetic; there is no floating point
//! anywhere in the crate. The main pieces:
//!
//! - [`arith`]: big rationals plus the combinatorial primitives (rising
//!   factorials, generalized binomials, multinomials).
//! - [`hyperseries`]: pFq parameter lists, truncated univariate series,
//!   Hadamard products, recurrence checks.
//! - [`linform`]: products `(1 ± x1 ± ... ± xj)^{b_j}` and their coefficients
//!   in closed form, including the doubled-variable variant.
//! - [`oracle`]: an independent brute-force multivariate expander used to
//!   cross-check every closed form.
//! - [`builders`]: the parameter lists whose pFq series equal the diagonals
//!   of ratio, nested, and doubled linear-form products.
//! - [`classify`]: weight screen, interlacing criterion, and Hadamard-grade-2
//!   decomposition search.
//! - [`verifier`]: multi-route identity verification and the scripted
//!   `reproduce` scenarios.
//! - [`cli`]: the `hyperdiag` command-line front end.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod arith;
pub mod builders;
pub mod classify;
pub mod cli;
pub mod hyperseries;
pub mod linform;
pub mod oracle;
pub mod verifier;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
