//! Symbolic summation engine for nested S-sums.
//!
//! The crate reduces nested sums over S-sums (harmonic sums with symbolic
//! arguments) to canonical form and expands generalized hypergeometric
//! functions as truncated Laurent series in a small parameter `ep`, with
//! coefficients expressed in multiple polylogarithms. Every symbolic
//! result can be cross-checked against an arbitrary-precision numeric
//! oracle.
//!
//! Module map:
//! - [`kernel`]: exact-rational expression representation and canonical form
//! - [`ssum`]: the S-sum/Z-sum algebra (quasi-shuffle, conversions, zeta tables)
//! - [`eps`]: truncated series in `ep` and Gamma-function expansion
//! - [`summer`]: the summation algorithms (types A-D) and the `do_sum` driver
//! - [`hyperg`]: hypergeometric / Appell / triangle series builders
//! - [`oracle`]: exact and high-precision numeric evaluation
//! - [`dsl`]: the text input language, printer and script runner

pub mod kernel;
pub mod ssum;
pub mod eps;
pub mod summer;
pub mod hyperg;
pub mod oracle;
pub mod dsl;

mod error;
pub use error::EngineError;
