//! Exact verification toolkit for crossing-number lower bounds of
//! color-critical graphs.
//!
//! * [`bounds`]: edge-count lower bounds for r-critical graphs without a
//!   topological `K_r`.
//! * [`crossing`]: crossing-number lower bounds from `(n, m)`.
//! * [`verifier`]: the per-`r` case analysis, tail certificates and reports.
//! * [`graph`]: exact small-graph algorithms and family constructions.
//!
//! All verdicts use exact rational arithmetic.

pub mod bounds;
pub mod crossing;
pub mod error;
pub mod exact;
pub mod exec;
pub mod graph;
pub mod verifier;

pub use error::{Error, Result};
pub use exact::Rational;
pub use exec::Execution;
