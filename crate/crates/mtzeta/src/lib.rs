//! Exact-arithmetic toolkit for finite Mordell-Tornheim sums and their
//! congruences modulo prime powers, together with the classical side:
//! counting bounds for (alternating) Mordell-Tornheim zeta values and a
//! numeric verifier for their reduction to multiple zeta values.
//!
//! The crate is organized around brute-force oracles and independent
//! reduction paths that must agree:
//!
//! - [`exact`]: rationals, the ring Z/p^M, binomials, Bernoulli numbers
//! - [`sums`]: oracle evaluation of every finite sum (exact and modular)
//! - [`reductions`]: the identities turning Z-sums into Mordell-Tornheim
//!   sums and chain-restricted harmonic sums, plus closed forms
//! - [`verify`]: executable congruence claims, parameter scans, and
//!   persisted reports
//! - [`classical`]: counting functions, the symbolic reduction to signed
//!   multiple zeta values, and the high-precision series evaluator
//! - [`cli`]: the command-line front end
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and `tests/acceptance.rs` for the full verification suite.

pub mod classical;
pub mod cli;
pub mod error;
pub mod exact;
pub mod reductions;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};

/// Version string recorded in persisted reports.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
