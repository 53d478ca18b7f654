//! Brute-force oracle evaluation of the finite sums.
//!
//! Every sum defined in the problem domain is computed here by direct
//! enumeration: multiple harmonic sums (plain and p-restricted), the
//! chain-restricted variant, Z-sums over compositions of p^r, and finite
//! Mordell-Tornheim sums (plain and p-restricted). Exact rational versions
//! serve as small-scale oracles; the modular versions run table-driven
//! loops and are the workhorses.
//!
//! All sums are pure functions. The modular loops parallelize over the
//! outermost index in fixed-size chunks combined in order, so the result is
//! identical for any worker count.

mod exact_sums;
mod index;
mod modular;
mod tables;

pub use exact_sums::{
    chain_mhs_exact, mhs, mhs_p_restricted, mt_restricted_exact, mt_sum_exact, z_sum_exact,
    ExactCaps, DEFAULT_EXACT_CAPS,
};
pub use index::{ExponentIndex, MtIndex};
pub use modular::{chain_mhs, mt_restricted, mt_sum, z_sum};
pub(crate) use modular::{chain_mhs_shifted, unshift};
pub use tables::{build_inverse_tables, InversePowerTable};
