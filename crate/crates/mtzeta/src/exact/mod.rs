//! Foundational exact arithmetic.
//!
//! - [`ExactRational`]: arbitrary-precision rationals, always reduced
//! - [`PrimePowerResidue`]: the ring Z/p^M with unit inversion
//! - [`BinomialTable`], [`binomial`], [`multinomial`]: exact coefficients
//! - [`bernoulli`], [`bernoulli_mod`]: Bernoulli numbers, exact and reduced
//!
//! Everything here is immutable after construction and safe to share across
//! threads; the Bernoulli memo table is a single-writer cache behind a mutex.

mod bernoulli;
mod binomial;
mod rational;
mod residue;

pub use bernoulli::{bernoulli, bernoulli_mod};
pub use binomial::{binomial, multinomial, BinomialTable};
pub use rational::{rational_reduce_mod, ExactRational};
pub use residue::PrimePowerResidue;

/// Deterministic Miller-Rabin primality test for `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These bases decide primality for every n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
