//! Bernoulli numbers, exact and reduced modulo prime powers.
//!
//! Convention: B_1 = -1/2. Only even indices reach the congruence statements
//! this crate verifies, so the choice is inert, but it is pinned here.

use std::sync::Mutex;

use num::bigint::BigInt;
use num::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, ExactRational, PrimePowerResidue};

static MEMO: Mutex<Vec<ExactRational>> = Mutex::new(Vec::new());

/// The n-th Bernoulli number as an exact rational, memoized.
///
/// Computed by the defining recurrence B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k.
/// The memo behaves as a single-writer cache: results are identical to
/// sequential evaluation no matter how many threads ask at once.
pub fn bernoulli(n: u64) -> ExactRational {
    let n = n as usize;
    let mut memo = MEMO.lock().unwrap();
    if memo.is_empty() {
        memo.push(ExactRational::one());
    }
    while memo.len() <= n {
        let m = memo.len();
        if m > 1 && m % 2 == 1 {
            memo.push(ExactRational::zero());
            continue;
        }
        let mut sum = ExactRational::zero();
        for (k, b_k) in memo.iter().enumerate() {
            if b_k.is_zero() {
                continue;
            }
            let coeff = ExactRational::from_big(
                BigInt::from(binomial(m as u64 + 1, k as i64)),
                BigInt::from(1),
            );
            sum += &(&coeff * b_k);
        }
        let factor = ExactRational::new(-1, m as i64 + 1);
        memo.push(&factor * &sum);
    }
    memo[n].clone()
}

/// `bernoulli(n)` reduced modulo p^M.
///
/// Fails with [`Error::IrregularModulus`] when p divides the denominator of
/// B_n, which by von Staudt-Clausen happens exactly when (p-1) | n for even
/// n > 0.
pub fn bernoulli_mod(n: u64, p: u64, m: u32) -> Result<PrimePowerResidue> {
    if !crate::exact::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let b = bernoulli(n);
    if (b.denom() % BigInt::from(p)).is_zero() {
        return Err(Error::IrregularModulus { n, p });
    }
    b.reduce_mod(p, m)
}
