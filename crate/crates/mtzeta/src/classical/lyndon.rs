//! Lyndon words over the odd alphabet and the Deligne generator count.
//!
//! Generators of the weight-w alternating zeta space: products of values
//! indexed by Lyndon words on the ordered alphabet of odd positive integers
//! (1 < 3 < 5 < ...), combined with an even power of 2 pi i, with total
//! weight w. Lyndon counts come from the necklace formula applied to
//! compositions into odd parts, refined by length.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, Zero};

use crate::exact::binomial;

/// Number of compositions of v into exactly m odd parts.
fn compositions_odd(v: u32, m: u32) -> BigUint {
    if m == 0 {
        return if v == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if v < m || (v - m) % 2 != 0 {
        return BigUint::zero();
    }
    // Parts 2t_i + 1 with sum of t_i = (v - m) / 2.
    let budget = (v - m) / 2;
    binomial((budget + m - 1) as u64, (m as i64) - 1)
}

fn moebius(n: u32) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of Lyndon words over the odd alphabet with letter sum v.
///
/// Aperiodic words of sum v and length m number
/// sum_{d | gcd(v, m)} mu(d) c(v/d, m/d); each rotation class of size m is
/// one Lyndon word.
pub fn lyndon_count_odd_alphabet(v: u32) -> BigUint {
    assert!(v >= 1);
    let mut total = BigInt::zero();
    for m in 1..=v {
        let mut aperiodic = BigInt::zero();
        let g = v.gcd(&m);
        for d in 1..=g {
            if g % d != 0 {
                continue;
            }
            let mu = moebius(d);
            if mu == 0 {
                continue;
            }
            let c = BigInt::from(compositions_odd(v / d, m / d));
            aperiodic += BigInt::from(mu) * c;
        }
        debug_assert!(
            (&aperiodic % BigInt::from(m)).is_zero(),
            "aperiodic count must split into rotation classes"
        );
        total += aperiodic / BigInt::from(m);
    }
    assert!(!total.is_negative());
    total.to_biguint().expect("non-negative")
}

/// Counts the weight-w generator set: multisets of Lyndon words over the
/// odd alphabet, weighted by letter sum, with an extra even exponent 2n
/// absorbing the rest of the weight.
pub fn count_deligne_generators(w: u32) -> BigUint {
    assert!(w >= 1);
    let max = w as usize;
    // Multisets by total letter sum: product over v of 1/(1-x^v)^{l(v)}.
    let mut msets = vec![BigUint::zero(); max + 1];
    msets[0] = BigUint::one();
    for v in 1..=max {
        let l = lyndon_count_odd_alphabet(v as u32);
        if l.is_zero() {
            continue;
        }
        let mut next = vec![BigUint::zero(); max + 1];
        for x in 0..=max {
            if msets[x].is_zero() {
                continue;
            }
            let mut k = 0usize;
            while x + k * v <= max {
                // Multisets of k words of sum v: C(k + l - 1, k).
                let ways = multiset_choose(&l, k);
                next[x + k * v] += &msets[x] * ways;
                k += 1;
            }
        }
        msets = next;
    }
    let mut total = BigUint::zero();
    let mut rest = w as i64;
    while rest >= 0 {
        total += &msets[rest as usize];
        rest -= 2;
    }
    total
}

/// C(l + k - 1, k) with an arbitrary-precision l.
fn multiset_choose(l: &BigUint, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (l + BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}
