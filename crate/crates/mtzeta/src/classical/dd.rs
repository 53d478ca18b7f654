//! Double-double arithmetic: unevaluated sums of two f64s giving roughly
//! 31 significant decimal digits. The error-free transforms (two-sum,
//! Dekker split, two-product) are the classical ones; no FMA is assumed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num::bigint::BigInt;
use num::ToPrimitive;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = 134_217_729.0 * a; // 2^27 + 1
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (a_hi, a_lo) = split(a);
    let (b_hi, b_lo) = split(b);
    let err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo;
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn from_f64(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }

    pub fn from_u64(v: u64) -> Self {
        let hi = v as f64;
        let lo = (v as i128 - hi as i128) as f64;
        Dd::new(hi, lo)
    }

    pub fn from_i64(v: i64) -> Self {
        let hi = v as f64;
        let lo = (v as i128 - hi as i128) as f64;
        Dd::new(hi, lo)
    }

    /// Exact-as-possible image of a big integer; requires |v| < 2^1000.
    pub fn from_bigint(v: &BigInt) -> Self {
        let hi = v.to_f64().expect("finite");
        assert!(hi.is_finite(), "integer too large for double-double");
        let hi_exact: BigInt = num::FromPrimitive::from_f64(hi).expect("integral f64");
        let rest = v - hi_exact;
        Dd::new(hi, rest.to_f64().expect("finite"))
    }

    pub fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        Dd::from_bigint(numer) / Dd::from_bigint(denom)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Self {
        Dd::ONE / self
    }

    pub fn powi(self, e: u32) -> Self {
        let mut acc = Dd::ONE;
        let mut base = self;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs.mul_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs.mul_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e + q3)
    }
}

impl Dd {
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * rhs);
        Dd { hi, lo }
    }

    pub fn div_u64(self, rhs: u64) -> Dd {
        self / Dd::from_u64(rhs)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Reports only need f64 resolution.
        write!(f, "{:.17e}", self.to_f64())
    }
}

/// atan(1/q) by the Gregory series, for exact integer q >= 2.
fn atan_inv(q: u64) -> Dd {
    let x = Dd::from_u64(q).recip();
    let x2 = x * x;
    let mut term = x;
    let mut acc = Dd::ZERO;
    let mut k = 0u32;
    loop {
        let contrib = term.div_u64((2 * k + 1) as u64);
        acc = if k % 2 == 0 { acc + contrib } else { acc - contrib };
        term = term * x2;
        k += 1;
        if contrib.abs().to_f64() < 1e-35 {
            break;
        }
    }
    acc
}

/// pi by Machin's formula, memoized.
pub fn pi() -> Dd {
    static PI: OnceLock<Dd> = OnceLock::new();
    *PI.get_or_init(|| atan_inv(5).mul_f64(16.0) - atan_inv(239).mul_f64(4.0))
}

/// The value of the cubic zeta constant by the accelerated alternating
/// central-binomial series (5/2) sum (-1)^(n-1) / (n^3 C(2n,n)), memoized.
pub fn zeta3() -> Dd {
    static Z3: OnceLock<Dd> = OnceLock::new();
    *Z3.get_or_init(|| {
        let mut acc = Dd::ZERO;
        for n in 1u64..=60 {
            let denom = BigInt::from(n).pow(3) * BigInt::from(crate::exact::binomial(2 * n, n as i64));
            let term = Dd::from_bigint(&denom).recip();
            acc = if n % 2 == 1 { acc + term } else { acc - term };
        }
        acc.mul_f64(2.5)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;
    use num::Signed;

    fn to_rational(d: Dd) -> BigRational {
        let hi = BigRational::from_float(d.hi).unwrap();
        let lo = BigRational::from_float(d.lo).unwrap();
        hi + lo
    }

    #[test]
    fn matches_exact_rational_arithmetic() {
        let mut state = 12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 1000) as i64 + 1
        };
        for _ in 0..500 {
            let (a, b, c, d) = (next(), next(), next(), next());
            let x = Dd::from_i64(a) / Dd::from_i64(b);
            let y = Dd::from_i64(c) / Dd::from_i64(d);
            let xr = BigRational::new(BigInt::from(a), BigInt::from(b));
            let yr = BigRational::new(BigInt::from(c), BigInt::from(d));
            for (got, want) in [
                (x + y, &xr + &yr),
                (x - y, &xr - &yr),
                (x * y, &xr * &yr),
                (x / y, &xr / &yr),
            ] {
                let err = (to_rational(got) - &want).abs();
                let scale = want.abs() + BigRational::from_integer(BigInt::from(1));
                let bound = BigRational::new(BigInt::from(1), BigInt::from(10).pow(29));
                assert!(err < scale * bound, "dd arithmetic drifted");
            }
        }
    }

    #[test]
    fn big_integer_conversion_is_faithful() {
        let n = BigInt::from(3u64).pow(64); // ~3.4e30
        let d = Dd::from_bigint(&n);
        let err = (to_rational(d) - BigRational::from_integer(n.clone())).abs();
        let bound = BigRational::from_integer(n) * BigRational::new(BigInt::from(1), BigInt::from(10).pow(30));
        assert!(err < bound);
    }

    #[test]
    fn pi_cross_checked_by_two_formulas() {
        let machin = pi();
        let other = (atan_inv(2) + atan_inv(3)).mul_f64(4.0);
        assert!((machin - other).abs().to_f64() < 1e-30);
        assert!((machin.to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn zeta3_cross_checked_by_direct_tail_corrected_sum() {
        // Independent route: direct sum to K with the Euler-Maclaurin tail
        // K^-2/2 - K^-3/2 + K^-4/4 - K^-6/12, remainder below 1e-26 at K = 10^4.
        let k_max = 10_000u64;
        let mut acc = Dd::ZERO;
        for k in 1..=k_max {
            acc = acc + Dd::from_u64(k * k * k).recip();
        }
        let k = Dd::from_u64(k_max);
        let tail = k.powi(2).recip().mul_f64(0.5) - k.powi(3).recip().mul_f64(0.5)
            + k.powi(4).recip().mul_f64(0.25)
            - k.powi(6).recip() / Dd::from_u64(12);
        let direct = acc + tail;
        assert!((direct - zeta3()).abs().to_f64() < 1e-24);
        assert!((zeta3().to_f64() - 1.2020569031595942).abs() < 1e-15);
    }
}
