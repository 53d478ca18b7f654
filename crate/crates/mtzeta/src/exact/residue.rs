//! The residue ring Z/p^M.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::Integer;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of Z/p^M for a prime p and precision exponent M >= 1.
///
/// Values are stored as arbitrary-precision integers in `[0, p^M)`. Two
/// residues combine only when their `(p, M)` match; mixing rings is an error,
/// not a silent coercion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePowerResidue {
    p: u64,
    m: u32,
    value: BigUint,
}

impl PrimePowerResidue {
    /// Canonical representative of `value` in Z/p^M.
    pub fn new(p: u64, m: u32, value: BigUint) -> Self {
        assert!(m >= 1, "precision exponent must be positive");
        let modulus = BigUint::from(p).pow(m);
        PrimePowerResidue {
            p,
            m,
            value: value % modulus,
        }
    }

    pub fn from_u64(p: u64, m: u32, value: u64) -> Self {
        Self::new(p, m, BigUint::from(value))
    }

    /// Reduces a signed integer, mapping negatives into `[0, p^M)`.
    pub fn from_bigint(p: u64, m: u32, value: &BigInt) -> Self {
        assert!(m >= 1, "precision exponent must be positive");
        let modulus = BigInt::from(p).pow(m);
        let mut v = value % &modulus;
        if v.is_negative() {
            v += &modulus;
        }
        PrimePowerResidue {
            p,
            m,
            value: v.to_biguint().expect("non-negative after normalization"),
        }
    }

    pub fn zero(p: u64, m: u32) -> Self {
        Self::from_u64(p, m, 0)
    }

    pub fn one(p: u64, m: u32) -> Self {
        Self::from_u64(p, m, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.m)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// The value as `u64` when it fits, which it does for every modulus this
    /// crate exercises in anger.
    pub fn value_u64(&self) -> Option<u64> {
        u64::try_from(&self.value).ok()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.m != other.m {
            return Err(Error::PrecisionMismatch {
                p_lhs: self.p,
                m_lhs: self.m,
                p_rhs: other.p,
                m_rhs: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Self::new(self.p, self.m, &self.value + &other.value))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let modulus = self.modulus();
        let v = (&modulus + &self.value - &other.value) % &modulus;
        Ok(PrimePowerResidue {
            p: self.p,
            m: self.m,
            value: v,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Self::new(self.p, self.m, &self.value * &other.value))
    }

    pub fn neg(&self) -> Self {
        let modulus = self.modulus();
        let v = (&modulus - &self.value) % &modulus;
        PrimePowerResidue {
            p: self.p,
            m: self.m,
            value: v,
        }
    }

    /// Multiplies by an integer scalar (signed).
    pub fn scale(&self, k: &BigInt) -> Self {
        let r = Self::from_bigint(self.p, self.m, k);
        Self::new(self.p, self.m, &self.value * &r.value)
    }

    pub fn pow(&self, exp: u64) -> Self {
        let modulus = self.modulus();
        let mut acc = BigUint::one() % &modulus;
        let mut base = self.value.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base % &modulus;
            }
            base = &base * &base % &modulus;
            e >>= 1;
        }
        PrimePowerResidue {
            p: self.p,
            m: self.m,
            value: acc,
        }
    }

    /// Drops precision to a smaller exponent.
    pub fn to_precision(&self, m: u32) -> Self {
        assert!(m >= 1 && m <= self.m, "can only reduce precision");
        Self::new(self.p, m, self.value.clone())
    }

    /// Unit inverse. Fails with [`Error::NonUnit`] when p divides the value.
    pub fn inverse(&self) -> Result<Self> {
        if (&self.value % self.p).is_zero() {
            return Err(Error::NonUnit {
                p: self.p,
                m: self.m,
                value: self.value.to_string(),
            });
        }
        let modulus = BigInt::from(self.p).pow(self.m);
        let v = BigInt::from(self.value.clone());
        let ext = v.extended_gcd(&modulus);
        debug_assert!(ext.gcd.is_one());
        Ok(Self::from_bigint(self.p, self.m, &ext.x))
    }
}

impl fmt::Display for PrimePowerResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.p, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_example() {
        let a = PrimePowerResidue::from_u64(5, 2, 4);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.value_u64(), Some(19));
        assert_eq!(a.mul(&inv).unwrap().value_u64(), Some(1));
    }

    #[test]
    fn non_unit_rejected() {
        let a = PrimePowerResidue::from_u64(5, 2, 5);
        assert!(matches!(a.inverse(), Err(Error::NonUnit { .. })));
    }

    #[test]
    fn precision_mismatch_rejected() {
        let a = PrimePowerResidue::from_u64(5, 2, 3);
        let b = PrimePowerResidue::from_u64(5, 3, 3);
        assert!(matches!(a.add(&b), Err(Error::PrecisionMismatch { .. })));
        let c = PrimePowerResidue::from_u64(7, 2, 3);
        assert!(matches!(a.mul(&c), Err(Error::PrecisionMismatch { .. })));
    }

    #[test]
    fn multiplicative_identity() {
        let a = PrimePowerResidue::from_u64(7, 3, 123);
        let one = PrimePowerResidue::one(7, 3);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn negative_values_normalize() {
        let a = PrimePowerResidue::from_bigint(5, 2, &BigInt::from(-3));
        assert_eq!(a.value_u64(), Some(22));
        assert_eq!(a.neg().value_u64(), Some(3));
    }

    #[test]
    fn random_units_invert() {
        // 1000 pseudo-random units a: inverse(a) * a = 1 mod p^M.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1000 {
            let (p, m) = match next() % 4 {
                0 => (5u64, 3u32),
                1 => (7, 2),
                2 => (13, 6),
                _ => (101, 2),
            };
            let modulus = (p as u128).pow(m) as u64;
            let mut v = next() % modulus;
            while v % p == 0 {
                v = next() % modulus;
            }
            let a = PrimePowerResidue::from_u64(p, m, v);
            let prod = a.inverse().unwrap().mul(&a).unwrap();
            assert_eq!(prod.value_u64(), Some(1));
        }
    }
}
