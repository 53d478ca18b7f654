//! Arbitrary-precision rationals and their reduction modulo p^M.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::PrimePowerResidue;

/// An exact rational number. The denominator is always positive and the
/// fraction is reduced after every operation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        ExactRational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        ExactRational(BigRational::new(numer, denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        ExactRational(self.0.recip())
    }

    /// Reduce this rational modulo p^M. See [`rational_reduce_mod`].
    pub fn reduce_mod(&self, p: u64, m: u32) -> Result<PrimePowerResidue> {
        rational_reduce_mod(self, p, m)
    }
}

/// Maps x = a/b to a * b^{-1} in Z/p^M. Fails with [`Error::NonUnitDenominator`]
/// when p divides b, and rejects non-prime p.
pub fn rational_reduce_mod(x: &ExactRational, p: u64, m: u32) -> Result<PrimePowerResidue> {
    if !crate::exact::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert!(m >= 1, "precision exponent must be positive");
    let num = PrimePowerResidue::from_bigint(p, m, x.numer());
    let den = PrimePowerResidue::from_bigint(p, m, x.denom());
    let den_inv = den.inverse().map_err(|_| Error::NonUnitDenominator {
        p,
        m,
        den: x.denom().to_string(),
    })?;
    num.mul(&den_inv)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        // 7/4 mod 25: 4^{-1} = 19, 7 * 19 = 133 = 8.
        let x = ExactRational::new(7, 4);
        let r = rational_reduce_mod(&x, 5, 2).unwrap();
        assert_eq!(r.value_u64(), Some(8));

        let zero = ExactRational::new(0, 1);
        assert_eq!(zero.reduce_mod(7, 3).unwrap().value_u64(), Some(0));

        let bad = ExactRational::new(1, 5);
        assert!(matches!(
            bad.reduce_mod(5, 1),
            Err(Error::NonUnitDenominator { .. })
        ));
    }

    #[test]
    fn rejects_composite_modulus() {
        let x = ExactRational::new(1, 3);
        assert!(matches!(x.reduce_mod(4, 1), Err(Error::NotPrime(4))));
    }

    #[test]
    fn invariants_hold_after_ops() {
        let a = ExactRational::new(6, -4); // normalizes to -3/2
        assert_eq!(a.to_string(), "-3/2");
        assert!(a.denom() > &BigInt::from(0));
        let b = ExactRational::new(1, 6);
        let s = &a + &b;
        assert_eq!(s.to_string(), "-4/3");
    }
}
