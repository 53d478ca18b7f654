//! Precomputed inverse-power tables: the performance substrate for the
//! modular sums.
//!
//! For a ring Z/p^M and range limit p^r, `table[s][k]` holds k^{-s} mod p^M
//! for every k in [1, p^r) coprime to p, and the zero word elsewhere (a true
//! inverse is never zero, so zero doubles as the non-unit sentinel).
//!
//! Arithmetic is generic over a word type: native u64 whenever p^{2M} fits a
//! machine word, arbitrary-precision otherwise. Results are bit-identical
//! between the two paths.

use std::collections::BTreeMap;

use num::bigint::{BigInt, BigUint};
use num::Integer;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::is_prime;

/// Ring operations over one fixed modulus p^M.
pub(crate) trait ResidueRing: Sync {
    type Word: Clone + Default + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Word {
        Self::Word::default()
    }
    fn is_zero(&self, w: &Self::Word) -> bool {
        *w == Self::Word::default()
    }
    fn from_biguint(&self, v: &BigUint) -> Self::Word;
    fn to_biguint(&self, w: &Self::Word) -> BigUint;
    fn add(&self, a: Self::Word, b: &Self::Word) -> Self::Word;
    fn mul(&self, a: &Self::Word, b: &Self::Word) -> Self::Word;
    /// Inverse of a unit; must not be called on non-units.
    fn inverse(&self, a: &Self::Word) -> Self::Word;
    fn pow(&self, a: &Self::Word, mut e: u32) -> Self::Word {
        let mut acc = self.from_biguint(&BigUint::one());
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Machine-word ring; valid while modulus^2 fits in u64.
pub(crate) struct WordRing {
    modulus: u64,
}

impl WordRing {
    pub(crate) fn new(modulus: u64) -> Self {
        debug_assert!(modulus <= u32::MAX as u64);
        WordRing { modulus }
    }
}

impl ResidueRing for WordRing {
    type Word = u64;

    fn from_biguint(&self, v: &BigUint) -> u64 {
        u64::try_from(v % self.modulus).expect("reduced value fits u64")
    }
    fn to_biguint(&self, w: &u64) -> BigUint {
        BigUint::from(*w)
    }
    #[inline(always)]
    fn add(&self, a: u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }
    #[inline(always)]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.modulus
    }
    fn inverse(&self, a: &u64) -> u64 {
        let (g, x, _) = ext_gcd(*a as i128, self.modulus as i128);
        debug_assert_eq!(g, 1);
        (x.rem_euclid(self.modulus as i128)) as u64
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Arbitrary-precision ring: the general path.
pub(crate) struct BigRing {
    modulus: BigUint,
}

impl BigRing {
    pub(crate) fn new(modulus: BigUint) -> Self {
        BigRing { modulus }
    }
}

impl ResidueRing for BigRing {
    type Word = BigUint;

    fn from_biguint(&self, v: &BigUint) -> BigUint {
        v % &self.modulus
    }
    fn to_biguint(&self, w: &BigUint) -> BigUint {
        w.clone()
    }
    fn add(&self, a: BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.modulus {
            s - &self.modulus
        } else {
            s
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b % &self.modulus
    }
    fn inverse(&self, a: &BigUint) -> BigUint {
        let m = BigInt::from(self.modulus.clone());
        let ext = BigInt::from(a.clone()).extended_gcd(&m);
        debug_assert!(ext.gcd.is_one());
        let mut x = ext.x % &m;
        if x.is_negative() {
            x += &m;
        }
        x.to_biguint().expect("normalized")
    }
}

/// Whether p^m fits the machine-word fast path.
pub(crate) fn fits_word(p: u64, m: u32) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..m {
        match acc.checked_mul(p) {
            Some(v) if v <= u32::MAX as u64 => acc = v,
            _ => return false,
        }
    }
    true
}

pub(crate) fn modulus_big(p: u64, m: u32) -> BigUint {
    BigUint::from(p).pow(m)
}

/// Unit-inverse power tables for one ring, one exponent set.
///
/// `tables[s][k]` is k^{-s} for units, zero for non-units; index 0 is zero.
pub(crate) struct UnitTables<R: ResidueRing> {
    map: BTreeMap<u32, Vec<R::Word>>,
}

impl<R: ResidueRing> UnitTables<R> {
    pub(crate) fn build(ring: &R, p: u64, limit: u64, exponents: &[u32]) -> Self {
        // Inverses of 1..limit first, then raised to each power.
        let mut inv = vec![R::Word::default(); limit as usize];
        for k in 1..limit {
            if k % p != 0 {
                let w = ring.from_biguint(&BigUint::from(k));
                inv[k as usize] = ring.inverse(&w);
            }
        }
        let one = ring.from_biguint(&BigUint::one());
        let mut map = BTreeMap::new();
        for &s in exponents {
            let mut t = vec![R::Word::default(); limit as usize];
            for k in 1..limit as usize {
                if !ring.is_zero(&inv[k]) {
                    t[k] = if s == 0 {
                        one.clone()
                    } else {
                        ring.pow(&inv[k], s)
                    };
                }
            }
            map.insert(s, t);
        }
        UnitTables { map }
    }

    pub(crate) fn get(&self, s: u32) -> &[R::Word] {
        &self.map[&s]
    }
}

/// Tables for chain nodes that are not required to be coprime to p: the
/// entry for k = p^v * k' carries the inverse of the unit part together with
/// the valuation deficit v*s.
pub(crate) struct FullTables<R: ResidueRing> {
    map: BTreeMap<u32, Vec<(R::Word, u32)>>,
}

impl<R: ResidueRing> FullTables<R> {
    pub(crate) fn build(ring: &R, p: u64, limit: u64, exponents: &[u32]) -> Self {
        let mut map = BTreeMap::new();
        for &s in exponents {
            let mut t = vec![(R::Word::default(), 0u32); limit as usize];
            for k in 1..limit {
                let mut unit = k;
                let mut v = 0u32;
                while unit % p == 0 {
                    unit /= p;
                    v += 1;
                }
                let w = ring.from_biguint(&BigUint::from(unit));
                let w = ring.pow(&ring.inverse(&w), s);
                t[k as usize] = (w, v * s);
            }
            map.insert(s, t);
        }
        FullTables { map }
    }

    pub(crate) fn get(&self, s: u32) -> &[(R::Word, u32)] {
        &self.map[&s]
    }
}

/// The public inverse-power table: p, r, M plus one map per exponent.
#[derive(Clone, Debug)]
pub struct InversePowerTable {
    p: u64,
    r: u32,
    m: u32,
    tables: BTreeMap<u32, Vec<Option<BigUint>>>,
}

/// Builds k^{-s} mod p^M for all k < p^r coprime to p and every requested
/// exponent s.
pub fn build_inverse_tables(p: u64, r: u32, m: u32, exponents: &[u32]) -> Result<InversePowerTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert!(r >= 1 && m >= 1);
    let limit = (p as u128).pow(r);
    let limit = u64::try_from(limit)
        .map_err(|_| Error::ExactCapExceeded(format!("p^r = {p}^{r} out of range")))?;
    let ring = BigRing::new(modulus_big(p, m));
    let unit = UnitTables::build(&ring, p, limit, exponents);
    let mut tables = BTreeMap::new();
    for &s in exponents {
        let row = unit
            .get(s)
            .iter()
            .map(|w| if w.is_zero() { None } else { Some(w.clone()) })
            .collect();
        tables.insert(s, row);
    }
    Ok(InversePowerTable { p, r, m, tables })
}

impl InversePowerTable {
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn precision(&self) -> u32 {
        self.m
    }
    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.tables.keys().copied()
    }

    /// k^{-s} mod p^M, or None when k is not a unit (or out of range).
    pub fn get(&self, s: u32, k: u64) -> Option<&BigUint> {
        self.tables
            .get(&s)
            .and_then(|t| t.get(k as usize))
            .and_then(|e| e.as_ref())
    }
}
