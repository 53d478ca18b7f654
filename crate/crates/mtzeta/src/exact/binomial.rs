//! Binomial and multinomial coefficients, exact.

use num::bigint::BigUint;
use num::{One, Zero};

use crate::error::{Error, Result};

/// Pascal's triangle up to a fixed row, for callers that hit coefficients in
/// tight loops.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, zero outside `0 <= k <= n`.
    pub fn get(&self, n: usize, k: i64) -> BigUint {
        if k < 0 || k as usize > n {
            return BigUint::zero();
        }
        self.rows[n][k as usize].clone()
    }
}

/// `C(n, k)` with the convention that out-of-range k gives 0.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `n! / (parts[0]! * parts[1]! * ...)`. The parts must sum to n.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<BigUint> {
    let sum: u64 = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsMismatch { n, sum });
    }
    let mut acc = BigUint::one();
    let mut rem = n;
    for &part in parts {
        acc *= binomial(rem, part as i64);
        rem -= part;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(2, -1), BigUint::zero());
        assert_eq!(multinomial(3, &[1, 1, 1]).unwrap(), BigUint::from(6u32));
        assert_eq!(multinomial(0, &[0, 0, 0]).unwrap(), BigUint::one());
        assert!(matches!(
            multinomial(4, &[1, 1, 1]),
            Err(Error::PartsMismatch { n: 4, sum: 3 })
        ));
    }

    #[test]
    fn table_matches_direct() {
        let table = BinomialTable::new(32);
        for n in 0..=32u64 {
            for k in 0..=n {
                assert_eq!(table.get(n as usize, k as i64), binomial(n, k as i64));
            }
        }
    }

    #[test]
    fn row_sums_are_powers_of_two() {
        let table = BinomialTable::new(64);
        for n in 0..=64usize {
            let sum: BigUint = (0..=n).map(|k| table.get(n, k as i64)).sum();
            assert_eq!(sum, BigUint::from(2u32).pow(n as u32));
        }
    }
}
