//! Exact-rational enumeration of the finite sums: the small-scale oracles.
//!
//! These walk the defining domains directly with arbitrary-precision
//! rational accumulation and share no code with the table-driven modular
//! engines, so the two can check each other. Denominators explode with the
//! range, hence the caps.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_prime, ExactRational};
use crate::sums::index::{ExponentIndex, MtIndex};

/// Bounds on the exact enumerations.
#[derive(Clone, Copy, Debug)]
pub struct ExactCaps {
    /// Largest admissible p^r.
    pub max_range: u64,
    /// Largest admissible depth.
    pub max_depth: usize,
}

pub const DEFAULT_EXACT_CAPS: ExactCaps = ExactCaps {
    max_range: 2000,
    max_depth: 4,
};

fn checked_range(p: u64, r: u32, caps: ExactCaps) -> Result<u64> {
    let n = (p as u128).pow(r);
    if n > caps.max_range as u128 {
        return Err(Error::ExactCapExceeded(format!(
            "p^r = {p}^{r} exceeds the exact-enumeration cap {}",
            caps.max_range
        )));
    }
    Ok(n as u64)
}

fn check_depth(depth: usize, caps: ExactCaps) -> Result<()> {
    if depth > caps.max_depth {
        return Err(Error::ExactCapExceeded(format!(
            "depth {depth} exceeds the exact-enumeration cap {}",
            caps.max_depth
        )));
    }
    Ok(())
}

fn recip_pow(k: u64, s: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(k).pow(s))
}

/// H_n(s): the multiple harmonic sum over 0 < k_1 < ... < k_d < n.
pub fn mhs(n: u64, s: &ExponentIndex) -> ExactRational {
    let mut acc = BigRational::zero();
    mhs_rec(n, s.exponents(), 0, 1, &BigRational::one(), &mut acc, None);
    ExactRational::from_big(acc.numer().clone(), acc.denom().clone())
}

/// H_n^{(p)}(s): as [`mhs`] but every index coprime to p.
pub fn mhs_p_restricted(n: u64, p: u64, s: &ExponentIndex) -> Result<ExactRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut acc = BigRational::zero();
    mhs_rec(n, s.exponents(), 0, 1, &BigRational::one(), &mut acc, Some(p));
    Ok(ExactRational::from_big(
        acc.numer().clone(),
        acc.denom().clone(),
    ))
}

fn mhs_rec(
    n: u64,
    exps: &[u32],
    level: usize,
    min_k: u64,
    prod: &BigRational,
    acc: &mut BigRational,
    skip_p: Option<u64>,
) {
    let d = exps.len();
    // Room for the remaining d - level - 1 indices above k.
    let max_k = (n - 1).saturating_sub((d - level - 1) as u64);
    for k in min_k..=max_k {
        if let Some(p) = skip_p {
            if k % p == 0 {
                continue;
            }
        }
        let prod = prod * recip_pow(k, exps[level]);
        if level + 1 == d {
            *acc += prod;
        } else {
            mhs_rec(n, exps, level + 1, k + 1, &prod, acc, skip_p);
        }
    }
}

/// Z_{p^r}(s) as an exact rational, by enumerating compositions.
pub fn z_sum_exact(p: u64, r: u32, s: &ExponentIndex) -> Result<ExactRational> {
    z_sum_exact_with(p, r, s, DEFAULT_EXACT_CAPS)
}

pub fn z_sum_exact_with(p: u64, r: u32, s: &ExponentIndex, caps: ExactCaps) -> Result<ExactRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s.depth() < 2 {
        return Err(Error::PreconditionViolated(
            "z-sum requires depth >= 2".into(),
        ));
    }
    check_depth(s.depth(), caps)?;
    let n = checked_range(p, r, caps)?;
    let mut acc = BigRational::zero();
    z_exact_rec(p, n, s.exponents(), 0, &BigRational::one(), &mut acc);
    Ok(ExactRational::from_big(
        acc.numer().clone(),
        acc.denom().clone(),
    ))
}

fn z_exact_rec(p: u64, rem: u64, exps: &[u32], level: usize, prod: &BigRational, acc: &mut BigRational) {
    let d = exps.len();
    if level == d - 1 {
        if rem >= 1 && rem % p != 0 {
            *acc += prod * recip_pow(rem, exps[level]);
        }
        return;
    }
    let max_k = rem.saturating_sub((d - 1 - level) as u64);
    for k in 1..=max_k {
        if k % p == 0 {
            continue;
        }
        let prod = prod * recip_pow(k, exps[level]);
        z_exact_rec(p, rem - k, exps, level + 1, &prod, acc);
    }
}

/// T_{p^r}(alphas; lambda) as an exact rational.
pub fn mt_sum_exact(p: u64, r: u32, alphas: &[u32], lambda: u32) -> Result<ExactRational> {
    mt_sum_exact_with(p, r, alphas, lambda, DEFAULT_EXACT_CAPS)
}

pub fn mt_sum_exact_with(
    p: u64,
    r: u32,
    alphas: &[u32],
    lambda: u32,
    caps: ExactCaps,
) -> Result<ExactRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if alphas.is_empty() {
        return Err(Error::InvalidIndex("numerator block must be nonempty".into()));
    }
    check_depth(alphas.len() + 1, caps)?;
    let n = checked_range(p, r, caps)?;
    let mut acc = BigRational::zero();
    mt_exact_rec(p, n, alphas, lambda, 0, 0, &BigRational::one(), &mut acc);
    Ok(ExactRational::from_big(
        acc.numer().clone(),
        acc.denom().clone(),
    ))
}

fn mt_exact_rec(
    p: u64,
    n: u64,
    alphas: &[u32],
    lambda: u32,
    level: usize,
    partial: u64,
    prod: &BigRational,
    acc: &mut BigRational,
) {
    let m = alphas.len();
    if level == m {
        let u = partial;
        if u % p != 0 {
            *acc += prod * recip_pow(u, lambda);
        }
        return;
    }
    let max_k = (n - 1).saturating_sub(partial + (m - 1 - level) as u64);
    for k in 1..=max_k {
        if k % p == 0 {
            continue;
        }
        let prod = prod * recip_pow(k, alphas[level]);
        mt_exact_rec(p, n, alphas, lambda, level + 1, partial + k, &prod, acc);
    }
}

/// The chain-restricted multiple harmonic sum as an exact rational.
pub fn chain_mhs_exact(p: u64, r: u32, s: &ExponentIndex) -> Result<ExactRational> {
    chain_mhs_exact_with(p, r, s, DEFAULT_EXACT_CAPS)
}

pub fn chain_mhs_exact_with(
    p: u64,
    r: u32,
    s: &ExponentIndex,
    caps: ExactCaps,
) -> Result<ExactRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_depth(s.depth(), caps)?;
    let n = checked_range(p, r, caps)?;
    let mut acc = BigRational::zero();
    chain_exact_rec(p, n, s.exponents(), 0, 0, &BigRational::one(), &mut acc);
    Ok(ExactRational::from_big(
        acc.numer().clone(),
        acc.denom().clone(),
    ))
}

fn chain_exact_rec(
    p: u64,
    n: u64,
    exps: &[u32],
    level: usize,
    prev: u64,
    prod: &BigRational,
    acc: &mut BigRational,
) {
    let d = exps.len();
    let max_u = (n - 1).saturating_sub((d - 1 - level) as u64);
    for u in (prev + 1)..=max_u {
        // The first node, every difference, and the last node are units;
        // intermediate nodes are unconstrained.
        if (u - prev) % p == 0 {
            continue;
        }
        if level == d - 1 && u % p == 0 {
            continue;
        }
        let prod = prod * recip_pow(u, exps[level]);
        if level + 1 == d {
            *acc += prod;
        } else {
            chain_exact_rec(p, n, exps, level + 1, u, &prod, acc);
        }
    }
}

/// The p-restricted finite Mordell-Tornheim sum as an exact rational.
pub fn mt_restricted_exact(p: u64, r: u32, idx: &MtIndex) -> Result<ExactRational> {
    mt_restricted_exact_with(p, r, idx, DEFAULT_EXACT_CAPS)
}

pub fn mt_restricted_exact_with(
    p: u64,
    r: u32,
    idx: &MtIndex,
    caps: ExactCaps,
) -> Result<ExactRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_depth(idx.depth(), caps)?;
    let n = checked_range(p, r, caps)?;
    let mut acc = BigRational::zero();
    mtr_exact_block(p, n, idx, 0, 0, &BigRational::one(), &mut acc);
    Ok(ExactRational::from_big(
        acc.numer().clone(),
        acc.denom().clone(),
    ))
}

fn mtr_exact_block(
    p: u64,
    n: u64,
    idx: &MtIndex,
    level: usize,
    partial: u64,
    prod: &BigRational,
    acc: &mut BigRational,
) {
    let alphas = idx.alphas();
    let lambdas = idx.lambdas();
    let m = alphas.len();
    let n_chain = lambdas.len();
    if level == m {
        let u1 = partial;
        if u1 % p != 0 {
            let prod = prod * recip_pow(u1, lambdas[0]);
            if n_chain == 1 {
                *acc += prod;
            } else {
                mtr_exact_chain(p, n, lambdas, 1, u1, &prod, acc);
            }
        }
        return;
    }
    let max_k = (n - n_chain as u64).saturating_sub(partial + (m - 1 - level) as u64);
    for k in 1..=max_k {
        if k % p == 0 {
            continue;
        }
        let prod = prod * recip_pow(k, alphas[level]);
        mtr_exact_block(p, n, idx, level + 1, partial + k, &prod, acc);
    }
}

fn mtr_exact_chain(
    p: u64,
    n: u64,
    lambdas: &[u32],
    level: usize,
    prev: u64,
    prod: &BigRational,
    acc: &mut BigRational,
) {
    let n_chain = lambdas.len();
    let max_u = (n - 1).saturating_sub((n_chain - 1 - level) as u64);
    for u in (prev + 1)..=max_u {
        if (u - prev) % p == 0 {
            continue;
        }
        if level == n_chain - 1 && u % p == 0 {
            continue;
        }
        let prod = prod * recip_pow(u, lambdas[level]);
        if level + 1 == n_chain {
            *acc += prod;
        } else {
            mtr_exact_chain(p, n, lambdas, level + 1, u, &prod, acc);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(v: &[u32]) -> ExponentIndex {
        ExponentIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn mhs_examples() {
        assert!(mhs(1, &idx(&[1])).is_zero());
        assert_eq!(mhs(5, &idx(&[1])).to_string(), "25/12");
        assert_eq!(mhs(5, &idx(&[1, 2])).to_string(), "17/32");
    }

    #[test]
    fn restricted_mhs_examples() {
        assert_eq!(
            mhs_p_restricted(6, 5, &idx(&[1])).unwrap().to_string(),
            "25/12"
        );
        // Restriction is vacuous when n <= p.
        assert_eq!(
            mhs_p_restricted(5, 7, &idx(&[1, 2])).unwrap(),
            mhs(5, &idx(&[1, 2]))
        );
        assert!(mhs_p_restricted(1, 3, &idx(&[2])).unwrap().is_zero());
    }

    #[test]
    fn z_and_mt_values() {
        assert_eq!(z_sum_exact(5, 1, &idx(&[1, 1, 1])).unwrap().to_string(), "7/4");
        assert_eq!(z_sum_exact(5, 1, &idx(&[1, 1])).unwrap().to_string(), "5/6");
        assert_eq!(mt_sum_exact(5, 1, &[1, 1], 1).unwrap().to_string(), "17/16");
        assert_eq!(mt_sum_exact(5, 1, &[1, 1], 2).unwrap().to_string(), "241/576");
        assert_eq!(mt_sum_exact(3, 1, &[1, 1], 1).unwrap().to_string(), "1/2");
    }

    #[test]
    fn chain_values() {
        assert_eq!(chain_mhs_exact(5, 1, &idx(&[1, 1])).unwrap().to_string(), "35/24");
        assert_eq!(chain_mhs_exact(3, 2, &idx(&[1, 1])).unwrap().to_string(), "1287/1120");
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            z_sum_exact(2003, 1, &idx(&[1, 1])),
            Err(Error::ExactCapExceeded(_))
        ));
        assert!(matches!(
            z_sum_exact(5, 1, &idx(&[1, 1, 1, 1, 1])),
            Err(Error::ExactCapExceeded(_))
        ));
    }
}
