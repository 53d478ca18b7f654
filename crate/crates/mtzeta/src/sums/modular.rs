//! Table-driven modular evaluation of the finite sums.
//!
//! The hot loops run over precomputed inverse-power tables with the last
//! coordinate eliminated by the composition constraint; coprimality of
//! dependent coordinates is a table lookup (the zero word marks non-units).
//! The outermost index is split into fixed-size chunks evaluated in
//! parallel and combined in chunk order, so residues are reproducible for
//! any worker count.
//!
//! Chain sums with unconstrained intermediate nodes can fail to be
//! p-integral (an intermediate partial sum may be divisible by p). Those
//! are evaluated with a power-of-p shift: the engine computes
//! p^shift * sum at precision M + shift and divides out at the end.

use num::bigint::BigUint;
use num::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{is_prime, PrimePowerResidue};
use crate::sums::index::{ExponentIndex, MtIndex};
use crate::sums::tables::{fits_word, modulus_big, BigRing, FullTables, ResidueRing, UnitTables, WordRing};

const CHUNK: u64 = 1024;

/// Largest p^r the table-driven engines accept.
const RANGE_LIMIT: u64 = 1 << 28;

fn checked_range(p: u64, r: u32) -> Result<u64> {
    let n = (p as u128).pow(r);
    if n > RANGE_LIMIT as u128 {
        return Err(Error::PreconditionViolated(format!(
            "p^r = {p}^{r} exceeds the table-driven range limit"
        )));
    }
    Ok(n as u64)
}

fn validate(p: u64, r: u32, m: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r < 1 || m < 1 {
        return Err(Error::PreconditionViolated(
            "r and M must be at least 1".into(),
        ));
    }
    Ok(())
}

/// The entries strictly between the first and last, empty below length 2.
fn interior(v: &[u32]) -> &[u32] {
    if v.len() >= 2 {
        &v[1..v.len() - 1]
    } else {
        &[]
    }
}

fn chunk_ranges(lo: u64, hi: u64, chunk: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut a = lo;
    while a <= hi {
        let b = (a + chunk - 1).min(hi);
        out.push((a, b));
        a = b + 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Z-sums: compositions k_1 + ... + k_d = p^r with every part a unit.
// ---------------------------------------------------------------------------

/// Z_{p^r}(s): the sum over compositions of p^r into d parts coprime to p of
/// the product of reciprocal powers, reduced mod p^M.
pub fn z_sum(p: u64, r: u32, s: &ExponentIndex, m: u32) -> Result<PrimePowerResidue> {
    validate(p, r, m)?;
    if s.depth() < 2 {
        return Err(Error::PreconditionViolated(
            "z-sum requires depth >= 2".into(),
        ));
    }
    let n = checked_range(p, r)?;
    let value = if fits_word(p, m) {
        let ring = WordRing::new(p.pow(m));
        z_sum_in(&ring, p, n, s.exponents(), CHUNK)
    } else {
        let ring = BigRing::new(modulus_big(p, m));
        z_sum_in(&ring, p, n, s.exponents(), CHUNK)
    };
    Ok(PrimePowerResidue::new(p, m, value))
}

#[cfg(test)]
pub(crate) fn z_sum_chunked(
    p: u64,
    r: u32,
    s: &ExponentIndex,
    m: u32,
    chunk: u64,
) -> PrimePowerResidue {
    let n = checked_range(p, r).unwrap();
    let ring = BigRing::new(modulus_big(p, m));
    let value = z_sum_in(&ring, p, n, s.exponents(), chunk);
    PrimePowerResidue::new(p, m, value)
}

fn z_sum_in<R: ResidueRing>(ring: &R, p: u64, n: u64, exps: &[u32], chunk: u64) -> BigUint {
    let d = exps.len();
    let tables = UnitTables::build(ring, p, n, exps);
    let rows: Vec<&[R::Word]> = exps.iter().map(|&s| tables.get(s)).collect();
    let one = ring.from_biguint(&BigUint::one());
    let outer_max = n.saturating_sub(d as u64 - 1);
    let partials: Vec<R::Word> = chunk_ranges(1, outer_max, chunk)
        .into_par_iter()
        .map(|(lo, hi)| {
            if d == 2 {
                fused_pair(ring, rows[0], rows[1], n, &one, lo, hi)
            } else {
                let mut sum = ring.zero();
                for k in lo..=hi {
                    let w = &rows[0][k as usize];
                    if ring.is_zero(w) {
                        continue;
                    }
                    sum = ring.add(sum, &z_rec(ring, &rows, 1, n - k, w.clone()));
                }
                sum
            }
        })
        .collect();
    let total = partials
        .into_iter()
        .fold(ring.zero(), |a, b| ring.add(a, &b));
    ring.to_biguint(&total)
}

/// Innermost two coordinates: k free, the last determined as rem - k.
fn fused_pair<R: ResidueRing>(
    ring: &R,
    t_free: &[R::Word],
    t_last: &[R::Word],
    rem: u64,
    acc: &R::Word,
    lo: u64,
    hi: u64,
) -> R::Word {
    let mut sum = ring.zero();
    let hi = hi.min(rem.saturating_sub(1));
    for k in lo..=hi {
        let w = &t_free[k as usize];
        if ring.is_zero(w) {
            continue;
        }
        let wl = &t_last[(rem - k) as usize];
        if ring.is_zero(wl) {
            continue;
        }
        let prod = ring.mul(&ring.mul(acc, w), wl);
        sum = ring.add(sum, &prod);
    }
    sum
}

fn z_rec<R: ResidueRing>(
    ring: &R,
    rows: &[&[R::Word]],
    level: usize,
    rem: u64,
    acc: R::Word,
) -> R::Word {
    let d = rows.len();
    if level == d - 2 {
        return fused_pair(ring, rows[level], rows[level + 1], rem, &acc, 1, u64::MAX);
    }
    let max_k = rem.saturating_sub((d - 1 - level) as u64);
    let mut sum = ring.zero();
    for k in 1..=max_k {
        let w = &rows[level][k as usize];
        if ring.is_zero(w) {
            continue;
        }
        sum = ring.add(sum, &z_rec(ring, rows, level + 1, rem - k, ring.mul(&acc, w)));
    }
    sum
}

// ---------------------------------------------------------------------------
// Finite Mordell-Tornheim sums: k_1, ..., k_m units, u = k_1 + ... + k_m a
// unit below p^r, weighted by u^{-lambda}.
// ---------------------------------------------------------------------------

/// T_{p^r}(alphas; lambda) mod p^M. Zero entries in `alphas` contribute no
/// weight but still force their variable to be a unit.
pub fn mt_sum(p: u64, r: u32, alphas: &[u32], lambda: u32, m: u32) -> Result<PrimePowerResidue> {
    validate(p, r, m)?;
    if alphas.is_empty() {
        return Err(Error::InvalidIndex("numerator block must be nonempty".into()));
    }
    let n = checked_range(p, r)?;
    let value = if fits_word(p, m) {
        let ring = WordRing::new(p.pow(m));
        mt_sum_in(&ring, p, n, alphas, lambda)
    } else {
        let ring = BigRing::new(modulus_big(p, m));
        mt_sum_in(&ring, p, n, alphas, lambda)
    };
    Ok(PrimePowerResidue::new(p, m, value))
}

fn mt_sum_in<R: ResidueRing>(ring: &R, p: u64, n: u64, alphas: &[u32], lambda: u32) -> BigUint {
    let m_depth = alphas.len();
    let mut exps: Vec<u32> = alphas.to_vec();
    exps.push(lambda);
    let tables = UnitTables::build(ring, p, n, &exps);
    let rows: Vec<&[R::Word]> = alphas.iter().map(|&s| tables.get(s)).collect();
    let lam = tables.get(lambda);
    let one = ring.from_biguint(&BigUint::one());
    // k_1 <= (n-1) - (m-1): every later variable needs at least 1.
    let outer_max = (n - 1).saturating_sub(m_depth as u64 - 1);
    let partials: Vec<R::Word> = chunk_ranges(1, outer_max, CHUNK)
        .into_par_iter()
        .map(|(lo, hi)| {
            if m_depth == 1 {
                fused_mt_tail(ring, rows[0], lam, n, 0, &one, lo, hi)
            } else {
                let mut sum = ring.zero();
                for k in lo..=hi {
                    let w = &rows[0][k as usize];
                    if ring.is_zero(w) {
                        continue;
                    }
                    sum = ring.add(sum, &mt_rec(ring, &rows, lam, n, 1, k, ring.mul(&one, w)));
                }
                sum
            }
        })
        .collect();
    let total = partials
        .into_iter()
        .fold(ring.zero(), |a, b| ring.add(a, &b));
    ring.to_biguint(&total)
}

/// Last free variable fused with the lookup of u = partial + k.
fn fused_mt_tail<R: ResidueRing>(
    ring: &R,
    t_free: &[R::Word],
    t_lambda: &[R::Word],
    n: u64,
    partial: u64,
    acc: &R::Word,
    lo: u64,
    hi: u64,
) -> R::Word {
    let mut sum = ring.zero();
    let hi = hi.min((n - 1).saturating_sub(partial));
    for k in lo..=hi {
        let w = &t_free[k as usize];
        if ring.is_zero(w) {
            continue;
        }
        let wl = &t_lambda[(partial + k) as usize];
        if ring.is_zero(wl) {
            continue;
        }
        let prod = ring.mul(&ring.mul(acc, w), wl);
        sum = ring.add(sum, &prod);
    }
    sum
}

fn mt_rec<R: ResidueRing>(
    ring: &R,
    rows: &[&[R::Word]],
    lam: &[R::Word],
    n: u64,
    level: usize,
    partial: u64,
    acc: R::Word,
) -> R::Word {
    let m_depth = rows.len();
    if level == m_depth - 1 {
        return fused_mt_tail(ring, rows[level], lam, n, partial, &acc, 1, u64::MAX);
    }
    let max_k = (n - 1).saturating_sub(partial + (m_depth - 1 - level) as u64);
    let mut sum = ring.zero();
    for k in 1..=max_k {
        let w = &rows[level][k as usize];
        if ring.is_zero(w) {
            continue;
        }
        sum = ring.add(
            sum,
            &mt_rec(ring, rows, lam, n, level + 1, partial + k, ring.mul(&acc, w)),
        );
    }
    sum
}

// ---------------------------------------------------------------------------
// Chain-restricted multiple harmonic sums.
// ---------------------------------------------------------------------------

/// The chain sum over 0 < u_1 < ... < u_d < p^r with u_1, every consecutive
/// difference, and u_d coprime to p, reduced mod p^M.
///
/// Intermediate nodes are unconstrained and may be divisible by p, so for
/// depth >= 3 the sum can fail to be p-integral; that case reports
/// [`Error::NotPIntegral`].
pub fn chain_mhs(p: u64, r: u32, s: &ExponentIndex, m: u32) -> Result<PrimePowerResidue> {
    validate(p, r, m)?;
    let natural_shift = chain_shift(p, r, s.exponents());
    let (shifted, shift) = chain_mhs_shifted(p, r, s, m, natural_shift)?;
    unshift(p, m, shifted, shift)
}

/// Maximal possible valuation deficit of a chain path: intermediate nodes
/// below p^r have p-valuation at most r-1.
fn chain_shift(_p: u64, r: u32, exps: &[u32]) -> u32 {
    if exps.len() < 3 || r < 2 {
        return 0;
    }
    exps[1..exps.len() - 1].iter().sum::<u32>() * (r - 1)
}

pub(crate) fn unshift(
    p: u64,
    m: u32,
    shifted: PrimePowerResidue,
    shift: u32,
) -> Result<PrimePowerResidue> {
    if shift == 0 {
        return Ok(shifted);
    }
    let scale = BigUint::from(p).pow(shift);
    let v = shifted.value();
    if (v % &scale) != BigUint::zero() {
        return Err(Error::NotPIntegral {
            p,
            shift,
            value: v.to_string(),
        });
    }
    Ok(PrimePowerResidue::new(p, m, v / scale))
}

/// p^shift * chain sum, computed at precision M + shift. `shift` must be at
/// least the maximal valuation deficit of a summand.
pub(crate) fn chain_mhs_shifted(
    p: u64,
    r: u32,
    s: &ExponentIndex,
    m: u32,
    shift: u32,
) -> Result<(PrimePowerResidue, u32)> {
    validate(p, r, m)?;
    debug_assert!(shift >= chain_shift(p, r, s.exponents()));
    let n = checked_range(p, r)?;
    let work_m = m + shift;
    let value = if fits_word(p, work_m) {
        let ring = WordRing::new(p.pow(work_m));
        chain_in(&ring, p, n, s.exponents(), shift)
    } else {
        let ring = BigRing::new(modulus_big(p, work_m));
        chain_in(&ring, p, n, s.exponents(), shift)
    };
    Ok((PrimePowerResidue::new(p, work_m, value), shift))
}

struct ChainCtx<'a, R: ResidueRing> {
    ring: &'a R,
    n: u64,
    first: &'a [R::Word],
    mids: Vec<&'a [(R::Word, u32)]>,
    last: &'a [R::Word],
    mask: &'a [bool],
    ppow: Vec<R::Word>,
    shift: u32,
    depth: usize,
}

fn chain_in<R: ResidueRing>(ring: &R, p: u64, n: u64, exps: &[u32], shift: u32) -> BigUint {
    let d = exps.len();
    let unit_exps: Vec<u32> = if d == 1 {
        vec![exps[0]]
    } else {
        vec![exps[0], exps[d - 1]]
    };
    let unit = UnitTables::build(ring, p, n, &unit_exps);
    let full = FullTables::build(ring, p, n, interior(exps));
    let mask: Vec<bool> = (0..n).map(|k| k % p != 0).collect();
    let mut ppow = Vec::with_capacity(shift as usize + 1);
    let mut acc = ring.from_biguint(&BigUint::one());
    let pw = ring.from_biguint(&BigUint::from(p));
    for _ in 0..=shift {
        ppow.push(acc.clone());
        acc = ring.mul(&acc, &pw);
    }
    let ctx = ChainCtx {
        ring,
        n,
        first: unit.get(exps[0]),
        mids: interior(exps).iter().map(|&s| full.get(s)).collect(),
        last: if d == 1 {
            unit.get(exps[0])
        } else {
            unit.get(exps[d - 1])
        },
        mask: &mask,
        ppow,
        shift,
        depth: d,
    };
    // u_1 <= n - 1 - (d - 1).
    let outer_max = (n - 1).saturating_sub(d as u64 - 1);
    let one = ring.from_biguint(&BigUint::one());
    let partials: Vec<R::Word> = chunk_ranges(1, outer_max, CHUNK)
        .into_par_iter()
        .map(|(lo, hi)| {
            if d == 1 {
                // Single node: first == last, full shift applies.
                let acc = ring.mul(&one, &ctx.ppow[shift as usize]);
                chain_last(&ctx, 0, &acc, lo, hi)
            } else {
                let mut sum = ring.zero();
                for u in lo..=hi {
                    let w = &ctx.first[u as usize];
                    if ring.is_zero(w) {
                        continue;
                    }
                    sum = ring.add(sum, &chain_rec(&ctx, 1, u, w.clone(), 0));
                }
                sum
            }
        })
        .collect();
    let total = partials
        .into_iter()
        .fold(ring.zero(), |a, b| ring.add(a, &b));
    ring.to_biguint(&total)
}

fn chain_rec<R: ResidueRing>(
    ctx: &ChainCtx<'_, R>,
    level: usize,
    prev: u64,
    acc: R::Word,
    deficit: u32,
) -> R::Word {
    let ring = ctx.ring;
    if level == ctx.depth - 1 {
        let acc = ring.mul(&acc, &ctx.ppow[(ctx.shift - deficit) as usize]);
        return chain_last(ctx, prev, &acc, prev + 1, u64::MAX);
    }
    let max_u = (ctx.n - 1).saturating_sub((ctx.depth - 1 - level) as u64);
    let row = ctx.mids[level - 1];
    let mut sum = ring.zero();
    for u in (prev + 1)..=max_u {
        if !ctx.mask[(u - prev) as usize] {
            continue;
        }
        let (w, def) = &row[u as usize];
        sum = ring.add(
            sum,
            &chain_rec(ctx, level + 1, u, ring.mul(&acc, w), deficit + def),
        );
    }
    sum
}

fn chain_last<R: ResidueRing>(
    ctx: &ChainCtx<'_, R>,
    prev: u64,
    acc: &R::Word,
    lo: u64,
    hi: u64,
) -> R::Word {
    let ring = ctx.ring;
    let mut sum = ring.zero();
    let hi = hi.min(ctx.n - 1);
    for u in lo..=hi {
        if !ctx.mask[(u - prev) as usize] {
            continue;
        }
        let w = &ctx.last[u as usize];
        if ring.is_zero(w) {
            continue;
        }
        sum = ring.add(sum, &ring.mul(acc, w));
    }
    sum
}

// ---------------------------------------------------------------------------
// p-restricted finite Mordell-Tornheim sums.
// ---------------------------------------------------------------------------

/// T_{p^r}(alphas; lambdas) mod p^M: the numerator block sums to the first
/// chain node u_1, then u_1 < u_2 < ... < u_n < p^r with all the listed
/// coprimality constraints.
pub fn mt_restricted(p: u64, r: u32, idx: &MtIndex, m: u32) -> Result<PrimePowerResidue> {
    validate(p, r, m)?;
    let lambdas = idx.lambdas();
    let natural_shift = if lambdas.len() < 3 || r < 2 {
        0
    } else {
        lambdas[1..lambdas.len() - 1].iter().sum::<u32>() * (r - 1)
    };
    let n = checked_range(p, r)?;
    let work_m = m + natural_shift;
    let value = if fits_word(p, work_m) {
        let ring = WordRing::new(p.pow(work_m));
        mtr_in(&ring, p, n, idx, natural_shift)
    } else {
        let ring = BigRing::new(modulus_big(p, work_m));
        mtr_in(&ring, p, n, idx, natural_shift)
    };
    unshift(p, m, PrimePowerResidue::new(p, work_m, value), natural_shift)
}

fn mtr_in<R: ResidueRing>(ring: &R, p: u64, n: u64, idx: &MtIndex, shift: u32) -> BigUint {
    let alphas = idx.alphas();
    let lambdas = idx.lambdas();
    let m_depth = alphas.len();
    let n_chain = lambdas.len();

    let mut unit_exps: Vec<u32> = alphas.to_vec();
    unit_exps.push(lambdas[0]);
    unit_exps.push(lambdas[n_chain - 1]);
    let unit = UnitTables::build(ring, p, n, &unit_exps);
    let full = FullTables::build(ring, p, n, interior(lambdas));
    let mask: Vec<bool> = (0..n).map(|k| k % p != 0).collect();

    let mut ppow = Vec::with_capacity(shift as usize + 1);
    let mut acc = ring.from_biguint(&BigUint::one());
    let pw = ring.from_biguint(&BigUint::from(p));
    for _ in 0..=shift {
        ppow.push(acc.clone());
        acc = ring.mul(&acc, &pw);
    }

    let arows: Vec<&[R::Word]> = alphas.iter().map(|&s| unit.get(s)).collect();
    let chain_ctx = ChainCtx {
        ring,
        n,
        first: unit.get(lambdas[0]),
        mids: interior(lambdas).iter().map(|&s| full.get(s)).collect(),
        last: unit.get(lambdas[n_chain - 1]),
        mask: &mask,
        ppow,
        shift,
        depth: n_chain,
    };

    // u_1 = sum of the block <= n - n_chain; the first block variable also
    // leaves room for the other m-1 summands.
    let outer_max = (n - n_chain as u64).saturating_sub(m_depth as u64 - 1);
    let partials: Vec<R::Word> = chunk_ranges(1, outer_max, CHUNK)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut sum = ring.zero();
            for k in lo..=hi {
                let w = &arows[0][k as usize];
                if ring.is_zero(w) {
                    continue;
                }
                sum = ring.add(sum, &mtr_block(&chain_ctx, &arows, 1, k, w.clone()));
            }
            sum
        })
        .collect();
    let total = partials
        .into_iter()
        .fold(ring.zero(), |a, b| ring.add(a, &b));
    ring.to_biguint(&total)
}

fn mtr_block<R: ResidueRing>(
    ctx: &ChainCtx<'_, R>,
    arows: &[&[R::Word]],
    level: usize,
    partial: u64,
    acc: R::Word,
) -> R::Word {
    let ring = ctx.ring;
    let m_depth = arows.len();
    if level == m_depth {
        // Block complete: u_1 = partial enters the chain.
        let u1 = partial;
        let w = &ctx.first[u1 as usize];
        if ring.is_zero(w) {
            return ring.zero();
        }
        let acc = ring.mul(&acc, w);
        if ctx.depth == 1 {
            return ring.mul(&acc, &ctx.ppow[ctx.shift as usize]);
        }
        return chain_rec(ctx, 1, u1, acc, 0);
    }
    let max_k = (ctx.n - ctx.depth as u64).saturating_sub(partial + (m_depth - 1 - level) as u64);
    let mut sum = ring.zero();
    for k in 1..=max_k {
        let w = &arows[level][k as usize];
        if ring.is_zero(w) {
            continue;
        }
        sum = ring.add(
            sum,
            &mtr_block(ctx, arows, level + 1, partial + k, ring.mul(&acc, w)),
        );
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sums::exact_sums::{chain_mhs_exact, mt_restricted_exact, mt_sum_exact, z_sum_exact};

    fn idx(v: &[u32]) -> ExponentIndex {
        ExponentIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn z_sum_examples() {
        // Z_5(1,1,1) = 7/4 = 3 mod 5 and 8 mod 25.
        assert_eq!(z_sum(5, 1, &idx(&[1, 1, 1]), 1).unwrap().value_u64(), Some(3));
        assert_eq!(z_sum(5, 1, &idx(&[1, 1, 1]), 2).unwrap().value_u64(), Some(8));
        // Z_5(1,1) = 5/6 = 0 mod 5.
        assert_eq!(z_sum(5, 1, &idx(&[1, 1]), 1).unwrap().value_u64(), Some(0));
    }

    #[test]
    fn z_sum_rejects_bad_input() {
        assert!(matches!(
            z_sum(4, 1, &idx(&[1, 1]), 1),
            Err(Error::NotPrime(4))
        ));
        assert!(z_sum(5, 1, &idx(&[3]), 1).is_err());
    }

    #[test]
    fn mt_sum_examples() {
        // T_5(1,1;1) = 17/16 = 2 mod 5.
        assert_eq!(mt_sum(5, 1, &[1, 1], 1, 1).unwrap().value_u64(), Some(2));
        // T_3(1,1;1) = 1/2 = 2 mod 3.
        assert_eq!(mt_sum(3, 1, &[1, 1], 1, 1).unwrap().value_u64(), Some(2));
        // T_5(1,1;2) = 241/576 = 16 mod 25.
        assert_eq!(mt_sum(5, 1, &[1, 1], 2, 2).unwrap().value_u64(), Some(16));
    }

    #[test]
    fn chain_examples() {
        // H_5(1,1) = 35/24 = 0 mod 5.
        assert_eq!(chain_mhs(5, 1, &idx(&[1, 1]), 1).unwrap().value_u64(), Some(0));
        // H_9(1,1) = 1287/1120 over the 9 admissible pairs; 1287 = 0 mod 9.
        let exact = chain_mhs_exact(3, 2, &idx(&[1, 1])).unwrap();
        assert_eq!(exact.to_string(), "1287/1120");
        let modular = chain_mhs(3, 2, &idx(&[1, 1]), 2).unwrap();
        assert_eq!(modular, exact.reduce_mod(3, 2).unwrap());
    }

    #[test]
    fn mt_restricted_examples() {
        // Depth-one chain coincides with the plain finite MT sum.
        for (alphas, lambda) in [(vec![1u32, 1], 1u32), (vec![2, 1], 2), (vec![1], 3)] {
            let a = mt_restricted(
                5,
                2,
                &MtIndex::new(alphas.clone(), vec![lambda]).unwrap(),
                2,
            )
            .unwrap();
            let b = mt_sum(5, 2, &alphas, lambda, 2).unwrap();
            assert_eq!(a, b);
        }
        // T_5(1; 1,1) = 181/144 = 4 mod 5.
        let r = mt_restricted(5, 1, &MtIndex::new(vec![1], vec![1, 1]).unwrap(), 1).unwrap();
        let exact = mt_restricted_exact(5, 1, &MtIndex::new(vec![1], vec![1, 1]).unwrap()).unwrap();
        assert_eq!(exact.to_string(), "181/144");
        assert_eq!(r.value_u64(), Some(4));
        // Empty domain: u_2 would need to exceed u_1 >= 2 and stay below 3.
        let empty = mt_restricted(3, 1, &MtIndex::new(vec![1, 1], vec![1, 1]).unwrap(), 1).unwrap();
        assert!(empty.is_zero());
    }

    #[test]
    fn exact_modular_agreement_small_grid() {
        // Modular path vs rational enumeration for p^r <= 200.
        let cases: Vec<(u64, u32)> = vec![(3, 4), (5, 2), (7, 2), (13, 1), (197, 1)];
        for (p, r) in cases {
            for s in [vec![1u32, 1], vec![1, 2], vec![2, 1, 1]] {
                let s = idx(&s);
                let m = 2;
                let exact = z_sum_exact(p, r, &s).unwrap().reduce_mod(p, m).unwrap();
                assert_eq!(z_sum(p, r, &s, m).unwrap(), exact, "z p={p} r={r}");
                let ch = chain_mhs_exact(p, r, &s).unwrap();
                if (ch.denom() % num::BigInt::from(p)).is_zero() {
                    assert!(chain_mhs(p, r, &s, m).is_err());
                } else {
                    assert_eq!(
                        chain_mhs(p, r, &s, m).unwrap(),
                        ch.reduce_mod(p, m).unwrap(),
                        "chain p={p} r={r}"
                    );
                }
            }
            let mt = mt_sum_exact(p, r, &[1, 1], 2).unwrap().reduce_mod(p, 2).unwrap();
            assert_eq!(mt_sum(p, r, &[1, 1], 2, 2).unwrap(), mt, "mt p={p} r={r}");
        }
    }

    #[test]
    fn word_and_big_paths_bit_identical() {
        for (p, r, m) in [(5u64, 2u32, 3u32), (13, 2, 4)] {
            let s = idx(&[1, 2, 1]);
            let n = checked_range(p, r).unwrap();
            let word = {
                let ring = WordRing::new(p.pow(m));
                z_sum_in(&ring, p, n, s.exponents(), CHUNK)
            };
            let big = {
                let ring = BigRing::new(modulus_big(p, m));
                z_sum_in(&ring, p, n, s.exponents(), CHUNK)
            };
            assert_eq!(word, big);
        }
    }

    #[test]
    fn chunking_is_invisible() {
        let s = idx(&[1, 1, 2]);
        let reference = z_sum(7, 2, &s, 3).unwrap();
        for chunk in [1u64, 3, 17, 64, 1 << 20] {
            assert_eq!(z_sum_chunked(7, 2, &s, 3, chunk), reference);
        }
    }

    #[test]
    fn permutation_symmetry() {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let base = [1u32, 2, 3];
        let reference = z_sum(7, 1, &idx(&base), 2).unwrap();
        for perm in perms {
            let v: Vec<u32> = perm.iter().map(|&i| base[i]).collect();
            assert_eq!(z_sum(7, 1, &idx(&v), 2).unwrap(), reference);
        }
        let mt_ref = mt_sum(7, 1, &[1, 2, 3], 2, 2).unwrap();
        for perm in perms {
            let v: Vec<u32> = perm.iter().map(|&i| base[i]).collect();
            assert_eq!(mt_sum(7, 1, &v, 2, 2).unwrap(), mt_ref);
        }
    }

    #[test]
    fn chain_collapses_at_r_equals_one() {
        use crate::sums::exact_sums::{mhs, mhs_p_restricted};
        for s in [vec![1u32, 1], vec![1, 2], vec![2, 1, 1]] {
            let s = idx(&s);
            let via_chain = chain_mhs(7, 1, &s, 2).unwrap();
            let via_mhs = mhs(7, &s).reduce_mod(7, 2).unwrap();
            let via_restricted = mhs_p_restricted(7, 7, &s).unwrap().reduce_mod(7, 2).unwrap();
            assert_eq!(via_chain, via_mhs);
            assert_eq!(via_chain, via_restricted);
        }
    }
}
