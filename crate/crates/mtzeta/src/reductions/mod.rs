//! Reduction identities and closed forms.
//!
//! The Z-sum over compositions of p^r decomposes into finite
//! Mordell-Tornheim sums ([`decompose_z`]); those reduce by partial
//! fractions to chain-restricted harmonic sums ([`reduce_t2_to_h`],
//! [`reduce_t3_to_t2`], [`reduce_t20_to_h3`]). Composing the three gives
//! the depth-4 expansion [`z4_via_chain_mhs`]. The closed forms
//! ([`yang_cai_closed_form`], [`z4_closed_form`]) express the depth-3 and
//! depth-4 values mod p through one Bernoulli number.
//!
//! One multinomial in the published depth-4 expansion is garbled (its
//! second lower index refers to a variable that is not in scope).
//! [`FourthBlockVariant`] keeps both readings: `Corrected` repairs it by
//! symmetry with the preceding block, `Literal` substitutes the block's own
//! inner variable and treats mismatched parts as zero. The brute-force
//! oracle adjudicates; see the acceptance suite.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, binomial, multinomial, ExactRational, PrimePowerResidue};
use crate::sums::{chain_mhs_shifted, mt_sum, unshift, ExponentIndex};

#[cfg(test)]
mod tests;

/// Which reading of the garbled fourth-block multinomial to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FourthBlockVariant {
    /// Symmetric repair: the block's own (x, y) indices, matching its first half.
    Corrected,
    /// Symbol-for-symbol reading with the inner variable substituted for the
    /// out-of-scope one; mismatched parts count as zero.
    Literal,
}

/// A formal integer combination of chain-restricted harmonic sum indices,
/// kept in canonical (lexicographic) order with duplicates merged and zero
/// coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMhsCombination {
    terms: Vec<(BigInt, ExponentIndex)>,
}

impl ChainMhsCombination {
    pub fn from_terms(raw: impl IntoIterator<Item = (BigInt, ExponentIndex)>) -> Self {
        let mut map: BTreeMap<ExponentIndex, BigInt> = BTreeMap::new();
        for (c, idx) in raw {
            *map.entry(idx).or_insert_with(BigInt::zero) += c;
        }
        let terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (c, idx))
            .collect();
        ChainMhsCombination { terms }
    }

    pub fn terms(&self) -> &[(BigInt, ExponentIndex)] {
        &self.terms
    }

    /// Sum of all coefficients.
    pub fn coefficient_mass(&self) -> BigInt {
        self.terms.iter().map(|(c, _)| c.clone()).sum()
    }

    /// The common weight of the term indices, if any terms remain.
    pub fn weight(&self) -> Option<u32> {
        self.terms.first().map(|(_, idx)| idx.weight())
    }

    /// Evaluates the combination with the exact chain-sum oracle.
    pub fn eval_exact(&self, p: u64, r: u32) -> Result<ExactRational> {
        let mut acc = ExactRational::zero();
        for (c, idx) in &self.terms {
            let h = crate::sums::chain_mhs_exact(p, r, idx)?;
            acc += &(&ExactRational::from_big(c.clone(), BigInt::one()) * &h);
        }
        Ok(acc)
    }

    /// Evaluates the combination modulo p^M.
    pub fn eval_mod(&self, p: u64, r: u32, m: u32) -> Result<PrimePowerResidue> {
        let mut acc = PrimePowerResidue::zero(p, m);
        for (c, idx) in &self.terms {
            let h = crate::sums::chain_mhs(p, r, idx, m)?;
            acc = acc.add(&h.scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for ChainMhsCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, idx)| format!("{c}*H{idx}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// One term of the depth-3 expansion: `coeff * T(x, y, 0; outer)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T20Term {
    pub coeff: BigUint,
    pub x: u32,
    pub y: u32,
    pub outer: u32,
}

fn check_positive(vals: &[u32]) -> Result<()> {
    if vals.iter().any(|&v| v == 0) {
        return Err(Error::PreconditionViolated(
            "exponents must be positive".into(),
        ));
    }
    Ok(())
}

/// Partial-fraction reduction of T(alpha, beta; gamma) to depth-2 chain sums:
/// an exact identity, not merely a congruence.
pub fn reduce_t2_to_h(alpha: u32, beta: u32, gamma: u32) -> Result<ChainMhsCombination> {
    check_positive(&[alpha, beta, gamma])?;
    let w = alpha + beta + gamma;
    let mut raw = Vec::new();
    for (hi, lo) in [(alpha, beta), (beta, alpha)] {
        for a in 1..=hi {
            let c = binomial((hi + lo - a - 1) as u64, (hi - a) as i64);
            raw.push((
                BigInt::from(c),
                ExponentIndex::new(vec![a, w - a]).expect("positive"),
            ));
        }
    }
    Ok(ChainMhsCombination::from_terms(raw))
}

/// Expansion of T(alpha, beta, gamma; lambda) into the three double-sum
/// blocks of terms T(x, y, 0; w - x - y), with multinomial coefficients.
pub fn reduce_t3_to_t2(alpha: u32, beta: u32, gamma: u32, lambda: u32) -> Result<Vec<T20Term>> {
    check_positive(&[alpha, beta, gamma, lambda])?;
    let n = (alpha + beta + gamma) as u64;
    let w = alpha + beta + gamma + lambda;
    let mut out = Vec::new();
    for (x_max, y_max, spect, _) in outer_blocks(alpha, beta, gamma) {
        for x in 1..=x_max {
            for y in 1..=y_max {
                let top = n - (x + y) as u64 - 1;
                let coeff = multinomial(
                    top,
                    &[(x_max - x) as u64, (y_max - y) as u64, (spect - 1) as u64],
                )
                .expect("parts sum to top by construction");
                out.push(T20Term {
                    coeff,
                    x,
                    y,
                    outer: w - x - y,
                });
            }
        }
    }
    Ok(out)
}

/// Partial-fraction reduction of T(alpha, beta, 0; lambda) to depth-3 chain
/// sums; again an exact identity.
pub fn reduce_t20_to_h3(alpha: u32, beta: u32, lambda: u32) -> Result<ChainMhsCombination> {
    check_positive(&[alpha, beta, lambda])?;
    let mut raw = t20_half(alpha, beta, lambda);
    raw.extend(t20_half(beta, alpha, lambda));
    Ok(ChainMhsCombination::from_terms(raw))
}

/// One half of the T(alpha, beta, 0; lambda) reduction:
/// sum_s C(s + beta - 1, s) H(alpha - s, beta + s, lambda).
fn t20_half(alpha: u32, beta: u32, lambda: u32) -> Vec<(BigInt, ExponentIndex)> {
    (0..alpha)
        .map(|s| {
            let c = binomial((s + beta - 1) as u64, s as i64);
            (
                BigInt::from(c),
                ExponentIndex::new(vec![alpha - s, beta + s, lambda]).expect("positive"),
            )
        })
        .collect()
}

/// Decomposition of Z_{p^r}(s) into finite Mordell-Tornheim sums:
///
/// (-1)^t ( T_{p^r}(front; t) + t p^r T_{p^r}(front; t+1) )  mod p^{2r}
///
/// where t is the last exponent and `front` the rest. Exact at modulus
/// p^{2r}: the discarded binomial tail carries p^{2r}.
pub fn decompose_z(p: u64, r: u32, s: &ExponentIndex) -> Result<PrimePowerResidue> {
    if s.depth() < 2 {
        return Err(Error::PreconditionViolated(
            "decomposition needs depth >= 2".into(),
        ));
    }
    let m = 2 * r;
    let (last, front) = s.exponents().split_last().expect("depth >= 2");
    let t1 = mt_sum(p, r, front, *last, m)?;
    let t2 = mt_sum(p, r, front, *last + 1, m)?;
    let pr = BigInt::from(p).pow(r);
    let sum = t1.add(&t2.scale(&(pr * BigInt::from(*last))))?;
    Ok(if last % 2 == 1 { sum.neg() } else { sum })
}

/// The three outer blocks of the depth-3/4 expansions: (x-range, y-range,
/// spectator, middle-block marker).
fn outer_blocks(alpha: u32, beta: u32, gamma: u32) -> [(u32, u32, u32, bool); 3] {
    [
        (alpha, beta, gamma, false),
        (alpha, gamma, beta, true),
        (beta, gamma, alpha, false),
    ]
}

fn multinomial_or_zero(top: i64, parts: [i64; 3]) -> BigUint {
    if top < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != top {
        return BigUint::zero();
    }
    multinomial(
        top as u64,
        &[parts[0] as u64, parts[1] as u64, parts[2] as u64],
    )
    .expect("parts checked")
}

/// Coefficients of the s-half and t-half of one (x, y) cell of the depth-4
/// expansion, under the chosen variant.
fn cell_coeffs(
    n: u32,
    x_max: u32,
    y_max: u32,
    spect: u32,
    middle: bool,
    variant: FourthBlockVariant,
    x: u32,
    y: u32,
) -> (BigUint, BigUint) {
    let top = n as i64 - (x + y) as i64 - 1;
    let m_s = multinomial_or_zero(
        top,
        [(x_max - x) as i64, (y_max - y) as i64, spect as i64 - 1],
    );
    let m_t = if middle && variant == FourthBlockVariant::Literal {
        multinomial_or_zero(
            top,
            [(x_max - x) as i64, spect as i64 - y as i64, spect as i64 - 1],
        )
    } else {
        m_s.clone()
    };
    (m_s, m_t)
}

/// Z_{p^r}(alpha, beta, gamma, lambda) mod p^{2r} through the full chain-sum
/// expansion: every depth-3 term H(x, y, W) is paired with
/// lambda p^r H(x, y, W+1), and the assembled residue carries (-1)^lambda.
pub fn z4_via_chain_mhs(
    alpha: u32,
    beta: u32,
    gamma: u32,
    lambda: u32,
    p: u64,
    r: u32,
    variant: FourthBlockVariant,
) -> Result<PrimePowerResidue> {
    check_positive(&[alpha, beta, gamma, lambda])?;
    let w = alpha + beta + gamma + lambda;
    if p <= w as u64 {
        return Err(Error::PreconditionViolated(format!(
            "requires p > weight: p = {p}, weight = {w}"
        )));
    }
    let n = alpha + beta + gamma;
    let m = 2 * r;

    // Integer coefficient of every chain index, with the lambda p^r partner
    // folded in.
    let mut coeffs: BTreeMap<ExponentIndex, BigInt> = BTreeMap::new();
    let pr = BigInt::from(p).pow(r);
    for (x_max, y_max, spect, middle) in outer_blocks(alpha, beta, gamma) {
        for x in 1..=x_max {
            for y in 1..=y_max {
                let (m_s, m_t) = cell_coeffs(n, x_max, y_max, spect, middle, variant, x, y);
                let mu = w - x - y;
                let mut push = |c: BigInt, a: u32, b: u32| {
                    let base = ExponentIndex::new(vec![a, b, mu]).expect("positive");
                    let partner = ExponentIndex::new(vec![a, b, mu + 1]).expect("positive");
                    *coeffs.entry(partner).or_insert_with(BigInt::zero) +=
                        &c * BigInt::from(lambda) * &pr;
                    *coeffs.entry(base).or_insert_with(BigInt::zero) += c;
                };
                if !m_s.is_zero() {
                    for s in 0..x {
                        let c = BigInt::from(&m_s * binomial((s + y - 1) as u64, s as i64));
                        push(c, x - s, y + s);
                    }
                }
                if !m_t.is_zero() {
                    for t in 0..y {
                        let c = BigInt::from(&m_t * binomial((t + x - 1) as u64, t as i64));
                        push(c, y - t, x + t);
                    }
                }
            }
        }
    }

    // Chain sums with unconstrained middles are evaluated under a common
    // power-of-p shift large enough for every term.
    let shift = coeffs
        .keys()
        .map(|idx| idx.exponents()[1] * r.saturating_sub(1))
        .max()
        .unwrap_or(0);
    let work_m = m + shift;
    let mut acc = PrimePowerResidue::zero(p, work_m);
    for (idx, c) in &coeffs {
        if c.is_zero() {
            continue;
        }
        let (h, _) = chain_mhs_shifted(p, r, idx, m, shift)?;
        acc = acc.add(&h.scale(c))?;
    }
    if lambda % 2 == 1 {
        acc = acc.neg();
    }
    unshift(p, m, acc, shift)
}

/// The bracketed coefficient of the depth-3 closed form, times B_{p-w},
/// reduced mod p. Requires odd weight and p > w.
pub fn yang_cai_closed_form(
    alpha: u32,
    beta: u32,
    gamma: u32,
    p: u64,
) -> Result<PrimePowerResidue> {
    check_positive(&[alpha, beta, gamma])?;
    let w = alpha + beta + gamma;
    if w % 2 == 0 {
        return Err(Error::PreconditionViolated(format!(
            "requires odd weight, got {w}"
        )));
    }
    if p <= w as u64 {
        return Err(Error::PreconditionViolated(format!(
            "requires p > weight: p = {p}, weight = {w}"
        )));
    }
    let mut bracket = ExactRational::zero();
    for j in 1..=alpha.max(beta) {
        let top = (alpha + beta - j - 1) as u64;
        let pair = BigInt::from(binomial(top, (alpha - 1) as i64))
            + BigInt::from(binomial(top, (beta - 1) as i64));
        let sign = if (alpha + beta - j) % 2 == 1 { -1 } else { 1 };
        bracket += &ExactRational::from_big(
            BigInt::from(sign) * pair * BigInt::from(binomial(w as u64, j as i64)),
            BigInt::from(w),
        );
    }
    if p == (w + 1) as u64 {
        // The Kronecker delta term; reachable only when w + 1 is prime.
        let sign = if gamma % 2 == 1 { -2 } else { 2 };
        bracket += &ExactRational::from_big(
            BigInt::from(sign) * BigInt::from(binomial((alpha + beta) as u64, alpha as i64)),
            BigInt::one(),
        );
    }
    (&bracket * &bernoulli(p - w as u64)).reduce_mod(p, 1)
}

/// h(a, b, c) = ((-1)^a C(n, a) - (-1)^c C(n, c)) / (2n) with n = a + b + c,
/// the coefficient in the depth-3 harmonic-sum congruence.
pub fn h_coeff(a: u32, b: u32, c: u32) -> ExactRational {
    let n = (a + b + c) as u64;
    let sa = if a % 2 == 1 { -1 } else { 1 };
    let sc = if c % 2 == 1 { -1 } else { 1 };
    let num = BigInt::from(sa) * BigInt::from(binomial(n, a as i64))
        - BigInt::from(sc) * BigInt::from(binomial(n, c as i64));
    ExactRational::from_big(num, BigInt::from(2 * n))
}

/// One half of t(alpha, beta; lambda):
/// sum_s C(s + beta - 1, s) h(alpha - s, beta + s, lambda).
fn t_half(alpha: u32, beta: u32, lambda: u32) -> ExactRational {
    let mut acc = ExactRational::zero();
    for s in 0..alpha {
        let c = ExactRational::from_big(
            BigInt::from(binomial((s + beta - 1) as u64, s as i64)),
            BigInt::one(),
        );
        acc += &(&c * &h_coeff(alpha - s, beta + s, lambda));
    }
    acc
}

/// t(alpha, beta; lambda): the closed-form image of T(alpha, beta, 0; lambda).
pub fn t_coeff(alpha: u32, beta: u32, lambda: u32) -> ExactRational {
    &t_half(alpha, beta, lambda) + &t_half(beta, alpha, lambda)
}

/// The depth-4 closed form: Z_p(alpha, beta, gamma, lambda) mod p for odd
/// weight w and p > w + 2, as (-1)^lambda [three blocks of multinomials
/// times t-coefficients] B_{p-w}.
pub fn z4_closed_form(
    alpha: u32,
    beta: u32,
    gamma: u32,
    lambda: u32,
    p: u64,
    variant: FourthBlockVariant,
) -> Result<PrimePowerResidue> {
    check_positive(&[alpha, beta, gamma, lambda])?;
    let w = alpha + beta + gamma + lambda;
    if w % 2 == 0 {
        return Err(Error::PreconditionViolated(format!(
            "requires odd weight, got {w}"
        )));
    }
    if p <= (w + 2) as u64 {
        return Err(Error::PreconditionViolated(format!(
            "requires p > weight + 2: p = {p}, weight = {w}"
        )));
    }
    let n = alpha + beta + gamma;
    let mut total = ExactRational::zero();
    for (x_max, y_max, spect, middle) in outer_blocks(alpha, beta, gamma) {
        for x in 1..=x_max {
            for y in 1..=y_max {
                let (m_s, m_t) = cell_coeffs(n, x_max, y_max, spect, middle, variant, x, y);
                let mu = w - x - y;
                if !m_s.is_zero() {
                    let c = ExactRational::from_big(BigInt::from(m_s), BigInt::one());
                    total += &(&c * &t_half(x, y, mu));
                }
                if !m_t.is_zero() {
                    let c = ExactRational::from_big(BigInt::from(m_t), BigInt::one());
                    total += &(&c * &t_half(y, x, mu));
                }
            }
        }
    }
    if lambda % 2 == 1 {
        total = -total;
    }
    (&total * &bernoulli(p - w as u64)).reduce_mod(p, 1)
}
