//! Signed Mordell-Tornheim symbols and their reduction to (alternating)
//! multiple zeta value combinations.
//!
//! A symbol carries k >= 2 inner exponents with signs and one outer
//! exponent; the outer sign is absorbed into the inner ones on
//! construction (z^(m_1 + ... + m_k) factors through the product), which is
//! why the canonical form has k signs. Inner blocks commute, so (exponent,
//! sign) pairs are kept sorted.
//!
//! [`mt_to_mzv`] applies the partial-fraction merge: for two variables,
//! 1/(x^a y^b) expands over x + y = u; for three, the symbol first splits
//! into pair blocks with a spectator variable, then the pair merges. Signs
//! transform alongside: grouping by partial sums u_2 = x + y, u_3 = u turns
//! e_x^x e_y^y e_z^z into (e_x e_y)^x (e_y e_z)^(u_2) e_z^(u_3).

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{binomial, multinomial, ExactRational};

/// Sign of one argument; `false` is +1, `true` is -1 (a bar).
pub type Sign = bool;

fn sign_char(neg: Sign) -> &'static str {
    if neg {
        "-"
    } else {
        ""
    }
}

/// An alternating Mordell-Tornheim symbol in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedMtIndex {
    /// Inner (exponent, sign) pairs, sorted; signs already absorb the outer one.
    inner: Vec<(u32, Sign)>,
    outer_exponent: u32,
}

impl SignedMtIndex {
    /// Builds from per-argument exponents and signs as written, absorbing
    /// the outer sign into the inner block.
    pub fn new(inner: &[(u32, Sign)], outer: (u32, Sign)) -> Result<Self> {
        if inner.len() < 2 {
            return Err(Error::InvalidIndex(
                "a Mordell-Tornheim symbol needs at least two inner arguments".into(),
            ));
        }
        if inner.iter().any(|&(s, _)| s == 0) || outer.0 == 0 {
            return Err(Error::InvalidIndex("exponents must be positive".into()));
        }
        let mut inner: Vec<(u32, Sign)> = inner
            .iter()
            .map(|&(s, neg)| (s, neg ^ outer.1))
            .collect();
        inner.sort_unstable();
        Ok(SignedMtIndex {
            inner,
            outer_exponent: outer.0,
        })
    }

    /// Parses signed exponents written as nonzero integers, a bar being a
    /// leading minus: `[-1, 1]` with outer `2` is T(-1, 1; 2).
    pub fn from_signed_ints(inner: &[i64], outer: i64) -> Result<Self> {
        let parse = |v: i64| -> Result<(u32, Sign)> {
            if v == 0 {
                return Err(Error::InvalidIndex("exponents must be nonzero".into()));
            }
            Ok((v.unsigned_abs() as u32, v < 0))
        };
        let inner: Vec<(u32, Sign)> = inner.iter().map(|&v| parse(v)).collect::<Result<_>>()?;
        SignedMtIndex::new(&inner, parse(outer)?)
    }

    pub fn inner(&self) -> &[(u32, Sign)] {
        &self.inner
    }

    pub fn outer_exponent(&self) -> u32 {
        self.outer_exponent
    }

    pub fn depth(&self) -> usize {
        self.inner.len()
    }

    pub fn weight(&self) -> u32 {
        self.inner.iter().map(|&(s, _)| s).sum::<u32>() + self.outer_exponent
    }

    /// Product of the absorbed inner signs.
    pub fn sign_product(&self) -> Sign {
        self.inner.iter().fold(false, |acc, &(_, neg)| acc ^ neg)
    }
}

impl fmt::Display for SignedMtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .inner
            .iter()
            .map(|&(s, neg)| format!("{}{}", sign_char(neg), s))
            .collect();
        write!(f, "T({};{})", parts.join(","), self.outer_exponent)
    }
}

/// One signed multiple zeta term over 0 < k_1 < ... < k_d.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedMzvTerm {
    entries: Vec<(u32, Sign)>,
}

impl SignedMzvTerm {
    pub fn new(entries: Vec<(u32, Sign)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidIndex("empty zeta index".into()));
        }
        if entries.iter().any(|&(s, _)| s == 0) {
            return Err(Error::InvalidIndex("exponents must be positive".into()));
        }
        let &(last, neg) = entries.last().expect("nonempty");
        if last == 1 && !neg {
            return Err(Error::DivergentTerm);
        }
        Ok(SignedMzvTerm { entries })
    }

    pub fn from_signed_ints(entries: &[i64]) -> Result<Self> {
        let parsed: Result<Vec<(u32, Sign)>> = entries
            .iter()
            .map(|&v| {
                if v == 0 {
                    Err(Error::InvalidIndex("exponents must be nonzero".into()))
                } else {
                    Ok((v.unsigned_abs() as u32, v < 0))
                }
            })
            .collect();
        SignedMzvTerm::new(parsed?)
    }

    pub fn entries(&self) -> &[(u32, Sign)] {
        &self.entries
    }

    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().map(|&(s, _)| s).sum()
    }

    /// Product of signs at odd positions (innermost first): the quantity
    /// the partial-fraction merge conserves.
    pub fn odd_position_sign_product(&self) -> Sign {
        self.entries
            .iter()
            .step_by(2)
            .fold(false, |acc, &(_, neg)| acc ^ neg)
    }
}

impl fmt::Display for SignedMzvTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(s, neg)| format!("{}{}", sign_char(neg), s))
            .collect();
        write!(f, "z({})", parts.join(","))
    }
}

/// A rational-linear combination of signed zeta terms, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MzvCombination {
    terms: Vec<(ExactRational, SignedMzvTerm)>,
}

impl MzvCombination {
    pub fn from_terms(raw: impl IntoIterator<Item = (ExactRational, SignedMzvTerm)>) -> Self {
        let mut map: BTreeMap<SignedMzvTerm, ExactRational> = BTreeMap::new();
        for (c, term) in raw {
            let entry = map.entry(term).or_insert_with(ExactRational::zero);
            *entry += &c;
        }
        let terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (c, t))
            .collect();
        MzvCombination { terms }
    }

    pub fn terms(&self) -> &[(ExactRational, SignedMzvTerm)] {
        &self.terms
    }
}

impl fmt::Display for MzvCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, t)| format!("{c}*{t}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduces an alternating Mordell-Tornheim symbol of depth 2 or 3 to a
/// combination of signed multiple zeta values.
pub fn mt_to_mzv(idx: &SignedMtIndex) -> Result<MzvCombination> {
    match idx.depth() {
        2 => {
            let [(sa, ea), (sb, eb)]: [(u32, Sign); 2] =
                idx.inner().try_into().expect("depth 2");
            let mut raw = Vec::new();
            pair_merge(sa, ea, sb, eb, idx.outer_exponent(), &mut raw)?;
            Ok(MzvCombination::from_terms(raw))
        }
        3 => {
            let inner = idx.inner();
            let n: u32 = inner.iter().map(|&(s, _)| s).sum();
            let w = idx.weight();
            let mut raw = Vec::new();
            // Pair (i, j) active, the third variable is the spectator.
            for (i, j, spectator) in [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)] {
                let (sx, ex) = inner[i];
                let (sy, ey) = inner[j];
                let (sz, ez) = inner[spectator];
                for x in 1..=sx {
                    for y in 1..=sy {
                        let coeff = multinomial(
                            (n - x - y - 1) as u64,
                            &[(sx - x) as u64, (sy - y) as u64, (sz - 1) as u64],
                        )
                        .expect("parts sum by construction");
                        let coeff =
                            ExactRational::from_big(BigInt::from(coeff), BigInt::from(1));
                        // T(x, y, 0; w - x - y) over (active, active, spectator):
                        // merge the active pair, the spectator joins at the
                        // second chain node.
                        let mu = w - x - y;
                        let mut sub = Vec::new();
                        pair_merge_with_spectator(x, ex, y, ey, ez, mu, &mut sub)?;
                        for (c, t) in sub {
                            raw.push((&c * &coeff, t));
                        }
                    }
                }
            }
            Ok(MzvCombination::from_terms(raw))
        }
        d => Err(Error::UnsupportedDepth(d)),
    }
}

/// Merge of two active variables x + y = u at the bottom of a depth-2
/// symbol: terms z((a, w - a); (e_x e_y, e_y)) and the mirrored block.
fn pair_merge(
    sx: u32,
    ex: Sign,
    sy: u32,
    ey: Sign,
    outer: u32,
    out: &mut Vec<(ExactRational, SignedMzvTerm)>,
) -> Result<()> {
    let w = sx + sy + outer;
    for (hi, e_hi, _, e_lo) in [(sx, ex, sy, ey), (sy, ey, sx, ex)] {
        for a in 1..=hi {
            let c = binomial((sx + sy - a - 1) as u64, (hi - a) as i64);
            let term = SignedMzvTerm::new(vec![(a, e_hi ^ e_lo), (w - a, e_lo)])?;
            out.push((
                ExactRational::from_big(BigInt::from(c), BigInt::from(1)),
                term,
            ));
        }
    }
    Ok(())
}

/// Merge for T(x-exp, y-exp, 0; mu) with a spectator variable: partial sums
/// u_2 = x + y and u_3 = x + y + z give depth-3 zeta terms.
fn pair_merge_with_spectator(
    sx: u32,
    ex: Sign,
    sy: u32,
    ey: Sign,
    ez: Sign,
    mu: u32,
    out: &mut Vec<(ExactRational, SignedMzvTerm)>,
) -> Result<()> {
    for (hi, e_hi, lo, e_lo) in [(sx, ex, sy, ey), (sy, ey, sx, ex)] {
        for s in 0..hi {
            let c = binomial((s + lo - 1) as u64, s as i64);
            let term = SignedMzvTerm::new(vec![
                (hi - s, e_hi ^ e_lo),
                (lo + s, e_lo ^ ez),
                (mu, ez),
            ])?;
            out.push((
                ExactRational::from_big(BigInt::from(c), BigInt::from(1)),
                term,
            ));
        }
    }
    Ok(())
}
