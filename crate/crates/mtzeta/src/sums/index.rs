//! Exponent indices: the arguments of every sum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition (s_1, ..., s_d) of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentIndex(Vec<u32>);

impl ExponentIndex {
    pub fn new(exponents: impl Into<Vec<u32>>) -> Result<Self> {
        let exponents = exponents.into();
        if exponents.is_empty() {
            return Err(Error::InvalidIndex("index must have depth >= 1".into()));
        }
        if exponents.iter().any(|&s| s == 0) {
            return Err(Error::InvalidIndex("exponents must be positive".into()));
        }
        Ok(ExponentIndex(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The index with entries sorted ascending; canonical representative under
    /// the block symmetry of symmetric sums.
    pub fn sorted(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable();
        ExponentIndex(v)
    }
}

impl fmt::Display for ExponentIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl TryFrom<&[u32]> for ExponentIndex {
    type Error = Error;
    fn try_from(v: &[u32]) -> Result<Self> {
        ExponentIndex::new(v.to_vec())
    }
}

/// Index of a p-restricted finite Mordell-Tornheim sum: a numerator block
/// (alpha_1, ..., alpha_m) over the summands and a chain block
/// (lambda_1, ..., lambda_n) over the partial sums.
///
/// Numerator exponents may be zero (a variable can enter the sum with no
/// weight of its own); chain exponents may be zero as well, which arises
/// when a depth-3 reduction leaves an unweighted intermediate chain node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MtIndex {
    alphas: Vec<u32>,
    lambdas: Vec<u32>,
}

impl MtIndex {
    pub fn new(alphas: impl Into<Vec<u32>>, lambdas: impl Into<Vec<u32>>) -> Result<Self> {
        let alphas = alphas.into();
        let lambdas = lambdas.into();
        if alphas.is_empty() {
            return Err(Error::InvalidIndex(
                "numerator block must have depth >= 1".into(),
            ));
        }
        if lambdas.is_empty() {
            return Err(Error::InvalidIndex("chain block must have n >= 1".into()));
        }
        Ok(MtIndex { alphas, lambdas })
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn lambdas(&self) -> &[u32] {
        &self.lambdas
    }

    pub fn weight(&self) -> u32 {
        self.alphas.iter().sum::<u32>() + self.lambdas.iter().sum::<u32>()
    }

    /// m + n - 1.
    pub fn depth(&self) -> usize {
        self.alphas.len() + self.lambdas.len() - 1
    }
}

impl fmt::Display for MtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alphas.iter().map(|s| s.to_string()).collect();
        let l: Vec<String> = self.lambdas.iter().map(|s| s.to_string()).collect();
        write!(f, "T({};{})", a.join(","), l.join(","))
    }
}
