//! Counting functions and the dimension-bound table.
//!
//! - [`partition_count`]: p(n) by the pentagonal-number recurrence
//! - [`padovan`], [`fibonacci`]: the two benchmark sequences
//! - [`count_mtzv`]: N_w, the number of weight-w Mordell-Tornheim symbols
//! - [`count_alternating_mtzv`]: A_w, with alternating signs counted up to
//!   block symmetry
//! - [`bound_expression`]: the displayed floor-sqrt upper bound for A_w
//! - [`bound_report`]: per-weight table with comparison flags and computed
//!   crossover weights
//!
//! The report never asserts the published crossover thresholds; it computes
//! its own and leaves the comparison to the reader.

use std::sync::Mutex;

use num::bigint::BigUint;
use num::{One, Zero};
use serde::Serialize;

/// Memoized partition numbers. Single-writer cache: growing the table while
/// holding the lock keeps results identical to sequential evaluation.
static PARTITIONS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// p(n) via the pentagonal recurrence
/// p(n) = sum_k (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
pub fn partition_count(n: u64) -> BigUint {
    let n = n as usize;
    let mut memo = PARTITIONS.lock().unwrap();
    if memo.is_empty() {
        memo.push(BigUint::one());
    }
    while memo.len() <= n {
        let i = memo.len();
        let mut acc = BigUint::zero();
        let mut neg = BigUint::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let positive = k % 2 == 1;
            let add = |g: usize, acc: &mut BigUint, neg: &mut BigUint| {
                if g <= i {
                    if positive {
                        *acc += &memo[i - g];
                    } else {
                        *neg += &memo[i - g];
                    }
                }
            };
            add(g1, &mut acc, &mut neg);
            add(k * (3 * k + 1) / 2, &mut acc, &mut neg);
            k += 1;
        }
        memo.push(acc - neg);
    }
    memo[n].clone()
}

/// Padovan numbers: P_2 = P_3 = P_4 = 1, P_w = P_{w-2} + P_{w-3}.
pub fn padovan(w: u32) -> BigUint {
    assert!(w >= 2, "Padovan numbers start at index 2");
    let mut seq = vec![BigUint::one(), BigUint::one(), BigUint::one()];
    for i in 5..=w as usize {
        let next = &seq[i - 2 - 2] + &seq[i - 3 - 2];
        seq.push(next);
    }
    seq[w as usize - 2].clone()
}

/// Fibonacci numbers in the F_0 = F_1 = 1 convention.
pub fn fibonacci(w: u32) -> BigUint {
    let mut a = BigUint::one();
    let mut b = BigUint::one();
    for _ in 0..w {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// N_w = sum_{j=2}^{w-1} (p(j) - 1): the number of Mordell-Tornheim symbols
/// of weight w (the inner block is a partition with at least two parts).
pub fn count_mtzv(w: u32) -> BigUint {
    assert!(w >= 3);
    let mut acc = BigUint::zero();
    for j in 2..w {
        acc += partition_count(j as u64) - BigUint::one();
    }
    acc
}

/// Coefficients of prod_{s >= 1} 1/(1 - x^s)^2 up to degree `max`: each
/// partition counted with weight prod (multiplicity + 1), which is exactly
/// the number of sign patterns on its blocks.
fn signed_partition_weights(max: usize) -> Vec<BigUint> {
    let mut g = vec![BigUint::zero(); max + 1];
    g[0] = BigUint::one();
    for s in 1..=max {
        for _ in 0..2 {
            for i in s..=max {
                let add = g[i - s].clone();
                g[i] += add;
            }
        }
    }
    g
}

/// A_w: the number of alternating Mordell-Tornheim symbols of weight w,
/// counting sign patterns up to the symmetry of repeated exponent blocks.
pub fn count_alternating_mtzv(w: u32) -> BigUint {
    assert!(w >= 3);
    let weights = signed_partition_weights(w as usize - 1);
    let mut acc = BigUint::zero();
    for i in 2..w as usize {
        // Drop the single-part partition (weight 2): the inner block needs
        // at least two arguments.
        acc += &weights[i] - BigUint::from(2u32);
    }
    acc
}

/// The displayed bound sum_{i=2}^{w-1} floor((sqrt(8i+1)-1)/2) (p(i)-1),
/// taken literally.
pub fn bound_expression(w: u32) -> BigUint {
    assert!(w >= 3);
    let mut acc = BigUint::zero();
    for i in 2..w as u64 {
        // Largest m with m(m+1)/2 <= i.
        let mut m = 0u64;
        while (m + 1) * (m + 2) / 2 <= i {
            m += 1;
        }
        acc += BigUint::from(m) * (partition_count(i) - BigUint::one());
    }
    acc
}

/// One weight row of the bound report.
#[derive(Clone, Debug, Serialize)]
pub struct BoundRow {
    pub w: u32,
    pub partition_sum: String,
    pub n_w: String,
    pub p_w: String,
    pub a_w: String,
    pub bound_expr: String,
    pub f_w: String,
    /// N_w < P_w
    pub n_below_padovan: bool,
    /// A_w - N_w + P_w < F_w
    pub amt_exact_below_fibonacci: bool,
    /// bound_expr - N_w + P_w < F_w
    pub amt_bound_below_fibonacci: bool,
}

/// The bound table plus the least weights from which each inequality holds
/// for every scanned weight onward.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
    pub crossover_n_below_padovan: Option<u32>,
    pub crossover_amt_exact: Option<u32>,
    pub crossover_amt_bound: Option<u32>,
}

impl BoundReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "w,partition_sum,N_w,P_w,A_w,bound_expr,F_w,N<P,A-N+P<F,bound-N+P<F\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                r.w,
                r.partition_sum,
                r.n_w,
                r.p_w,
                r.a_w,
                r.bound_expr,
                r.f_w,
                r.n_below_padovan,
                r.amt_exact_below_fibonacci,
                r.amt_bound_below_fibonacci
            ));
        }
        out
    }
}

/// Builds the per-weight table for 3 <= w <= w_max and locates the
/// crossovers.
pub fn bound_report(w_max: u32) -> BoundReport {
    assert!(w_max >= 3);
    let mut rows = Vec::with_capacity(w_max as usize - 2);
    for w in 3..=w_max {
        let n_w = count_mtzv(w);
        let p_w = padovan(w);
        let a_w = count_alternating_mtzv(w);
        let bound = bound_expression(w);
        let f_w = fibonacci(w);
        let partition_sum: BigUint = (2..w).map(|j| partition_count(j as u64)).sum();
        // The two alternating comparisons from the dimension argument:
        // dim AMT_w <= A_w - N_w + P_w (exact count) and the same with the
        // displayed floor-sqrt bound in place of A_w.
        let amt_exact = &a_w - &n_w + &p_w;
        let amt_bound = &bound - &n_w + &p_w;
        rows.push(BoundRow {
            w,
            partition_sum: partition_sum.to_string(),
            n_w: n_w.to_string(),
            p_w: p_w.to_string(),
            a_w: a_w.to_string(),
            bound_expr: bound.to_string(),
            f_w: f_w.to_string(),
            n_below_padovan: n_w < p_w,
            amt_exact_below_fibonacci: amt_exact < f_w,
            amt_bound_below_fibonacci: amt_bound < f_w,
        });
    }
    let crossover = |flag: fn(&BoundRow) -> bool| -> Option<u32> {
        let mut best = None;
        for row in rows.iter().rev() {
            if flag(row) {
                best = Some(row.w);
            } else {
                break;
            }
        }
        best
    };
    BoundReport {
        crossover_n_below_padovan: crossover(|r| r.n_below_padovan),
        crossover_amt_exact: crossover(|r| r.amt_exact_below_fibonacci),
        crossover_amt_bound: crossover(|r| r.amt_bound_below_fibonacci),
        rows,
    }
}
