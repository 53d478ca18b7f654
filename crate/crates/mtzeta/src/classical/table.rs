//! The weight-3 and weight-4 value table: fourteen closed-form identities
//! for alternating Mordell-Tornheim values, verified numerically.
//!
//! Each left side reduces symbolically to signed zeta terms and is summed
//! by the series evaluator; each right side is a rational combination of
//! pi^4, the cubic zeta constant, and z(1,-3). The check passes when the
//! deviation and the accumulated rigorous error bounds both sit below the
//! tolerance.

use crate::classical::dd::{pi, zeta3, Dd};
use crate::classical::eval::eval_mzv;
use crate::classical::signed::{mt_to_mzv, SignedMtIndex, SignedMzvTerm};
use crate::error::Result;
use crate::exact::ExactRational;

/// Reference constants appearing on the right-hand sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reference {
    PiFourth,
    Zeta3,
    /// z(1, -3), evaluated by the same series engine.
    Zeta13Bar,
}

/// The fourteen table identities: symbol and right-hand side.
pub fn value_table() -> Vec<(SignedMtIndex, Vec<(ExactRational, Reference)>)> {
    let sym = |inner: &[i64], outer: i64| SignedMtIndex::from_signed_ints(inner, outer).unwrap();
    let q = |n: i64, d: i64| ExactRational::new(n, d);
    vec![
        (sym(&[1, 1], 1), vec![(q(2, 1), Reference::Zeta3)]),
        (sym(&[-1, 1], 1), vec![(q(-5, 8), Reference::Zeta3)]),
        (sym(&[-1, -1], 1), vec![(q(1, 4), Reference::Zeta3)]),
        (sym(&[1, 1, 1], 1), vec![(q(1, 15), Reference::PiFourth)]),
        (sym(&[-1, -1, 1], 1), vec![(q(1, 240), Reference::PiFourth)]),
        (
            sym(&[-1, 1, 1], 1),
            vec![
                (q(-1, 72), Reference::PiFourth),
                (q(-1, 1), Reference::Zeta13Bar),
            ],
        ),
        (sym(&[1, 2], 1), vec![(q(1, 72), Reference::PiFourth)]),
        (sym(&[-1, -2], 1), vec![(q(1, 288), Reference::PiFourth)]),
        (
            sym(&[-1, -1, -1], 1),
            vec![
                (q(-1, 240), Reference::PiFourth),
                (q(3, 1), Reference::Zeta13Bar),
            ],
        ),
        (sym(&[1, 1], 2), vec![(q(1, 180), Reference::PiFourth)]),
        (sym(&[-1, -1], 2), vec![(q(2, 1), Reference::Zeta13Bar)]),
        (
            sym(&[-1, 2], 1),
            vec![
                (q(-1, 240), Reference::PiFourth),
                (q(-1, 1), Reference::Zeta13Bar),
            ],
        ),
        (
            sym(&[1, -2], 1),
            vec![
                (q(-7, 720), Reference::PiFourth),
                (q(1, 1), Reference::Zeta13Bar),
            ],
        ),
        (
            sym(&[-1, 1], 2),
            vec![
                (q(-1, 480), Reference::PiFourth),
                (q(-1, 1), Reference::Zeta13Bar),
            ],
        ),
    ]
}

/// One verified identity.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub symbol: String,
    pub reduction: String,
    pub lhs: f64,
    pub rhs: f64,
    pub deviation: f64,
    pub error_bound: f64,
    pub pass: bool,
}

/// The table verdict.
#[derive(Clone, Debug)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub cutoff: u64,
    pub tolerance: f64,
    pub max_deviation: f64,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn apply(coeff: &ExactRational, value: Dd) -> Dd {
    Dd::from_ratio(coeff.numer(), coeff.denom()) * value
}

/// Checks all fourteen identities at the given series cutoff and absolute
/// tolerance. A row passes when the deviation is below tolerance and the
/// rigorous evaluation bounds stay below it too.
pub fn verify_value_table(cutoff: u64, tolerance: f64) -> Result<TableReport> {
    let pi4 = pi().powi(4);
    let z3 = zeta3();
    let z13 = eval_mzv(&SignedMzvTerm::from_signed_ints(&[1, -3])?, cutoff)?;
    // The two series constants are good to ~30 digits; fold in a generous
    // static bound.
    const CONST_BOUND: f64 = 1e-28;

    let mut rows = Vec::new();
    let mut max_deviation = 0f64;
    for (symbol, rhs_spec) in value_table() {
        let combo = mt_to_mzv(&symbol)?;
        let mut lhs = Dd::ZERO;
        let mut bound = 0f64;
        for (coeff, term) in combo.terms() {
            let eval = eval_mzv(term, cutoff)?;
            lhs = lhs + apply(coeff, eval.value);
            let c = Dd::from_ratio(coeff.numer(), coeff.denom())
                .abs()
                .to_f64();
            bound += c * eval.bound;
        }
        let mut rhs = Dd::ZERO;
        for (coeff, reference) in &rhs_spec {
            let (value, ref_bound) = match reference {
                Reference::PiFourth => (pi4, CONST_BOUND),
                Reference::Zeta3 => (z3, CONST_BOUND),
                Reference::Zeta13Bar => (z13.value, z13.bound),
            };
            rhs = rhs + apply(coeff, value);
            let c = Dd::from_ratio(coeff.numer(), coeff.denom())
                .abs()
                .to_f64();
            bound += c * ref_bound;
        }
        let deviation = (lhs - rhs).abs().to_f64();
        max_deviation = max_deviation.max(deviation);
        rows.push(TableRow {
            symbol: symbol.to_string(),
            reduction: combo.to_string(),
            lhs: lhs.to_f64(),
            rhs: rhs.to_f64(),
            deviation,
            error_bound: bound,
            pass: deviation <= tolerance && bound < tolerance,
        });
    }
    Ok(TableReport {
        rows,
        cutoff,
        tolerance,
        max_deviation,
    })
}
