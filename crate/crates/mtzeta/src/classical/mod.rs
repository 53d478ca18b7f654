//! The classical side: counting functions and bounds for (alternating)
//! Mordell-Tornheim zeta values, the symbolic reduction to signed multiple
//! zeta values, and a numeric series evaluator with rigorous error bounds.

mod counts;
mod dd;
mod eval;
mod lyndon;
mod signed;
mod table;

pub use counts::{
    bound_expression, bound_report, count_alternating_mtzv, count_mtzv, fibonacci,
    partition_count, padovan, BoundReport, BoundRow,
};
pub use dd::{pi, zeta3, Dd};
pub use eval::{eval_mzv, Evaluated};
pub use lyndon::{count_deligne_generators, lyndon_count_odd_alphabet};
pub use signed::{mt_to_mzv, MzvCombination, SignedMtIndex, SignedMzvTerm};
pub use table::{value_table, verify_value_table, Reference, TableReport, TableRow};
