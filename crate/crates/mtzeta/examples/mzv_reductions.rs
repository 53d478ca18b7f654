//! Symbolic reduction of alternating Mordell-Tornheim symbols to signed
//! multiple zeta values, and direct numeric evaluation of the results.
//!
//! Run with: cargo run --release --example mzv_reductions

use mtzeta::classical::{eval_mzv, mt_to_mzv, Dd, SignedMtIndex, SignedMzvTerm};

fn main() {
    println!("Reductions (a bar is a leading minus):");
    for (inner, outer) in [
        (vec![1i64, 1], 1i64),
        (vec![1, 2], 1),
        (vec![-1, 1], 1),
        (vec![-1, -1], 2),
        (vec![1, 1, 1], 1),
        (vec![-1, -1, 1], 1),
    ] {
        let idx = SignedMtIndex::from_signed_ints(&inner, outer).unwrap();
        println!("  {idx} = {}", mt_to_mzv(&idx).unwrap());
    }

    println!("\nNumeric spot checks (cutoff 100000):");
    let z12 = eval_mzv(&SignedMzvTerm::from_signed_ints(&[1, 2]).unwrap(), 100_000).unwrap();
    let z3 = eval_mzv(&SignedMzvTerm::from_signed_ints(&[3]).unwrap(), 100_000).unwrap();
    println!(
        "  z(1,2) = {:.12}  z(3) = {:.12}  |diff| = {:.2e}",
        z12.value_f64(),
        z3.value_f64(),
        (z12.value - z3.value).abs().to_f64()
    );
    assert!((z12.value - z3.value).abs().to_f64() <= z12.bound + z3.bound);

    let z2 = eval_mzv(&SignedMzvTerm::from_signed_ints(&[2]).unwrap(), 100_000).unwrap();
    let pi2_over_6 = mtzeta::classical::pi() * mtzeta::classical::pi() / Dd::from_u64(6);
    println!(
        "  z(2)   = {:.12}  pi^2/6 = {:.12}  bound = {:.2e}",
        z2.value_f64(),
        pi2_over_6.to_f64(),
        z2.bound
    );
    assert!((z2.value - pi2_over_6).abs().to_f64() <= z2.bound);
}
