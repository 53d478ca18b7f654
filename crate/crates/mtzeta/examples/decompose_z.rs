//! The Z-sum decomposes into finite Mordell-Tornheim sums modulo p^{2r}:
//! brute force on the left, the two-term decomposition on the right.
//!
//! Run with: cargo run --release --example decompose_z

use mtzeta::reductions::decompose_z;
use mtzeta::sums::{z_sum, ExponentIndex};

fn main() {
    println!("Z_{{p^r}}(s) = (-1)^t ( T(front; t) + t p^r T(front; t+1) )  mod p^2r\n");
    let mut checked = 0;
    for (p, r) in [(5u64, 1u32), (5, 2), (7, 1), (7, 2)] {
        for s in [
            vec![1u32, 1],
            vec![1, 2],
            vec![1, 1, 1],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
            vec![2, 1, 2, 1],
        ] {
            let idx = ExponentIndex::new(s).unwrap();
            if idx.weight() >= 2 * 3 + 1 {
                continue;
            }
            let via_decomposition = decompose_z(p, r, &idx).unwrap();
            let via_brute_force = z_sum(p, r, &idx, 2 * r).unwrap();
            assert_eq!(via_decomposition, via_brute_force, "Z{idx} at p={p}, r={r}");
            checked += 1;
            if r == 1 && p == 5 {
                println!("Z_5{idx} = {via_brute_force}");
            }
        }
    }
    println!("\ndecomposition agrees with brute force on {checked} grid points");
}
