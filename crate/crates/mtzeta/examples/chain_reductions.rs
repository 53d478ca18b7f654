//! Partial-fraction reductions of finite Mordell-Tornheim sums to
//! chain-restricted harmonic sums. These are exact rational identities, so
//! they hold bit-for-bit at any modulus.
//!
//! Run with: cargo run --release --example chain_reductions

use mtzeta::reductions::{reduce_t20_to_h3, reduce_t2_to_h, reduce_t3_to_t2};
use mtzeta::sums::{chain_mhs, mt_sum, mt_sum_exact};

fn main() {
    println!("Depth-2 reductions:");
    for (a, b, c) in [(1u32, 1, 1), (1, 2, 1), (2, 2, 1), (3, 1, 2)] {
        let combo = reduce_t2_to_h(a, b, c).unwrap();
        println!("  T({a},{b};{c}) = {combo}");
    }

    // The anchor identity, exact: T_5(1,1;1) = 2 H_5(1,2) = 17/16.
    let anchor = reduce_t2_to_h(1, 1, 1).unwrap().eval_exact(5, 1).unwrap();
    assert_eq!(anchor, mt_sum_exact(5, 1, &[1, 1], 1).unwrap());
    println!("\nT_5(1,1;1) = 2 H_5(1,2) = {anchor} exactly");

    // Exactness at full modular precision M = 4.
    let mut checked = 0;
    for a in 1..=3u32 {
        for b in 1..=3u32 {
            for c in 1..=3u32 {
                for (p, r) in [(5u64, 1u32), (5, 2), (7, 1), (7, 2)] {
                    let lhs = mt_sum(p, r, &[a, b], c, 4).unwrap();
                    let rhs = reduce_t2_to_h(a, b, c).unwrap().eval_mod(p, r, 4).unwrap();
                    assert_eq!(lhs, rhs);
                    checked += 1;
                }
            }
        }
    }
    println!("depth-2 reduction exact at M = 4 on {checked} grid points");

    println!("\nDepth-3 expansion of T(2,1,1;1) into T(x,y,0;mu) terms:");
    for t in reduce_t3_to_t2(2, 1, 1, 1).unwrap() {
        println!("  {} * T({},{},0;{})", t.coeff, t.x, t.y, t.outer);
    }

    println!("\nT(a,b,0;l) reduces to depth-3 chain sums:");
    for (a, b, l) in [(1u32, 1, 2), (2, 1, 3)] {
        println!("  T({a},{b},0;{l}) = {}", reduce_t20_to_h3(a, b, l).unwrap());
    }

    // A depth-3 chain value used above, both modular and direct.
    let h = chain_mhs(
        7,
        1,
        &mtzeta::sums::ExponentIndex::new(vec![1, 1, 2]).unwrap(),
        2,
    )
    .unwrap();
    println!("\nH_7(1,1,2) = {h}");
}
