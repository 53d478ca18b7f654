//! Bernoulli numbers, exact and reduced into residue rings.
//!
//! Run with: cargo run --release --example bernoulli_numbers

use mtzeta::exact::{bernoulli, bernoulli_mod};

fn main() {
    println!("Exact Bernoulli numbers (B_1 = -1/2 convention):");
    for n in 0..=16u64 {
        let b = bernoulli(n);
        if !b.is_zero() || n == 0 {
            println!("  B_{n:<2} = {b}");
        }
    }

    println!("\nReductions modulo prime powers:");
    for (n, p, m) in [(2u64, 5u64, 1u32), (10, 7, 2), (96, 11, 3)] {
        match bernoulli_mod(n, p, m) {
            Ok(r) => println!("  B_{n} = {r}"),
            Err(e) => println!("  B_{n} mod {p}^{m}: {e}"),
        }
    }

    // Van Staudt-Clausen in action: p - 1 dividing n makes the denominator
    // a multiple of p, so the reduction is refused.
    println!("\nIrregular modulus:");
    match bernoulli_mod(4, 5, 1) {
        Ok(_) => unreachable!("5 divides denom(B_4) = 30"),
        Err(e) => println!("  B_4 mod 5: {e}"),
    }
}
