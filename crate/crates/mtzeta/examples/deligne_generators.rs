//! Generator counts for the alternating zeta spaces: multisets of Lyndon
//! words over the odd alphabet with an even circle power, counted per
//! weight and compared against the Fibonacci numbers.
//!
//! Run with: cargo run --release --example deligne_generators

use mtzeta::classical::{count_deligne_generators, fibonacci, lyndon_count_odd_alphabet};

fn main() {
    println!("Lyndon words over 1 < 3 < 5 < ... by letter sum:");
    for v in 1..=12u32 {
        println!("  sum {v:>2}: {}", lyndon_count_odd_alphabet(v));
    }
    println!("\ngenerator counts vs Fibonacci (F_0 = F_1 = 1):");
    for w in 1..=25u32 {
        let count = count_deligne_generators(w);
        let fib = fibonacci(w);
        assert_eq!(count, fib);
        println!("  w = {w:>2}: {count}");
    }
    println!("all 25 weights match the Fibonacci numbers");
}
