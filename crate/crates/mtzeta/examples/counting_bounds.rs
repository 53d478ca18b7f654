//! Counting functions and the dimension-bound comparisons: partition
//! numbers, Padovan and Fibonacci benchmarks, symbol counts with and
//! without signs, and the computed crossover weights.
//!
//! Run with: cargo run --release --example counting_bounds

use mtzeta::classical::{
    bound_report, count_alternating_mtzv, count_mtzv, fibonacci, padovan, partition_count,
};

fn main() {
    println!("p(100) = {}", partition_count(100));
    println!("P_15   = {}", padovan(15));
    println!("F_10   = {}", fibonacci(10));
    println!("N_4    = {} symbols of weight 4", count_mtzv(4));
    println!("A_4    = {} signed symbols of weight 4", count_alternating_mtzv(4));

    let report = bound_report(120);
    println!("\nw, N_w, P_w, A_w, floor-bound, F_w  (every 10th row):");
    for row in report.rows.iter().filter(|r| r.w % 10 == 0) {
        println!(
            "  {:>3}  {:>14} {:>10} {:>16} {:>16} {:>12}",
            row.w, row.n_w, row.p_w, row.a_w, row.bound_expr, row.f_w
        );
    }
    println!(
        "\ncomputed crossovers (least w from which the inequality holds onward):"
    );
    println!(
        "  N_w < P_w            from w = {:?}",
        report.crossover_n_below_padovan
    );
    println!(
        "  A_w - N_w + P_w < F_w  from w = {:?}",
        report.crossover_amt_exact
    );
    println!(
        "  bound - N_w + P_w < F_w  from w = {:?}",
        report.crossover_amt_bound
    );
}
