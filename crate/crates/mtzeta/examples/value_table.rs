//! The fourteen closed-form identities for weight-3 and weight-4
//! alternating Mordell-Tornheim values, verified numerically with rigorous
//! error bounds.
//!
//! Run with: cargo run --release --example value_table
//! (pass a cutoff as the first argument; default 200000 here, the full
//! verification at 1000000 runs in the acceptance suite)

use mtzeta::classical::verify_value_table;

fn main() {
    let cutoff: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200_000);
    let tolerance = 1e-5;
    let report = verify_value_table(cutoff, tolerance).unwrap();
    for row in &report.rows {
        println!(
            "[{}] {:<14} = {:<40} lhs={:+.10} rhs={:+.10} dev={:.2e} bound={:.2e}",
            if row.pass { "PASS" } else { "FAIL" },
            row.symbol,
            row.reduction,
            row.lhs,
            row.rhs,
            row.deviation,
            row.error_bound
        );
    }
    println!(
        "\nmax deviation {:.3e} at cutoff {} (tolerance {:.0e})",
        report.max_deviation, report.cutoff, report.tolerance
    );
    assert!(report.all_pass());
}
