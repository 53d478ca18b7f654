//! A grid scan over the conjectured congruence items, persisted as JSON
//! lines with a per-kind summary.
//!
//! Run with: cargo run --release --example conjecture_scan

use mtzeta::verify::scan::{scan, PrimeSpec, RangeSpec, ScanConfig, ScanKind};

fn main() {
    let out = std::env::temp_dir().join("mtzeta_conjecture_records.jsonl");
    let _ = std::fs::remove_file(&out);
    let config = ScanConfig {
        kinds: vec![ScanKind::Conjecture],
        primes: PrimeSpec::List(vec![5, 7, 11]),
        r_range: RangeSpec { min: 2, max: 3 },
        depth_range: RangeSpec { min: 4, max: 5 },
        weight_max: 6,
        workers: 0,
        out_path: Some(out.clone()),
        include_sharpness: false,
    };
    let result = scan(&config).unwrap();
    print!("{}", result.summary_csv());
    println!(
        "\n{} records written to {}",
        result.reports.len(),
        out.display()
    );
    for rep in result.reports.iter().take(5) {
        println!(
            "  {}  lhs={} rhs={} verdict={}",
            rep.claim.key(),
            rep.lhs.value(),
            rep.rhs.value(),
            rep.verdict
        );
    }
    println!("  ...");
    assert!(result.all_passed(), "a conjectured congruence failed");
    println!("all verdicts true");
}
