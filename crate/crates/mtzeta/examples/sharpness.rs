//! Sharpness of the conjectured moduli: Z_{13^3}(8,1,1,1) matches
//! 13^4 Z_13(8,1,1,1) modulo 13^5 but not modulo 13^6, so the exponent in
//! the depth-4 congruence cannot be raised.
//!
//! The full instance enumerates on the order of 10^9 compositions. Run
//! with: cargo run --release --example sharpness  (add --quick for a small
//! p = 7 analog that finishes instantly)

use mtzeta::sums::ExponentIndex;
use mtzeta::verify::check_sharpness;

fn main() {
    let quick = std::env::args().any(|a| a == "--quick");
    let (p, r, s) = if quick {
        (7u64, 2u32, vec![2u32, 1, 1, 1])
    } else {
        println!("running the full 13^3 instance; expect minutes of work...");
        (13, 3, vec![8, 1, 1, 1])
    };
    let idx = ExponentIndex::new(s).unwrap();
    let started = std::time::Instant::now();
    let rep = check_sharpness(p, r, &idx).unwrap();
    let e = rep.claim.modulus_exponent;
    println!(
        "Z_{{{p}^{r}}}{idx} vs {p}^{} Z_{p}{idx}:",
        2 * r - 2
    );
    println!(
        "  congruent mod {p}^{}: {}",
        e - 1,
        rep.lhs.to_precision(e - 1) == rep.rhs.to_precision(e - 1)
    );
    println!("  congruent mod {p}^{}: {}", e, rep.lhs == rep.rhs);
    println!("  sharp: {}   ({:.1?})", rep.verdict, started.elapsed());
}
