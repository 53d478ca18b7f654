//! The finite sums at small scale: exact rationals against the table-driven
//! modular engines.
//!
//! Run with: cargo run --release --example finite_sums

use mtzeta::sums::{
    chain_mhs, chain_mhs_exact, mhs, mhs_p_restricted, mt_restricted, mt_restricted_exact,
    mt_sum, mt_sum_exact, z_sum, z_sum_exact, ExponentIndex, MtIndex,
};

fn main() {
    let s12 = ExponentIndex::new(vec![1, 2]).unwrap();
    println!("H_5(1,2)        = {}", mhs(5, &s12));
    println!("H_6^(5)(1)      = {}", mhs_p_restricted(6, 5, &ExponentIndex::new(vec![1]).unwrap()).unwrap());

    let s111 = ExponentIndex::new(vec![1, 1, 1]).unwrap();
    println!("Z_5(1,1,1)      = {}", z_sum_exact(5, 1, &s111).unwrap());
    println!("Z_5(1,1,1)      = {}", z_sum(5, 1, &s111, 2).unwrap());

    println!("T_5(1,1;1)      = {}", mt_sum_exact(5, 1, &[1, 1], 1).unwrap());
    println!("T_5(1,1;1)      = {}", mt_sum(5, 1, &[1, 1], 1, 1).unwrap());

    let s11 = ExponentIndex::new(vec![1, 1]).unwrap();
    println!("H_9(1,1) chain  = {}", chain_mhs_exact(3, 2, &s11).unwrap());
    println!("H_9(1,1) chain  = {}", chain_mhs(3, 2, &s11, 2).unwrap());

    let idx = MtIndex::new(vec![1], vec![1, 1]).unwrap();
    println!("T_5(1;1,1)      = {}", mt_restricted_exact(5, 1, &idx).unwrap());
    println!("T_5(1;1,1)      = {}", mt_restricted(5, 1, &idx, 1).unwrap());

    // The modular engines must agree with the exact enumeration wherever
    // both run.
    println!("\nExact/modular agreement on a small grid:");
    for p in [3u64, 5, 7, 11, 13] {
        for r in 1..=2u32 {
            if p.pow(r) > 200 {
                continue;
            }
            let exact = z_sum_exact(p, r, &s111).unwrap().reduce_mod(p, 2).unwrap();
            let modular = z_sum(p, r, &s111, 2).unwrap();
            assert_eq!(exact, modular);
            println!("  Z_{{{p}^{r}}}(1,1,1): {modular}");
        }
    }
    println!("all agree");
}
