use num::bigint::BigInt;

use super::*;
use crate::exact::ExactRational;
use crate::sums::{
    mt_restricted_exact, mt_sum_exact, z_sum, z_sum_exact, ExponentIndex, MtIndex,
};

fn idx(v: &[u32]) -> ExponentIndex {
    ExponentIndex::new(v.to_vec()).unwrap()
}

fn combo(terms: &[(i64, &[u32])]) -> ChainMhsCombination {
    ChainMhsCombination::from_terms(
        terms
            .iter()
            .map(|&(c, v)| (BigInt::from(c), idx(v))),
    )
}

#[test]
fn t2_reduction_shapes() {
    assert_eq!(reduce_t2_to_h(1, 1, 1).unwrap(), combo(&[(2, &[1, 2])]));
    assert_eq!(
        reduce_t2_to_h(1, 2, 1).unwrap(),
        combo(&[(2, &[1, 3]), (1, &[2, 2])])
    );
    assert_eq!(reduce_t2_to_h(1, 1, 1).unwrap().to_string(), "2*H(1,2)");
    assert_eq!(
        reduce_t2_to_h(1, 2, 1).unwrap().to_string(),
        "2*H(1,3) + 1*H(2,2)"
    );
}

#[test]
fn t2_coefficient_mass_is_central_binomial() {
    for alpha in 1..=8u32 {
        for beta in 1..=8u32 {
            let mass = reduce_t2_to_h(alpha, beta, 1).unwrap().coefficient_mass();
            assert_eq!(
                mass,
                BigInt::from(binomial((alpha + beta) as u64, alpha as i64)),
                "alpha={alpha} beta={beta}"
            );
        }
    }
}

#[test]
fn t2_reduction_is_exact_identity() {
    // Anchor: T_5(1,1;1) = 2 H_5(1,2) = 17/16 exactly.
    let anchor = reduce_t2_to_h(1, 1, 1).unwrap().eval_exact(5, 1).unwrap();
    assert_eq!(anchor.to_string(), "17/16");
    assert_eq!(mt_sum_exact(5, 1, &[1, 1], 1).unwrap(), anchor);

    for (alpha, beta, gamma) in [(1u32, 1u32, 2u32), (2, 1, 1), (2, 2, 1), (1, 3, 2)] {
        for (p, r) in [(5u64, 1u32), (7, 1), (5, 2)] {
            let lhs = mt_sum_exact(p, r, &[alpha, beta], gamma).unwrap();
            let rhs = reduce_t2_to_h(alpha, beta, gamma)
                .unwrap()
                .eval_exact(p, r)
                .unwrap();
            assert_eq!(lhs, rhs, "T({alpha},{beta};{gamma}) at p={p}, r={r}");
        }
    }
}

#[test]
fn t3_expansion_shapes() {
    let terms = reduce_t3_to_t2(1, 1, 1, 1).unwrap();
    assert_eq!(terms.len(), 3);
    for t in &terms {
        assert_eq!((t.x, t.y, t.outer), (1, 1, 2));
        assert!(t.coeff.is_one());
    }

    let terms = reduce_t3_to_t2(2, 1, 1, 1).unwrap();
    let block1: Vec<_> = terms
        .iter()
        .take(2)
        .map(|t| (t.x, t.y, t.outer, t.coeff.clone()))
        .collect();
    assert_eq!(
        block1,
        vec![
            (1, 1, 3, BigUint::from(1u32)),
            (2, 1, 2, BigUint::from(1u32)),
        ]
    );
}

#[test]
fn t3_expansion_is_exact_identity() {
    for (alpha, beta, gamma, lambda) in [(1u32, 1, 1, 1), (2, 1, 1, 1), (1, 2, 1, 2), (2, 2, 1, 1)]
    {
        for (p, r) in [(5u64, 1u32), (7, 1)] {
            let lhs = mt_sum_exact(p, r, &[alpha, beta, gamma], lambda).unwrap();
            let mut rhs = ExactRational::zero();
            for t in reduce_t3_to_t2(alpha, beta, gamma, lambda).unwrap() {
                let part = mt_restricted_exact(
                    p,
                    r,
                    &MtIndex::new(vec![t.x, t.y, 0], vec![t.outer]).unwrap(),
                )
                .unwrap();
                let c = ExactRational::from_big(BigInt::from(t.coeff), BigInt::one());
                rhs += &(&c * &part);
            }
            assert_eq!(lhs, rhs, "T({alpha},{beta},{gamma};{lambda}) p={p} r={r}");
        }
    }
}

#[test]
fn t20_reduction_shapes() {
    assert_eq!(
        reduce_t20_to_h3(1, 1, 4).unwrap(),
        combo(&[(2, &[1, 1, 4])])
    );
    assert_eq!(
        reduce_t20_to_h3(2, 1, 3).unwrap(),
        combo(&[(1, &[2, 1, 3]), (2, &[1, 2, 3])])
    );
}

#[test]
fn t20_reduction_is_exact_identity() {
    for (alpha, beta, lambda) in [(1u32, 1, 2), (2, 1, 1), (2, 2, 2), (3, 1, 1)] {
        for (p, r) in [(5u64, 1u32), (7, 1), (5, 2), (7, 2)] {
            let lhs = mt_restricted_exact(
                p,
                r,
                &MtIndex::new(vec![alpha, beta, 0], vec![lambda]).unwrap(),
            )
            .unwrap();
            let rhs = reduce_t20_to_h3(alpha, beta, lambda)
                .unwrap()
                .eval_exact(p, r)
                .unwrap();
            assert_eq!(lhs, rhs, "T({alpha},{beta},0;{lambda}) p={p} r={r}");
        }
    }
}

#[test]
fn reductions_conserve_weight() {
    for (a, b, c) in [(1u32, 2, 3), (3, 1, 1), (2, 2, 2)] {
        let w = a + b + c;
        assert_eq!(reduce_t2_to_h(a, b, c).unwrap().weight(), Some(w));
        assert_eq!(reduce_t20_to_h3(a, b, c).unwrap().weight(), Some(w));
        for t in reduce_t3_to_t2(a, b, c, 2).unwrap() {
            assert_eq!(t.x + t.y + t.outer, w + 2);
        }
    }
}

#[test]
fn decompose_z_matches_oracle() {
    let d = decompose_z(5, 1, &idx(&[1, 1, 1])).unwrap();
    assert_eq!(d.value_u64(), Some(8));
    assert_eq!(d, z_sum(5, 1, &idx(&[1, 1, 1]), 2).unwrap());

    for (p, r) in [(5u64, 1u32), (7, 1), (5, 2), (7, 2)] {
        for s in [
            vec![1u32, 1],
            vec![1, 2],
            vec![2, 1],
            vec![1, 1, 1],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ] {
            let s = idx(&s);
            assert_eq!(
                decompose_z(p, r, &s).unwrap(),
                z_sum(p, r, &s, 2 * r).unwrap(),
                "Z{s} at p={p}, r={r}"
            );
        }
    }
}

#[test]
fn z4_chain_expansion_matches_oracle() {
    for (a, b, c, l) in [(1u32, 1, 1, 1), (1, 1, 1, 2), (2, 1, 1, 1), (1, 2, 1, 1)] {
        let got = z4_via_chain_mhs(a, b, c, l, 7, 1, FourthBlockVariant::Corrected).unwrap();
        let want = z_sum(7, 1, &idx(&[a, b, c, l]), 2).unwrap();
        assert_eq!(got, want, "({a},{b},{c},{l}) at p=7");
    }
    // Supercongruence precision: mod 5^4 at r = 2.
    let got = z4_via_chain_mhs(1, 1, 1, 1, 5, 2, FourthBlockVariant::Corrected).unwrap();
    let want = z_sum(5, 2, &idx(&[1, 1, 1, 1]), 4).unwrap();
    assert_eq!(got, want);
}

#[test]
fn z4_rejects_small_primes() {
    assert!(matches!(
        z4_via_chain_mhs(1, 1, 1, 2, 5, 1, FourthBlockVariant::Corrected),
        Err(Error::PreconditionViolated(_))
    ));
}

#[test]
fn yang_cai_base_case() {
    // (1,1,1): the bracket collapses to -2, so the value is -2 B_{p-3}.
    let got = yang_cai_closed_form(1, 1, 1, 5).unwrap();
    assert_eq!(got.value_u64(), Some(3));
    assert_eq!(got, z_sum(5, 1, &idx(&[1, 1, 1]), 1).unwrap());

    for p in [5u64, 7, 11, 13, 31] {
        let direct = bernoulli(p - 3).reduce_mod(p, 1).unwrap();
        let minus_two = direct.scale(&BigInt::from(-2));
        assert_eq!(yang_cai_closed_form(1, 1, 1, p).unwrap(), minus_two);
    }
}

#[test]
fn yang_cai_is_symmetric_in_first_two() {
    for (a, b, c) in [(1u32, 2, 2), (1, 3, 1), (2, 2, 1)] {
        assert_eq!(
            yang_cai_closed_form(a, b, c, 11).unwrap(),
            yang_cai_closed_form(b, a, c, 11).unwrap()
        );
    }
}

#[test]
fn yang_cai_preconditions() {
    assert!(yang_cai_closed_form(1, 1, 2, 11).is_err()); // even weight
    assert!(yang_cai_closed_form(2, 2, 1, 5).is_err()); // p = w
}

#[test]
fn h_coefficient_values() {
    assert!(h_coeff(1, 1, 1).is_zero());
    assert_eq!(h_coeff(1, 1, 2), ExactRational::new(-5, 4));
    for a in 1..=6u32 {
        for b in 1..=6u32 {
            for c in 1..=6u32 {
                assert_eq!(h_coeff(a, b, c), -h_coeff(c, b, a));
            }
        }
    }
}

#[test]
fn z4_closed_form_matches_oracle() {
    for (a, b, c, l) in [(1u32, 1, 1, 2), (2, 1, 1, 1), (1, 1, 2, 1), (1, 1, 1, 4)] {
        let got = z4_closed_form(a, b, c, l, 11, FourthBlockVariant::Corrected).unwrap();
        let want = z_sum(11, 1, &idx(&[a, b, c, l]), 1).unwrap();
        assert_eq!(got, want, "closed form ({a},{b},{c},{l}) mod 11");
    }
}

#[test]
fn z4_closed_form_is_symmetric_in_first_three() {
    let reference = z4_closed_form(1, 2, 2, 2, 13, FourthBlockVariant::Corrected).unwrap();
    for (a, b, c) in [(2u32, 1, 2), (2, 2, 1), (1, 2, 2)] {
        assert_eq!(
            z4_closed_form(a, b, c, 2, 13, FourthBlockVariant::Corrected).unwrap(),
            reference
        );
    }
}

#[test]
fn literal_variant_fails_somewhere_on_the_grid() {
    // The literal reading must lose to the oracle for some index where the
    // middle block is asymmetric; the corrected reading never does.
    let mut literal_mismatch = false;
    for (a, b, c, l) in [(1u32, 2, 1, 1), (2, 1, 2, 2), (1, 2, 2, 2), (1, 1, 2, 1)] {
        let want = z_sum(11, 1, &idx(&[a, b, c, l]), 1).unwrap();
        let corrected = z4_closed_form(a, b, c, l, 11, FourthBlockVariant::Corrected).unwrap();
        assert_eq!(corrected, want, "corrected ({a},{b},{c},{l})");
        let literal = z4_closed_form(a, b, c, l, 11, FourthBlockVariant::Literal).unwrap();
        if literal != want {
            literal_mismatch = true;
        }
    }
    assert!(literal_mismatch, "literal variant matched the oracle everywhere");
}
