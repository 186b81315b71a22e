// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

use abelsq_core::{
    binomial, count_fast, count_signature_oracle, count_words_bruteforce, AbelianParams, BigUint,
    DEFAULT_ENUMERATION_GUARD,
};
use num_traits::pow;

const GUARD: u64 = DEFAULT_ENUMERATION_GUARD;

fn params(d: u64, t: usize) -> AbelianParams {
    AbelianParams::new(d, t).unwrap()
}

/// f_d(2) = d(2d - 1): signature shapes (2) contribute d * 1^2, shapes (1,1)
/// contribute C(d,2) * 2^2.
fn closed_form_t2(d: &BigUint) -> BigUint {
    d * (d * 2u32 - 1u32)
}

/// f_d(3): shapes (3), (2,1), (1,1,1) give d*1 + d(d-1)*3^2 + C(d,3)*6^2.
fn closed_form_t3(d: &BigUint) -> BigUint {
    let one = BigUint::from(1u32);
    let two = BigUint::from(2u32);
    if d < &two {
        return d.clone();
    }
    let dm1 = d - &one;
    let mut value = d + BigUint::from(9u32) * d * &dm1;
    if d > &two {
        value += BigUint::from(6u32) * d * &dm1 * (d - &two);
    }
    value
}

#[test]
fn three_way_agreement_small_grid() {
    for d in 1..=5 {
        for t in 0..=5 {
            let p = params(d, t);
            let words = count_words_bruteforce(&p, GUARD).unwrap();
            let oracle = count_signature_oracle(&p, GUARD).unwrap();
            let fast = count_fast(&p);
            assert_eq!(words, oracle, "d={d} t={t}");
            assert_eq!(oracle, fast, "d={d} t={t}");
        }
    }
}

#[test]
fn two_way_agreement_wider_grid() {
    for d in 1..=8 {
        for t in 0..=8 {
            let p = params(d, t);
            assert_eq!(
                count_signature_oracle(&p, GUARD).unwrap(),
                count_fast(&p),
                "d={d} t={t}"
            );
        }
    }
}

#[test]
fn power_bounds() {
    for d in 1..=8u64 {
        for t in 0..=8 {
            let f = count_fast(&params(d, t));
            assert!(pow(BigUint::from(d), t) <= f);
            assert!(f <= pow(BigUint::from(d), 2 * t));
        }
    }
}

#[test]
fn strictly_increasing() {
    for t in 1..=8 {
        for d in 1..8u64 {
            assert!(
                count_fast(&params(d, t)) < count_fast(&params(d + 1, t)),
                "d={d} t={t}"
            );
        }
    }
    for d in 2..=8u64 {
        for t in 0..8 {
            assert!(
                count_fast(&params(d, t)) < count_fast(&params(d, t + 1)),
                "d={d} t={t}"
            );
        }
    }
}

#[test]
fn binary_alphabet_gives_central_binomials() {
    for t in 0..=12 {
        assert_eq!(count_fast(&params(2, t)), binomial(2 * t, t));
    }
}

#[test]
fn closed_forms_reproduce_oracle_for_small_d() {
    for d in 1..=6u64 {
        let big = BigUint::from(d);
        assert_eq!(
            closed_form_t2(&big),
            count_signature_oracle(&params(d, 2), GUARD).unwrap()
        );
        assert_eq!(
            closed_form_t3(&big),
            count_signature_oracle(&params(d, 3), GUARD).unwrap()
        );
    }
    // matches the t=2 and t=3 columns of the reference table
    let t2: Vec<u64> = vec![1, 6, 15, 28, 45, 66];
    let t3: Vec<u64> = vec![1, 20, 93, 256, 545, 996];
    for d in 1..=6u64 {
        assert_eq!(
            closed_form_t2(&BigUint::from(d)),
            BigUint::from(t2[d as usize - 1])
        );
        assert_eq!(
            closed_form_t3(&BigUint::from(d)),
            BigUint::from(t3[d as usize - 1])
        );
    }
}

#[test]
fn huge_alphabets_match_closed_forms() {
    for n in 1..=64 {
        let d = BigUint::from(1u32) << n;
        assert_eq!(
            count_fast(&AbelianParams::power_of_two(n, 2)),
            closed_form_t2(&d),
            "n={n}"
        );
        assert_eq!(
            count_fast(&AbelianParams::power_of_two(n, 3)),
            closed_form_t3(&d),
            "n={n}"
        );
    }
    let d = BigUint::from(1024u32);
    assert_eq!(closed_form_t2(&d), BigUint::from(2_096_128u32));
    assert_eq!(
        count_fast(&AbelianParams::power_of_two(10, 3)),
        BigUint::from(1024u64 + 9 * 1024 * 1023 + 6 * 1024 * 1023 * 1022)
    );
}

#[test]
fn alphabet_far_beyond_machine_words() {
    let d = BigUint::from(1u32) << 4096u32;
    let p = AbelianParams::new(d.clone(), 3).unwrap();
    assert_eq!(count_fast(&p), closed_form_t3(&d));
}
