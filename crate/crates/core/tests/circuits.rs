// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

use abelsq_core::{
    build_state_gatewise, count_fast, expected_fidelity_power, expressiveness_grid, fidelity,
    mc_expected_fidelity_power, mc_expected_fidelity_power_with, normalized_expressiveness,
    phase_state, walsh_hadamard_phases, AbelianParams, BigRatio, BigUint, CqcSpec, McOptions,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn gatewise_and_phase_form_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1..=5 {
        for _ in 0..50 {
            let spec = CqcSpec::random_maximal(n, &mut rng).unwrap();
            let slow = build_state_gatewise(&spec).unwrap();
            let fast = phase_state(&walsh_hadamard_phases(&spec));
            assert!((slow.norm_sqr() - 1.0).abs() < 1e-12);
            let f = fidelity(&slow, &fast).unwrap();
            assert!((f - 1.0).abs() < 1e-10, "n={n} fidelity={f}");
        }
    }
}

#[test]
fn moments_reconstruct_unreduced_counts() {
    for n in 1..=4u32 {
        for t in 1..=6u32 {
            let e = expected_fidelity_power(n, t).unwrap();
            let count = count_fast(&AbelianParams::power_of_two(n, t as usize));
            let denominator = BigUint::from(1u32) << (2 * n * t);
            assert_eq!(e, BigRatio::new(count.clone(), denominator.clone()));
            // the reduced denominator divides 4^{nt}, and scaling back gives f exactly
            assert_eq!(&denominator % e.denom(), BigUint::from(0u32));
            assert_eq!(e.numer() * (&denominator / e.denom()), count);
        }
    }
}

#[test]
fn moments_lie_between_minimum_and_one() {
    let one = BigRatio::from_integer(1u32.into());
    for r in expressiveness_grid(&(1..=8).collect::<Vec<_>>(), 32).unwrap() {
        assert!(!r.e_ft_min.is_zero());
        assert!(r.e_ft_min <= r.e_ft, "n={} t={}", r.n, r.t);
        assert!(r.e_ft <= one);
        assert!(r.normalized > 0.0 && r.normalized <= 1.0);
        assert_eq!(r.normalized, r.normalized_exact().to_f64());
    }
}

#[test]
fn first_moment_is_always_uniform() {
    for n in 1..=20 {
        assert!(normalized_expressiveness(n, 1)
            .unwrap()
            .normalized_exact()
            .is_one());
    }
}

#[test]
fn normalized_decays_with_power() {
    let grid = expressiveness_grid(&(1..=8).collect::<Vec<_>>(), 32).unwrap();
    for pair in grid.windows(2).filter(|w| w[0].n == w[1].n) {
        assert!(
            pair[1].normalized_exact() <= pair[0].normalized_exact(),
            "n={} t={}",
            pair[1].n,
            pair[1].t
        );
    }
}

#[test]
fn monte_carlo_matches_exact_moments() {
    for n in 1..=4 {
        for t in 1..=4 {
            let est =
                mc_expected_fidelity_power(n, t, 200_000, 1000 + (n * 10 + t) as u64).unwrap();
            let exact = expected_fidelity_power(n, t).unwrap().to_f64();
            assert!(
                (est.mean - exact).abs() <= 5.0 * est.std_error,
                "n={n} t={t} mean={} exact={exact} se={}",
                est.mean,
                est.std_error
            );
        }
    }
}

#[test]
fn difference_sampling_agrees_with_pair_sampling() {
    let options = McOptions {
        sample_difference: true,
    };
    for (n, t) in [(1, 2), (2, 2), (3, 3)] {
        let est = mc_expected_fidelity_power_with(n, t, 100_000, 5, options).unwrap();
        let exact = expected_fidelity_power(n, t).unwrap().to_f64();
        assert!(
            (est.mean - exact).abs() <= 5.0 * est.std_error,
            "n={n} t={t}"
        );
    }
}

/// Sampling circuit angles and transforming them should give the same moment
/// as sampling basis-state phases directly.
#[test]
fn angle_sampling_agrees_with_phase_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let samples = 40_000;
    for n in 1..=3u32 {
        for t in 1..=3 {
            let values: Vec<f64> = (0..samples)
                .map(|_| {
                    let a = phase_state(&walsh_hadamard_phases(
                        &CqcSpec::random_maximal(n, &mut rng).unwrap(),
                    ));
                    let b = phase_state(&walsh_hadamard_phases(
                        &CqcSpec::random_maximal(n, &mut rng).unwrap(),
                    ));
                    fidelity(&a, &b).unwrap().powi(t as i32)
                })
                .collect();
            let mean = values.iter().sum::<f64>() / samples as f64;
            let var =
                values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (samples as f64 - 1.0);
            let se = (var / samples as f64).sqrt();
            let exact = expected_fidelity_power(n, t).unwrap().to_f64();
            assert!(
                (mean - exact).abs() <= 5.0 * se,
                "n={n} t={t} mean={mean} exact={exact}"
            );
        }
    }
}

#[test]
fn monte_carlo_is_thread_count_independent() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| mc_expected_fidelity_power(3, 2, 30_000, 17).unwrap())
    };
    let serial = run(1);
    for threads in [2, 3, 8] {
        let parallel = run(threads);
        assert_eq!(serial.mean.to_bits(), parallel.mean.to_bits());
        assert_eq!(serial.std_error.to_bits(), parallel.std_error.to_bits());
    }
    assert_eq!(
        serial,
        mc_expected_fidelity_power(3, 2, 30_000, 17).unwrap()
    );
    assert_ne!(
        serial.mean,
        mc_expected_fidelity_power(3, 2, 30_000, 18).unwrap().mean
    );
}
