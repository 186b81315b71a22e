// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Maximal commutative (IQP-type) circuits in the Hadamard basis.
//!
//! A circuit is a set of rotations `exp(i α_S Z_S)`, one per nonempty qubit
//! subset `S` (encoded as a bitmask), applied to `|+>^n`. Because every gate is
//! diagonal, the output is `2^{-n/2} Σ_x e^{i θ_x} |x>` with `θ` the
//! Walsh-Hadamard transform of `α`.
//!
//! Two constructions are kept: [`build_state_gatewise`] applies gates one at a
//! time in `O(4^n)`, [`walsh_hadamard_phases`] uses the butterfly in
//! `O(n 2^n)`. The slow one exists to check the fast one.
//!
//! # Random streams
//!
//! [`mc_expected_fidelity_power`] draws from ChaCha8 keyed by
//! `seed_from_u64(seed)`. Sample `s` uses stream `s` starting at word 0; the
//! component draws are read in order `θ_1..θ_{d-1}` then `θ'_1..θ'_{d-1}`,
//! each `f64` consuming two 32-bit words. So the value for a given
//! `(seed, sample, component)` is fixed regardless of how samples are split
//! across threads.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest register size for phase-form states and Monte Carlo.
pub const MAX_QUBITS: u32 = 14;
/// Largest register size for the gate-by-gate reference construction.
pub const MAX_GATEWISE_QUBITS: u32 = 8;

fn reduce_angle(angle: f64) -> f64 {
    let r = angle.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

fn check_register(n: u32, max: u32) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::out_of_range("n", n, format!("1..={max}")));
    }
    Ok(())
}

/// Qubit count plus rotation angle per nonempty subset mask.
#[derive(Debug, Clone, PartialEq)]
pub struct CqcSpec {
    n: u32,
    alpha: BTreeMap<u32, f64>,
}

impl CqcSpec {
    /// Validates masks and angles; angles are stored reduced to `[0, 2π)`.
    pub fn new(n: u32, alpha: impl IntoIterator<Item = (u32, f64)>) -> Result<Self> {
        check_register(n, MAX_QUBITS)?;
        let top = (1u32 << n) - 1;
        let mut reduced = BTreeMap::new();
        for (mask, angle) in alpha {
            if mask == 0 || mask > top {
                return Err(Error::InvalidSpec(format!(
                    "subset mask {mask} outside 1..={top}"
                )));
            }
            if !angle.is_finite() {
                return Err(Error::InvalidSpec(format!(
                    "angle for mask {mask} is not finite"
                )));
            }
            reduced.insert(mask, reduce_angle(angle));
        }
        Ok(CqcSpec { n, alpha: reduced })
    }

    /// All `2^n - 1` rotations with angles uniform on `[0, 2π)`.
    pub fn random_maximal<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<Self> {
        check_register(n, MAX_QUBITS)?;
        let angles: Vec<(u32, f64)> = (1..(1u32 << n))
            .map(|m| (m, rng.gen::<f64>() * TAU))
            .collect();
        CqcSpec::new(n, angles)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn angles(&self) -> &BTreeMap<u32, f64> {
        &self.alpha
    }

    pub fn is_maximal(&self) -> bool {
        self.alpha.len() == (1usize << self.n) - 1
    }

    /// Dense `α` indexed by mask with `α_0 = 0`.
    pub fn dense_angles(&self) -> Vec<f64> {
        let mut dense = vec![0.0; 1 << self.n];
        for (&mask, &angle) in &self.alpha {
            dense[mask as usize] = angle;
        }
        dense
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: u32,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(n: u32, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != 1usize << n {
            return Err(Error::InvalidSpec(format!(
                "{} amplitudes for {n} qubits",
                amplitudes.len()
            )));
        }
        Ok(StateVector { n, amplitudes })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Multiply every amplitude by `e^{i phase}`.
    pub fn with_global_phase(&self, phase: f64) -> StateVector {
        let factor = Complex64::from_polar(1.0, phase);
        StateVector {
            n: self.n,
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }
}

/// Per-basis-state phases with `θ_0 = 0`, all in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseState {
    theta: Vec<f64>,
}

impl PhaseState {
    /// Shifts so `θ_0 = 0` and reduces mod 2π. Length must be `2^n`, `n >= 1`.
    pub fn from_phases(mut theta: Vec<f64>) -> Result<Self> {
        let d = theta.len();
        if d < 2 || !d.is_power_of_two() {
            return Err(Error::InvalidSpec(format!("phase vector of length {d}")));
        }
        if theta.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidSpec("phases must be finite".into()));
        }
        let origin = theta[0];
        for p in theta.iter_mut() {
            *p = reduce_angle(*p - origin);
        }
        theta[0] = 0.0;
        Ok(PhaseState { theta })
    }

    pub fn dim(&self) -> usize {
        self.theta.len()
    }

    pub fn n(&self) -> u32 {
        self.theta.len().trailing_zeros()
    }

    pub fn phases(&self) -> &[f64] {
        &self.theta
    }
}

/// Unnormalized in-place Walsh-Hadamard transform: afterwards
/// `values[x] = Σ_S old[S] (-1)^{popcount(S & x)}`. Length must be a power of two.
pub fn walsh_hadamard(values: &mut [f64]) {
    let len = values.len();
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
    let mut half = 1;
    while half < len {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// `θ = WHT(α)`, shifted so `θ_0 = 0`.
pub fn walsh_hadamard_phases(spec: &CqcSpec) -> PhaseState {
    let mut theta = spec.dense_angles();
    walsh_hadamard(&mut theta);
    PhaseState::from_phases(theta).expect("dense angles have length 2^n with n >= 1")
}

pub fn phase_state(ps: &PhaseState) -> StateVector {
    let scale = 1.0 / (ps.dim() as f64).sqrt();
    let amplitudes = ps
        .theta
        .iter()
        .map(|&p| Complex64::from_polar(scale, p))
        .collect();
    StateVector {
        n: ps.n(),
        amplitudes,
    }
}

/// Apply each `exp(i α_S Z_S)` to `|+>^n` in turn.
///
/// `Z_S` acts on `|x>` with eigenvalue `(-1)^{popcount(S & x)}`.
pub fn build_state_gatewise(spec: &CqcSpec) -> Result<StateVector> {
    check_register(spec.n, MAX_GATEWISE_QUBITS)?;
    let d = 1usize << spec.n;
    let mut amplitudes = vec![Complex64::new(1.0 / (d as f64).sqrt(), 0.0); d];
    for (&mask, &angle) in &spec.alpha {
        let plus = Complex64::from_polar(1.0, angle);
        let minus = plus.conj();
        for (x, amp) in amplitudes.iter_mut().enumerate() {
            let odd = (mask as usize & x).count_ones() & 1 == 1;
            *amp *= if odd { minus } else { plus };
        }
    }
    Ok(StateVector {
        n: spec.n,
        amplitudes,
    })
}

/// `|<a, b>|^2`, conjugating `a`.
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let inner: Complex64 = a
        .amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| x.conj() * y)
        .sum();
    Ok(inner.norm_sqr().min(1.0))
}

/// Fidelity of two phase-form states from the per-component phase
/// differences `φ_x = θ'_x − θ_x` for `x >= 1` (`φ_0 = 0`).
fn fidelity_from_differences(d: usize, diffs: impl Iterator<Item = f64>) -> f64 {
    let (mut re, mut im) = (1.0, 0.0);
    for phi in diffs {
        let (s, c) = phi.sin_cos();
        re += c;
        im += s;
    }
    let scale = 1.0 / d as f64;
    ((re * re + im * im) * scale * scale).min(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct McOptions {
    /// Draw `φ = θ' − θ` directly instead of the two phase vectors.
    pub sample_difference: bool,
}

/// Monte Carlo estimate of `E[F(ψ(θ), ψ(θ'))^t]` with `θ, θ'` i.i.d. uniform.
pub fn mc_expected_fidelity_power(
    n: u32,
    t: u32,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    mc_expected_fidelity_power_with(n, t, samples, seed, McOptions::default())
}

pub fn mc_expected_fidelity_power_with(
    n: u32,
    t: u32,
    samples: u64,
    seed: u64,
    options: McOptions,
) -> Result<MonteCarloEstimate> {
    check_register(n, MAX_QUBITS)?;
    if t == 0 {
        return Err(Error::out_of_range("t", 0, "1.."));
    }
    if samples == 0 {
        return Err(Error::out_of_range("samples", 0, "1.."));
    }
    let d = 1usize << n;
    let base = ChaCha8Rng::seed_from_u64(seed);
    let power = t as i32;

    let values: Vec<f64> = (0..samples)
        .into_par_iter()
        .map_init(
            || vec![0.0f64; d - 1],
            |theta, sample| {
                let mut rng = base.clone();
                rng.set_stream(sample);
                rng.set_word_pos(0);
                let f = if options.sample_difference {
                    fidelity_from_differences(d, (1..d).map(|_| rng.gen::<f64>() * TAU))
                } else {
                    for p in theta.iter_mut() {
                        *p = rng.gen::<f64>() * TAU;
                    }
                    fidelity_from_differences(d, theta.iter().map(|a| rng.gen::<f64>() * TAU - a))
                };
                f.powi(power)
            },
        )
        .collect();

    let count = samples as f64;
    let mean = values.iter().sum::<f64>() / count;
    let std_error = if samples > 1 {
        let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ss / (count - 1.0)).sqrt() / count.sqrt()
    } else {
        0.0
    };
    Ok(MonteCarloEstimate {
        mean,
        std_error,
        samples,
        seed,
    })
}
