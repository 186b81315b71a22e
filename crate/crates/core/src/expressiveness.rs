// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Fidelity moments of maximal commutative circuits.
//!
//! For `n` qubits (`d = 2^n`) the `t`-th fidelity moment is
//! `E[F^t] = f_d(t) / 4^{nt}`, and its floor over all state ensembles is
//! `1 / C(t + d - 1, t)`. Their quotient is the normalized expressiveness.
//! Everything is exact until [`ExpressivenessRecord::normalized`].

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::binomial_multiplicative;
use crate::counting::{count_fast_row, AbelianParams};
use crate::error::{Error, Result};
use crate::ratio::BigRatio;

/// Largest qubit count accepted by the exact routines.
pub const MAX_QUBITS: u32 = 4096;
/// Largest fidelity power accepted by the exact routines.
pub const MAX_POWER: u32 = 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct ExpressivenessRecord {
    pub n: u32,
    pub t: u32,
    pub e_ft: BigRatio,
    pub e_ft_min: BigRatio,
    pub normalized: f64,
}

impl ExpressivenessRecord {
    /// `e_ft_min / e_ft` as an exact rational.
    pub fn normalized_exact(&self) -> BigRatio {
        &self.e_ft_min / &self.e_ft
    }

    fn from_parts(n: u32, t: u32, e_ft: BigRatio, e_ft_min: BigRatio) -> Self {
        let normalized = (&e_ft_min / &e_ft).to_f64();
        ExpressivenessRecord {
            n,
            t,
            e_ft,
            e_ft_min,
            normalized,
        }
    }
}

fn check_qubits(n: u32) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::out_of_range("n", n, format!("1..={MAX_QUBITS}")));
    }
    Ok(())
}

fn check_power(t: u32) -> Result<()> {
    if t == 0 || t > MAX_POWER {
        return Err(Error::out_of_range("t", t, format!("1..={MAX_POWER}")));
    }
    Ok(())
}

fn moment_from_count(n: u32, t: u32, count: BigUint) -> BigRatio {
    let denominator = BigUint::one() << (2 * n as u64 * t as u64);
    BigRatio::new(count, denominator)
}

/// `E[F^t] = f_{2^n}(t) / 4^{nt}`, reduced.
pub fn expected_fidelity_power(n: u32, t: u32) -> Result<BigRatio> {
    check_qubits(n)?;
    check_power(t)?;
    let row = count_fast_row(&AbelianParams::power_of_two(n, t as usize));
    Ok(moment_from_count(n, t, row[t as usize].clone()))
}

/// `1 / C(t + d - 1, t)`, the moment of a uniformly covering ensemble.
pub fn min_expected_fidelity_power(d: &BigUint, t: u32) -> Result<BigRatio> {
    if d.is_zero() {
        return Err(Error::ZeroAlphabet);
    }
    check_power(t)?;
    let choose = binomial_multiplicative(&(d + t - 1u32), t as usize);
    Ok(BigRatio::reciprocal_of(choose))
}

pub fn normalized_expressiveness(n: u32, t: u32) -> Result<ExpressivenessRecord> {
    let e_ft = expected_fidelity_power(n, t)?;
    let e_ft_min = min_expected_fidelity_power(&(BigUint::one() << n), t)?;
    Ok(ExpressivenessRecord::from_parts(n, t, e_ft, e_ft_min))
}

/// Records for every `(n, t)` with `n` in `n_values` and `t` in `1..=t_max`,
/// sorted by `(n, t)`.
///
/// One recursion per `n` yields `f_{2^n}(t)` for all `t` at once; distinct
/// `n` are computed in parallel.
pub fn expressiveness_grid(n_values: &[u32], t_max: u32) -> Result<Vec<ExpressivenessRecord>> {
    check_power(t_max)?;
    for &n in n_values {
        check_qubits(n)?;
    }
    let per_n: Vec<Vec<ExpressivenessRecord>> = n_values
        .par_iter()
        .map(|&n| {
            let row = count_fast_row(&AbelianParams::power_of_two(n, t_max as usize));
            let d = BigUint::one() << n;
            (1..=t_max)
                .map(|t| {
                    let e_ft = moment_from_count(n, t, row[t as usize].clone());
                    let e_ft_min = min_expected_fidelity_power(&d, t)?;
                    Ok(ExpressivenessRecord::from_parts(n, t, e_ft, e_ft_min))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut records: Vec<_> = per_n.into_iter().flatten().collect();
    records.sort_by_key(|r| (r.n, r.t));
    Ok(records)
}
