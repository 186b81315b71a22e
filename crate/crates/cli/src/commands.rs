// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

use std::str::FromStr;

use abelsq_core::{
    count_fast, count_signature_oracle, count_words_bruteforce, expected_fidelity_power,
    expressiveness_grid, mc_expected_fidelity_power_with, normalized_expressiveness, AbelianParams,
    BigUint, McOptions,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::output::{Metadata, OutputRecordSet};
use crate::table1;

/// Largest half-length accepted by `count`.
pub const MAX_COUNT_T: usize = 4096;
/// Largest exponent accepted in the `2^k` alphabet form.
pub const MAX_DSPEC_EXPONENT: u32 = 1 << 16;

/// Alphabet size given either in decimal or as `2^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSpec(pub BigUint);

impl FromStr for DSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || {
            CliError::Usage(format!(
                "cannot parse alphabet size {s:?}; expected an integer or 2^k"
            ))
        };
        if let Some(exp) = s.strip_prefix("2^") {
            let k: u32 = exp.trim().parse().map_err(|_| bad())?;
            if k > MAX_DSPEC_EXPONENT {
                return Err(CliError::Usage(format!(
                    "exponent {k} above the supported maximum {MAX_DSPEC_EXPONENT}"
                )));
            }
            return Ok(DSpec(BigUint::from(1u32) << k));
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(DSpec(s.parse().map_err(|_| bad())?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Fast,
    Oracle,
    Words,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Oracle => "oracle",
            Method::Words => "words",
            Method::All => "all",
        }
    }
}

/// `f_d(t)` by the requested method(s). `All` adds an `agree` column.
pub fn cmd_count(
    d: &DSpec,
    t: usize,
    method: Method,
    guard: u64,
    command: &str,
) -> Result<OutputRecordSet, CliError> {
    if t > MAX_COUNT_T {
        return Err(abelsq_core::Error::OutOfRange {
            name: "t",
            value: t.to_string(),
            range: format!("0..={MAX_COUNT_T}"),
        }
        .into());
    }
    let params = AbelianParams::new(d.0.clone(), t)?;
    let methods: &[Method] = match method {
        Method::All => &[Method::Fast, Method::Oracle, Method::Words],
        Method::Fast => &[Method::Fast],
        Method::Oracle => &[Method::Oracle],
        Method::Words => &[Method::Words],
    };
    let mut results = Vec::with_capacity(methods.len());
    for &m in methods {
        let value = match m {
            Method::Fast => count_fast(&params),
            Method::Oracle => count_signature_oracle(&params, guard)?,
            Method::Words => count_words_bruteforce(&params, guard)?,
            Method::All => unreachable!(),
        };
        results.push((m, value));
    }

    let meta = Metadata::for_command(command, None);
    let d_text = params.d().to_string();
    if method == Method::All {
        let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
        let mut set = OutputRecordSet::new(&["d", "t", "method", "f", "agree"], meta);
        for (m, value) in results {
            set.push(vec![
                json!(d_text),
                json!(t),
                json!(m.name()),
                json!(value.to_string()),
                json!(agree),
            ]);
        }
        Ok(set)
    } else {
        let mut set = OutputRecordSet::new(&["d", "t", "method", "f"], meta);
        for (m, value) in results {
            set.push(vec![
                json!(d_text),
                json!(t),
                json!(m.name()),
                json!(value.to_string()),
            ]);
        }
        Ok(set)
    }
}

pub fn cmd_express(n: u32, t: u32, command: &str) -> Result<OutputRecordSet, CliError> {
    let record = normalized_expressiveness(n, t)?;
    let mut set = OutputRecordSet::new(
        &["n", "t", "e_ft", "e_ft_min", "normalized"],
        Metadata::for_command(command, None),
    );
    set.push(vec![
        json!(n),
        json!(t),
        json!(record.e_ft.to_string()),
        json!(record.e_ft_min.to_string()),
        json!(record.normalized),
    ]);
    Ok(set)
}

/// Column layout of the grid file.
pub const GRID_COLUMNS: [&str; 7] = [
    "n",
    "t",
    "e_ft_num",
    "e_ft_den",
    "e_ft_min_num",
    "e_ft_min_den",
    "normalized",
];

pub fn cmd_grid(n_values: &[u32], t_max: u32, command: &str) -> Result<OutputRecordSet, CliError> {
    let records = expressiveness_grid(n_values, t_max)?;
    let mut set = OutputRecordSet::new(&GRID_COLUMNS, Metadata::for_command(command, None));
    for r in records {
        set.push(vec![
            json!(r.n),
            json!(r.t),
            json!(r.e_ft.numer().to_string()),
            json!(r.e_ft.denom().to_string()),
            json!(r.e_ft_min.numer().to_string()),
            json!(r.e_ft_min.denom().to_string()),
            json!(r.normalized),
        ]);
    }
    Ok(set)
}

/// Parses `a..b` / `a..=b` (both inclusive), comma lists, single values, or
/// an empty string.
pub fn parse_n_list(s: &str) -> Result<Vec<u32>, CliError> {
    let bad = |part: &str| CliError::Usage(format!("cannot parse qubit list entry {part:?}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: u32 = lo.trim().parse().map_err(|_| bad(part))?;
            let hi: u32 = hi.trim().parse().map_err(|_| bad(part))?;
            if lo > hi {
                return Err(bad(part));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    Ok(out)
}

pub fn cmd_simulate(
    n: u32,
    t: u32,
    samples: u64,
    seed: u64,
    options: McOptions,
    command: &str,
) -> Result<OutputRecordSet, CliError> {
    let estimate = mc_expected_fidelity_power_with(n, t, samples, seed, options)?;
    let analytic = expected_fidelity_power(n, t)?;
    let analytic_f64 = analytic.to_f64();
    let z_score = (estimate.mean - analytic_f64) / estimate.std_error;
    let z_value = if z_score.is_finite() {
        json!(z_score)
    } else {
        Value::Null
    };
    let mut set = OutputRecordSet::new(
        &[
            "n",
            "t",
            "samples",
            "seed",
            "mean",
            "std_error",
            "analytic",
            "analytic_f64",
            "z_score",
        ],
        Metadata::for_command(command, Some(seed)),
    );
    set.push(vec![
        json!(n),
        json!(t),
        json!(samples),
        json!(seed),
        json!(estimate.mean),
        json!(estimate.std_error),
        json!(analytic.to_string()),
        json!(analytic_f64),
        z_value,
    ]);
    Ok(set)
}

#[derive(Debug)]
pub struct SelfTestReport {
    pub records: OutputRecordSet,
    pub total: usize,
    pub failed: usize,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Recomputes every fixture cell with the recursion and the signature oracle.
pub fn cmd_selftest(fixture: &[table1::Cell], command: &str) -> Result<SelfTestReport, CliError> {
    let mut set = OutputRecordSet::new(
        &["d", "t", "expected", "fast", "oracle", "pass"],
        Metadata::for_command(command, None),
    );
    let mut failed = 0;
    for cell in fixture {
        let params = AbelianParams::new(cell.d, cell.t)?;
        let fast = count_fast(&params);
        let oracle = count_signature_oracle(&params, u64::MAX)?;
        let pass = fast == cell.expected && oracle == cell.expected;
        if !pass {
            failed += 1;
        }
        set.push(vec![
            json!(cell.d.to_string()),
            json!(cell.t),
            json!(cell.expected.to_string()),
            json!(fast.to_string()),
            json!(oracle.to_string()),
            json!(pass),
        ]);
    }
    Ok(SelfTestReport {
        records: set,
        total: fixture.len(),
        failed,
    })
}
