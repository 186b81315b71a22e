// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    ZeroAlphabet,

    #[error("{what} needs {required} steps, above the enumeration guard {guard}")]
    GuardExceeded {
        what: &'static str,
        required: String,
        guard: u64,
    },

    #[error("{name} = {value} is outside the supported range {range}")]
    OutOfRange {
        name: &'static str,
        value: String,
        range: String,
    },

    #[error("state dimension mismatch: {left} qubits vs {right} qubits")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("invalid circuit spec: {0}")]
    InvalidSpec(String),
}

impl Error {
    pub(crate) fn out_of_range(
        name: &'static str,
        value: impl ToString,
        range: impl ToString,
    ) -> Self {
        Error::OutOfRange {
            name,
            value: value.to_string(),
            range: range.to_string(),
        }
    }

    /// True for enumeration-guard and range violations.
    pub fn is_guard_violation(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. } | Error::OutOfRange { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
