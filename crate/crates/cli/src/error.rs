// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] abelsq_core::Error),

    #[error("self-test failed: {failed} of {total} cells mismatched")]
    SelfTestFailed { failed: usize, total: usize },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 0 success, 2 usage/parse, 3 guard or range violation, 4 self-test failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_guard_violation() => 3,
            CliError::Core(_) => 2,
            CliError::SelfTestFailed { .. } => 4,
            CliError::Io { .. } => 1,
        }
    }
}
