// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Library side of the `abelsq` command: each subcommand is a function
//! returning an [`OutputRecordSet`], so tests can drive them without a process.

pub mod commands;
mod error;
pub mod output;
pub mod table1;

pub use commands::{
    cmd_count, cmd_express, cmd_grid, cmd_selftest, cmd_simulate, parse_n_list, DSpec, Method,
    SelfTestReport, GRID_COLUMNS,
};
pub use error::CliError;
pub use output::{Format, Metadata, OutputRecordSet};
