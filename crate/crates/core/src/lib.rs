// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact counting of abelian squares and its use in measuring how expressive
//! maximal commutative quantum circuits are.
//!
//! * [`combinatorics`]: cached binomial and multinomial coefficients.
//! * [`counting`]: `f_d(t)` by brute force, by signature sums, and by the fast
//!   level recursion that stays cheap for alphabets like `d = 2^1024`.
//! * [`expressiveness`]: exact fidelity moments `E[F^t] = f_{2^n}(t) / 4^{nt}`
//!   and their normalized form.
//! * [`cqc`]: state-vector simulation and Monte Carlo estimation of the same
//!   moments.
//!
//! ```
//! use abelsq_core::{count_fast, AbelianParams};
//!
//! let p = AbelianParams::new(3u32, 3).unwrap();
//! assert_eq!(count_fast(&p).to_string(), "93");
//!
//! // 2^1024 symbols, half-length 4: roughly 4! * d^4
//! let huge = AbelianParams::power_of_two(1024, 4);
//! assert_eq!(count_fast(&huge).bits(), 4 * 1024 + 5);
//! ```

pub mod combinatorics;
pub mod counting;
pub mod cqc;
mod error;
pub mod expressiveness;
mod ratio;

pub use combinatorics::{binomial, multinomial, BigCount, PascalCache};
pub use counting::{
    count_fast, count_fast_row, count_signature_oracle, count_words_bruteforce, AbelianParams,
    Compositions, Signature, DEFAULT_ENUMERATION_GUARD,
};
pub use cqc::{
    build_state_gatewise, fidelity, mc_expected_fidelity_power, mc_expected_fidelity_power_with,
    phase_state, walsh_hadamard, walsh_hadamard_phases, CqcSpec, McOptions, MonteCarloEstimate,
    PhaseState, StateVector,
};
pub use error::{Error, Result};
pub use expressiveness::{
    expected_fidelity_power, expressiveness_grid, min_expected_fidelity_power,
    normalized_expressiveness, ExpressivenessRecord,
};
pub use num_bigint::BigUint;
pub use ratio::{BigRatio, ParseRatioError};
