// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Number of abelian squares `f_d(t)`: words `xy` of length `t + t` over a
//! `d`-symbol alphabet where `y` is an anagram of `x`.
//!
//! Three independent routes are provided:
//!
//! * [`count_words_bruteforce`] walks every word and buckets by signature.
//! * [`count_signature_oracle`] sums squared multinomials over all signatures.
//! * [`count_fast`] evaluates the level recursion
//!   `f_d(t) = d * Σ_{k<t} C(t,k) C(t-1,k) f_{d-1}(k)`,
//!   which needs at most `min(t, d - 1)` levels and works for any `d`.
//!
//! The first two are guarded because their cost is combinatorial.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::combinatorics::{binomial_multiplicative, BigCount, PascalCache};
use crate::error::{Error, Result};

/// Default cap on enumeration steps for the brute-force and oracle routes.
pub const DEFAULT_ENUMERATION_GUARD: u64 = 10_000_000;

/// Alphabet size `d` (arbitrary precision, at least 1) and half-length `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianParams {
    d: BigUint,
    t: usize,
}

impl AbelianParams {
    pub fn new(d: impl Into<BigUint>, t: usize) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroAlphabet);
        }
        Ok(AbelianParams { d, t })
    }

    /// Alphabet of size `2^exponent`.
    pub fn power_of_two(exponent: u32, t: usize) -> Self {
        AbelianParams {
            d: BigUint::one() << exponent,
            t,
        }
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn t(&self) -> usize {
        self.t
    }

    fn small_d(&self, what: &'static str) -> Result<usize> {
        self.d.to_usize().ok_or_else(|| Error::GuardExceeded {
            what,
            required: format!("an alphabet of {} symbols", self.d),
            guard: usize::MAX as u64,
        })
    }
}

/// Per-symbol occurrence counts of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<usize>);

impl Signature {
    /// Signature of `word` over the alphabet `0..d`. Panics on a symbol `>= d`.
    pub fn of_word(word: &[usize], d: usize) -> Self {
        let mut counts = vec![0; d];
        for &symbol in word {
            counts[symbol] += 1;
        }
        Signature(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of words with this signature.
    pub fn word_count(&self, cache: &PascalCache) -> BigCount {
        cache.multinomial(&self.0)
    }
}

impl From<Vec<usize>> for Signature {
    fn from(counts: Vec<usize>) -> Self {
        Signature(counts)
    }
}

/// All compositions of `t` into `d` nonnegative parts.
///
/// Starts at `(t, 0, .., 0)`; each step decrements the rightmost nonzero part
/// among the first `d - 1` and moves that unit plus the whole last part into
/// the slot after it. Ends at `(0, .., 0, t)`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Compositions {
    /// Panics if `d == 0`.
    pub fn new(d: usize, t: usize) -> Self {
        assert!(d >= 1, "compositions need at least one part");
        let mut first = vec![0; d];
        first[0] = t;
        Compositions {
            current: Some(first),
        }
    }

    fn advance(parts: &mut [usize]) -> bool {
        let last = parts.len() - 1;
        let Some(i) = parts[..last].iter().rposition(|&p| p > 0) else {
            return false;
        };
        let tail = parts[last];
        parts[last] = 0;
        parts[i] -= 1;
        parts[i + 1] = tail + 1;
        true
    }
}

impl Iterator for Compositions {
    type Item = Signature;

    fn next(&mut self) -> Option<Signature> {
        let current = self.current.as_mut()?;
        let out = Signature(current.clone());
        if !Self::advance(current) {
            self.current = None;
        }
        Some(out)
    }
}

/// Number of signatures of length `t` over `d` symbols, `C(t + d - 1, t)`.
pub fn signature_count(d: &BigUint, t: usize) -> BigUint {
    binomial_multiplicative(&(d + BigUint::from(t) - 1u32), t)
}

fn check_guard(what: &'static str, required: &BigUint, guard: u64) -> Result<()> {
    if required > &BigUint::from(guard) {
        return Err(Error::GuardExceeded {
            what,
            required: required.to_string(),
            guard,
        });
    }
    Ok(())
}

/// Enumerate all `d^t` words, bucket by signature, and sum squared bucket sizes.
pub fn count_words_bruteforce(params: &AbelianParams, guard: u64) -> Result<BigCount> {
    const WHAT: &str = "word enumeration";
    let words = num_traits::pow(params.d.clone(), params.t);
    check_guard(WHAT, &words, guard)?;
    let d = params.small_d(WHAT)?;
    let t = params.t;

    // Odometer over words in base d, keeping the signature in sync.
    let mut word = vec![0usize; t];
    let mut signature = vec![0u32; d];
    signature[0] = t as u32;
    let mut buckets: HashMap<Vec<u32>, u64> = HashMap::new();
    loop {
        *buckets.entry(signature.clone()).or_insert(0) += 1;
        let mut pos = 0;
        loop {
            if pos == t {
                let total: BigUint = buckets
                    .values()
                    .map(|&n| BigUint::from(n) * BigUint::from(n))
                    .sum();
                return Ok(total);
            }
            signature[word[pos]] -= 1;
            word[pos] += 1;
            if word[pos] == d {
                word[pos] = 0;
                signature[0] += 1;
                pos += 1;
            } else {
                signature[word[pos]] += 1;
                break;
            }
        }
    }
}

/// Sum of squared multinomial coefficients over every signature.
pub fn count_signature_oracle(params: &AbelianParams, guard: u64) -> Result<BigCount> {
    const WHAT: &str = "signature enumeration";
    check_guard(WHAT, &signature_count(&params.d, params.t), guard)?;
    let d = params.small_d(WHAT)?;
    let cache = PascalCache::global();
    Ok(Compositions::new(d, params.t)
        .map(|sig| {
            let words = sig.word_count(cache);
            &words * &words
        })
        .sum())
}

/// `C(k, m) * C(k - 1, m)` for `1 <= k <= t`, `0 <= m < k`; row 0 is empty.
fn recursion_weights(t: usize, cache: &PascalCache) -> Vec<Vec<BigUint>> {
    let mut weights = Vec::with_capacity(t + 1);
    weights.push(Vec::new());
    for k in 1..=t {
        let row = (0..k)
            .map(|m| cache.binomial(k, m) * cache.binomial(k - 1, m))
            .collect();
        weights.push(row);
    }
    weights
}

/// `f_d(k)` for every `k` in `0..=t`, via the level recursion.
///
/// Let `J = min(t, d - 1)`. Level `j` holds `f_{d-j}(k)` for `k = 0..=t-j`.
/// The deepest level is either the unary alphabet (all ones) or the single
/// entry `f_{d-t}(0) = 1`; each shallower level follows from the one below it.
pub fn count_fast_row(params: &AbelianParams) -> Vec<BigCount> {
    let t = params.t;
    let d = &params.d;
    let d_minus_one = d - 1u32;
    let depth = d_minus_one.to_usize().map_or(t, |dm1| dm1.min(t));

    // Deepest level: f_1(k) = 1 for all k when depth = d - 1, otherwise
    // depth = t and the level is the single entry f_{d-t}(0) = 1.
    let mut row = vec![BigUint::one(); t - depth + 1];

    let weights = recursion_weights(t, PascalCache::global());
    for level in (0..depth).rev() {
        let multiplier = d - BigUint::from(level);
        let len = t - level + 1;
        let below = &row;
        let next: Vec<BigUint> = (0..len)
            .into_par_iter()
            .map(|k| {
                if k == 0 {
                    return BigUint::one();
                }
                let sum: BigUint = weights[k].iter().zip(&below[..k]).map(|(w, f)| w * f).sum();
                sum * &multiplier
            })
            .collect();
        row = next;
    }
    row
}

/// `f_d(t)` exactly, for any alphabet size.
pub fn count_fast(params: &AbelianParams) -> BigCount {
    count_fast_row(params)
        .pop()
        .expect("row always holds f_d(0..=t)")
}
