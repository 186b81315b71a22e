// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact binomial and multinomial coefficients.
//!
//! Rows of Pascal's triangle are cached on demand up to a configurable cap
//! (4096 by default). Past the cap coefficients are produced with the
//! multiplicative formula instead, so memory stays bounded.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer.
pub type BigCount = BigUint;

pub const DEFAULT_ROW_CAP: usize = 4096;

/// Cache of Pascal rows `0..=cap`, grown lazily and shared between threads.
///
/// Readers only take the read lock; growth takes the write lock and extends
/// the row list once, so concurrent callers never duplicate work for long.
#[derive(Debug)]
pub struct PascalCache {
    cap: usize,
    rows: RwLock<Vec<Arc<[BigUint]>>>,
}

impl Default for PascalCache {
    fn default() -> Self {
        Self::with_cap(DEFAULT_ROW_CAP)
    }
}

impl PascalCache {
    pub fn with_cap(cap: usize) -> Self {
        PascalCache {
            cap,
            rows: RwLock::new(vec![Arc::from(vec![BigUint::one()])]),
        }
    }

    /// Process-wide cache with the default cap.
    pub fn global() -> &'static PascalCache {
        static GLOBAL: OnceLock<PascalCache> = OnceLock::new();
        GLOBAL.get_or_init(PascalCache::default)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Number of rows currently materialized.
    pub fn cached_rows(&self) -> usize {
        self.rows.read().expect("pascal cache poisoned").len()
    }

    /// Row `n` of Pascal's triangle, `C(n, 0..=n)`. Returns `None` above the cap.
    pub fn row(&self, n: usize) -> Option<Arc<[BigUint]>> {
        if n > self.cap {
            return None;
        }
        {
            let rows = self.rows.read().expect("pascal cache poisoned");
            if let Some(row) = rows.get(n) {
                return Some(Arc::clone(row));
            }
        }
        let mut rows = self.rows.write().expect("pascal cache poisoned");
        while rows.len() <= n {
            let next = next_row(rows.last().expect("row 0 always present"));
            rows.push(next);
        }
        Some(Arc::clone(&rows[n]))
    }

    pub fn binomial(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        match self.row(n) {
            Some(row) => row[k].clone(),
            None => binomial_multiplicative(&BigUint::from(n), k),
        }
    }

    /// `(Σ parts)! / Π parts!` as a product of binomials over prefix sums.
    ///
    /// An empty slice is the empty product, 1.
    pub fn multinomial(&self, parts: &[usize]) -> BigUint {
        let mut total = 0usize;
        let mut acc = BigUint::one();
        for &part in parts {
            total += part;
            if part != 0 && part != total {
                acc *= self.binomial(total, part);
            }
        }
        acc
    }
}

fn next_row(prev: &[BigUint]) -> Arc<[BigUint]> {
    let mut row = Vec::with_capacity(prev.len() + 1);
    row.push(BigUint::one());
    for pair in prev.windows(2) {
        row.push(&pair[0] + &pair[1]);
    }
    row.push(BigUint::one());
    row.into()
}

/// `C(n, k)` for arbitrary-precision `n` and machine-sized `k`.
///
/// Each partial product `C(n - k + i, i)` is an integer, so every division
/// is exact.
pub fn binomial_multiplicative(n: &BigUint, k: usize) -> BigUint {
    let k_big = BigUint::from(k);
    if &k_big > n {
        return BigUint::zero();
    }
    // Use the shorter side of the symmetry when n is small enough to matter.
    let k = if let Ok(n_small) = usize::try_from(n) {
        k.min(n_small - k)
    } else {
        k
    };
    let base = n - BigUint::from(k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= &base + BigUint::from(i);
        acc /= BigUint::from(i);
    }
    acc
}

/// `C(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigCount {
    PascalCache::global().binomial(n, k)
}

/// Multinomial coefficient of `parts`.
pub fn multinomial(parts: &[usize]) -> BigCount {
    PascalCache::global().multinomial(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(14, 7), big(3432));
        assert_eq!(binomial(3, 5), big(0));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[2, 1]), big(3));
        assert_eq!(multinomial(&[1, 1, 1]), big(6));
        for t in 0..40 {
            assert_eq!(multinomial(&[t]), big(1));
        }
        assert_eq!(multinomial(&[0, 0, 0]), big(1));
    }

    #[test]
    fn above_cap_falls_back_to_multiplicative() {
        let cache = PascalCache::with_cap(10);
        assert_eq!(cache.binomial(30, 15), big(155_117_520));
        assert!(cache.cached_rows() <= 11);
        assert_eq!(cache.binomial(10, 3), big(120));
        assert_eq!(cache.cached_rows(), 11);
    }

    #[test]
    fn multiplicative_handles_huge_n() {
        let n = BigUint::one() << 200u32;
        // C(n, 2) = n(n-1)/2
        let expected = (&n * (&n - 1u32)) >> 1u32;
        assert_eq!(binomial_multiplicative(&n, 2), expected);
        assert_eq!(binomial_multiplicative(&n, 1), n);
        assert_eq!(binomial_multiplicative(&n, 0), big(1));
        assert_eq!(binomial_multiplicative(&big(5), 7), big(0));
    }

    #[test]
    fn cache_is_shared_across_threads() {
        let cache = PascalCache::with_cap(200);
        std::thread::scope(|s| {
            for i in 0..8 {
                let cache = &cache;
                s.spawn(move || {
                    let n = 100 + 10 * i;
                    let row = cache.row(n).unwrap();
                    assert_eq!(row.len(), n + 1);
                    assert_eq!(row[1], big(n as u64));
                });
            }
        });
        assert_eq!(cache.cached_rows(), 171);
    }

    #[test]
    fn symmetry_and_pascal_rule() {
        for n in 0..=64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                if k >= 1 {
                    assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn multinomial_is_permutation_invariant(
            parts in proptest::collection::vec(0usize..=4, 1..=8),
            seed in any::<u64>(),
        ) {
            let mut shuffled = parts.clone();
            // Fisher-Yates driven by a small LCG so the case is reproducible.
            let mut state = seed;
            for i in (1..shuffled.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
            }
            prop_assert_eq!(multinomial(&parts), multinomial(&shuffled));
        }

        #[test]
        fn multiplicative_matches_pascal(n in 0usize..300, k in 0usize..320) {
            prop_assert_eq!(binomial_multiplicative(&BigUint::from(n), k), binomial(n, k));
        }
    }
}
