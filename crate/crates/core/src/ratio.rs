// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Nonnegative exact rationals over [`BigUint`], always stored in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Bits of quotient kept before the final rounding to 53 bits.
const WORKING_BITS: i64 = 98;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BigRatio {
    num: BigUint,
    den: BigUint,
}

impl BigRatio {
    /// `num / den` reduced. Panics when `den` is zero.
    pub fn new(num: BigUint, den: BigUint) -> Self {
        assert!(!den.is_zero(), "BigRatio with zero denominator");
        let g = num.gcd(&den);
        if g.is_one() {
            BigRatio { num, den }
        } else {
            BigRatio {
                num: num / &g,
                den: den / &g,
            }
        }
    }

    pub fn from_integer(value: BigUint) -> Self {
        BigRatio {
            num: value,
            den: BigUint::one(),
        }
    }

    /// `1 / value`. Panics when `value` is zero.
    pub fn reciprocal_of(value: BigUint) -> Self {
        BigRatio::new(BigUint::one(), value)
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn recip(&self) -> BigRatio {
        assert!(!self.num.is_zero(), "reciprocal of zero");
        BigRatio {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// Nearest double, ties to even.
    ///
    /// Numerator and denominator are aligned so the integer quotient carries
    /// 98 or 99 bits; the remainder becomes a sticky bit. Subnormal results
    /// are rounded once at their reduced precision.
    pub fn to_f64(&self) -> f64 {
        if self.num.is_zero() {
            return 0.0;
        }
        let shift = WORKING_BITS - (self.num.bits() as i64 - self.den.bits() as i64);
        let (q, r) = if shift >= 0 {
            (&self.num << shift as u64).div_rem(&self.den)
        } else {
            self.num.div_rem(&(&self.den << (-shift) as u64))
        };
        let sticky = !r.is_zero();
        let q_bits = q.bits() as i64;
        // floor(log2(value))
        let exp2 = q_bits - 1 - shift;
        if exp2 > 1023 {
            return f64::INFINITY;
        }
        let precision = if exp2 >= -1022 {
            53
        } else {
            53 - (-1022 - exp2)
        };
        if precision < 0 {
            return 0.0;
        }
        if precision == 0 {
            // value in [2^-1075, 2^-1074): the half-way point rounds to even (zero)
            let exactly_half = !sticky && q.trailing_zeros() == Some(q_bits as u64 - 1);
            return if exactly_half { 0.0 } else { f64::from_bits(1) };
        }
        let drop = (q_bits - precision) as u64;
        let mut mantissa = (&q >> drop).to_u64().expect("mantissa fits 53 bits");
        let dropped = &q & ((BigUint::one() << drop) - 1u32);
        let half = BigUint::one() << (drop - 1);
        let round_up = match dropped.cmp(&half) {
            Ordering::Greater => true,
            Ordering::Equal => sticky || mantissa & 1 == 1,
            Ordering::Less => false,
        };
        if round_up {
            mantissa += 1;
        }
        let exponent = exp2 - (precision - 1);
        mantissa as f64 * exact_power_of_two(exponent)
    }
}

fn exact_power_of_two(exponent: i64) -> f64 {
    if exponent > 1023 {
        f64::INFINITY
    } else if exponent >= -1022 {
        f64::from_bits(((exponent + 1023) as u64) << 52)
    } else if exponent >= -1074 {
        f64::from_bits(1u64 << (exponent + 1074))
    } else {
        0.0
    }
}

impl PartialOrd for BigRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl Mul for &BigRatio {
    type Output = BigRatio;

    fn mul(self, rhs: &BigRatio) -> BigRatio {
        BigRatio::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &BigRatio {
    type Output = BigRatio;

    fn div(self, rhs: &BigRatio) -> BigRatio {
        assert!(!rhs.num.is_zero(), "division by zero ratio");
        BigRatio::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for BigRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatioError(String);

impl fmt::Display for ParseRatioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fraction {:?}", self.0)
    }
}

impl std::error::Error for ParseRatioError {}

impl FromStr for BigRatio {
    type Err = ParseRatioError;

    /// Accepts `num/den` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRatioError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigUint = num.trim().parse().map_err(|_| err())?;
        let den: BigUint = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(BigRatio::new(num, den))
    }
}
