//! Truncated formal power series over an exact scalar ring, plus the
//! series-level bound computations built on them.
//!
//! A series carries coefficients `0..=order` and all operations are exact.
//! The workhorse for everything partition-flavored is multiplication by
//! `1/(1 - q^j)`, which is a single in-place pass (`c[m] += c[m-j]`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::partitions::PartSet;
use crate::poly::{fmt_terms, Poly};
use crate::primes::primes_up_to;
use crate::scalar::Scalar;

/// A power series truncated at a fixed order (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>, // length order + 1
}

impl<T: Scalar> PowerSeries<T> {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// A polynomial viewed as a series: coefficients beyond `order` are
    /// dropped.
    /// Wraps an explicit coefficient vector; its length fixes the order.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        PowerSeries { coeffs }
    }

    pub fn from_poly(p: &Poly<T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in p.coeffs().iter().enumerate().take(order + 1) {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics past the truncation order: asking for a
    /// coefficient that was never computed is a bug, not a zero.
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        let n = self.coeffs.len();
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Division of series. The divisor's constant term must be +1 or -1 so
    /// the quotient stays in the coefficient ring.
    pub fn div(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        let b0 = other.coeffs[0].clone();
        let negate = if b0.is_one() {
            false
        } else if (-b0.clone()).is_one() {
            true
        } else {
            return Err(Error::NonUnitConstantTerm);
        };
        let n = self.coeffs.len();
        let mut out = vec![T::zero(); n];
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for (i, done) in out.iter().enumerate().take(k) {
                if done.is_zero() {
                    continue;
                }
                acc -= done.clone() * other.coeffs[k - i].clone();
            }
            out[k] = if negate { -acc } else { acc };
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// In-place multiplication by `1/(1 - q^j)`.
    pub fn mul_geometric(&mut self, j: usize) {
        assert!(j >= 1, "geometric factor needs a positive exponent");
        if j > self.order() {
            return;
        }
        for m in j..self.coeffs.len() {
            let prev = self.coeffs[m - j].clone();
            self.coeffs[m] += prev;
        }
    }

    /// In-place multiplication by `(1 - q^j)`.
    pub fn mul_one_minus(&mut self, j: usize) {
        assert!(j >= 1, "factor needs a positive exponent");
        if j > self.order() {
            return;
        }
        for m in (j..self.coeffs.len()).rev() {
            let prev = self.coeffs[m - j].clone();
            self.coeffs[m] -= prev;
        }
    }
}

impl<T: Scalar + Signed + fmt::Display> fmt::Display for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.coeffs.iter().cloned().enumerate())
    }
}

/// `1/((1-q)(1-q^2)...(1-q^order))` times `numerator`, truncated at `order`:
/// the generating function whose `q^n` coefficient upper-bounds the distinct
/// count when `numerator` is the closed-form numerator of a finite subset.
pub fn upper_bound_series(numerator: &Poly<BigInt>, order: usize) -> PowerSeries<BigInt> {
    let mut s = PowerSeries::from_poly(numerator, order);
    for j in 1..=order.max(1) {
        s.mul_geometric(j);
    }
    s
}

/// Coefficient `[q^n]` of [`upper_bound_series`]. The `s_prime` argument
/// records which finite subset the numerator came from (reports label bounds
/// with it); the value itself depends only on the numerator.
pub fn upper_bound(n: u64, s_prime: &PartSet, numerator: &Poly<BigInt>) -> BigInt {
    debug_assert!(s_prime.is_finite(), "numerators come from finite subsets");
    let series = upper_bound_series(numerator, n as usize);
    series.coeff(n as usize).clone()
}

/// `numerator / prod_{j in S u {primes > max S}, j <= order} (1 - q^j)`:
/// the generating function of the distinct count over parts in S together
/// with all larger primes, which lower-bounds the unrestricted count.
pub fn lower_bound_series(
    s: &PartSet,
    numerator: &Poly<BigInt>,
    order: usize,
) -> Result<PowerSeries<BigInt>> {
    if !s.is_finite() {
        return Err(Error::InvariantViolation(
            "lower bound needs a finite part set".into(),
        ));
    }
    let members = s.members_up_to(order as u64);
    let max_s = s.max_finite().expect("finite set has a maximum");
    let mut factors: Vec<u64> = members;
    factors.extend(
        primes_up_to(order as u64)
            .into_iter()
            .filter(|&p| p > max_s),
    );
    factors.sort_unstable();
    if factors.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvariantViolation(
            "denominator factor repeated: a prime <= max(S) must come from S alone".into(),
        ));
    }
    let mut series = PowerSeries::from_poly(numerator, order);
    for j in factors {
        series.mul_geometric(j as usize);
    }
    Ok(series)
}

/// Coefficient `[q^n]` of [`lower_bound_series`].
pub fn lower_bound(n: u64, s: &PartSet, numerator: &Poly<BigInt>) -> Result<BigInt> {
    let series = lower_bound_series(s, numerator, n as usize)?;
    Ok(series.coeff(n as usize).clone())
}

/// Distinct-count series over prime parts: with `include_one` the part set
/// is {1} u primes and the series is `1/((1-q) prod_p (1-q^p))`; without it
/// the part set is the primes alone and the series is `1/prod_p (1-q^p)`.
/// Either way distinct products of factorials biject with the partitions
/// themselves, so these are exact distinct-count series, not bounds.
pub fn prime_union_series(include_one: bool, order: usize) -> PowerSeries<BigInt> {
    let mut s = PowerSeries::one(order);
    if include_one {
        s.mul_geometric(1);
    }
    for p in primes_up_to(order as u64) {
        s.mul_geometric(p as usize);
    }
    s
}
