//! Counting distinct multinomial coefficients.
//!
//! For a set `S` of allowed parts, let `M_S(n)` be the number of *distinct*
//! values among the multinomial coefficients `n! / (a_1! a_2! ...)` over
//! all partitions `n = a_1 + a_2 + ...` with parts from `S`. Coefficients
//! collide — `7!/(4! 1! 1! 1!) = 7!/(3! 2! 2!) = 210` is the first case —
//! so `M_S(n)` lags behind the partition count, and this crate quantifies
//! exactly how.
//!
//! Two independent engines compute `M_S(n)`:
//!
//! * **Direct counting** ([`count_distinct`]): every coefficient is
//!   fingerprinted by its prime factorization, computed additively from
//!   the parts via Legendre's formula, and the distinct fingerprints are
//!   counted.
//! * **Elimination** ([`generating_function`]): the collisions for a finite
//!   `S` form a binomial ideal; a Gröbner basis under an elimination order
//!   ([`toric`]), the leading terms of its elimination ideal, and an
//!   inclusion–exclusion Hilbert-series computation ([`hilbert`]) produce
//!   the closed form `sum_n M_S(n) q^n` as an explicit rational function,
//!   which [`quasipoly`] turns into partial fractions and a
//!   quasipolynomial formula.
//!
//! Around these sit partition utilities ([`partitions`]), sandwiching
//! bounds for the infinite-`S` cases ([`series`]), and the irreducible
//! coefficient-collision pairs with their infinite families ([`pairs`]).
//!
//! ```
//! use multinom::{count_distinct, generating_function, quasipolynomial, PartSet};
//!
//! let s = PartSet::finite(1..=4).unwrap();
//! let gf = generating_function(&s, 200_000).unwrap();
//! assert_eq!(gf.to_string(), "(1 - q^7)/((1-q)(1-q^2)(1-q^3)(1-q^4))");
//!
//! let closed_form = quasipolynomial(&gf);
//! for n in 0..=40 {
//!     let direct = count_distinct(n, &s, None);
//!     assert_eq!(gf.coefficient(n), direct.into());
//!     assert_eq!(closed_form.evaluate(n).unwrap(), direct.into());
//! }
//! ```
//!
//! Polynomials and series are generic over an exact scalar ring
//! ([`scalar::Scalar`]); the crate-level aliases fix the two rings used
//! throughout: arbitrary-precision integers and rationals.

pub mod error;
pub mod hilbert;
pub mod pairs;
pub mod partitions;
pub mod poly;
pub mod primes;
pub mod quasipoly;
pub mod scalar;
pub mod series;
pub mod signatures;
pub mod toric;

/// Arbitrary-precision signed integer scalar.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision non-negative integer (coefficient values).
pub type Natural = num_bigint::BigUint;
/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;
/// Integer-coefficient polynomial in `q`.
pub type IntPoly = poly::Poly<Int>;
/// Rational-coefficient polynomial.
pub type RatPoly = poly::Poly<Rational>;
/// Integer-coefficient truncated power series in `q`.
pub type IntSeries = series::PowerSeries<Int>;

pub use error::{Error, Result};
pub use hilbert::{generating_function, groebner_run, GroebnerRun, RationalGF};
pub use pairs::{
    combine, combine_reducible, diophantine_lower_bound, family_factorial, family_power,
    irreducible_pair_count, irreducible_pairs, IrreduciblePair,
};
pub use partitions::{
    count_partitions, enumerate_partitions, partition_series, PartSet, Partition,
};
pub use quasipoly::{partial_fractions, quasipolynomial, PartialFractions, Quasipolynomial};
pub use series::{
    lower_bound, lower_bound_series, prime_union_series, upper_bound, upper_bound_series,
};
pub use signatures::{coefficient_value, count_distinct, signature_of, Signature};
