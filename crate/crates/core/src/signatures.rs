//! Prime signatures of factorial products — the exact oracle.
//!
//! Two multinomial coefficients `n!/(i_1! i_2! ...)` with the same upper
//! entry are equal exactly when the products of their lower factorials are
//! equal, and products of factorials are compared exactly by their prime
//! factorizations. [`Signature`] is that factorization, computed directly
//! by Legendre's formula without ever forming the (astronomically large)
//! integers themselves. [`count_distinct`] enumerates partitions and counts
//! distinct signatures; it is deliberately brute force, serving as the
//! ground truth the symbolic pipeline is checked against.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::partitions::{PartSet, Partition};
use crate::primes::primes_up_to;

/// Exponent of the prime `p` in `j!` (Legendre: sum of `j / p^l`).
fn legendre_exponent(j: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut pk = p;
    loop {
        total += j / pk;
        match pk.checked_mul(p) {
            Some(next) if next <= j => pk = next,
            _ => break,
        }
    }
    total
}

/// The prime factorization of a product of factorials: prime -> exponent,
/// zero exponents never stored. Equality of signatures is equality of the
/// underlying integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Signature {
    exps: BTreeMap<u64, u64>,
}

impl Signature {
    /// The signature of 1 (empty product).
    pub fn identity() -> Self {
        Signature::default()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of `p` (zero when absent).
    pub fn exponent(&self, p: u64) -> u64 {
        self.exps.get(&p).copied().unwrap_or(0)
    }

    /// `(prime, exponent)` pairs, primes ascending.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.exps.iter().map(|(&p, &e)| (p, e))
    }

    /// Multiplies the underlying integers: adds exponents.
    pub fn combine(&mut self, other: &Signature) {
        for (&p, &e) in &other.exps {
            *self.exps.entry(p).or_insert(0) += e;
        }
    }
}

impl fmt::Display for Signature {
    /// Canonical text form: `2^8·3^4·5^2·7` (primes ascending, exponent 1
    /// left implicit); the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, (&p, &e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Signature of `j!`. Needs only the primes up to `j`.
pub fn factorial_signature(j: u64) -> Signature {
    let mut exps = BTreeMap::new();
    for p in primes_up_to(j) {
        exps.insert(p, legendre_exponent(j, p));
    }
    Signature { exps }
}

/// Signature of the product of factorials of the parts: the identity of the
/// multinomial coefficient with this lower row.
pub fn signature_of(partition: &Partition) -> Signature {
    let mut sig = Signature::identity();
    for &part in partition.parts() {
        sig.combine(&factorial_signature(part));
    }
    sig
}

/// The multinomial coefficient `n! / (i_1! i_2! ...)` itself, exactly.
/// Only used to cross-validate signatures at small `n`; the counting paths
/// never materialize these integers.
pub fn coefficient_value(partition: &Partition) -> BigUint {
    let n = partition.n();
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= BigUint::from(k);
    }
    for &part in partition.parts() {
        for k in 2..=part {
            num /= BigUint::from(k);
        }
    }
    num
}

/// Number of distinct multinomial coefficients with upper entry `n` and
/// lower entries from `parts` (at most `max_parts` of them when given).
///
/// Streams the partitions depth-first while maintaining the running
/// signature incrementally, so memory is proportional to the number of
/// *distinct* signatures, never the number of partitions.
pub fn count_distinct(n: u64, parts: &PartSet, max_parts: Option<u64>) -> u64 {
    let primes = primes_up_to(n);

    let mut allowed = parts.members_up_to(n);
    allowed.reverse(); // descending, matching the enumeration order

    // Per part j: dense exponent deltas over the primes <= j (a prefix of
    // the full prime list, so small parts touch almost nothing).
    let deltas: Vec<Vec<u32>> = allowed
        .iter()
        .map(|&j| {
            primes
                .iter()
                .take_while(|&&p| p <= j)
                .map(|&p| legendre_exponent(j, p) as u32)
                .collect()
        })
        .collect();

    let mut seen: HashSet<Box<[u32]>> = HashSet::new();
    let mut acc = vec![0u32; primes.len()];

    struct Dfs<'a> {
        allowed: &'a [u64],
        deltas: &'a [Vec<u32>],
        seen: &'a mut HashSet<Box<[u32]>>,
        acc: &'a mut Vec<u32>,
    }

    impl Dfs<'_> {
        fn run(&mut self, rem: u64, start: usize, parts_left: u64) {
            if rem == 0 {
                self.seen.insert(self.acc.clone().into_boxed_slice());
                return;
            }
            if parts_left == 0 {
                return;
            }
            for i in start..self.allowed.len() {
                let j = self.allowed[i];
                if j > rem {
                    continue;
                }
                if j.saturating_mul(parts_left) < rem {
                    break; // parts only get smaller from here
                }
                for (slot, d) in self.deltas[i].iter().enumerate() {
                    self.acc[slot] += d;
                }
                self.run(rem - j, i, parts_left - 1);
                for (slot, d) in self.deltas[i].iter().enumerate() {
                    self.acc[slot] -= d;
                }
            }
        }
    }

    Dfs {
        allowed: &allowed,
        deltas: &deltas,
        seen: &mut seen,
        acc: &mut acc,
    }
    .run(n, 0, max_parts.unwrap_or(u64::MAX));

    seen.len() as u64
}
