//! Irreducible pairs: distinct partitions of the same number with equal
//! multinomial coefficients and *no part in common*.
//!
//! Every coefficient collision decomposes into such pairs glued onto a
//! shared rest, so these are the atoms of coincidence. Two infinite
//! families ([`family_power`] and [`family_factorial`]) show they never run
//! out, and unions of disjoint pairs give the quick diophantine lower bound
//! [`diophantine_lower_bound`] on how many exist at each `n`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, PartSet, Partition};
use crate::signatures::{signature_of, Signature};

/// Two distinct partitions of one number with the same factorial signature
/// (hence the same multinomial coefficient) and disjoint part values,
/// stored with the lexicographically larger side on the left.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreduciblePair {
    left: Partition,
    right: Partition,
}

impl IrreduciblePair {
    pub fn new(a: Partition, b: Partition) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::InvariantViolation(format!(
                "partitions of different numbers: {} and {}",
                a.n(),
                b.n()
            )));
        }
        if signature_of(&a) != signature_of(&b) {
            return Err(Error::InvariantViolation(format!(
                "multinomial coefficients differ for {a} and {b}"
            )));
        }
        if a == b {
            return Err(Error::InvariantViolation(format!(
                "a pair needs two distinct partitions, got {a} twice"
            )));
        }
        if a.shares_part_with(&b) {
            return Err(Error::NotDisjoint(format!("{a} and {b}")));
        }
        let (left, right) = if a > b { (a, b) } else { (b, a) };
        Ok(IrreduciblePair { left, right })
    }

    pub fn left(&self) -> &Partition {
        &self.left
    }

    pub fn right(&self) -> &Partition {
        &self.right
    }

    /// The number both sides partition.
    pub fn n(&self) -> u64 {
        self.left.n()
    }

    /// The shared factorial signature of the two sides.
    pub fn signature(&self) -> Signature {
        signature_of(&self.left)
    }
}

impl fmt::Display for IrreduciblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.left, self.right)
    }
}

/// All irreducible pairs at `n`, sorted. Partitions are grouped by
/// signature; each group contributes its part-disjoint pairs.
pub fn irreducible_pairs(n: u64) -> Vec<IrreduciblePair> {
    let mut groups: HashMap<Signature, Vec<Partition>> = HashMap::new();
    for p in enumerate_partitions(n, &PartSet::AllNaturals, None) {
        groups.entry(signature_of(&p)).or_default().push(p);
    }
    let mut out = Vec::new();
    for group in groups.values() {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                if !group[i].shares_part_with(&group[j]) {
                    out.push(
                        IrreduciblePair::new(group[i].clone(), group[j].clone())
                            .expect("grouped by signature and checked disjoint"),
                    );
                }
            }
        }
    }
    out.sort();
    out
}

/// The number of irreducible pairs at `n`.
pub fn irreducible_pair_count(n: u64) -> u64 {
    irreducible_pairs(n).len() as u64
}

/// The power family: for `a >= 2`, `m >= 2`,
///
/// ```text
/// (a^m, (a-1) x m, 1 x (m-1))   vs   (a^m - 1, a x m)
/// ```
///
/// both partition `a^m + m(a-1) + m - 1`, and the factorial products agree
/// because `(a^m)! / (a^m - 1)! = a^m = (a! / (a-1)!)^m`. With `m = 1` the
/// two sides are the same partition, so that case is rejected.
pub fn family_power(a: u64, m: u32) -> Result<IrreduciblePair> {
    if a < 2 || m < 2 {
        return Err(Error::InvariantViolation(format!(
            "the power family needs a >= 2 and m >= 2, got a = {a}, m = {m}"
        )));
    }
    let am = a
        .checked_pow(m)
        .ok_or_else(|| Error::InvariantViolation(format!("a^m overflows for a = {a}, m = {m}")))?;
    let mut left = vec![am];
    left.extend(std::iter::repeat_n(a - 1, m as usize));
    left.extend(std::iter::repeat_n(1, m as usize - 1));
    let mut right = vec![am - 1];
    right.extend(std::iter::repeat_n(a, m as usize));
    IrreduciblePair::new(Partition::new(left)?, Partition::new(right)?)
}

/// The factorial family: for `j >= 3`,
///
/// ```text
/// (j!, 1 x (j-1))   vs   (j! - 1, j)
/// ```
///
/// both partition `j! + j - 1`, and `(j!)! = (j! - 1)! * j!`. With `j = 2`
/// the two sides coincide, so that case is rejected.
pub fn family_factorial(j: u64) -> Result<IrreduciblePair> {
    if j < 3 {
        return Err(Error::InvariantViolation(format!(
            "the factorial family needs j >= 3, got j = {j}"
        )));
    }
    let fact = (2..=j)
        .try_fold(1u64, u64::checked_mul)
        .ok_or_else(|| Error::InvariantViolation(format!("j! overflows for j = {j}")))?;
    let mut left = vec![fact];
    left.extend(std::iter::repeat_n(1, j as usize - 1));
    let right = vec![fact - 1, j];
    IrreduciblePair::new(Partition::new(left)?, Partition::new(right)?)
}

/// Unions two pairs side by side. The result partitions the sum of the two
/// numbers and still has equal coefficients; it is returned only if it is
/// again irreducible (no part crosses sides), otherwise [`Error::NotDisjoint`].
pub fn combine(p: &IrreduciblePair, q: &IrreduciblePair) -> Result<IrreduciblePair> {
    IrreduciblePair::new(p.left().union(q.left()), p.right().union(q.right()))
}

/// The raw side-by-side union, without the disjointness requirement:
/// coefficient equality always survives, irreducibility need not.
pub fn combine_reducible(p: &IrreduciblePair, q: &IrreduciblePair) -> (Partition, Partition) {
    (p.left().union(q.left()), p.right().union(q.right()))
}

/// Counts the representations `n = 7a + 8b` with `(a, b)` non-negative and
/// not both zero. Each such representation is a distinct irreducible pair —
/// `a` copies of the pair at 7 and `b` copies of the pair at 8, whose sides
/// stay disjoint because they draw on `{6, 4, 1}` versus `{5, 3, 2}` — so
/// this is a lower bound for the number of irreducible pairs at `n`, and it
/// is positive for every `n >= 56`.
pub fn diophantine_lower_bound(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    (0..=n / 8)
        .filter(|b| (n - 8 * b).is_multiple_of(7))
        .count() as u64
}
