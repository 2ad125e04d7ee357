//! Integer partitions with restricted part sets.
//!
//! Main entry points:
//! - [`Partition`]: a multiset of positive parts, stored non-increasing.
//! - [`PartSet`]: which part values are allowed (all naturals, primes,
//!   {1} u primes, an explicit finite set, or the two "small or divisible
//!   by three" sets used as conjectural envelopes).
//! - [`enumerate_partitions`]: streaming enumeration in reverse
//!   lexicographic order (largest first).
//! - [`count_partitions`]: exact count via dynamic programming, with an
//!   optional bound on the number of parts ("at most k parts" convention).
//! - [`partition_series`]: the truncated generating function
//!   `prod_{j in S} 1/(1 - q^j)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::primes::{is_prime, primes_up_to};
use crate::series::PowerSeries;

/// A partition: positive parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvariantViolation(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The partitioned number: the sum of the parts.
    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiset union: all parts of both partitions together.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Whether the two partitions share any part value.
    pub fn shares_part_with(&self, other: &Self) -> bool {
        // Both sides are sorted descending: a single merge walk suffices.
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            match self.parts[i].cmp(&other.parts[j]) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Greater => i += 1,
                std::cmp::Ordering::Less => j += 1,
            }
        }
        false
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `4,1,1,1` (optionally wrapped in parentheses).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let v: u64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {tok:?}")))?;
            if v == 0 {
                return Err(Error::Parse("partition parts must be positive".into()));
            }
            parts.push(v);
        }
        Partition::new(parts)
    }
}

/// The set of part values a partition may draw from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartSet {
    /// All positive integers.
    AllNaturals,
    /// The primes.
    Primes,
    /// {1} together with the primes.
    OnePlusPrimes,
    /// An explicit finite set (ascending, distinct, positive).
    Finite(Vec<u64>),
    /// Parts that are at most 6 or divisible by 3.
    ConjectureStar,
    /// Parts that are at most 7 or divisible by 3.
    ConjectureHash,
}

impl PartSet {
    /// A finite set from arbitrary values; deduplicates, rejects zero and
    /// empty.
    pub fn finite(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = values.into_iter().collect();
        if v.contains(&0) {
            return Err(Error::InvariantViolation(
                "part values must be positive".into(),
            ));
        }
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::InvariantViolation(
                "part set must be non-empty".into(),
            ));
        }
        Ok(PartSet::Finite(v))
    }

    /// The contiguous range `lo..=hi`.
    pub fn range(lo: u64, hi: u64) -> Result<Self> {
        if lo == 0 || hi < lo {
            return Err(Error::InvariantViolation(format!(
                "bad part range {lo}..{hi}"
            )));
        }
        Ok(PartSet::Finite((lo..=hi).collect()))
    }

    pub fn contains(&self, j: u64) -> bool {
        if j == 0 {
            return false;
        }
        match self {
            PartSet::AllNaturals => true,
            PartSet::Primes => is_prime(j),
            PartSet::OnePlusPrimes => j == 1 || is_prime(j),
            PartSet::Finite(v) => v.binary_search(&j).is_ok(),
            PartSet::ConjectureStar => j <= 6 || j.is_multiple_of(3),
            PartSet::ConjectureHash => j <= 7 || j.is_multiple_of(3),
        }
    }

    /// Members `<= n`, ascending.
    pub fn members_up_to(&self, n: u64) -> Vec<u64> {
        match self {
            PartSet::AllNaturals => (1..=n).collect(),
            PartSet::Primes => primes_up_to(n),
            PartSet::OnePlusPrimes => {
                let mut v = vec![];
                if n >= 1 {
                    v.push(1);
                }
                v.extend(primes_up_to(n));
                v
            }
            PartSet::Finite(v) => v.iter().copied().take_while(|&j| j <= n).collect(),
            PartSet::ConjectureStar => (1..=n).filter(|&j| j <= 6 || j % 3 == 0).collect(),
            PartSet::ConjectureHash => (1..=n).filter(|&j| j <= 7 || j % 3 == 0).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, PartSet::Finite(_))
    }

    /// The largest member of a finite set.
    pub fn max_finite(&self) -> Option<u64> {
        match self {
            PartSet::Finite(v) => v.last().copied(),
            _ => None,
        }
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartSet::AllNaturals => write!(f, "all"),
            PartSet::Primes => write!(f, "primes"),
            PartSet::OnePlusPrimes => write!(f, "1+primes"),
            PartSet::ConjectureStar => write!(f, "star"),
            PartSet::ConjectureHash => write!(f, "hash"),
            PartSet::Finite(v) => {
                let contiguous = v.len() as u64 == v[v.len() - 1] - v[0] + 1;
                if contiguous && v.len() > 1 {
                    write!(f, "{}..{}", v[0], v[v.len() - 1])
                } else {
                    write!(f, "{{")?;
                    for (i, j) in v.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{j}")?;
                    }
                    write!(f, "}}")
                }
            }
        }
    }
}

impl FromStr for PartSet {
    type Err = Error;

    /// Accepts `all`, `primes`, `1+primes`, `star`, `hash`, a range `1..7`,
    /// or a braced list `{1,2,5}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "all" => return Ok(PartSet::AllNaturals),
            "primes" => return Ok(PartSet::Primes),
            "1+primes" => return Ok(PartSet::OnePlusPrimes),
            "star" => return Ok(PartSet::ConjectureStar),
            "hash" => return Ok(PartSet::ConjectureHash),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            let mut vals = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                let v: u64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part value {tok:?}")))?;
                vals.push(v);
            }
            return PartSet::finite(vals).map_err(|e| Error::Parse(e.to_string()));
        }
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: u64 = lo
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad range bound {lo:?}")))?;
            let hi: u64 = hi
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad range bound {hi:?}")))?;
            return PartSet::range(lo, hi).map_err(|e| Error::Parse(e.to_string()));
        }
        Err(Error::Parse(format!(
            "unrecognized part set {s:?} (expected all, primes, 1+primes, star, hash, lo..hi, or {{a,b,c}})"
        )))
    }
}

/// Streaming enumeration of the partitions of `n` with parts from `parts`
/// and (optionally) at most `max_parts` parts, in reverse lexicographic
/// order: `(7) > (6,1) > (5,2) > ...`.
pub fn enumerate_partitions(n: u64, parts: &PartSet, max_parts: Option<u64>) -> PartitionIter {
    let mut allowed = parts.members_up_to(n);
    allowed.reverse(); // descending: the enumeration picks largest first
    PartitionIter {
        allowed,
        max_parts: max_parts.unwrap_or(u64::MAX),
        stack: vec![Frame { rem: n, cursor: 0 }],
        prefix: Vec::new(),
    }
}

#[derive(Debug)]
struct Frame {
    rem: u64,
    cursor: usize,
}

/// Iterator produced by [`enumerate_partitions`]. Depth-first with an
/// explicit stack; memory stays proportional to the number of parts of the
/// current partition.
#[derive(Debug)]
pub struct PartitionIter {
    allowed: Vec<u64>, // descending
    max_parts: u64,
    stack: Vec<Frame>,
    prefix: Vec<u64>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let depth = self.stack.len().checked_sub(1)?;
            let frame = self.stack.last_mut().expect("just checked");
            if frame.rem == 0 {
                let out = Partition {
                    parts: self.prefix.clone(),
                };
                self.stack.pop();
                if depth > 0 {
                    self.prefix.pop();
                }
                return Some(out);
            }
            let rem = frame.rem;
            let parts_left = self.max_parts - depth as u64;
            let mut i = frame.cursor;
            while i < self.allowed.len() && self.allowed[i] > rem {
                i += 1;
            }
            let dead = i >= self.allowed.len()
                || parts_left == 0
                || self.allowed[i].saturating_mul(parts_left) < rem;
            if dead {
                self.stack.pop();
                if depth > 0 {
                    self.prefix.pop();
                }
                continue;
            }
            let part = self.allowed[i];
            frame.cursor = i + 1;
            self.prefix.push(part);
            self.stack.push(Frame {
                rem: rem - part,
                cursor: i,
            });
        }
    }
}

/// Exact number of partitions of `n` with parts in `parts`, at most
/// `max_parts` parts when given. Agrees with the length of
/// [`enumerate_partitions`], but runs in polynomial time.
pub fn count_partitions(n: u64, parts: &PartSet, max_parts: Option<u64>) -> BigInt {
    let n = n as usize;
    let members = parts.members_up_to(n as u64);
    match max_parts {
        None => {
            let mut dp = vec![BigInt::zero(); n + 1];
            dp[0] = BigInt::one();
            for j in members {
                let j = j as usize;
                for m in j..=n {
                    let prev = dp[m - j].clone();
                    dp[m] += prev;
                }
            }
            dp[n].clone()
        }
        Some(k) => {
            let k = (k.min(n as u64)) as usize;
            // dp[c][m]: partitions of m into exactly c parts.
            let mut dp = vec![vec![BigInt::zero(); n + 1]; k + 1];
            dp[0][0] = BigInt::one();
            for j in members {
                let j = j as usize;
                for c in 1..=k {
                    for m in j..=n {
                        let prev = dp[c - 1][m - j].clone();
                        dp[c][m] += prev;
                    }
                }
            }
            let mut total = BigInt::zero();
            for row in &dp {
                total += row[n].clone();
            }
            total
        }
    }
}

/// Truncated generating function `prod_{j in S, j <= order} 1/(1 - q^j)`;
/// coefficient of `q^n` counts the partitions of `n` with parts in `parts`.
pub fn partition_series(parts: &PartSet, order: usize) -> PowerSeries<BigInt> {
    let mut s = PowerSeries::one(order);
    for j in parts.members_up_to(order as u64) {
        s.mul_geometric(j as usize);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: u64, parts: &PartSet, max_parts: Option<u64>) -> Vec<Vec<u64>> {
        enumerate_partitions(n, parts, max_parts)
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn zero_has_one_empty_partition() {
        assert_eq!(
            collect(0, &PartSet::AllNaturals, None),
            vec![Vec::<u64>::new()]
        );
        assert_eq!(count_partitions(0, &PartSet::Primes, None), BigInt::one());
    }

    #[test]
    fn reverse_lexicographic_order() {
        assert_eq!(
            collect(5, &PartSet::AllNaturals, None),
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn max_parts_restriction() {
        assert_eq!(
            collect(7, &PartSet::AllNaturals, Some(2)),
            vec![vec![7], vec![6, 1], vec![5, 2], vec![4, 3]]
        );
        // At most zero parts: only n = 0 has a partition.
        assert_eq!(
            collect(3, &PartSet::AllNaturals, Some(0)),
            Vec::<Vec<u64>>::new()
        );
        assert_eq!(
            collect(0, &PartSet::AllNaturals, Some(0)),
            vec![Vec::<u64>::new()]
        );
    }

    #[test]
    fn prime_parts() {
        assert_eq!(
            collect(5, &PartSet::Primes, None),
            vec![vec![5], vec![3, 2]]
        );
        assert_eq!(
            count_partitions(10, &PartSet::Primes, None),
            BigInt::from(5)
        );
    }

    #[test]
    fn parts_up_to_four_has_eleven_partitions_of_seven() {
        // Parts 1..4: eleven partitions of 7.
        let s = PartSet::range(1, 4).unwrap();
        assert_eq!(count_partitions(7, &s, None), BigInt::from(11));
        assert_eq!(collect(7, &s, None).len(), 11);
    }

    #[test]
    fn known_unrestricted_counts() {
        let p: Vec<u64> = (0..=10)
            .map(|n| {
                count_partitions(n, &PartSet::AllNaturals, None)
                    .try_into()
                    .unwrap()
            })
            .collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(
            count_partitions(70, &PartSet::AllNaturals, None),
            BigInt::from(4_087_968)
        );
    }

    #[test]
    fn series_matches_counts() {
        let sets = [
            PartSet::AllNaturals,
            PartSet::Primes,
            PartSet::OnePlusPrimes,
            PartSet::ConjectureStar,
            PartSet::ConjectureHash,
            PartSet::range(1, 4).unwrap(),
        ];
        for set in &sets {
            let series = partition_series(set, 30);
            for n in 0..=30u64 {
                assert_eq!(
                    *series.coeff(n as usize),
                    count_partitions(n, set, None),
                    "set {set}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn two_part_series() {
        let s = partition_series(&PartSet::finite([1, 2]).unwrap(), 6);
        let got: Vec<i64> = (0..=6).map(|n| s.coeff(n).try_into().unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn count_monotone_in_n() {
        let series = partition_series(&PartSet::AllNaturals, 100);
        for n in 1..=100 {
            assert!(series.coeff(n) >= series.coeff(n - 1));
        }
    }

    #[test]
    fn part_set_parsing_roundtrip() {
        for text in [
            "all", "primes", "1+primes", "star", "hash", "1..7", "{1,2,5}",
        ] {
            let set: PartSet = text.parse().unwrap();
            assert_eq!(set.to_string(), text, "roundtrip of {text}");
        }
        assert_eq!("{1,2,3,4}".parse::<PartSet>().unwrap().to_string(), "1..4");
        assert!("".parse::<PartSet>().is_err());
        assert!("{0,1}".parse::<PartSet>().is_err());
        assert!("4..1".parse::<PartSet>().is_err());
        assert!("widgets".parse::<PartSet>().is_err());
    }

    #[test]
    fn partition_parsing() {
        let p: Partition = "4,1,1,1".parse().unwrap();
        assert_eq!(p.parts(), &[4, 1, 1, 1]);
        let p: Partition = "(1, 4, 1, 1)".parse().unwrap();
        assert_eq!(p.parts(), &[4, 1, 1, 1]); // sorted on construction
        assert_eq!(p.to_string(), "(4,1,1,1)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("4,0,1".parse::<Partition>().is_err());
        assert!("4,x".parse::<Partition>().is_err());
    }

    #[test]
    fn membership_and_members_agree() {
        let sets = [
            PartSet::AllNaturals,
            PartSet::Primes,
            PartSet::OnePlusPrimes,
            PartSet::ConjectureStar,
            PartSet::ConjectureHash,
            PartSet::finite([2, 9, 30]).unwrap(),
        ];
        for set in &sets {
            let members = set.members_up_to(40);
            for j in 1..=40 {
                assert_eq!(members.contains(&j), set.contains(j), "set {set}, j = {j}");
            }
        }
    }

    #[test]
    fn union_and_shared_parts() {
        let a = Partition::new(vec![6, 1, 1]).unwrap();
        let b = Partition::new(vec![5, 3]).unwrap();
        assert!(!a.shares_part_with(&b));
        assert_eq!(a.union(&b).parts(), &[6, 5, 3, 1, 1]);
        let c = Partition::new(vec![3, 2]).unwrap();
        assert!(b.shares_part_with(&c));
    }
}
