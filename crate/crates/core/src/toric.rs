//! The binomial (toric) ideal whose elimination ideal encodes exactly which
//! partitions give equal multinomial coefficients, and a Buchberger engine
//! specialized to it.
//!
//! For a finite part set `S = {j_1 < ... < j_r}` introduce one variable
//! `q_j` per part, an auxiliary variable `t` (printed `q`, tracking the
//! partitioned number), and one variable `x_p` per prime `p <= max S`
//! (tracking the prime factorization of `j!`). Each part contributes the
//! relation `q_j = t^j * prod_p x_p^(exponent of p in j!)`, and two
//! products of `q_j`'s are congruent modulo the resulting ideal exactly
//! when the corresponding partitions have the same sum and the same
//! factorial signature. Eliminating `t` and the `x_p` (via a lexicographic
//! order ranking them above every `q_j`) therefore yields the ideal of all
//! coefficient collisions.
//!
//! Everything here is a *pure difference of monomials*: S-polynomials and
//! reductions of pure differences stay pure differences, so the engine
//! never touches general polynomials. Weighted homogeneity (each `q_j`
//! weighing `j`, `t` weighing 1, `x_p` weighing 0) is asserted whenever a
//! binomial is formed.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::primes::primes_up_to;
use crate::signatures::factorial_signature;

/// The variable layout for a fixed finite part set: `q_j` for each part
/// (slots `0..nq`, parts ascending), then `t` (slot `nq`), then `x_p` for
/// each prime `p <= max S` (ascending). The term order compares exponent
/// vectors lexicographically from the *highest* slot down, which realizes
/// the elimination order `x_pmax > ... > x_2 > t > q_jmax > ... > q_jmin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableUniverse {
    parts: Vec<u64>,  // ascending
    primes: Vec<u64>, // ascending, primes <= max part
}

/// A monomial: dense exponent vector over a [`VariableUniverse`], with its
/// weighted degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    wdeg: u64,
}

impl Monomial {
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Weighted degree: the `n` of the partitions this monomial speaks
    /// about (`q_j` weighs `j`, `t` weighs 1, `x_p` weighs 0).
    pub fn weighted_degree(&self) -> u64 {
        self.wdeg
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

/// The elimination term order: lexicographic with
/// `x_pmax > ... > x_2 > t > q_jmax > ... > q_jmin`.
pub struct TermOrder;

impl TermOrder {
    pub fn cmp(a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(
            a.exps.len(),
            b.exps.len(),
            "monomials from different universes"
        );
        for (ea, eb) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
            match ea.cmp(eb) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }
}

/// A pure difference of two distinct monomials of equal weighted degree,
/// oriented so `lead > trail` in the term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    /// Orients `a - b`. Returns `Ok(None)` when the difference is zero.
    /// Mixed weighted degrees mean something upstream built a monomial
    /// relating partitions of different numbers — an invariant violation.
    pub fn new(a: Monomial, b: Monomial) -> Result<Option<Binomial>> {
        if a == b {
            return Ok(None);
        }
        if a.wdeg != b.wdeg {
            return Err(Error::InvariantViolation(format!(
                "inhomogeneous binomial: weighted degrees {} and {}",
                a.wdeg, b.wdeg
            )));
        }
        let (lead, trail) = match TermOrder::cmp(&a, &b) {
            Ordering::Greater => (a, b),
            Ordering::Less => (b, a),
            Ordering::Equal => return Err(Error::IdealContainsMonomial),
        };
        Ok(Some(Binomial { lead, trail }))
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }
}

impl VariableUniverse {
    /// Builds the universe for a finite part set (ascending, distinct,
    /// positive values required).
    pub fn new(parts: &[u64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvariantViolation("empty part set".into()));
        }
        if parts[0] == 0 {
            return Err(Error::InvariantViolation(
                "part values must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvariantViolation(
                "part values must be ascending and distinct".into(),
            ));
        }
        let primes = primes_up_to(*parts.last().expect("non-empty"));
        Ok(VariableUniverse {
            parts: parts.to_vec(),
            primes,
        })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn num_vars(&self) -> usize {
        self.parts.len() + 1 + self.primes.len()
    }

    fn weight(&self, slot: usize) -> u64 {
        if slot < self.parts.len() {
            self.parts[slot]
        } else if slot == self.parts.len() {
            1
        } else {
            0
        }
    }

    /// Builds a monomial from a raw exponent vector (computes the weighted
    /// degree).
    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), self.num_vars(), "exponent vector length");
        let wdeg = exps
            .iter()
            .enumerate()
            .map(|(i, &e)| self.weight(i) * e as u64)
            .sum();
        Monomial { exps, wdeg }
    }

    pub fn unit(&self) -> Monomial {
        Monomial {
            exps: vec![0; self.num_vars()],
            wdeg: 0,
        }
    }

    pub fn mul(&self, a: &Monomial, b: &Monomial) -> Monomial {
        Monomial {
            exps: a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect(),
            wdeg: a.wdeg + b.wdeg,
        }
    }

    /// `a / b`; caller guarantees divisibility.
    pub fn div(&self, a: &Monomial, b: &Monomial) -> Monomial {
        debug_assert!(b.divides(a), "division of non-multiple");
        Monomial {
            exps: a.exps.iter().zip(&b.exps).map(|(x, y)| x - y).collect(),
            wdeg: a.wdeg - b.wdeg,
        }
    }

    pub fn gcd(&self, a: &Monomial, b: &Monomial) -> Monomial {
        self.monomial(a.exps.iter().zip(&b.exps).map(|(x, y)| *x.min(y)).collect())
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        self.monomial(a.exps.iter().zip(&b.exps).map(|(x, y)| *x.max(y)).collect())
    }

    /// `a / gcd(a, b)`: the colon of the principal ideal of `a` by `b`.
    pub fn colon(&self, a: &Monomial, b: &Monomial) -> Monomial {
        self.monomial(
            a.exps
                .iter()
                .zip(&b.exps)
                .map(|(x, y)| x.saturating_sub(*y))
                .collect(),
        )
    }

    /// Whether the monomial uses only `q_j` variables (no `t`, no `x_p`).
    pub fn is_q_only(&self, m: &Monomial) -> bool {
        m.exps[self.parts.len()..].iter().all(|&e| e == 0)
    }

    /// The product `prod q_j^(multiplicity of j)` for a partition whose
    /// parts all lie in this universe's part set.
    pub fn partition_monomial(&self, partition: &Partition) -> Result<Monomial> {
        let mut exps = vec![0u32; self.num_vars()];
        for &part in partition.parts() {
            match self.parts.binary_search(&part) {
                Ok(slot) => exps[slot] += 1,
                Err(_) => {
                    return Err(Error::InvariantViolation(format!(
                        "part {part} is not in the variable universe"
                    )))
                }
            }
        }
        Ok(self.monomial(exps))
    }

    /// Reads a `q`-only monomial back as a partition.
    pub fn monomial_to_partition(&self, m: &Monomial) -> Option<Partition> {
        if !self.is_q_only(m) {
            return None;
        }
        let mut parts = Vec::new();
        for (slot, &e) in m.exps.iter().take(self.parts.len()).enumerate() {
            for _ in 0..e {
                parts.push(self.parts[slot]);
            }
        }
        Some(Partition::new(parts).expect("positive parts"))
    }

    /// The defining binomials: `q_j - t^j * prod_p x_p^(exp of p in j!)`,
    /// one per part, oriented by the term order.
    pub fn generators(&self) -> Vec<Binomial> {
        let mut gens = Vec::new();
        for (slot, &j) in self.parts.iter().enumerate() {
            let mut lhs = vec![0u32; self.num_vars()];
            lhs[slot] = 1;
            let mut rhs = vec![0u32; self.num_vars()];
            rhs[self.parts.len()] = j as u32;
            for (p, e) in factorial_signature(j).iter() {
                let k = self
                    .primes
                    .binary_search(&p)
                    .expect("prime <= max part is in the universe");
                rhs[self.parts.len() + 1 + k] = e as u32;
            }
            let b = Binomial::new(self.monomial(lhs), self.monomial(rhs))
                .expect("defining relations are homogeneous")
                .expect("q_j and its image are distinct monomials");
            gens.push(b);
        }
        gens
    }

    /// Renders a monomial in the worked examples' style: `q1^3 q4`, with
    /// `q`-variables first (ascending part), then `q` (the `t` variable),
    /// then `x`-variables (ascending prime). The unit monomial is `1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut factors = Vec::new();
        for (slot, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if slot < self.parts.len() {
                format!("q{}", self.parts[slot])
            } else if slot == self.parts.len() {
                "q".to_string()
            } else {
                format!("x{}", self.primes[slot - self.parts.len() - 1])
            };
            if e == 1 {
                factors.push(name);
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join(" ")
        }
    }

    pub fn format_binomial(&self, b: &Binomial) -> String {
        format!(
            "{} - {}",
            self.format_monomial(b.lead()),
            self.format_monomial(b.trail())
        )
    }

    /// Parses the [`format_monomial`] syntax.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let mut exps = vec![0u32; self.num_vars()];
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                    (n, e)
                }
                None => (token, 1),
            };
            let slot = if name == "q" {
                self.parts.len()
            } else if let Some(rest) = name.strip_prefix('q') {
                let j: u64 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {name:?}")))?;
                self.parts
                    .binary_search(&j)
                    .map_err(|_| Error::Parse(format!("no part {j} in this universe")))?
            } else if let Some(rest) = name.strip_prefix('x') {
                let p: u64 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {name:?}")))?;
                self.parts.len()
                    + 1
                    + self
                        .primes
                        .binary_search(&p)
                        .map_err(|_| Error::Parse(format!("no prime {p} in this universe")))?
            } else {
                return Err(Error::Parse(format!("bad variable {name:?}")));
            };
            exps[slot] += exp;
        }
        Ok(self.monomial(exps))
    }

    /// Parses `lead - trail` in the [`format_binomial`] syntax.
    pub fn parse_binomial(&self, text: &str) -> Result<Binomial> {
        let (a, b) = text
            .split_once(" - ")
            .ok_or_else(|| Error::Parse(format!("expected `lead - trail` in {text:?}")))?;
        Binomial::new(self.parse_monomial(a)?, self.parse_monomial(b)?)?
            .ok_or_else(|| Error::Parse("binomial sides are identical".into()))
    }
}

/// The S-polynomial of two binomials, which is again a pure difference (or
/// zero): `S(f, g) = (L/lead g) trail g - (L/lead f) trail f` with `L` the
/// lcm of the leads.
pub fn s_binomial(u: &VariableUniverse, f: &Binomial, g: &Binomial) -> Result<Option<Binomial>> {
    let l = u.lcm(f.lead(), g.lead());
    let a = u.mul(&u.div(&l, g.lead()), g.trail());
    let b = u.mul(&u.div(&l, f.lead()), f.trail());
    Binomial::new(a, b)
}

fn reduce_monomial(u: &VariableUniverse, mut m: Monomial, basis: &[Binomial]) -> Monomial {
    'outer: loop {
        for e in basis {
            if e.lead().divides(&m) {
                m = u.mul(&u.div(&m, e.lead()), e.trail());
                continue 'outer;
            }
        }
        return m;
    }
}

/// Fully reduces both monomials of `b` modulo `basis`. `Ok(None)` means the
/// binomial reduces to zero. Reduction of a pure difference stays a pure
/// difference; each rewrite strictly decreases a monomial in the term
/// order, so this terminates.
pub fn normal_form(
    u: &VariableUniverse,
    b: &Binomial,
    basis: &[Binomial],
) -> Result<Option<Binomial>> {
    let lead = reduce_monomial(u, b.lead().clone(), basis);
    let trail = reduce_monomial(u, b.trail().clone(), basis);
    Binomial::new(lead, trail)
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    // Field order is the selection order: lowest weighted lcm degree first,
    // then the lcm itself in the term order (its reversed exponent vector
    // compares lexicographically), then position for full determinism.
    deg: u64,
    lcm_rev: Vec<u32>,
    i: usize,
    j: usize,
}

fn pair_key(u: &VariableUniverse, basis: &[Binomial], i: usize, j: usize) -> PairKey {
    let l = u.lcm(basis[i].lead(), basis[j].lead());
    let mut lcm_rev = l.exps().to_vec();
    lcm_rev.reverse();
    PairKey {
        deg: l.weighted_degree(),
        lcm_rev,
        i,
        j,
    }
}

/// Buchberger's algorithm for pure-difference binomials, with the
/// coprime-lead and chain criteria and normal pair selection (lowest lcm
/// degree first, lexicographic tie-break). Returns the *reduced* basis:
/// leads form a minimal divisibility antichain, every trail is fully
/// reduced, output sorted ascending by lead.
///
/// `budget` caps the number of pairs taken off the queue.
pub fn buchberger(
    u: &VariableUniverse,
    generators: &[Binomial],
    budget: usize,
) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in generators {
        let g = Binomial::new(g.lead().clone(), g.trail().clone())?.expect("non-zero input");
        if !basis.contains(&g) {
            basis.push(g);
        }
    }

    let mut queue: BinaryHeap<std::cmp::Reverse<PairKey>> = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            queue.push(std::cmp::Reverse(pair_key(u, &basis, i, j)));
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut popped = 0usize;

    while let Some(std::cmp::Reverse(key)) = queue.pop() {
        popped += 1;
        if popped > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let (i, j) = (key.i, key.j);
        done.insert((i, j));

        let (fi, fj) = (&basis[i], &basis[j]);
        // Buchberger's first criterion: coprime leads reduce to zero.
        if u.gcd(fi.lead(), fj.lead()).is_unit() {
            continue;
        }
        // Chain criterion: some third lead divides the lcm and both mixed
        // pairs are already handled.
        let l = u.lcm(fi.lead(), fj.lead());
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&l)
                && done.contains(&(k.min(i), k.max(i)))
                && done.contains(&(k.min(j), k.max(j)))
        });
        if chained {
            continue;
        }

        let s = match s_binomial(u, fi, fj)? {
            None => continue,
            Some(s) => s,
        };
        if let Some(r) = normal_form(u, &s, &basis)? {
            let m = basis.len();
            basis.push(r);
            for t in 0..m {
                queue.push(std::cmp::Reverse(pair_key(u, &basis, t, m)));
            }
        }
    }

    Ok(reduce_basis(u, basis))
}

/// Minimalizes the leads and fully reduces every trail: the unique reduced
/// basis for the ideal, sorted ascending by lead.
fn reduce_basis(u: &VariableUniverse, basis: Vec<Binomial>) -> Vec<Binomial> {
    // Drop duplicates, then any element whose lead another kept lead divides.
    let mut kept: Vec<Binomial> = Vec::new();
    for b in &basis {
        if !kept.contains(b) {
            kept.push(b.clone());
        }
    }
    let mut removed = vec![false; kept.len()];
    for i in 0..kept.len() {
        for j in 0..kept.len() {
            if i == j || removed[j] {
                continue;
            }
            let li = kept[i].lead();
            let lj = kept[j].lead();
            if lj.divides(li) && (lj != li || j < i) {
                removed[i] = true;
                break;
            }
        }
    }
    let minimal: Vec<Binomial> = kept
        .into_iter()
        .zip(&removed)
        .filter(|(_, &r)| !r)
        .map(|(b, _)| b)
        .collect();

    // Interreduce trails (leads are untouched: they form an antichain).
    let mut reduced: Vec<Binomial> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<Binomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, b)| b.clone())
            .collect();
        let trail = reduce_monomial(u, minimal[i].trail().clone(), &others);
        reduced.push(
            Binomial::new(minimal[i].lead().clone(), trail)
                .expect("homogeneous")
                .expect("trail reduction cannot reach the lead"),
        );
    }
    reduced.sort_by(|a, b| TermOrder::cmp(a.lead(), b.lead()));
    reduced
}

/// The elements lying in the `q_j`-subring only: generators of the
/// elimination ideal. For the lexicographic elimination order this is the
/// Gröbner basis of the intersection.
pub fn eliminate(u: &VariableUniverse, basis: &[Binomial]) -> Vec<Binomial> {
    basis
        .iter()
        .filter(|b| u.is_q_only(b.lead()) && u.is_q_only(b.trail()))
        .cloned()
        .collect()
}

/// Sorts ascending in the term order and drops every monomial that another
/// kept monomial divides: the unique minimal generating set of the monomial
/// ideal. (Proper divisibility implies strict term-order precedence, so one
/// ascending pass suffices.)
pub fn minimalize_monomials(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort_by(TermOrder::cmp);
    mons.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in mons {
        if !minimal.iter().any(|k| k.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal
}

/// The leads of a basis, as a minimal (divisibility-reduced) generating set
/// of the leading-term ideal, sorted ascending.
pub fn leading_terms(basis: &[Binomial]) -> Vec<Monomial> {
    minimalize_monomials(basis.iter().map(|b| b.lead().clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe_4() -> VariableUniverse {
        VariableUniverse::new(&[1, 2, 3, 4]).unwrap()
    }

    #[test]
    fn universe_layout() {
        let u = universe_4();
        // q1..q4, t, x2, x3
        assert_eq!(u.num_vars(), 7);
        assert!(VariableUniverse::new(&[]).is_err());
        assert!(VariableUniverse::new(&[2, 2]).is_err());
        assert!(VariableUniverse::new(&[0, 1]).is_err());
    }

    #[test]
    fn generators_match_factorial_images() {
        let u = universe_4();
        let gens = u.generators();
        let rendered: Vec<String> = gens.iter().map(|b| u.format_binomial(b)).collect();
        // 1! = 1, 2! = 2, 3! = 2·3, 4! = 2^3·3; leads follow the term order
        // (t and x variables outrank every q_j).
        assert_eq!(
            rendered,
            vec![
                "q - q1",
                "q^2 x2 - q2",
                "q^3 x2 x3 - q3",
                "q^4 x2^3 x3 - q4",
            ]
        );
    }

    #[test]
    fn elimination_order_ranks_variables() {
        let u = universe_4();
        let m = |s: &str| u.parse_monomial(s).unwrap();
        // x3 beats any power of x2; x2 beats anything x-free; t beats q_j.
        assert_eq!(TermOrder::cmp(&m("x3"), &m("x2^9")), Ordering::Greater);
        assert_eq!(TermOrder::cmp(&m("x2"), &m("q^9 q4^9")), Ordering::Greater);
        assert_eq!(TermOrder::cmp(&m("q"), &m("q4^5")), Ordering::Greater);
        assert_eq!(TermOrder::cmp(&m("q4"), &m("q3^7 q1")), Ordering::Greater);
        // The relation q1^3 q4 - q2^2 q3 is led by q1^3 q4.
        assert_eq!(
            TermOrder::cmp(&m("q1^3 q4"), &m("q2^2 q3")),
            Ordering::Greater
        );
    }

    #[test]
    fn monomial_algebra() {
        let u = universe_4();
        let m = |s: &str| u.parse_monomial(s).unwrap();
        let a = m("q1^3 q4");
        let b = m("q1 q2");
        assert_eq!(u.gcd(&a, &b), m("q1"));
        assert_eq!(u.lcm(&a, &b), m("q1^3 q2 q4"));
        assert_eq!(u.colon(&a, &b), m("q1^2 q4"));
        assert_eq!(a.weighted_degree(), 7);
        assert!(m("q1 q4").divides(&a));
        assert!(!m("q2").divides(&a));
    }

    #[test]
    fn homogeneity_is_enforced() {
        let u = universe_4();
        let a = u.parse_monomial("q1").unwrap();
        let b = u.parse_monomial("q2").unwrap();
        assert!(matches!(
            Binomial::new(a, b),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn s_binomial_of_coprime_leads_reduces_to_zero() {
        let u = universe_4();
        let bin = |s: &str| u.parse_binomial(s).unwrap();
        let f = bin("q2^2 - q1^4");
        let g = bin("q3^2 - q1^6");
        let s = s_binomial(&u, &f, &g).unwrap().unwrap();
        assert_eq!(normal_form(&u, &s, &[f, g]).unwrap(), None);
    }

    #[test]
    fn partition_monomials_and_normal_forms() {
        let u = universe_4();
        let basis = buchberger(&u, &u.generators(), 10_000).unwrap();
        // The first coefficient collision: (4,1,1,1) vs (3,2,2).
        let a = u
            .partition_monomial(&Partition::new(vec![4, 1, 1, 1]).unwrap())
            .unwrap();
        let b = u
            .partition_monomial(&Partition::new(vec![3, 2, 2]).unwrap())
            .unwrap();
        let pair = Binomial::new(a, b).unwrap().unwrap();
        assert_eq!(normal_form(&u, &pair, &basis).unwrap(), None);
        // A non-collision stays nonzero.
        let c = u
            .partition_monomial(&Partition::new(vec![4, 3]).unwrap())
            .unwrap();
        let d = u
            .partition_monomial(&Partition::new(vec![4, 2, 1]).unwrap())
            .unwrap();
        let pair = Binomial::new(c, d).unwrap().unwrap();
        assert!(normal_form(&u, &pair, &basis).unwrap().is_some());
    }

    #[test]
    fn two_part_basis_and_empty_elimination() {
        let u = VariableUniverse::new(&[1, 2]).unwrap();
        let basis = buchberger(&u, &u.generators(), 10_000).unwrap();
        let rendered: Vec<String> = basis.iter().map(|b| u.format_binomial(b)).collect();
        assert_eq!(rendered, vec!["q - q1", "q1^2 x2 - q2"]);
        assert!(eliminate(&u, &basis).is_empty());
    }

    #[test]
    fn elimination_for_parts_up_to_four() {
        let u = universe_4();
        let basis = buchberger(&u, &u.generators(), 10_000).unwrap();
        assert_eq!(basis.len(), 11);
        let j = eliminate(&u, &basis);
        let rendered: Vec<String> = j.iter().map(|b| u.format_binomial(b)).collect();
        assert_eq!(rendered, vec!["q1^3 q4 - q2^2 q3"]);
        let leads = leading_terms(&j);
        assert_eq!(leads.len(), 1);
        assert_eq!(u.format_monomial(&leads[0]), "q1^3 q4");
    }

    #[test]
    fn budget_is_respected() {
        let u = universe_4();
        assert_eq!(
            buchberger(&u, &u.generators(), 2),
            Err(Error::BudgetExceeded { budget: 2 })
        );
    }

    #[test]
    fn parse_format_roundtrip() {
        let u = universe_4();
        for text in ["q1^3 q4", "q", "1", "q1^2 x2", "q4^3 x3", "q^4 x2^3 x3"] {
            let m = u.parse_monomial(text).unwrap();
            assert_eq!(u.format_monomial(&m), text);
        }
        assert!(u.parse_monomial("q5").is_err());
        assert!(u.parse_monomial("x7").is_err());
        assert!(u.parse_monomial("y2").is_err());
    }
}
