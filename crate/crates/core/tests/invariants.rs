//! Cross-module consistency properties: the direct counting engine, the
//! elimination pipeline, the series toolkit, and the closed forms must all
//! describe the same numbers, from every angle they expose.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use multinom::partitions::{count_partitions, enumerate_partitions, partition_series};
use multinom::poly::Poly;
use multinom::quasipoly::quasipolynomial;
use multinom::series::prime_union_series;
use multinom::signatures::{coefficient_value, count_distinct, signature_of, Signature};
use multinom::toric::{leading_terms, normal_form, s_binomial};
use multinom::{
    family_factorial, family_power, generating_function, groebner_run, hilbert::hilbert_numerator,
    irreducible_pairs, PartSet, Partition, RationalGF,
};

fn parts_up_to(hi: u64) -> PartSet {
    PartSet::finite(1..=hi).unwrap()
}

/// Every view of restricted partition counting — the generating series, the
/// direct counter, and the enumerator — agrees, for every kind of part set.
#[test]
fn counting_views_agree_for_every_part_set_kind() {
    const LIMIT: usize = 60;
    let kinds = [
        PartSet::AllNaturals,
        PartSet::Primes,
        PartSet::OnePlusPrimes,
        PartSet::ConjectureStar,
        PartSet::ConjectureHash,
        parts_up_to(4),
    ];
    for set in &kinds {
        let series = partition_series(set, LIMIT);
        for n in 0..=LIMIT as u64 {
            let counted = count_partitions(n, set, None);
            let enumerated = enumerate_partitions(n, set, None).count();
            assert_eq!(series.coeff(n as usize), &counted, "{set} at n = {n}");
            assert_eq!(counted, BigInt::from(enumerated), "{set} at n = {n}");
        }
    }
    // Unrestricted counts never decrease.
    let all = partition_series(&PartSet::AllNaturals, LIMIT);
    for n in 1..=LIMIT {
        assert!(all.coeff(n - 1) <= all.coeff(n));
    }
}

/// Partitions of `n` into at most `k` parts are conjugate to partitions of
/// `n` into parts of size at most `k`.
#[test]
fn conjugation_exchanges_count_and_size_restrictions() {
    for k in 1..=10u64 {
        let sized = parts_up_to(k);
        for n in 0..=50u64 {
            assert_eq!(
                count_partitions(n, &PartSet::AllNaturals, Some(k)),
                count_partitions(n, &sized, None),
                "n = {n}, k = {k}"
            );
        }
    }
}

/// Two partitions of the same `n` have equal signatures exactly when their
/// multinomial coefficients are equal integers.
#[test]
fn signature_equality_coincides_with_value_equality() {
    for n in 0..=40u64 {
        let mut value_of_signature = HashMap::new();
        let mut signature_of_value = HashMap::new();
        for p in enumerate_partitions(n, &PartSet::AllNaturals, None) {
            let sig = signature_of(&p);
            let value = coefficient_value(&p);
            if let Some(known) = value_of_signature.get(&sig) {
                assert_eq!(
                    known, &value,
                    "signature collision with distinct values, n = {n}"
                );
            } else {
                value_of_signature.insert(sig.clone(), value.clone());
            }
            if let Some(known) = signature_of_value.get(&value) {
                assert_eq!(
                    known, &sig,
                    "value collision with distinct signatures, n = {n}"
                );
            } else {
                signature_of_value.insert(value, sig);
            }
        }
    }
}

/// Distinct partitions into primes always have distinct signatures.
#[test]
fn prime_partitions_inject_into_signatures() {
    for n in 0..=60u64 {
        let mut seen: HashSet<Signature> = HashSet::new();
        let mut total = 0usize;
        for p in enumerate_partitions(n, &PartSet::Primes, None) {
            seen.insert(signature_of(&p));
            total += 1;
        }
        assert_eq!(seen.len(), total, "n = {n}");
    }
}

/// For small parts {1,4} extended by prime parts {5,7}: the signature of the
/// combined partition pins down the prime portion completely.
#[test]
fn prime_tail_is_determined_by_the_signature() {
    let small = PartSet::finite([1, 4]).unwrap();
    let primes = PartSet::finite([5, 7]).unwrap();
    for n in 0..=40u64 {
        let mut tail_of_signature: HashMap<Signature, Partition> = HashMap::new();
        for m in 0..=n {
            let tails: Vec<Partition> = enumerate_partitions(n - m, &primes, None).collect();
            for s in enumerate_partitions(m, &small, None) {
                for p in &tails {
                    let sig = signature_of(&s.union(p));
                    if let Some(known) = tail_of_signature.get(&sig) {
                        assert_eq!(known, p, "one signature carries two prime tails at n = {n}");
                    } else {
                        tail_of_signature.insert(sig, p.clone());
                    }
                }
            }
        }
    }
}

/// The computed bases really are Gröbner bases: every S-binomial of the
/// output reduces to zero, and every element stays weight-homogeneous.
#[test]
fn certified_groebner_bases_reduce_all_s_binomials_to_zero() {
    for hi in 4..=6u64 {
        let parts: Vec<u64> = (1..=hi).collect();
        let run = groebner_run(&parts, 200_000).unwrap();
        for b in &run.basis {
            assert_eq!(
                b.lead().weighted_degree(),
                b.trail().weighted_degree(),
                "inhomogeneous element for parts up to {hi}"
            );
        }
        if hi <= 5 {
            for i in 0..run.basis.len() {
                for j in i + 1..run.basis.len() {
                    let s = s_binomial(&run.universe, &run.basis[i], &run.basis[j]).unwrap();
                    let reduced = match s {
                        None => None,
                        Some(b) => normal_form(&run.universe, &b, &run.basis).unwrap(),
                    };
                    assert!(
                        reduced.is_none(),
                        "S-binomial ({i},{j}) fails to reduce for parts up to {hi}"
                    );
                }
            }
        }
    }
}

/// Binomials surviving elimination encode genuine coincidences: lead and
/// trail are distinct partitions of one `n` with equal signatures.
#[test]
fn elimination_binomials_pair_equal_coefficients() {
    for hi in [4u64, 6] {
        let parts: Vec<u64> = (1..=hi).collect();
        let run = groebner_run(&parts, 200_000).unwrap();
        assert!(!run.elimination.is_empty(), "parts up to {hi}");
        for b in &run.elimination {
            let lead = run
                .universe
                .monomial_to_partition(b.lead())
                .expect("eliminated lead is a pure part monomial");
            let trail = run
                .universe
                .monomial_to_partition(b.trail())
                .expect("eliminated trail is a pure part monomial");
            assert_ne!(lead, trail);
            assert_eq!(lead.n(), trail.n());
            assert!(lead.n() <= 25);
            assert_eq!(signature_of(&lead), signature_of(&trail));
            assert_eq!(coefficient_value(&lead), coefficient_value(&trail));
        }
    }
}

/// Adjoining primes larger than every existing part leaves the numerator
/// unchanged; only the denominator picks up the new factors.
#[test]
fn adjoining_large_primes_preserves_the_numerator() {
    let base = generating_function(&parts_up_to(4), 200_000).unwrap();
    let extended =
        generating_function(&PartSet::finite([1, 2, 3, 4, 5, 7]).unwrap(), 500_000).unwrap();
    assert_eq!(extended.numerator(), base.numerator());
    assert_eq!(extended.denominator_exponents(), &[1, 2, 3, 4, 5, 7]);

    let six = generating_function(&parts_up_to(6), 200_000).unwrap();
    let seven = generating_function(&parts_up_to(7), 200_000).unwrap();
    assert_eq!(seven.numerator(), six.numerator());
    assert_eq!(seven.denominator_exponents(), &[1, 2, 3, 4, 5, 6, 7]);
}

/// The pipeline's series stays on the oracle far past the acceptance window
/// for parts up to 4, and every expansion coefficient is a cardinality.
#[test]
fn pipeline_series_match_direct_counts_far_out() {
    const ORDER: usize = 100;
    let s4 = parts_up_to(4);
    let series = generating_function(&s4, 200_000).unwrap().expand(ORDER);
    for n in 0..=ORDER as u64 {
        assert_eq!(
            series.coeff(n as usize),
            &BigInt::from(count_distinct(n, &s4, None)),
            "n = {n}"
        );
    }
    for hi in 2..=7u64 {
        let series = generating_function(&parts_up_to(hi), 200_000)
            .unwrap()
            .expand(ORDER);
        for n in 0..=ORDER {
            assert!(
                series.coeff(n) >= &BigInt::zero(),
                "negative coefficient for parts up to {hi} at n = {n}"
            );
        }
    }
}

/// The inclusion–exclusion numerator does not depend on the order in which
/// the leading terms are fed in.
#[test]
fn numerator_recursion_is_order_independent() {
    let run = groebner_run(&[1, 2, 3, 4], 200_000).unwrap();
    let mut leads = leading_terms(&run.basis);
    let reference = hilbert_numerator(&run.universe, &leads);
    leads.reverse();
    assert_eq!(hilbert_numerator(&run.universe, &leads), reference);
    leads.rotate_left(3);
    assert_eq!(hilbert_numerator(&run.universe, &leads), reference);
    // Redundant (divisible) generators change nothing either.
    let mut padded = leads.clone();
    let doubled = run.universe.mul(&leads[0], &leads[0]);
    padded.push(doubled);
    assert_eq!(hilbert_numerator(&run.universe, &padded), reference);
}

/// Each closed form evaluates, term by term, to the very series it came
/// from, with a period dividing the lcm of the part sizes.
#[test]
fn quasipolynomials_track_their_series_everywhere() {
    for hi in 2..=7u64 {
        let gf = generating_function(&parts_up_to(hi), 200_000).unwrap();
        let closed = quasipolynomial(&gf);
        let lcm = (1..=hi).fold(1u64, num_integer::lcm);
        assert_eq!(lcm % closed.period(), 0, "period for parts up to {hi}");
        let series = gf.expand(200);
        for n in closed.valid_from()..=200 {
            assert_eq!(
                closed.evaluate(n).unwrap(),
                series.coeff(n as usize).clone(),
                "parts up to {hi}, n = {n}"
            );
        }
    }
}

/// The irreducible-pair table: where it vanishes, where it cannot, that the
/// constructive families land in it, and that orientation is canonical.
#[test]
fn pair_table_positivity_families_and_orientation() {
    let zero_set: BTreeSet<u64> = [0, 1, 2, 3, 4, 5, 6, 9, 11, 12].into();
    for n in 0..=45u64 {
        let pairs = irreducible_pairs(n);
        if zero_set.contains(&n) {
            assert!(pairs.is_empty(), "expected none at n = {n}");
        } else {
            assert!(!pairs.is_empty(), "expected some at n = {n}");
        }
        let mut seen = BTreeSet::new();
        for pair in &pairs {
            assert!(pair.left() > pair.right(), "orientation at n = {n}");
            assert!(
                seen.insert((pair.left().clone(), pair.right().clone())),
                "duplicate pair at n = {n}"
            );
        }
    }

    for a in 2..=5u64 {
        for m in 2..=4u32 {
            let pair = family_power(a, m).unwrap();
            assert_eq!(
                coefficient_value(pair.left()),
                coefficient_value(pair.right())
            );
        }
    }
    for j in 3..=6u64 {
        let pair = family_factorial(j).unwrap();
        assert_eq!(
            coefficient_value(pair.left()),
            coefficient_value(pair.right())
        );
    }
}

/// The share of partition coefficients that are distinct shrinks: the ratio
/// of distinct counts to partition counts never increases across the table.
#[test]
fn distinct_share_of_partitions_shrinks() {
    let samples: Vec<(BigInt, BigInt)> = (1..=7u64)
        .map(|k| {
            let n = 10 * k;
            (
                BigInt::from(count_distinct(n, &PartSet::AllNaturals, None)),
                count_partitions(n, &PartSet::AllNaturals, None),
            )
        })
        .collect();
    for window in samples.windows(2) {
        let (ref m1, ref p1) = window[0];
        let (ref m2, ref p2) = window[1];
        // m2/p2 <= m1/p1 without leaving the integers.
        assert!(m2 * p1 <= m1 * p2, "ratio increased between samples");
    }
}

/// First differences of the "parts are 1 or prime" series count the
/// partitions into primes alone.
#[test]
fn one_plus_prime_series_differences_count_prime_partitions() {
    const LIMIT: usize = 60;
    let with_one = prime_union_series(true, LIMIT);
    for n in 1..=LIMIT as u64 {
        let diff = with_one.coeff(n as usize) - with_one.coeff(n as usize - 1);
        assert_eq!(diff, count_partitions(n, &PartSet::Primes, None), "n = {n}");
    }
}

fn part_set_strategy() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::btree_set(1u64..=8, 1..=4).prop_map(|s| s.into_iter().collect())
}

fn int_poly_strategy() -> impl Strategy<Value = Poly<BigInt>> {
    proptest::collection::vec(-3i64..=3, 1..=5)
        .prop_filter("nonzero numerator", |v| v.iter().any(|&c| c != 0))
        .prop_map(|v| Poly::new(v.into_iter().map(BigInt::from).collect()))
}

fn denominator_strategy() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(1u64..=5, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Both engines agree on any small part set, however gappy.
    #[test]
    fn random_part_sets_agree_between_engines(parts in part_set_strategy()) {
        let set = PartSet::finite(parts.clone()).unwrap();
        let series = generating_function(&set, 1_000_000).unwrap().expand(12);
        for n in 0..=12u64 {
            prop_assert_eq!(
                series.coeff(n as usize).clone(),
                BigInt::from(count_distinct(n, &set, None)),
                "parts {:?}, n = {}", parts, n
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// An arbitrary rational function over (1-q^j) factors: its closed form
    /// evaluates back to its own expansion, and its printed form re-parses
    /// to the same function.
    #[test]
    fn random_rational_functions_evaluate_and_round_trip(
        numerator in int_poly_strategy(),
        factors in denominator_strategy(),
    ) {
        let gf = RationalGF::new(numerator, factors).unwrap();
        let reparsed: RationalGF = gf.to_string().parse().unwrap();
        prop_assert_eq!(&reparsed, &gf);

        let closed = quasipolynomial(&gf);
        let series = gf.expand(40);
        for n in closed.valid_from()..=40 {
            prop_assert_eq!(
                closed.evaluate(n).unwrap(),
                series.coeff(n as usize).clone(),
                "gf {}, n = {}", gf, n
            );
        }
    }

    /// Partition text forms survive a round trip.
    #[test]
    fn partitions_round_trip_through_text(raw in proptest::collection::vec(1u64..=30, 1..=8)) {
        let p = Partition::new(raw).unwrap();
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}
