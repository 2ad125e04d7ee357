//! From a Gröbner basis to a closed-form generating function.
//!
//! The number of distinct multinomial coefficients with upper entry `n` and
//! parts from a finite set `S` is the Hilbert function of the quotient
//! `k[q_j : j in S] / J` in weighted degree `n`, where `J` is the
//! elimination ideal built in [`crate::toric`]. That Hilbert function only
//! depends on the leading-term ideal of `J`, and for a monomial ideal the
//! generating function is `N(q) / prod_{j in S} (1 - q^j)` with a numerator
//! computable by inclusion–exclusion:
//!
//! ```text
//! N(∅) = 1,    N({t} ∪ L) = N(L) - q^deg(t) · N(L : t)
//! ```
//!
//! where the colon `L : t` is again a monomial ideal with generators
//! `m / gcd(m, t)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::PartSet;
use crate::poly::Poly;
use crate::series::PowerSeries;
use crate::toric::{
    buchberger, eliminate, leading_terms, minimalize_monomials, Binomial, Monomial,
    VariableUniverse,
};

/// A rational generating function `numerator / prod (1 - q^j)`, with the
/// denominator kept in factored form (one entry per factor, with
/// multiplicity, ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Poly<BigInt>,
    denominator: Vec<u64>,
}

impl RationalGF {
    pub fn new(numerator: Poly<BigInt>, mut denominator: Vec<u64>) -> Result<Self> {
        if denominator.contains(&0) {
            return Err(Error::InvariantViolation(
                "denominator factor (1 - q^0) vanishes".into(),
            ));
        }
        denominator.sort_unstable();
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Poly<BigInt> {
        &self.numerator
    }

    /// The denominator's factor exponents: `j` appears once per factor
    /// `(1 - q^j)`, ascending.
    pub fn denominator_exponents(&self) -> &[u64] {
        &self.denominator
    }

    /// Power-series expansion to the given order (inclusive).
    pub fn expand(&self, order: usize) -> PowerSeries<BigInt> {
        let mut s = PowerSeries::from_poly(&self.numerator, order);
        for &j in &self.denominator {
            s.mul_geometric(j as usize);
        }
        s
    }

    /// A single series coefficient.
    pub fn coefficient(&self, n: u64) -> BigInt {
        self.expand(n as usize).coeff(n as usize).clone()
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let nonzero = self
            .numerator
            .coeffs()
            .iter()
            .filter(|c| !num_traits::Zero::is_zero(*c))
            .count();
        if nonzero > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        write!(f, "/")?;
        let mut grouped: Vec<(u64, usize)> = Vec::new();
        for &j in &self.denominator {
            match grouped.last_mut() {
                Some((k, e)) if *k == j => *e += 1,
                _ => grouped.push((j, 1)),
            }
        }
        let wrap = grouped.len() > 1;
        if wrap {
            write!(f, "(")?;
        }
        for (j, e) in grouped {
            if j == 1 {
                write!(f, "(1-q)")?;
            } else {
                write!(f, "(1-q^{j})")?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn parse_int_poly(text: &str) -> Result<Poly<BigInt>> {
    // Accept both spaced (`1 - q^7 + 2 q^9`) and glued (`1-q^7+2q^9`) forms.
    let mut spaced = String::new();
    for ch in text.chars() {
        match ch {
            '+' | '-' => {
                spaced.push(' ');
                spaced.push(ch);
                spaced.push(' ');
            }
            '*' => spaced.push(' '),
            _ => spaced.push(ch),
        }
    }
    let tokens: Vec<&str> = spaced.split_whitespace().collect();
    let mut result = Poly::zero();
    let mut idx = 0;
    let mut first = true;
    while idx < tokens.len() {
        let mut sign = BigInt::one();
        if tokens[idx] == "+" || tokens[idx] == "-" {
            if tokens[idx] == "-" {
                sign = -sign;
            }
            idx += 1;
        } else if !first {
            return Err(Error::Parse(format!(
                "expected sign before {:?}",
                tokens[idx]
            )));
        }
        first = false;
        // Gather the term's tokens (up to the next sign) and glue them.
        let mut term = String::new();
        while idx < tokens.len() && tokens[idx] != "+" && tokens[idx] != "-" {
            term.push_str(tokens[idx]);
            idx += 1;
        }
        if term.is_empty() {
            return Err(Error::Parse("dangling sign in polynomial".into()));
        }
        let (coeff, exp) = match term.split_once('q') {
            None => {
                let c: BigInt = term
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {term:?}")))?;
                (c, 0usize)
            }
            Some((c, e)) => {
                let coeff: BigInt = if c.is_empty() {
                    BigInt::one()
                } else {
                    c.parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?
                };
                let exp: usize = if e.is_empty() {
                    1
                } else if let Some(stripped) = e.strip_prefix('^') {
                    stripped
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?
                } else {
                    return Err(Error::Parse(format!("bad term {term:?}")));
                };
                (coeff, exp)
            }
        };
        result = result.add(&Poly::monomial(sign * coeff, exp));
    }
    Ok(result)
}

fn parse_denominator(text: &str, out: &mut Vec<u64>) -> Result<()> {
    let mut rest = text.trim();
    while !rest.is_empty() {
        if let Some(stripped) = rest.strip_prefix('*') {
            rest = stripped.trim_start();
            continue;
        }
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!(
                "expected a (1-q^j) factor at {rest:?}"
            )));
        }
        let mut depth = 0usize;
        let mut close = None;
        for (i, ch) in rest.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        close = Some(i);
                        break;
                    }
                }
                _ => {}
            }
        }
        let close = close.ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
        let inner = &rest[1..close];
        rest = rest[close + 1..].trim_start();
        let mut repeat = 1usize;
        if let Some(stripped) = rest.strip_prefix('^') {
            let end = stripped
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(stripped.len());
            repeat = stripped[..end]
                .parse()
                .map_err(|_| Error::Parse(format!("bad factor exponent in {text:?}")))?;
            rest = stripped[end..].trim_start();
        }
        if inner.contains('(') {
            // A parenthesized product: recurse and repeat the whole block.
            let mut block = Vec::new();
            parse_denominator(inner, &mut block)?;
            for _ in 0..repeat {
                out.extend_from_slice(&block);
            }
        } else {
            let flat: String = inner.chars().filter(|c| !c.is_whitespace()).collect();
            let j = if flat == "1-q" {
                1
            } else if let Some(e) = flat.strip_prefix("1-q^") {
                e.parse()
                    .map_err(|_| Error::Parse(format!("bad factor {inner:?}")))?
            } else {
                return Err(Error::Parse(format!("bad factor {inner:?}")));
            };
            for _ in 0..repeat {
                out.push(j);
            }
        }
    }
    Ok(())
}

impl FromStr for RationalGF {
    type Err = Error;

    /// Parses the [`Display`] form, e.g.
    /// `(1 - q^7)/((1-q)(1-q^2)(1-q^3)(1-q^4))`. A string without `/` is a
    /// plain polynomial.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num_text, den_text) = match s.split_once('/') {
            None => (s, None),
            Some((n, d)) => (n.trim(), Some(d.trim())),
        };
        let num_inner = num_text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .filter(|t| !t.contains('(') && !t.contains(')'))
            .unwrap_or(num_text);
        let numerator = parse_int_poly(num_inner)?;
        let mut denominator = Vec::new();
        if let Some(d) = den_text {
            // The whole denominator may carry one redundant paren layer:
            // `((1-q)(1-q^2))`. The factor parser handles that via recursion.
            parse_denominator(d, &mut denominator)?;
        }
        RationalGF::new(numerator, denominator)
    }
}

/// Minimal generators of the colon ideal `<leads> : t`.
pub fn colon_by_monomial(u: &VariableUniverse, leads: &[Monomial], t: &Monomial) -> Vec<Monomial> {
    minimalize_monomials(leads.iter().map(|m| u.colon(m, t)).collect())
}

type MonomialSetKey = Vec<Vec<u32>>;

fn numerator_rec(
    u: &VariableUniverse,
    gens: Vec<Monomial>,
    memo: &mut HashMap<MonomialSetKey, Poly<BigInt>>,
) -> Poly<BigInt> {
    if gens.is_empty() {
        return Poly::one();
    }
    // `gens` is minimalized and ascending, so a unit generator sits first
    // and is then the only one.
    if gens[0].is_unit() {
        return Poly::zero();
    }
    let key: MonomialSetKey = gens.iter().map(|m| m.exps().to_vec()).collect();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let t = gens.last().expect("non-empty").clone();
    let rest: Vec<Monomial> = gens[..gens.len() - 1].to_vec();
    let without = numerator_rec(u, rest.clone(), memo);
    let colon = colon_by_monomial(u, &rest, &t);
    let quotient = numerator_rec(u, colon, memo);
    let result = without.sub(&quotient.shift(t.weighted_degree() as usize));
    memo.insert(key, result.clone());
    result
}

/// The numerator `N(q)` of the Hilbert series of `k[q_j]/<leads>` over the
/// denominator `prod_{j in S} (1 - q^j)`, by inclusion–exclusion on the
/// monomial generators.
pub fn hilbert_numerator(u: &VariableUniverse, leads: &[Monomial]) -> Poly<BigInt> {
    let mut memo = HashMap::new();
    numerator_rec(u, minimalize_monomials(leads.to_vec()), &mut memo)
}

/// One full Gröbner run for a finite part set: the variable universe, the
/// reduced basis of the defining ideal, and the elimination ideal's basis
/// (the part lying in the `q_j`-subring).
#[derive(Debug, Clone)]
pub struct GroebnerRun {
    pub universe: VariableUniverse,
    pub basis: Vec<Binomial>,
    pub elimination: Vec<Binomial>,
}

pub fn groebner_run(parts: &[u64], budget: usize) -> Result<GroebnerRun> {
    let universe = VariableUniverse::new(parts)?;
    let basis = buchberger(&universe, &universe.generators(), budget)?;
    let elimination = eliminate(&universe, &basis);
    Ok(GroebnerRun {
        universe,
        basis,
        elimination,
    })
}

/// The closed-form generating function `sum_n M_S(n) q^n` for a finite part
/// set, by the full pipeline: Gröbner basis, elimination, leading terms,
/// inclusion–exclusion numerator.
pub fn generating_function(parts: &PartSet, budget: usize) -> Result<RationalGF> {
    let members = match parts {
        PartSet::Finite(v) => v.clone(),
        other => {
            return Err(Error::InvariantViolation(format!(
                "the elimination pipeline needs a finite part set, got `{other}`"
            )))
        }
    };
    let run = groebner_run(&members, budget)?;
    let leads = leading_terms(&run.elimination);
    let numerator = hilbert_numerator(&run.universe, &leads);
    RationalGF::new(numerator, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(parts: &[u64]) -> RationalGF {
        generating_function(&PartSet::finite(parts.iter().copied()).unwrap(), 200_000).unwrap()
    }

    #[test]
    fn trivial_numerators_for_small_part_ranges() {
        // Up to parts of size 3 every partition gives a distinct
        // coefficient, so the counting function is plain partition counting.
        for hi in 1..=3 {
            let g = gf(&(1..=hi).collect::<Vec<_>>());
            assert_eq!(g.numerator(), &Poly::one(), "parts 1..={hi}");
        }
    }

    #[test]
    fn numerator_for_parts_up_to_four_and_five() {
        assert_eq!(
            gf(&[1, 2, 3, 4]).to_string(),
            "(1 - q^7)/((1-q)(1-q^2)(1-q^3)(1-q^4))"
        );
        assert_eq!(
            gf(&[1, 2, 3, 4, 5]).to_string(),
            "(1 - q^7)/((1-q)(1-q^2)(1-q^3)(1-q^4)(1-q^5))"
        );
    }

    #[test]
    fn numerator_for_parts_up_to_six_and_seven() {
        let expected = "1 - q^7 - q^8 - q^10 + q^12 + q^13";
        assert_eq!(gf(&[1, 2, 3, 4, 5, 6]).numerator().to_string(), expected);
        assert_eq!(gf(&[1, 2, 3, 4, 5, 6, 7]).numerator().to_string(), expected);
    }

    #[test]
    fn expansion_matches_direct_counting() {
        let g = gf(&[1, 2, 3, 4]);
        let s = g.expand(12);
        let expected = [1u64, 1, 2, 3, 5, 6, 9, 10, 14, 16, 20, 22, 28];
        for (n, &m) in expected.iter().enumerate() {
            assert_eq!(s.coeff(n), &BigInt::from(m), "n = {n}");
        }
        assert_eq!(g.coefficient(10), BigInt::from(20u32));
    }

    #[test]
    fn infinite_sets_are_rejected() {
        assert!(matches!(
            generating_function(&PartSet::Primes, 1_000),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn colon_ideal_generators_are_minimal() {
        let u = VariableUniverse::new(&[1, 2, 3, 4]).unwrap();
        let leads = vec![
            u.parse_monomial("q1^3 q4").unwrap(),
            u.parse_monomial("q2^2").unwrap(),
        ];
        let t = u.parse_monomial("q1 q2 q4").unwrap();
        let colon = colon_by_monomial(&u, &leads, &t);
        let rendered: Vec<String> = colon.iter().map(|m| u.format_monomial(m)).collect();
        // q1^3 q4 / (q1 q4) = q1^2, q2^2 / q2 = q2.
        assert_eq!(rendered, vec!["q1^2", "q2"]);
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let cases = [
            "(1 - q^7)/((1-q)(1-q^2)(1-q^3)(1-q^4))",
            "(1 - q^7 - q^8 - q^10 + q^12 + q^13)/((1-q)(1-q^2)(1-q^3)(1-q^4)(1-q^5)(1-q^6))",
            "1/(1-q)",
            "1/((1-q)^2(1-q^3))",
            "1 - q^2",
        ];
        for text in cases {
            let g: RationalGF = text.parse().unwrap();
            assert_eq!(g.to_string(), text, "roundtrip of {text}");
        }
        // Glued and starred spellings parse to the same value.
        let a: RationalGF = "(1-q^7)/((1-q)*(1-q^2)*(1-q^3)*(1-q^4))".parse().unwrap();
        let b: RationalGF = "(1 - q^7)/((1-q)(1-q^2)(1-q^3)(1-q^4))".parse().unwrap();
        assert_eq!(a, b);
        assert!("(1 - q^7)/((1-q".parse::<RationalGF>().is_err());
        assert!("q^".parse::<RationalGF>().is_err());
        assert!("1/(2-q)".parse::<RationalGF>().is_err());
    }

    #[test]
    fn hilbert_numerator_of_simple_monomial_ideals() {
        let u = VariableUniverse::new(&[1, 2]).unwrap();
        // <q1^2>: numerator 1 - q^2 over (1-q)(1-q^2).
        let leads = vec![u.parse_monomial("q1^2").unwrap()];
        assert_eq!(hilbert_numerator(&u, &leads).to_string(), "1 - q^2");
        // <1>: the zero ring.
        let unit = vec![u.unit()];
        assert!(hilbert_numerator(&u, &unit).is_zero());
        // <q1, q2>: numerator (1-q)(1-q^2) — the series collapses to 1.
        let both = vec![
            u.parse_monomial("q1").unwrap(),
            u.parse_monomial("q2").unwrap(),
        ];
        assert_eq!(
            hilbert_numerator(&u, &both).to_string(),
            "1 - q - q^2 + q^3"
        );
    }
}
