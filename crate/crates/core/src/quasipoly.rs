//! Partial fractions and quasipolynomial closed forms.
//!
//! A rational generating function with denominator `prod (1 - q^j)` has
//! poles only at roots of unity, so it decomposes over the cyclotomic
//! polynomials: a polynomial part plus terms `A(q) / Φ_d(q)^e` with
//! `deg A < deg Φ_d`. Each such term contributes to the series coefficient
//! a polynomial in `n` whose coefficients depend only on `n mod d`; summing
//! them gives a *quasipolynomial* — for every residue class modulo a common
//! period, one polynomial in `n` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hilbert::RationalGF;
use crate::poly::Poly;

/// The `n`-th cyclotomic polynomial, by the quotient recurrence
/// `q^n - 1 = prod_{d | n} Φ_d(q)`.
pub fn cyclotomic(n: u64) -> Poly<BigRational> {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut cache: BTreeMap<u64, Poly<BigRational>> = BTreeMap::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        // q^d - 1, then divide off every proper cyclotomic factor.
        let mut phi = Poly::one_minus_q_pow(d as usize).neg();
        for (&e, prior) in cache.range(..d) {
            if d % e == 0 {
                phi = phi.exact_div(prior);
            }
        }
        cache.insert(d, phi);
    }
    cache.remove(&n).expect("n divides n")
}

/// One partial-fraction term `numerator / Φ_d^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfTerm {
    pub cyclotomic_index: u64,
    pub power: u32,
    /// Degree strictly below `deg Φ_d`.
    pub numerator: Poly<BigRational>,
}

/// A complete partial-fraction decomposition: polynomial part plus terms
/// ordered by cyclotomic index ascending, power descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial_part: Poly<BigRational>,
    pub terms: Vec<PfTerm>,
}

fn to_rational_poly(p: &Poly<BigInt>) -> Poly<BigRational> {
    Poly::new(
        p.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    )
}

/// Decomposes a rational generating function over the cyclotomic
/// polynomials.
pub fn partial_fractions(gf: &RationalGF) -> PartialFractions {
    let factors = gf.denominator_exponents();
    // prod_j (1 - q^j) = (-1)^{#factors} * prod_d Φ_d^{e_d}, where e_d
    // counts the factors whose exponent d divides.
    let mut exponents: BTreeMap<u64, u32> = BTreeMap::new();
    for &j in factors {
        for d in 1..=j {
            if j % d == 0 {
                *exponents.entry(d).or_insert(0) += 1;
            }
        }
    }
    let mut numerator = to_rational_poly(gf.numerator());
    if factors.len() % 2 == 1 {
        numerator = numerator.neg();
    }
    let phis: BTreeMap<u64, Poly<BigRational>> =
        exponents.keys().map(|&d| (d, cyclotomic(d))).collect();
    let mut denominator = Poly::one();
    for (&d, &e) in &exponents {
        denominator = denominator.mul(&phis[&d].pow(e));
    }

    let (polynomial_part, mut rem) = numerator.div_rem(&denominator);

    // Peel one cyclotomic power at a time: with D = F * G and
    // u F + v G = 1, the F-part of rem/D is (rem * v) mod F, and the
    // complement divides out exactly.
    let mut terms = Vec::new();
    let mut remaining_den = denominator;
    for (&d, &e) in &exponents {
        let f = phis[&d].pow(e);
        remaining_den = remaining_den.exact_div(&f);
        let (g, _, v) = f.xgcd(&remaining_den);
        debug_assert!(g.degree() == Some(0), "cyclotomic powers are coprime");
        let a = rem.mul(&v).rem(&f);
        rem = rem.sub(&a.mul(&remaining_den)).exact_div(&f);

        // Φ-adic expansion of a / Φ_d^e.
        let mut cur = a;
        for power in (1..=e).rev() {
            let (q, c) = cur.div_rem(&phis[&d]);
            if !c.is_zero() {
                terms.push(PfTerm {
                    cyclotomic_index: d,
                    power,
                    numerator: c,
                });
            }
            cur = q;
        }
        debug_assert!(cur.is_zero(), "expansion exhausts the numerator");
    }
    debug_assert!(rem.is_zero(), "all poles accounted for");

    PartialFractions {
        polynomial_part,
        terms,
    }
}

impl fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.polynomial_part.is_zero() {
            write!(f, "{}", self.polynomial_part)?;
            wrote = true;
        }
        for term in &self.terms {
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            write!(
                f,
                "({})/({})",
                term.numerator,
                cyclotomic(term.cyclotomic_index)
            )?;
            if term.power > 1 {
                write!(f, "^{}", term.power)?;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A periodic-coefficient polynomial in `n`: for each residue of `n`
/// modulo `period`, one polynomial with rational coefficients. Valid from
/// index `valid_from` on (earlier coefficients may differ by a polynomial
/// part of the generating function).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasipolynomial {
    period: u64,
    valid_from: u64,
    /// `coeffs[r][k]` is the coefficient of `n^k` when `n ≡ r (mod period)`.
    /// All rows share one length, `degree + 1`.
    coeffs: Vec<Vec<BigRational>>,
}

impl Quasipolynomial {
    /// Builds one directly from per-residue coefficient rows (row `r` holds
    /// the coefficients, ascending in the power of `n`, used when
    /// `n ≡ r (mod rows.len())`).
    pub fn from_residue_polynomials(
        valid_from: u64,
        mut rows: Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvariantViolation(
                "a quasipolynomial needs at least one residue class".into(),
            ));
        }
        let width = rows.iter().map(Vec::len).max().expect("non-empty").max(1);
        for row in &mut rows {
            row.resize(width, BigRational::zero());
        }
        let mut q = Quasipolynomial {
            period: rows.len() as u64,
            valid_from,
            coeffs: rows,
        };
        q.trim();
        Ok(q)
    }

    fn trim(&mut self) {
        let width = self.coeffs[0].len();
        let mut top = 0;
        for k in (0..width).rev() {
            if self.coeffs.iter().any(|row| !row[k].is_zero()) {
                top = k;
                break;
            }
        }
        for row in &mut self.coeffs {
            row.truncate(top + 1);
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn valid_from(&self) -> u64 {
        self.valid_from
    }

    /// The coefficient of `n^k` on the residue class of `n_residue`.
    pub fn coefficient(&self, n_residue: u64, k: usize) -> BigRational {
        self.coeffs[(n_residue % self.period) as usize]
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn residue_coefficients(&self, n_residue: u64) -> &[BigRational] {
        &self.coeffs[(n_residue % self.period) as usize]
    }

    /// Evaluates at `n`. Errors when `n` is below the validity threshold or
    /// when the value is not an integer (which indicates the
    /// quasipolynomial does not describe an integer sequence at `n`).
    pub fn evaluate(&self, n: u64) -> Result<BigInt> {
        if n < self.valid_from {
            return Err(Error::BelowThreshold {
                n,
                valid_from: self.valid_from,
            });
        }
        let row = &self.coeffs[(n % self.period) as usize];
        let x = BigRational::from_integer(BigInt::from(n));
        let mut value = BigRational::zero();
        for c in row.iter().rev() {
            value = value * &x + c;
        }
        if !value.is_integer() {
            return Err(Error::NonIntegralValue(format!("value {value} at n = {n}")));
        }
        Ok(value.to_integer())
    }
}

impl PartialFractions {
    /// Sums the per-term contributions into one quasipolynomial. A term
    /// `A/Φ_d^e` is first rewritten over `(1 - q^d)^e`, whose coefficients
    /// are binomials in `(n - i)/d`; the binomial, read as a polynomial,
    /// vanishes wherever the true coefficient has no contribution, so the
    /// result is exact for every `n` past the polynomial part.
    pub fn quasipolynomial(&self) -> Quasipolynomial {
        let period = self
            .terms
            .iter()
            .fold(1u64, |acc, t| num_integer::lcm(acc, t.cyclotomic_index));
        let width = self
            .terms
            .iter()
            .map(|t| t.power as usize)
            .max()
            .unwrap_or(1);
        let mut rows = vec![vec![BigRational::zero(); width]; period as usize];

        for term in &self.terms {
            let d = term.cyclotomic_index;
            let e = term.power;
            // A/Φ_d^e = B/(1 - q^d)^e with
            // B = (-1)^e * A * prod_{d' | d, d' < d} Φ_{d'}^e.
            let mut b = term.numerator.clone();
            for dp in 1..d {
                if d % dp == 0 {
                    b = b.mul(&cyclotomic(dp).pow(e));
                }
            }
            if e % 2 == 1 {
                b = b.neg();
            }
            // 1/(1-q^d)^e has coefficient C(e-1+m, e-1) at q^{dm}; the
            // polynomial extension in n is correct for all n >= 0 because
            // deg B < e*d keeps the stray binomials at negative integer
            // arguments, where they vanish.
            let factorial: BigInt = (1..e).map(BigInt::from).product();
            let factorial = BigRational::from_integer(factorial);
            for (i, bi) in b.coeffs().iter().enumerate() {
                if bi.is_zero() {
                    continue;
                }
                let mut contribution = Poly::constant(bi / &factorial);
                for t in 1..e {
                    // (n - i)/d + t, as a linear polynomial in n.
                    let c0 = BigRational::new(
                        BigInt::from(t) * BigInt::from(d) - BigInt::from(i),
                        BigInt::from(d),
                    );
                    let c1 = BigRational::new(BigInt::one(), BigInt::from(d));
                    contribution = contribution.mul(&Poly::new(vec![c0, c1]));
                }
                let mut r = (i as u64) % d;
                while r < period {
                    for (k, c) in contribution.coeffs().iter().enumerate() {
                        rows[r as usize][k] += c;
                    }
                    r += d;
                }
            }
        }

        let valid_from = match self.polynomial_part.degree() {
            Some(deg) => deg as u64 + 1,
            None => 0,
        };
        let mut q = Quasipolynomial {
            period,
            valid_from,
            coeffs: rows,
        };
        q.trim();
        q
    }
}

/// Convenience: straight from a rational generating function to its
/// quasipolynomial.
pub fn quasipolynomial(gf: &RationalGF) -> Quasipolynomial {
    partial_fractions(gf).quasipolynomial()
}

fn minimal_period(values: &[&BigRational]) -> usize {
    let len = values.len();
    for p in 1..=len {
        if len.is_multiple_of(p) && (0..len).all(|r| values[r] == values[r % p]) {
            return p;
        }
    }
    len
}

impl fmt::Display for Quasipolynomial {
    /// Renders highest power first. A coefficient that is constant across
    /// residues prints as a plain rational; a genuinely periodic one prints
    /// as a bracket list indexed by `n` modulo its own minimal period, e.g.
    /// `7/48 n^2 + [1/2, 3/8](n) n + [...](n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for k in (0..=self.degree()).rev() {
            let values: Vec<&BigRational> = (0..self.period as usize)
                .map(|r| &self.coeffs[r][k])
                .collect();
            let p = minimal_period(&values);
            let suffix = match k {
                0 => String::new(),
                1 => " n".to_string(),
                _ => format!(" n^{k}"),
            };
            if p == 1 {
                let c = values[0];
                if c.is_zero() {
                    continue;
                }
                if wrote {
                    write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
                } else if c.is_negative() {
                    write!(f, "-")?;
                }
                let abs = c.abs();
                if abs.is_one() && k > 0 {
                    write!(f, "{}", suffix.trim_start())?;
                } else {
                    write!(f, "{abs}{suffix}")?;
                }
            } else {
                if wrote {
                    write!(f, " + ")?;
                }
                write!(f, "[")?;
                for (idx, v) in values[..p].iter().enumerate() {
                    if idx > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "](n){suffix}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
