use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldKind};

impl Poly {
    /// Distinct roots lying in the ground field, in ascending order.
    ///
    /// Over the rationals this is the rational root theorem; over GF(p) the
    /// roots are split off `gcd(self, x^p - x)`.
    pub fn roots(&self) -> Result<Vec<FieldElem>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = match self.spec.kind() {
            FieldKind::Rationals => self.rational_roots_unchecked(),
            FieldKind::PrimeField => self.prime_field_roots(0),
        };
        roots.sort();
        Ok(roots)
    }

    /// Distinct rational roots. Fails outside characteristic 0.
    pub fn rational_roots(&self) -> Result<Vec<FieldElem>> {
        if self.spec.kind() != FieldKind::Rationals {
            return Err(Error::InvalidArgument("rational roots need the rationals".into()));
        }
        self.roots()
    }

    /// Primitive integer multiple, lowest degree first, with positive
    /// leading coefficient. Only meaningful over the rationals.
    pub(crate) fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let qs: Vec<&BigRational> =
            self.coeffs.iter().map(|c| c.as_rational().expect("rational coefficients")).collect();
        let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() {
            for c in &mut ints {
                *c /= &content;
            }
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            for c in &mut ints {
                *c = -&*c;
            }
        }
        ints
    }

    fn rational_roots_unchecked(&self) -> Vec<FieldElem> {
        let spec = self.spec;
        let sq = self.squarefree_part().expect("nonzero");
        let mut out = Vec::new();
        let mut ints = sq.primitive_integer_coeffs();
        if ints[0].is_zero() {
            out.push(spec.zero());
            ints.remove(0);
        }
        if ints.len() <= 1 {
            return out;
        }
        let lead = ints.last().unwrap().clone();
        let numerators = divisors(&ints[0].abs());
        let denominators = divisors(&lead);
        let mut seen = std::collections::HashSet::new();
        for q in &denominators {
            for p in &numerators {
                for sign in [1, -1] {
                    let cand = BigRational::new(p * sign, q.clone());
                    if seen.insert(cand.clone()) && eval_int_poly(&ints, &cand).is_zero() {
                        out.push(FieldElem::from_rational(cand));
                    }
                }
            }
        }
        out
    }
}

fn eval_int_poly(ints: &[BigInt], at: &BigRational) -> BigRational {
    ints.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * at + BigRational::from_integer(c.clone()))
}

/// Positive divisors of a positive integer by trial division.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.abs();
    if rest.is_zero() {
        return vec![BigInt::one()];
    }
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        let mut k = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            k += 1;
        }
        if k > 0 {
            primes.push((d.clone(), k));
        }
        d += if d == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, k) in primes {
        let mut next = Vec::with_capacity(divs.len() * (k as usize + 1));
        for base in &divs {
            let mut pk = base.clone();
            for _ in 0..=k {
                next.push(pk.clone());
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Small odd primes, for reduction-based certificates.
pub(crate) fn small_primes(limit: u64) -> impl Iterator<Item = u64> {
    (2..limit).filter(|&n| crate::field::is_prime(n))
}

pub(crate) fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}
