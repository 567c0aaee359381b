use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::roots::{bigint_mod, small_primes};
use super::{write_signed, Poly};
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldKind, FieldSpec};

/// Whether a reported factor is known to be irreducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Verified,
    /// Produced without a certificate; it may split further.
    Unverified,
}

/// A monic factor with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Poly,
    pub multiplicity: usize,
    pub irreducibility: Irreducibility,
}

/// `unit * prod factor^multiplicity`, factors sorted by degree, then by
/// multiplicity, then by coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: FieldElem,
    pub factors: Vec<Factor>,
}

impl FactoredPoly {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, f| &acc * &f.poly.pow(f.multiplicity as u64))
    }

    pub fn is_verified(&self) -> bool {
        self.factors.iter().all(|f| f.irreducibility == Irreducibility::Verified)
    }

    fn sort(&mut self) {
        self.factors.sort_by(|a, b| {
            (a.poly.deg(), a.multiplicity)
                .cmp(&(b.poly.deg(), b.multiplicity))
                .then_with(|| a.poly.coeffs.iter().rev().cmp(b.poly.coeffs.iter().rev()))
        });
    }
}

/// `(x + 1)^2 * (x^2 + 1)`, with a leading unit when it is not 1.
impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for fac in &self.factors {
            let base = if fac.poly.term_count() > 1 { format!("({})", fac.poly) } else { fac.poly.to_string() };
            parts.push(if fac.multiplicity == 1 { base } else { format!("{base}^{}", fac.multiplicity) });
        }
        let mut out = String::new();
        write_signed(&mut out, &parts.join(" * "), true)?;
        write!(f, "{out}")
    }
}

impl Poly {
    /// Factorization into monic irreducibles, with the default seed.
    pub fn factor(&self) -> Result<FactoredPoly> {
        self.factor_with_seed(0)
    }

    /// Factorization into monic irreducibles.
    ///
    /// Over GF(p) this is complete and every factor is verified. Over the
    /// rationals linear factors are split off exactly; a remaining factor is
    /// verified when its degree is at most 3 or when it stays irreducible
    /// modulo some small prime, and reported as unverified otherwise. The
    /// seed drives the randomized splitting over GF(p); the output does not
    /// depend on it.
    pub fn factor_with_seed(&self, seed: u64) -> Result<FactoredPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (g, m) in self.squarefree_decomposition()? {
            let pieces = match self.spec.kind() {
                FieldKind::PrimeField => split_squarefree_fp(&g, &mut rng)
                    .into_iter()
                    .map(|poly| (poly, Irreducibility::Verified))
                    .collect(),
                FieldKind::Rationals => split_squarefree_qq(&g),
            };
            for (poly, irreducibility) in pieces {
                factors.push(Factor { poly, multiplicity: m, irreducibility });
            }
        }
        let mut out = FactoredPoly { unit: self.leading(), factors };
        out.sort();
        debug_assert_eq!(out.expand(), *self);
        Ok(out)
    }

    /// Exact irreducibility test. Over GF(p) this is Rabin's test; over the
    /// rationals it is conclusive only when factorization is verified.
    pub fn is_irreducible(&self) -> Result<Option<bool>> {
        let Some(n) = self.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        if n == 0 {
            return Ok(Some(false));
        }
        match self.spec.kind() {
            FieldKind::PrimeField => Ok(Some(rabin_irreducible(&self.monic()))),
            FieldKind::Rationals => {
                let f = self.factor()?;
                let single = f.factors.len() == 1 && f.factors[0].multiplicity == 1;
                if !single {
                    Ok(Some(false))
                } else if f.is_verified() {
                    Ok(Some(true))
                } else {
                    Ok(None)
                }
            }
        }
    }

    pub(crate) fn prime_field_roots(&self, seed: u64) -> Vec<FieldElem> {
        let spec = self.spec;
        let p = spec.characteristic();
        let f = self.monic();
        let x = Poly::x(spec);
        let xp = x.pow_mod(p as u128, &f).expect("nonzero modulus");
        let g = f.gcd(&(&xp - &x)).expect("f nonzero");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        equal_degree_split(&g, 1, &mut rng, &mut out);
        out.into_iter().map(|lin| -lin.coeff(0)).collect()
    }
}

fn random_poly(spec: FieldSpec, below_deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    let p = spec.characteristic();
    let coeffs = (0..below_deg).map(|_| FieldElem::from_bigint(&BigInt::from(rng.gen_range(0..p)), spec)).collect();
    Poly::from_coeffs(spec, coeffs)
}

// Distinct-degree then equal-degree splitting of a monic squarefree g.
fn split_squarefree_fp(g: &Poly, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let spec = g.spec;
    let p = spec.characteristic() as u128;
    let x = Poly::x(spec);
    let mut rest = g.clone();
    let mut frob = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        frob = frob.pow_mod(p, &rest).expect("nonzero modulus");
        let block = rest.gcd(&(&frob - &x)).expect("rest nonzero");
        if !block.is_one() {
            equal_degree_split(&block, d, rng, &mut out);
            rest = rest.exact_div(&block).expect("gcd divides");
            frob = frob.rem(&rest).expect("nonzero modulus");
        }
    }
    if !rest.is_one() {
        out.push(rest);
    }
    out
}

// Cantor-Zassenhaus. g is monic, squarefree, a product of degree-d irreducibles.
fn equal_degree_split(g: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = g.deg();
    if n == 0 {
        return;
    }
    if n == d {
        out.push(g.clone());
        return;
    }
    let spec = g.spec;
    let p = spec.characteristic();
    let mut attempt = 0u64;
    loop {
        attempt += 1;
        // After many unlucky draws fall back to a deterministic sweep.
        let a = if attempt <= 64 {
            random_poly(spec, n, rng)
        } else {
            &Poly::x(spec).pow(attempt % n as u64 + 1) + &Poly::constant(spec.int(attempt as i64))
        };
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // Trace map to GF(2).
            let mut t = a.rem(g).expect("nonzero modulus");
            let mut acc = t.clone();
            for _ in 1..d {
                t = (&t * &t).rem(g).expect("nonzero modulus");
                acc = &acc + &t;
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = a.rem(g).expect("nonzero modulus");
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p as u128, g).expect("nonzero modulus");
                norm = (&norm * &t).rem(g).expect("nonzero modulus");
            }
            &norm.pow_mod(((p - 1) / 2) as u128, g).expect("nonzero modulus") - &Poly::one(spec)
        };
        let c = g.gcd(&b).expect("g nonzero");
        if c.deg() > 0 && c.deg() < n {
            let other = g.exact_div(&c).expect("gcd divides");
            equal_degree_split(&c, d, rng, out);
            equal_degree_split(&other, d, rng, out);
            return;
        }
    }
}

fn rabin_irreducible(f: &Poly) -> bool {
    let n = f.deg();
    let spec = f.spec;
    let p = spec.characteristic() as u128;
    let x = Poly::x(spec);
    let frob_iter = |k: usize| {
        (0..k).fold(x.clone(), |acc, _| acc.pow_mod(p, f).expect("nonzero modulus"))
    };
    if frob_iter(n) != x.rem(f).expect("nonzero modulus") {
        return false;
    }
    prime_divisors(n).into_iter().all(|q| {
        let h = &frob_iter(n / q) - &x;
        f.gcd(&h).expect("f nonzero").is_one()
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn split_squarefree_qq(g: &Poly) -> Vec<(Poly, Irreducibility)> {
    let spec = g.spec;
    let mut rest = g.clone();
    let mut out = Vec::new();
    for r in g.roots().expect("nonzero") {
        let lin = Poly::from_coeffs(spec, vec![-&r, spec.one()]);
        rest = rest.exact_div(&lin).expect("root gives a factor");
        out.push((lin, Irreducibility::Verified));
    }
    if rest.deg() > 0 {
        let verified = rest.deg() <= 3 || irreducible_mod_some_prime(&rest);
        let flag = if verified { Irreducibility::Verified } else { Irreducibility::Unverified };
        out.push((rest.monic(), flag));
    }
    out
}

// A primitive integer polynomial that stays irreducible of the same degree
// modulo a prime is irreducible over the rationals.
fn irreducible_mod_some_prime(f: &Poly) -> bool {
    let ints = f.primitive_integer_coeffs();
    small_primes(200).any(|p| {
        let spec = FieldSpec::prime(p).expect("prime");
        let reduced = Poly::from_coeffs(
            spec,
            ints.iter().map(|c| FieldElem::from_bigint(&BigInt::from(bigint_mod(c, p)), spec)).collect(),
        );
        reduced.degree() == f.degree() && rabin_irreducible(&reduced.monic())
    })
}
