//! Dense univariate polynomials over a [`FieldSpec`].

mod factor;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};

pub use factor::{Factor, FactoredPoly, Irreducibility};

/// A polynomial in `x`, coefficients indexed by degree with trailing zeros
/// stripped. The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    spec: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn zero(spec: FieldSpec) -> Self {
        Poly { spec, coeffs: Vec::new() }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Poly::constant(spec.one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Poly::from_coeffs(c.spec(), vec![c])
    }

    pub fn x(spec: FieldSpec) -> Self {
        Poly::monomial(spec.one(), 1)
    }

    /// `c * x^k`
    pub fn monomial(c: FieldElem, k: usize) -> Self {
        let spec = c.spec();
        let mut coeffs = vec![spec.zero(); k];
        coeffs.push(c);
        Poly::from_coeffs(spec, coeffs)
    }

    /// Builds from coefficients listed lowest degree first.
    pub fn from_coeffs(spec: FieldSpec, mut coeffs: Vec<FieldElem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.spec() == spec));
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly { spec, coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(spec: FieldSpec, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(spec, coeffs.iter().map(|&c| spec.int(c)).collect())
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for places where the
    /// caller has already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn leading(&self) -> FieldElem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElem::is_one)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        Poly::from_coeffs(self.spec, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.spec.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { spec: self.spec, coeffs }
    }

    /// Scales to leading coefficient 1. The zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, at: &FieldElem) -> FieldElem {
        self.coeffs.iter().rev().fold(self.spec.zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.spec);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &self.spec.int(i as i64) * c)
            .collect();
        Poly::from_coeffs(self.spec, coeffs)
    }

    /// `self(g(x))`, by Horner's rule.
    pub fn compose(&self, g: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(self.spec), |acc, c| &(&acc * g) + &Poly::constant(c.clone()))
    }

    /// `self(alpha * x + beta)`.
    pub fn affine_substitute(&self, alpha: &FieldElem, beta: &FieldElem) -> Poly {
        self.compose(&Poly::from_coeffs(self.spec, vec![beta.clone(), alpha.clone()]))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if self.spec != divisor.spec {
            return Err(Error::FieldMismatch);
        }
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = divisor.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Poly::zero(self.spec), self.clone()));
        };
        let mut quot = vec![self.spec.zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(self.spec, quot), Poly::from_coeffs(self.spec, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible { divisor: divisor.to_string(), dividend: self.to_string() })
        }
    }

    /// True when `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Largest `k` with `factor^k | self`; `self` must be nonzero and
    /// `factor` nonconstant.
    pub fn multiplicity(&self, factor: &Poly) -> usize {
        assert!(!self.is_zero() && !factor.is_constant());
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(factor) {
            cur = q;
            k += 1;
        }
        k
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(self.spec).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// For a polynomial in `x^p` over GF(p), the polynomial `g` with
    /// `g^p = self`. Uses `a^p = a` coefficientwise.
    pub(crate) fn pth_root(&self) -> Poly {
        let p = self.spec.characteristic() as usize;
        debug_assert!(p > 0);
        let coeffs = self.coeffs.iter().step_by(p).cloned().collect();
        debug_assert!(self.coeffs.iter().enumerate().all(|(i, c)| i % p == 0 || c.is_zero()));
        Poly::from_coeffs(self.spec, coeffs)
    }

    /// Squarefree decomposition: pairwise coprime monic squarefree
    /// `(g_i, m_i)` with `self = lc * prod g_i^{m_i}`, sorted by multiplicity.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = squarefree_monic(&self.monic());
        out.sort_by_key(|(_, m)| *m);
        Ok(out)
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<Poly> {
        Ok(self
            .squarefree_decomposition()?
            .into_iter()
            .fold(Poly::one(self.spec), |acc, (g, _)| &acc * &g))
    }

    /// Number of distinct roots in an algebraic closure.
    pub fn distinct_root_count(&self) -> Result<usize> {
        Ok(self.squarefree_part()?.deg())
    }

    /// Unique monic polynomial with the given roots (with repetition).
    pub fn from_roots(spec: FieldSpec, roots: &[FieldElem]) -> Poly {
        roots.iter().fold(Poly::one(spec), |acc, r| {
            &acc * &Poly::from_coeffs(spec, vec![-r, spec.one()])
        })
    }
}

// Squarefree factorization valid in any characteristic (reduces to Yun-style
// extraction when the derivative never vanishes).
fn squarefree_monic(f: &Poly) -> Vec<(Poly, usize)> {
    let spec = f.spec;
    let p = spec.characteristic() as usize;
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p): recurse on the p-th root.
        return squarefree_monic(&f.pth_root())
            .into_iter()
            .map(|(g, m)| (g, m * p))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&df).expect("f nonzero");
    let mut w = f.exact_div(&c).expect("gcd divides f");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c).expect("w nonzero");
        let fac = w.exact_div(&y).expect("gcd divides w");
        if !fac.is_one() {
            out.push((fac.monic(), i));
        }
        c = c.exact_div(&y).expect("gcd divides c");
        w = y;
        i += 1;
    }
    if !c.is_one() {
        debug_assert!(p > 0, "leftover repeated part only in positive characteristic");
        out.extend(
            squarefree_monic(&c.pth_root().monic())
                .into_iter()
                .map(|(g, m)| (g, m * p)),
        );
    }
    out
}

fn mismatch() -> ! {
    panic!("polynomial arithmetic between different fields")
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        if self.spec != rhs.spec {
            mismatch();
        }
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::from_coeffs(self.spec, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        if self.spec != rhs.spec {
            mismatch();
        }
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::from_coeffs(self.spec, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.spec != rhs.spec {
            mismatch();
        }
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.spec);
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(self.spec, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { spec: self.spec, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Canonical text form, highest degree first: `x^2 - 2*x + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = monomial_text(c, k);
            write_signed(f, &term, first)?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn monomial_text(c: &FieldElem, k: usize) -> String {
    let var = match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    };
    if k == 0 {
        return c.to_string();
    }
    if c.is_one() {
        var
    } else if (-c).is_one() && c.is_negative() {
        format!("-{var}")
    } else {
        format!("{c}*{var}")
    }
}

/// Appends `term` to a sum, turning a leading minus into ` - `.
pub(crate) fn write_signed(f: &mut impl fmt::Write, term: &str, first: bool) -> fmt::Result {
    match (first, term.strip_prefix('-')) {
        (true, _) => write!(f, "{term}"),
        (false, Some(rest)) => write!(f, " - {rest}"),
        (false, None) => write!(f, " + {term}"),
    }
}
