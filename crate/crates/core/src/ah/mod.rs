//! The algebra `A_h = F<x, Y>` with `Yx - xY = h(x)`.
//!
//! Elements are kept in the normal form `sum_i f_i(x) Y^i` with polynomial
//! coefficients on the left. The Weyl algebra is the instance `h = 1`.

pub(crate) mod display;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::poly::{FactoredPoly, Poly};

/// The parameter `h` together with cached data. Cheap to clone; two
/// contexts are equal when their `h` agree.
#[derive(Clone)]
pub struct AhContext(Arc<Inner>);

struct Inner {
    h: Poly,
    dh: Poly,
    factored: Option<FactoredPoly>,
}

impl AhContext {
    pub fn new(h: Poly) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dh = h.derivative();
        Ok(AhContext(Arc::new(Inner { h, dh, factored: None })))
    }

    /// Attaches a caller-supplied factorization of `h`, trusted as
    /// irreducible once it multiplies back to `h`.
    pub fn with_factorization(h: Poly, factored: FactoredPoly) -> Result<Self> {
        if factored.expand() != h {
            return Err(Error::InvalidArgument(format!("factorization {factored} does not multiply to {h}")));
        }
        let mut ctx = AhContext::new(h)?;
        Arc::get_mut(&mut ctx.0).expect("fresh context").factored = Some(factored);
        Ok(ctx)
    }

    /// The Weyl algebra `A_1`.
    pub fn weyl(spec: FieldSpec) -> Self {
        AhContext::new(Poly::one(spec)).expect("1 is nonzero")
    }

    pub fn h(&self) -> &Poly {
        &self.0.h
    }

    pub fn h_prime(&self) -> &Poly {
        &self.0.dh
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.h.spec()
    }

    pub fn deg_h(&self) -> usize {
        self.0.h.deg()
    }

    pub fn supplied_factorization(&self) -> Option<&FactoredPoly> {
        self.0.factored.as_ref()
    }

    /// `delta(f) = h f'`, the inner derivation `[Y, -]` restricted to `F[x]`.
    pub fn delta(&self, f: &Poly) -> Poly {
        &self.0.h * &f.derivative()
    }

    pub fn delta_power(&self, f: &Poly, j: usize) -> Poly {
        (0..j).fold(f.clone(), |acc, _| self.delta(&acc))
    }

    fn check(&self, other: &AhContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

impl PartialEq for AhContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.h == other.0.h
    }
}

impl Eq for AhContext {}

impl fmt::Debug for AhContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_h[h = {} over {}]", self.0.h, self.spec())
    }
}

/// An element `sum_i f_i Y^i` of `A_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreElement {
    ctx: AhContext,
    coeffs: Vec<Poly>,
}

pub(crate) fn binomial(n: usize, k: usize, spec: FieldSpec) -> FieldElem {
    FieldElem::from_bigint(&num_integer::binomial(BigInt::from(n), BigInt::from(k)), spec)
}

impl OreElement {
    pub fn zero(ctx: &AhContext) -> Self {
        OreElement { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &AhContext) -> Self {
        OreElement::from_poly(ctx, Poly::one(ctx.spec()))
    }

    pub fn x(ctx: &AhContext) -> Self {
        OreElement::from_poly(ctx, Poly::x(ctx.spec()))
    }

    /// The generator `Y`.
    pub fn yhat(ctx: &AhContext) -> Self {
        OreElement::monomial(ctx, Poly::one(ctx.spec()), 1)
    }

    pub fn scalar(ctx: &AhContext, c: FieldElem) -> Self {
        OreElement::from_poly(ctx, Poly::constant(c))
    }

    pub fn from_poly(ctx: &AhContext, f: Poly) -> Self {
        OreElement::from_coeffs(ctx, vec![f])
    }

    /// `f Y^i`.
    pub fn monomial(ctx: &AhContext, f: Poly, i: usize) -> Self {
        let mut coeffs = vec![Poly::zero(ctx.spec()); i];
        coeffs.push(f);
        OreElement::from_coeffs(ctx, coeffs)
    }

    /// Coefficients of `Y^0, Y^1, ...`.
    pub fn from_coeffs(ctx: &AhContext, mut coeffs: Vec<Poly>) -> Self {
        assert!(coeffs.iter().all(|f| f.spec() == ctx.spec()), "coefficient over the wrong field");
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        OreElement { ctx: ctx.clone(), coeffs }
    }

    pub fn ctx(&self) -> &AhContext {
        &self.ctx
    }

    pub fn spec(&self) -> FieldSpec {
        self.ctx.spec()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Poly::zero(self.spec()))
    }

    /// Highest power of `Y`; `None` for zero.
    pub fn ydeg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient `f_0` when the element lies in `F[x]`.
    pub fn as_poly(&self) -> Option<Poly> {
        (self.coeffs.len() <= 1).then(|| self.coeff(0))
    }

    pub fn scale(&self, c: &FieldElem) -> OreElement {
        self.map_coeffs(|f| f.scale(c))
    }

    /// `g * self`, multiplying every coefficient on the left.
    pub fn left_mul_poly(&self, g: &Poly) -> OreElement {
        self.map_coeffs(|f| g * f)
    }

    pub(crate) fn map_coeffs(&self, mut op: impl FnMut(&Poly) -> Poly) -> OreElement {
        OreElement::from_coeffs(&self.ctx, self.coeffs.iter().map(&mut op).collect())
    }

    pub fn try_add(&self, rhs: &OreElement) -> Result<OreElement> {
        self.ctx.check(&rhs.ctx)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Ok(OreElement::from_coeffs(&self.ctx, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect()))
    }

    pub fn try_sub(&self, rhs: &OreElement) -> Result<OreElement> {
        self.try_add(&-rhs)
    }

    /// Product in normal form, reordering with
    /// `Y^n g = sum_j C(n, j) delta^j(g) Y^(n-j)`.
    pub fn try_mul(&self, rhs: &OreElement) -> Result<OreElement> {
        self.ctx.check(&rhs.ctx)?;
        let spec = self.spec();
        if self.is_zero() || rhs.is_zero() {
            return Ok(OreElement::zero(&self.ctx));
        }
        let n = self.coeffs.len() - 1;
        let mut out = vec![Poly::zero(spec); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, g) in rhs.coeffs.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut deltas = Vec::with_capacity(n + 1);
            deltas.push(g.clone());
            for k in 1..=n {
                let next = self.ctx.delta(&deltas[k - 1]);
                if next.is_zero() {
                    break;
                }
                deltas.push(next);
            }
            for (i, f) in self.coeffs.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                for (k, dk) in deltas.iter().enumerate().take(i + 1) {
                    let c = binomial(i, k, spec);
                    if c.is_zero() {
                        continue;
                    }
                    let term = (f * dk).scale(&c);
                    let slot = i - k + j;
                    out[slot] = &out[slot] + &term;
                }
            }
        }
        Ok(OreElement::from_coeffs(&self.ctx, out))
    }

    pub fn commutator(&self, rhs: &OreElement) -> Result<OreElement> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    pub fn pow(&self, mut e: u64) -> OreElement {
        let mut base = self.clone();
        let mut acc = OreElement::one(&self.ctx);
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

    /// `sum_i f_i(P) Q^i`, the image under the algebra map `x -> P`,
    /// `Y -> Q`. The images may live in any context, shared by both.
    pub fn apply_poly_map(&self, px: &OreElement, qy: &OreElement) -> Result<OreElement> {
        px.ctx.check(&qy.ctx)?;
        if self.spec() != px.spec() {
            return Err(Error::FieldMismatch);
        }
        let target = &px.ctx;
        let mut acc = OreElement::zero(target);
        let mut qpow = OreElement::one(target);
        for (i, f) in self.coeffs.iter().enumerate() {
            if i > 0 {
                qpow = &qpow * qy;
            }
            if !f.is_zero() {
                acc = &acc + &(&eval_poly_at(f, px) * &qpow);
            }
        }
        Ok(acc)
    }

    /// The anti-automorphism fixing `x` and sending `Y` to `-Y + h'`.
    pub fn antiautomorphism(&self) -> OreElement {
        let ctx = &self.ctx;
        let image = &OreElement::from_poly(ctx, ctx.h_prime().clone()) - &OreElement::yhat(ctx);
        let mut acc = OreElement::zero(ctx);
        let mut ypow = OreElement::one(ctx);
        for (i, f) in self.coeffs.iter().enumerate() {
            if i > 0 {
                ypow = &ypow * &image;
            }
            if !f.is_zero() {
                acc = &acc + &(&ypow * &OreElement::from_poly(ctx, f.clone()));
            }
        }
        acc
    }
}

/// `f(P)` for an element `P`, by Horner's rule.
pub fn eval_poly_at(f: &Poly, p: &OreElement) -> OreElement {
    let ctx = p.ctx();
    f.coeffs().iter().rev().fold(OreElement::zero(ctx), |acc, c| {
        &(&acc * p) + &OreElement::scalar(ctx, c.clone())
    })
}

impl Add for &OreElement {
    type Output = OreElement;
    fn add(self, rhs: &OreElement) -> OreElement {
        self.try_add(rhs).expect("elements of different algebras")
    }
}

impl Sub for &OreElement {
    type Output = OreElement;
    fn sub(self, rhs: &OreElement) -> OreElement {
        self.try_sub(rhs).expect("elements of different algebras")
    }
}

impl Mul for &OreElement {
    type Output = OreElement;
    fn mul(self, rhs: &OreElement) -> OreElement {
        self.try_mul(rhs).expect("elements of different algebras")
    }
}

impl Neg for &OreElement {
    type Output = OreElement;
    fn neg(self) -> OreElement {
        self.map_coeffs(|f| -f)
    }
}

impl Neg for OreElement {
    type Output = OreElement;
    fn neg(self) -> OreElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for OreElement {
            type Output = OreElement;
            fn $m(self, rhs: OreElement) -> OreElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&OreElement> for OreElement {
            type Output = OreElement;
            fn $m(self, rhs: &OreElement) -> OreElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
