//! The Weyl algebra `A_1 = F<x, y>` with `yx - xy = 1`, and the embedding
//! `A_h -> A_1` sending `Y` to `y h`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ah::display::write_normal_form;
use crate::ah::{AhContext, OreElement};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;

/// An element `sum_i r_i y^i` of `A_1`, coefficients on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement(OreElement);

impl WeylElement {
    pub fn from_coeffs(spec: FieldSpec, coeffs: Vec<Poly>) -> Self {
        WeylElement(OreElement::from_coeffs(&AhContext::weyl(spec), coeffs))
    }

    pub fn from_poly(f: Poly) -> Self {
        WeylElement::from_coeffs(f.spec(), vec![f])
    }

    pub fn x(spec: FieldSpec) -> Self {
        WeylElement::from_poly(Poly::x(spec))
    }

    pub fn y(spec: FieldSpec) -> Self {
        WeylElement(OreElement::yhat(&AhContext::weyl(spec)))
    }

    /// Wraps an element of an `h = 1` context.
    pub fn from_ore(a: OreElement) -> Result<Self> {
        if a.ctx().h().is_one() {
            Ok(WeylElement(a))
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn as_ore(&self) -> &OreElement {
        &self.0
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec()
    }

    pub fn coeffs(&self) -> &[Poly] {
        self.0.coeffs()
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.0.coeff(i)
    }

    pub fn ydeg(&self) -> Option<usize> {
        self.0.ydeg()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(&self, e: u64) -> Self {
        WeylElement(self.0.pow(e))
    }

    /// `self * f` for a polynomial `f`.
    pub fn right_mul_poly(&self, f: &Poly) -> Self {
        self * &WeylElement::from_poly(f.clone())
    }

    /// The anti-automorphism `x -> x`, `y -> -y`.
    pub fn antiautomorphism(&self) -> Self {
        WeylElement(self.0.antiautomorphism())
    }

    pub fn try_mul(&self, rhs: &WeylElement) -> Result<WeylElement> {
        Ok(WeylElement(self.0.try_mul(&rhs.0)?))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_normal_form(f, self.0.coeffs(), "y")
    }
}

macro_rules! delegate {
    ($tr:ident, $m:ident) => {
        impl $tr for &WeylElement {
            type Output = WeylElement;
            fn $m(self, rhs: &WeylElement) -> WeylElement {
                WeylElement((&self.0).$m(&rhs.0))
            }
        }
        impl $tr for WeylElement {
            type Output = WeylElement;
            fn $m(self, rhs: WeylElement) -> WeylElement {
                WeylElement(self.0.$m(rhs.0))
            }
        }
    };
}
delegate!(Add, add);
delegate!(Sub, sub);
delegate!(Mul, mul);

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement(-&self.0)
    }
}

/// Image of `a` in `A_1` under `x -> x`, `Y -> y h`.
pub fn to_weyl(a: &OreElement) -> WeylElement {
    let spec = a.spec();
    let weyl = AhContext::weyl(spec);
    let yh = &OreElement::yhat(&weyl) * &OreElement::from_poly(&weyl, a.ctx().h().clone());
    WeylElement(a.apply_poly_map(&OreElement::x(&weyl), &yh).expect("same field"))
}

/// Index of the first coefficient `r_i` of `w` not divisible by `h^i`.
pub fn first_non_member(w: &WeylElement, h: &Poly) -> Option<usize> {
    let mut hi = Poly::one(h.spec());
    for (i, r) in w.coeffs().iter().enumerate() {
        if i > 0 {
            hi = &hi * h;
        }
        if !hi.divides(r) {
            return Some(i);
        }
    }
    None
}

/// The preimage of `w` in `A_h`, which exists exactly when `h^i` divides
/// every coefficient `r_i` of `y^i`.
pub fn from_weyl(w: &WeylElement, ctx: &AhContext) -> Result<OreElement> {
    if w.spec() != ctx.spec() {
        return Err(Error::FieldMismatch);
    }
    if let Some(index) = first_non_member(w, ctx.h()) {
        return Err(Error::NotInSubalgebra { index });
    }
    let mut acc = OreElement::zero(ctx);
    let mut hi = Poly::one(ctx.spec());
    for (i, r) in w.coeffs().iter().enumerate() {
        if i > 0 {
            hi = &hi * ctx.h();
        }
        if r.is_zero() {
            continue;
        }
        let q = r.exact_div(&hi).expect("membership checked");
        acc = &acc + &product_formula_lhs(i, Side::Left, ctx).left_mul_poly(&q);
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The `Y`-product equal to `h^i y^i` (left) or `y^i h^i` (right):
/// `(Y - i h')...(Y - h')` and `Y (Y + h')...(Y + (i-1) h')`.
pub fn product_formula_lhs(i: usize, side: Side, ctx: &AhContext) -> OreElement {
    let y = OreElement::yhat(ctx);
    let dh = ctx.h_prime();
    let shifted = |k: i64| &y + &OreElement::from_poly(ctx, dh.scale(&ctx.spec().int(k)));
    match side {
        Side::Left => (1..=i as i64).rev().fold(OreElement::one(ctx), |acc, k| &acc * &shifted(-k)),
        Side::Right => (0..i as i64).fold(OreElement::one(ctx), |acc, k| &acc * &shifted(k)),
    }
}

/// The map `A_g -> A_f` for `f | g`, sending `x -> x` and the generator of
/// `A_g` to `Y_f r` where `g = f r`.
pub fn embed(a: &OreElement, f: &AhContext) -> Result<OreElement> {
    let g = a.ctx().h();
    if g.spec() != f.spec() {
        return Err(Error::FieldMismatch);
    }
    let r = g.exact_div(f.h())?;
    let image = &OreElement::yhat(f) * &OreElement::from_poly(f, r);
    a.apply_poly_map(&OreElement::x(f), &image)
}

/// Data for the Ore condition with respect to powers of `f`.
///
/// `Right`: `a * s1 = f * a1`. `Left`: `s1 * a = a1 * f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreWitness {
    pub side: Side,
    pub a1: OreElement,
    pub s1: Poly,
}

impl OreWitness {
    /// Re-multiplies both sides.
    pub fn holds(&self, a: &OreElement, f: &Poly) -> bool {
        let ctx = a.ctx();
        let s1 = OreElement::from_poly(ctx, self.s1.clone());
        let f = OreElement::from_poly(ctx, f.clone());
        match self.side {
            Side::Right => (a * &s1) == (&f * &self.a1),
            Side::Left => (&s1 * a) == (&self.a1 * &f),
        }
    }
}

/// Constructs `s1 = f^(k+1)` with `k = ydeg a` and the matching `a1`.
pub fn ore_witness(a: &OreElement, f: &Poly, side: Side) -> Result<OreWitness> {
    if f.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if f.spec() != a.spec() {
        return Err(Error::FieldMismatch);
    }
    let k = a.ydeg().unwrap_or(0) as u64;
    let s1 = f.pow(k + 1);
    let right = |b: &OreElement| {
        let prod = b * &OreElement::from_poly(b.ctx(), s1.clone());
        prod.map_coeffs(|c| c.exact_div(f).expect("f^(m-j) divides Y^j f^m"))
    };
    let a1 = match side {
        Side::Right => right(a),
        Side::Left => right(&a.antiautomorphism()).antiautomorphism(),
    };
    Ok(OreWitness { side, a1, s1 })
}

/// Compares `a h^-m` (from `A_h`) with `b h^-n` (in `A_1`) as right
/// fractions over powers of `h`.
pub fn localized_equal(a: &OreElement, m: u32, b: &WeylElement, n: u32) -> Result<bool> {
    if a.spec() != b.spec() {
        return Err(Error::FieldMismatch);
    }
    let h = a.ctx().h();
    Ok(to_weyl(a).right_mul_poly(&h.pow(n as u64)) == b.right_mul_poly(&h.pow(m as u64)))
}
