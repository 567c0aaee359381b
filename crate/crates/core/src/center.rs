//! Centers, the centralizer of `x`, and the commutator spaces
//! `[x, A_h]`, `[Y, A_h]` and `[A_h, A_h]`.

use std::collections::BTreeMap;

use crate::ah::{AhContext, OreElement};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::Poly;
use crate::weyl::{from_weyl, product_formula_lhs, to_weyl, Side, WeylElement};

/// Generators of the center in characteristic `p`: `x^p` and
/// `h^p y^p = Y^p - correction * Y` with `correction = delta^p(x) / h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralGenerators {
    pub xp: Poly,
    pub hp_yp: OreElement,
    pub correction: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDescription {
    pub characteristic: u64,
    /// `None` when the center is the ground field.
    pub generators: Option<CentralGenerators>,
}

pub fn center(ctx: &AhContext) -> CenterDescription {
    let p = ctx.spec().characteristic();
    if p == 0 {
        return CenterDescription { characteristic: 0, generators: None };
    }
    let x = Poly::x(ctx.spec());
    let correction = ctx
        .delta_power(&x, p as usize)
        .exact_div(ctx.h())
        .expect("h divides every delta^k(x), k >= 1");
    let y = OreElement::yhat(ctx);
    let hp_yp = &y.pow(p) - &y.left_mul_poly(&correction);
    CenterDescription {
        characteristic: p,
        generators: Some(CentralGenerators { xp: x.pow(p), hp_yp, correction }),
    }
}

pub fn is_central(a: &OreElement) -> bool {
    let ctx = a.ctx();
    commutes(a, &OreElement::x(ctx)) && commutes(a, &OreElement::yhat(ctx))
}

fn commutes(a: &OreElement, b: &OreElement) -> bool {
    a.commutator(b).expect("same context").is_zero()
}

/// Coordinates of an element over the center in the basis
/// `x^i h^j y^j`, `0 <= i, j < p`.
///
/// `table[i][j]` maps exponents `(s, t)` to the coefficient of
/// `(x^p)^s (h^p y^p)^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralDecomposition {
    pub p: usize,
    pub table: Vec<Vec<BTreeMap<(usize, usize), FieldElem>>>,
}

impl CentralDecomposition {
    /// Nonzero entries as `(i, j, s, t, coefficient)`, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, FieldElem)> {
        let mut out = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for (&(s, t), c) in cell {
                    out.push((i, j, s, t, c.clone()));
                }
            }
        }
        out
    }

    /// Rebuilds the element inside `A_h` from the central generators.
    pub fn reassemble(&self, ctx: &AhContext) -> Result<OreElement> {
        let gens = center(ctx).generators.ok_or(Error::CharZero)?;
        let xp = OreElement::from_poly(ctx, gens.xp);
        let mut acc = OreElement::zero(ctx);
        for (i, j, s, t, c) in self.entries() {
            let basis = product_formula_lhs(j, Side::Left, ctx).left_mul_poly(&Poly::monomial(ctx.spec().one(), i));
            let central = &xp.pow(s as u64) * &gens.hp_yp.pow(t as u64);
            acc = &acc + &(&central * &basis).scale(&c);
        }
        Ok(acc)
    }
}

/// Splits `a` over the center using `x^a h^b y^b = (x^p)^s (h^p y^p)^t x^i h^j y^j`
/// with `a = ps + i`, `b = pt + j`.
pub fn central_decompose(a: &OreElement) -> Result<CentralDecomposition> {
    let ctx = a.ctx();
    let p = ctx.spec().characteristic() as usize;
    if p == 0 {
        return Err(Error::CharZero);
    }
    let mut table = vec![vec![BTreeMap::new(); p]; p];
    let w = to_weyl(a);
    let mut hb = Poly::one(ctx.spec());
    for (b, r) in w.coeffs().iter().enumerate() {
        if b > 0 {
            hb = &hb * ctx.h();
        }
        let s_b = r.exact_div(&hb).expect("image of A_h");
        for (deg, c) in s_b.coeffs().iter().enumerate() {
            if !c.is_zero() {
                table[deg % p][b % p].insert((deg / p, b / p), c.clone());
            }
        }
    }
    Ok(CentralDecomposition { p, table })
}

/// Whether `[a, x] = 0`.
pub fn centralizer_x_membership(a: &OreElement) -> bool {
    commutes(a, &OreElement::x(a.ctx()))
}

/// The same membership read off the shape of `a`: in characteristic 0 the
/// centralizer is `F[x]`; in characteristic `p` it is spanned by `x^a y^b`
/// with `p | b` inside `A_1`.
pub fn centralizer_x_structural(a: &OreElement) -> bool {
    let p = a.spec().characteristic() as usize;
    if p == 0 {
        return a.ydeg().unwrap_or(0) == 0;
    }
    to_weyl(a).coeffs().iter().enumerate().all(|(i, r)| i % p == 0 || r.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutatorSpace {
    /// `[x, A_h]`
    BracketX,
    /// `[Y, A_h]`
    BracketYhat,
    /// `[A_h, A_h]`
    LieIdeal,
}

pub fn in_commutator_space(a: &OreElement, space: CommutatorSpace) -> Result<bool> {
    let ctx = a.ctx();
    let h = ctx.h();
    let p = ctx.spec().characteristic() as usize;
    if p == 0 {
        return Ok(a.coeffs().iter().all(|f| h.divides(f)));
    }
    match space {
        CommutatorSpace::LieIdeal => Err(Error::NotImplemented("membership in [A_h, A_h] in positive characteristic")),
        CommutatorSpace::BracketX => {
            let w = to_weyl(a);
            let mut hi1 = h.clone();
            for (i, r) in w.coeffs().iter().enumerate() {
                if i > 0 {
                    hi1 = &hi1 * h;
                }
                let ok = if (i + 1) % p == 0 { r.is_zero() } else { hi1.divides(r) };
                if !ok {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        CommutatorSpace::BracketYhat => Ok(a.coeffs().iter().all(|f| {
            f.exact_div(h).is_ok_and(|q| q.coeffs().iter().enumerate().all(|(j, c)| (j + 1) % p != 0 || c.is_zero()))
        })),
    }
}

/// An element `b` with `[x, b] = a` (`BracketX`, `LieIdeal`) or
/// `[Y, b] = a` (`BracketYhat`), or `None` when `a` is outside the space.
pub fn commutator_preimage(a: &OreElement, space: CommutatorSpace) -> Result<Option<OreElement>> {
    if !in_commutator_space(a, space)? {
        return Ok(None);
    }
    let ctx = a.ctx();
    let spec = ctx.spec();
    let b = match space {
        CommutatorSpace::BracketX | CommutatorSpace::LieIdeal => {
            // [x, g h^(i+1) y^(i+1)] = -(i+1) g h^(i+1) y^i
            let w = to_weyl(a);
            let mut coeffs = vec![Poly::zero(spec)];
            for (i, r) in w.coeffs().iter().enumerate() {
                let k = spec.int(i as i64 + 1);
                coeffs.push(if r.is_zero() { r.clone() } else { r.scale(&-k.inv().expect("i+1 is a unit")) });
            }
            from_weyl(&WeylElement::from_coeffs(spec, coeffs), ctx).expect("h^(i+1) divides the lifted coefficient")
        }
        CommutatorSpace::BracketYhat => {
            // [Y, g] = h g' coefficientwise
            a.map_coeffs(|f| antiderivative(&f.exact_div(ctx.h()).expect("membership checked")))
        }
    };
    let check = match space {
        CommutatorSpace::BracketYhat => OreElement::yhat(ctx).commutator(&b)?,
        _ => OreElement::x(ctx).commutator(&b)?,
    };
    assert_eq!(&check, a, "commutator preimage failed verification");
    Ok(Some(b))
}

/// Antiderivative with zero constant term; every exponent `j` present must
/// have `j + 1` invertible.
fn antiderivative(f: &Poly) -> Poly {
    let spec = f.spec();
    let mut coeffs = vec![spec.zero()];
    for (j, c) in f.coeffs().iter().enumerate() {
        coeffs.push(if c.is_zero() { c.clone() } else { c * &spec.int(j as i64 + 1).inv().expect("exponent + 1 invertible") });
    }
    Poly::from_coeffs(spec, coeffs)
}
