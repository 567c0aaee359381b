use std::fmt;

use crate::ah::{AhContext, OreElement};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::Poly;
use crate::weyl::embed;

use super::is_valid_pair;

/// The automorphism `x -> alpha*x + beta`, `Y -> alpha^(deg h - 1) Y + f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    ctx: AhContext,
    alpha: FieldElem,
    beta: FieldElem,
    f: Poly,
}

impl Automorphism {
    pub fn new(ctx: &AhContext, alpha: FieldElem, beta: FieldElem, f: Poly) -> Result<Self> {
        let spec = ctx.spec();
        if alpha.spec() != spec || beta.spec() != spec || f.spec() != spec {
            return Err(Error::FieldMismatch);
        }
        if !is_valid_pair(ctx.h(), &alpha, &beta) {
            return Err(Error::InvalidPair { alpha: alpha.to_string(), beta: beta.to_string() });
        }
        Ok(Automorphism { ctx: ctx.clone(), alpha, beta, f })
    }

    pub fn identity(ctx: &AhContext) -> Self {
        let spec = ctx.spec();
        Automorphism { ctx: ctx.clone(), alpha: spec.one(), beta: spec.zero(), f: Poly::zero(spec) }
    }

    pub fn tau(ctx: &AhContext, alpha: FieldElem, beta: FieldElem) -> Result<Self> {
        Automorphism::new(ctx, alpha, beta, Poly::zero(ctx.spec()))
    }

    /// `Y -> Y + f`.
    pub fn phi(ctx: &AhContext, f: Poly) -> Result<Self> {
        let spec = ctx.spec();
        Automorphism::new(ctx, spec.one(), spec.zero(), f)
    }

    pub fn ctx(&self) -> &AhContext {
        &self.ctx
    }

    pub fn alpha(&self) -> &FieldElem {
        &self.alpha
    }

    pub fn beta(&self) -> &FieldElem {
        &self.beta
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero() && self.f.is_zero()
    }

    /// `alpha^(deg h - 1)`, the factor in front of `Y`.
    fn y_scale(&self) -> FieldElem {
        self.alpha.powi(self.ctx.deg_h() as i64 - 1).expect("alpha is nonzero")
    }

    pub fn x_image(&self) -> OreElement {
        OreElement::from_poly(&self.ctx, Poly::from_coeffs(self.ctx.spec(), vec![self.beta.clone(), self.alpha.clone()]))
    }

    pub fn yhat_image(&self) -> OreElement {
        &OreElement::yhat(&self.ctx).scale(&self.y_scale()) + &OreElement::from_poly(&self.ctx, self.f.clone())
    }

    pub fn apply(&self, a: &OreElement) -> Result<OreElement> {
        if a.ctx() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        a.apply_poly_map(&self.x_image(), &self.yhat_image())
    }

    pub fn apply_poly(&self, f: &Poly) -> Poly {
        f.affine_substitute(&self.alpha, &self.beta)
    }

    /// `self o other`, i.e. `other` first.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let alpha = &self.alpha * &other.alpha;
        let beta = &(&other.alpha * &self.beta) + &other.beta;
        let f = &self.f.scale(&other.y_scale()) + &self.apply_poly(&other.f);
        Ok(Automorphism { ctx: self.ctx.clone(), alpha, beta, f })
    }

    pub fn inverse(&self) -> Automorphism {
        let inv = self.alpha.inv().expect("alpha is nonzero");
        let beta = -&(&self.beta * &inv);
        // f'(z) = -alpha^(1 - d) f((z - beta) / alpha)
        let f = self.f.affine_substitute(&inv, &beta).scale(&-&self.y_scale().inv().expect("nonzero"));
        Automorphism { ctx: self.ctx.clone(), alpha: inv, beta, f }
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}, Y -> {}", self.x_image(), self.yhat_image())
    }
}

/// Extends `omega` on `A_g` to `A_f` for `f | g`, viewing `A_g` inside
/// `A_f` through `Y_g = Y_f * (g/f)`. Returns `None` when no extension exists.
pub fn extend_automorphism(omega: &Automorphism, f_ctx: &AhContext) -> Result<Option<Automorphism>> {
    let g_ctx = omega.ctx();
    let (g, f) = (g_ctx.h(), f_ctx.h());
    if g.deg() == 0 {
        return Err(Error::ConstantH);
    }
    let r = g.exact_div(f)?;
    let alpha = omega.alpha();
    let (df, dg) = (f.deg() as i64, g.deg() as i64);
    if f.affine_substitute(alpha, omega.beta()) != f.scale(&alpha.pow(df as u64)) {
        return Ok(None);
    }
    // omega = phi_q o tau on A_g in the composite normal form
    let q = omega.f().scale(&alpha.powi(1 - dg)?);
    let Ok(s) = q.exact_div(&r) else {
        return Ok(None);
    };
    let ext = Automorphism::new(f_ctx, alpha.clone(), omega.beta().clone(), s.scale(&alpha.powi(df - 1)?))?;
    for gen in [OreElement::x(g_ctx), OreElement::yhat(g_ctx)] {
        let lhs = ext.apply(&embed(&gen, f_ctx)?)?;
        let rhs = embed(&omega.apply(&gen)?, f_ctx)?;
        assert_eq!(lhs, rhs, "extension agrees with {omega} on A_g");
    }
    Ok(Some(ext))
}

/// Restricts `psi` on `A_f` to the subalgebra `A_g` for `f | g`. Returns
/// `None` unless `psi(g) = lambda * g`.
pub fn restrict_automorphism(psi: &Automorphism, g_ctx: &AhContext) -> Result<Option<Automorphism>> {
    let f_ctx = psi.ctx();
    let (f, g) = (f_ctx.h(), g_ctx.h());
    if g.deg() == 0 {
        return Err(Error::ConstantH);
    }
    let r = g.exact_div(f)?;
    let alpha = psi.alpha();
    let moved = psi.apply_poly(g);
    let lambda = moved.leading().checked_div(&g.leading())?;
    if moved != g.scale(&lambda) {
        return Ok(None);
    }
    let y_g = embed(&OreElement::yhat(g_ctx), f_ctx)?;
    let scale = alpha.powi(g.deg() as i64 - 1)?;
    let rest = psi.apply(&y_g)?.try_sub(&y_g.scale(&scale))?;
    let fg = rest.as_poly().expect("psi(Y_g) - alpha^(deg g - 1) Y_g lies in F[x]");
    assert_eq!(fg, (&r * psi.f()).scale(&alpha.pow(r.deg() as u64)), "restriction formula");
    Ok(Some(Automorphism::new(g_ctx, alpha.clone(), psi.beta().clone(), fg)?))
}
