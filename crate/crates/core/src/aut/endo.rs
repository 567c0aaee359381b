use std::collections::BTreeMap;

use crate::ah::{eval_poly_at, AhContext, OreElement};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoKind {
    /// `x -> x^k`, `Y -> (1/k) x^((k-1)(n-1)) Y` on `A_(x^n)`.
    Eta { k: u64 },
    /// `x -> x`, `Y -> Y + c` with `[x, c] = 0`, in positive characteristic.
    Kappa { c: OreElement },
}

/// An algebra endomorphism given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    kind: EndoKind,
    x_image: OreElement,
    yhat_image: OreElement,
}

/// Which generators lie in the span of the images of `x^i Y^j`, `i, j <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectivityProbe {
    pub bound: usize,
    pub x_reached: bool,
    pub yhat_reached: bool,
}

impl SurjectivityProbe {
    pub fn surjective_within_bound(&self) -> bool {
        self.x_reached && self.yhat_reached
    }
}

impl Endomorphism {
    fn checked(kind: EndoKind, x_image: OreElement, yhat_image: OreElement) -> Self {
        let endo = Endomorphism { kind, x_image, yhat_image };
        assert!(endo.preserves_relation(), "endomorphism respects Yx - xY = h");
        endo
    }

    pub fn kind(&self) -> &EndoKind {
        &self.kind
    }

    pub fn x_image(&self) -> &OreElement {
        &self.x_image
    }

    pub fn yhat_image(&self) -> &OreElement {
        &self.yhat_image
    }

    pub fn apply(&self, a: &OreElement) -> Result<OreElement> {
        if a.ctx() != self.x_image.ctx() {
            return Err(Error::ContextMismatch);
        }
        a.apply_poly_map(&self.x_image, &self.yhat_image)
    }

    /// `[image(Y), image(x)] = h(image(x))`.
    pub fn preserves_relation(&self) -> bool {
        let h = self.x_image.ctx().h();
        self.yhat_image.commutator(&self.x_image).expect("same context") == eval_poly_at(h, &self.x_image)
    }

    pub fn probe_surjectivity(&self, bound: usize) -> Result<SurjectivityProbe> {
        let ctx = self.x_image.ctx();
        let mut images = Vec::new();
        for i in 0..=bound {
            for j in 0..=bound {
                let m = OreElement::monomial(ctx, Poly::monomial(ctx.spec().one(), i), j);
                images.push(self.apply(&m)?);
            }
        }
        let x = OreElement::x(ctx);
        let y = OreElement::yhat(ctx);
        Ok(SurjectivityProbe {
            bound,
            x_reached: in_span(&images, &x),
            yhat_reached: in_span(&images, &y),
        })
    }
}

fn in_span(vectors: &[OreElement], target: &OreElement) -> bool {
    let spec = target.spec();
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in vectors.iter().chain(std::iter::once(target)) {
        for (j, f) in e.coeffs().iter().enumerate() {
            for (i, c) in f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    let next = index.len();
                    index.entry((j, i)).or_insert(next);
                }
            }
        }
    }
    let flatten = |e: &OreElement| {
        let mut v: Vec<FieldElem> = vec![spec.zero(); index.len()];
        for (j, f) in e.coeffs().iter().enumerate() {
            for (i, c) in f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    v[index[&(j, i)]] = c.clone();
                }
            }
        }
        v
    };
    let columns: Vec<Vec<FieldElem>> = vectors.iter().map(flatten).collect();
    linalg::solve(spec, &columns, &flatten(target)).is_some()
}

/// `eta_k` on `A_h` with `h = gamma x^n`, `n >= 1`.
pub fn eta_endo(ctx: &AhContext, k: u64) -> Result<Endomorphism> {
    let h = ctx.h();
    let n = h.deg();
    if n == 0 || h.term_count() != 1 {
        return Err(Error::WrongH);
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let spec = ctx.spec();
    let kf = FieldElem::from_i64(k as i64, spec);
    let Ok(inv_k) = kf.inv() else {
        return Err(Error::PDividesK(k));
    };
    let x_image = OreElement::from_poly(ctx, Poly::monomial(spec.one(), k as usize));
    let yhat_image = OreElement::monomial(ctx, Poly::monomial(inv_k, (k as usize - 1) * (n - 1)), 1);
    Ok(Endomorphism::checked(EndoKind::Eta { k }, x_image, yhat_image))
}

/// `kappa_c` on `A_h` for `c` commuting with `x`, in positive characteristic.
pub fn kappa_endo(ctx: &AhContext, c: &OreElement) -> Result<Endomorphism> {
    if ctx.spec().characteristic() == 0 {
        return Err(Error::CharZeroKappa);
    }
    if c.ctx() != ctx {
        return Err(Error::ContextMismatch);
    }
    if !c.commutator(&OreElement::x(ctx))?.is_zero() {
        return Err(Error::NotInCentralizer);
    }
    let yhat_image = &OreElement::yhat(ctx) + c;
    Ok(Endomorphism::checked(EndoKind::Kappa { c: c.clone() }, OreElement::x(ctx), yhat_image))
}
