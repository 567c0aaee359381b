use crate::ah::AhContext;
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldKind};
use crate::poly::Poly;

use super::{family_root, is_valid_pair, require_nonconstant, PSet};

/// A witness `nu * g(x) = h(alpha*x + beta)`, so that `A_h` and `A_g` are
/// isomorphic via `x -> alpha*x + beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub alpha: FieldElem,
    pub beta: FieldElem,
    pub nu: FieldElem,
}

impl IsoWitness {
    pub fn holds(&self, h: &Poly, g: &Poly) -> bool {
        !self.alpha.is_zero()
            && !self.nu.is_zero()
            && h.affine_substitute(&self.alpha, &self.beta) == g.scale(&self.nu)
    }
}

/// The `alpha` values solving `h(alpha*x + beta(alpha)) = nu(alpha) g(x)`
/// once `beta` is eliminated through the `x^(n-1)` coefficient.
enum AlphaSet {
    /// Every nonzero `alpha`, with `beta = c1*alpha + c0`.
    All { c1: FieldElem, c0: FieldElem },
    /// Verified `(alpha, beta)` pairs, sorted.
    Finite(Vec<(FieldElem, FieldElem)>),
}

/// `h(alpha*x + c1*alpha + c0)` as a list of `x`-coefficients, each a
/// polynomial in `alpha`.
fn substitute_symbolic(h: &Poly, c1: &FieldElem, c0: &FieldElem) -> Vec<Poly> {
    let spec = h.spec();
    let lin = [Poly::from_coeffs(spec, vec![c0.clone(), c1.clone()]), Poly::x(spec)];
    let mut acc: Vec<Poly> = Vec::new();
    for c in h.coeffs().iter().rev() {
        let mut next = vec![Poly::zero(spec); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] = &next[i] + &(a * &lin[0]);
            next[i + 1] = &next[i + 1] + &(a * &lin[1]);
        }
        next[0] = &next[0] + &Poly::constant(c.clone());
        acc = next;
    }
    acc
}

/// Requires `deg h = deg g = n >= 1` with `n * lc(h)` and `n * lc(g)` invertible.
fn eliminate(h: &Poly, g: &Poly) -> Result<AlphaSet> {
    let spec = h.spec();
    let n = h.deg();
    debug_assert!(n >= 1 && g.deg() == n);
    let nf = spec.int(n as i64);
    let (an, bn) = (h.leading(), g.leading());
    let (n_an, n_bn) = (&nf * &an, &nf * &bn);
    if n_an.is_zero() {
        return Err(Error::InvalidArgument(format!("n * a_n vanishes for {h}")));
    }
    let c1 = g.coeff(n - 1).checked_div(&n_bn)?;
    let c0 = -&h.coeff(n - 1).checked_div(&n_an)?;
    let ratio = an.checked_div(&bn)?;
    let symbolic = substitute_symbolic(h, &c1, &c0);
    let alpha_n = Poly::monomial(spec.one(), n);
    let mut common = Poly::zero(spec);
    for (i, s) in symbolic.iter().enumerate() {
        let cond = s - &alpha_n.scale(&(&ratio * &g.coeff(i)));
        if !cond.is_zero() {
            common = if common.is_zero() { cond.monic() } else { common.gcd(&cond)? };
        }
    }
    if common.is_zero() {
        return Ok(AlphaSet::All { c1, c0 });
    }
    let roots = match spec.kind() {
        FieldKind::Rationals => common.rational_roots()?,
        FieldKind::PrimeField => common.roots()?,
    };
    let pairs = roots
        .into_iter()
        .filter(|a| !a.is_zero())
        .map(|a| {
            let b = &(&c1 * &a) + &c0;
            (a, b)
        })
        .filter(|(a, b)| h.affine_substitute(a, b) == g.scale(&(&ratio * &a.pow(n as u64))))
        .collect();
    Ok(AlphaSet::Finite(pairs))
}

/// `P` by coefficient elimination instead of search. Works over any field
/// where `n * lc(h)` is invertible; over a prime field it serves as an
/// independent check on [`super::compute_p`].
pub fn compute_p_by_elimination(ctx: &AhContext) -> Result<PSet> {
    require_nonconstant(ctx)?;
    let h = ctx.h();
    let n = h.deg();
    if (&ctx.spec().int(n as i64) * &h.leading()).is_zero() {
        return Err(Error::InvalidArgument(format!("n * a_n vanishes for {h}")));
    }
    if let Some(lambda) = family_root(h) {
        return Ok(PSet::OneParameterFamily(lambda));
    }
    match eliminate(h, h)? {
        // vanishing conditions force the family shape, caught above
        AlphaSet::All { .. } => unreachable!("family shape of {h} not detected"),
        AlphaSet::Finite(pairs) => {
            debug_assert!(pairs.iter().all(|(a, b)| is_valid_pair(h, a, b)));
            Ok(PSet::Finite(pairs))
        }
    }
}

/// Searches for `nu * g(x) = h(alpha*x + beta)`. Exhaustive over a prime
/// field; over the rationals via the same elimination as [`compute_p_by_elimination`].
pub fn iso_test(h: &Poly, g: &Poly) -> Result<Option<IsoWitness>> {
    if h.spec() != g.spec() {
        return Err(Error::FieldMismatch);
    }
    if h.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let spec = h.spec();
    let n = h.deg();
    if g.deg() != n {
        return Ok(None);
    }
    let ratio = h.leading().checked_div(&g.leading())?;
    let witness = |alpha: FieldElem, beta: FieldElem| {
        let nu = &ratio * &alpha.pow(n as u64);
        let w = IsoWitness { alpha, beta, nu };
        w.holds(h, g).then_some(w)
    };
    if n == 0 {
        return Ok(witness(spec.one(), spec.zero()));
    }
    match spec.kind() {
        FieldKind::PrimeField => {
            for alpha in spec.units()? {
                for beta in spec.enumerate()? {
                    if let Some(w) = witness(alpha.clone(), beta) {
                        return Ok(Some(w));
                    }
                }
            }
            Ok(None)
        }
        FieldKind::Rationals => Ok(match eliminate(h, g)? {
            AlphaSet::All { c1, c0 } => witness(spec.one(), &c1 + &c0),
            AlphaSet::Finite(pairs) => pairs.into_iter().find_map(|(a, b)| witness(a, b)),
        }),
    }
}
