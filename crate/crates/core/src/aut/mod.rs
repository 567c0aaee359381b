//! Automorphisms of `A_h` for `deg h >= 1`.
//!
//! Every automorphism fixes `F[x]` setwise and has the shape
//! `x -> alpha*x + beta`, `Y -> alpha^(deg h - 1) Y + f(x)` where the pair
//! `(alpha, beta)` lies in
//!
//! ```text
//! P = { (alpha, beta) : h(alpha*x + beta) = alpha^(deg h) h(x) }.
//! ```
//!
//! The translations `G = { nu : (1, nu) in P }` form a finite additive group.
//! This module computes `P` and `G`, classifies the group, and derives the
//! invariant ring `D^Aut = F[t]` and the center `{ phi_r : r in q F[t] }`.

mod automorphism;
mod endo;
mod iso;

use std::fmt;

pub use automorphism::{extend_automorphism, restrict_automorphism, Automorphism};
pub use endo::{eta_endo, kappa_endo, EndoKind, Endomorphism, SurjectivityProbe};
pub use iso::{compute_p_by_elimination, iso_test, IsoWitness};

use crate::ah::AhContext;
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldKind, FieldSpec};
use crate::poly::Poly;

/// The set `P`, either listed or as the family `{ (alpha, (1 - alpha) lambda) }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PSet {
    Finite(Vec<(FieldElem, FieldElem)>),
    OneParameterFamily(FieldElem),
}

impl PSet {
    pub fn contains(&self, alpha: &FieldElem, beta: &FieldElem) -> bool {
        match self {
            PSet::Finite(pairs) => pairs.iter().any(|(a, b)| a == alpha && b == beta),
            PSet::OneParameterFamily(lambda) => {
                !alpha.is_zero() && *beta == &(&alpha.spec().one() - alpha) * lambda
            }
        }
    }

    /// The pairs as a list; a family over the rationals cannot be listed.
    pub fn pairs(&self, spec: FieldSpec) -> Result<Vec<(FieldElem, FieldElem)>> {
        match self {
            PSet::Finite(pairs) => Ok(pairs.clone()),
            PSet::OneParameterFamily(lambda) => Ok(spec
                .units()?
                .map(|a| {
                    let b = &(&spec.one() - &a) * lambda;
                    (a, b)
                })
                .collect()),
        }
    }
}

/// Whether `h(alpha*x + beta) = alpha^(deg h) h(x)` with `alpha != 0`.
pub fn is_valid_pair(h: &Poly, alpha: &FieldElem, beta: &FieldElem) -> bool {
    !alpha.is_zero() && h.affine_substitute(alpha, beta) == h.scale(&alpha.pow(h.deg() as u64))
}

fn require_nonconstant(ctx: &AhContext) -> Result<()> {
    if ctx.deg_h() == 0 {
        return Err(Error::ConstantH);
    }
    Ok(())
}

/// `lambda` when `h = gamma (x - lambda)^n` with `lambda` in the field.
pub(crate) fn family_root(h: &Poly) -> Option<FieldElem> {
    let spec = h.spec();
    let n = h.deg();
    if n == 0 {
        return None;
    }
    let lead = h.leading();
    let n_lead = &spec.int(n as i64) * &lead;
    let lambda = if n_lead.is_zero() {
        let sq = h.squarefree_part().ok()?;
        if sq.deg() != 1 {
            return None;
        }
        -&sq.coeff(0)
    } else {
        -&h.coeff(n - 1).checked_div(&n_lead).ok()?
    };
    let candidate = Poly::from_coeffs(spec, vec![-&lambda, spec.one()]).pow(n as u64).scale(&lead);
    (candidate == *h).then_some(lambda)
}

/// The translation group `G`, in increasing order.
pub fn compute_g(ctx: &AhContext) -> Result<Vec<FieldElem>> {
    require_nonconstant(ctx)?;
    let spec = ctx.spec();
    if spec.kind() == FieldKind::Rationals {
        return Ok(vec![spec.zero()]);
    }
    let h = ctx.h();
    Ok(spec.enumerate()?.filter(|nu| h.affine_substitute(&spec.one(), nu) == *h).collect())
}

/// The set `P`. Over a prime field every pair is checked; over the
/// rationals `beta` is eliminated and `alpha` found among rational roots.
pub fn compute_p(ctx: &AhContext) -> Result<PSet> {
    require_nonconstant(ctx)?;
    let spec = ctx.spec();
    if spec.kind() == FieldKind::Rationals {
        return compute_p_by_elimination(ctx);
    }
    let h = ctx.h();
    let mut pairs = Vec::new();
    for alpha in spec.units()? {
        for beta in spec.enumerate()? {
            if is_valid_pair(h, &alpha, &beta) {
                pairs.push((alpha.clone(), beta));
            }
        }
    }
    if let Some(lambda) = family_root(h) {
        let family = PSet::OneParameterFamily(lambda);
        assert_eq!(family.pairs(spec)?, pairs, "family shape of P");
        return Ok(family);
    }
    Ok(PSet::Finite(pairs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutCase {
    /// `Aut = F[x]`: only the maps `Y -> Y + f`.
    PolyOnly,
    /// `Aut = F[x] x| { tau_(1, nu) : nu in G }` with `G != {0}`.
    Translations,
    /// `Aut = F[x] x| F*`, from `h = gamma (x - lambda)^n` over an infinite field.
    SemidirectFstar { lambda: FieldElem },
    /// `tau_P / tau_(1, G)` is cyclic of order `ell`, generated by `(alpha, beta)`.
    SemidirectFinite { alpha: FieldElem, beta: FieldElem, ell: u64 },
}

impl AutCase {
    pub fn name(&self) -> &'static str {
        match self {
            AutCase::PolyOnly => "PolyOnly",
            AutCase::Translations => "Translations",
            AutCase::SemidirectFstar { .. } => "SemidirectFstar",
            AutCase::SemidirectFinite { .. } => "SemidirectFinite",
        }
    }
}

/// The ring of polynomials fixed by every automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantRing {
    /// All of `F[x]`.
    WholeD,
    /// Only the constants.
    ConstantsOnly,
    /// `F[t]`.
    Generated(Poly),
}

impl InvariantRing {
    /// The generator `t`, with `t = x` for the whole ring.
    pub fn generator(&self, spec: FieldSpec) -> Option<Poly> {
        match self {
            InvariantRing::WholeD => Some(Poly::x(spec)),
            InvariantRing::ConstantsOnly => None,
            InvariantRing::Generated(t) => Some(t.clone()),
        }
    }
}

impl fmt::Display for InvariantRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantRing::WholeD => write!(f, "WholeD"),
            InvariantRing::ConstantsOnly => write!(f, "ConstantsOnly"),
            InvariantRing::Generated(t) => write!(f, "{t}"),
        }
    }
}

/// The center of `Aut`: `{ phi_r : r in q * D^Aut }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutCenter {
    pub q: Poly,
    pub t: InvariantRing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroupStructure {
    pub g: Vec<FieldElem>,
    /// Number of distinct roots of `h` over the algebraic closure.
    pub k: usize,
    pub p_set: PSet,
    pub case: AutCase,
    pub t: InvariantRing,
    pub q: Poly,
    /// The exponent `m` of the center generator in the cyclic case.
    pub n_exponent: Option<u64>,
}

impl AutGroupStructure {
    /// Pairs against which the transformation laws are checked: all of
    /// `P` when finite, a sample of the family otherwise.
    pub fn law_pairs(&self, spec: FieldSpec) -> Vec<(FieldElem, FieldElem)> {
        match &self.p_set {
            PSet::Finite(pairs) => pairs.clone(),
            PSet::OneParameterFamily(lambda) => match spec.kind() {
                FieldKind::PrimeField => self.p_set.pairs(spec).expect("finite field"),
                FieldKind::Rationals => [(-1, 1), (2, 1), (1, 2), (3, 1), (-2, 3)]
                    .into_iter()
                    .map(|(n, d)| {
                        let a = spec.int(n).checked_div(&spec.int(d)).expect("nonzero");
                        let b = &(&spec.one() - &a) * lambda;
                        (a, b)
                    })
                    .collect(),
            },
        }
    }

    /// Generators of the affine part: the nonzero translations together
    /// with the cyclic generator, or a sample of the family.
    pub fn tau_generators(&self, spec: FieldSpec) -> Vec<(FieldElem, FieldElem)> {
        let mut gens: Vec<(FieldElem, FieldElem)> =
            self.g.iter().filter(|nu| !nu.is_zero()).map(|nu| (spec.one(), nu.clone())).collect();
        match &self.case {
            AutCase::PolyOnly | AutCase::Translations => {}
            AutCase::SemidirectFinite { alpha, beta, .. } => gens.push((alpha.clone(), beta.clone())),
            AutCase::SemidirectFstar { .. } => gens.extend(self.law_pairs(spec)),
        }
        gens
    }

    /// Checks `t(ax+b) = t` and `q(ax+b) = a^(deg h - 1) q` on [`Self::law_pairs`].
    pub fn laws_hold(&self, h: &Poly) -> bool {
        let spec = h.spec();
        let d = h.deg() as u64;
        self.law_pairs(spec).iter().all(|(a, b)| {
            let t_ok = self.t.generator(spec).is_none_or(|t| t.affine_substitute(a, b) == t);
            t_ok && self.q.affine_substitute(a, b) == self.q.scale(&a.pow(d - 1))
        })
    }
}

/// `prod_(nu in G) (x + c + nu)`.
fn shifted_orbit_product(spec: FieldSpec, c: &FieldElem, g: &[FieldElem]) -> Poly {
    g.iter().fold(Poly::one(spec), |acc, nu| {
        &acc * &Poly::from_coeffs(spec, vec![c + nu, spec.one()])
    })
}

pub fn classify_aut_group(ctx: &AhContext) -> Result<AutGroupStructure> {
    require_nonconstant(ctx)?;
    let spec = ctx.spec();
    let h = ctx.h();
    let d = ctx.deg_h() as u64;
    let g = compute_g(ctx)?;
    let k = h.distinct_root_count()?;
    let p_set = compute_p(ctx)?;

    let structure = match (&p_set, spec.kind()) {
        (PSet::OneParameterFamily(lambda), FieldKind::Rationals) => {
            let x_minus = Poly::from_coeffs(spec, vec![-lambda, spec.one()]);
            AutGroupStructure {
                g,
                k,
                case: AutCase::SemidirectFstar { lambda: lambda.clone() },
                t: InvariantRing::ConstantsOnly,
                q: x_minus.pow(d - 1),
                n_exponent: None,
                p_set,
            }
        }
        _ => {
            let pairs = p_set.pairs(spec)?;
            classify_finite(spec, d, g, k, p_set, &pairs)
        }
    };
    assert!(structure.laws_hold(h), "invariant and center laws for {h}");
    Ok(structure)
}

fn classify_finite(
    spec: FieldSpec,
    d: u64,
    g: Vec<FieldElem>,
    k: usize,
    p_set: PSet,
    pairs: &[(FieldElem, FieldElem)],
) -> AutGroupStructure {
    let order = |a: &FieldElem| a.multiplicative_order().expect("alpha is a root of unity");
    let best = pairs
        .iter()
        .filter(|(a, _)| !a.is_one())
        .max_by(|(a1, b1), (a2, b2)| order(a1).cmp(&order(a2)).then_with(|| (a2, b2).cmp(&(a1, b1))));
    let Some((alpha, beta)) = best else {
        let case = if g.len() == 1 { AutCase::PolyOnly } else { AutCase::Translations };
        let t = if g.len() == 1 {
            InvariantRing::WholeD
        } else {
            InvariantRing::Generated(shifted_orbit_product(spec, &spec.zero(), &g))
        };
        return AutGroupStructure { g, k, p_set, case, t, q: Poly::one(spec), n_exponent: None };
    };
    let ell = order(alpha);
    assert!((k as u64).is_multiple_of(ell) || (k as u64 - 1).is_multiple_of(ell), "ell divides k or k - 1");
    let size = g.len() as u64;
    if size > 1 {
        assert_eq!((size - 1) % ell, 0, "ell divides |G| - 1");
    }
    let shift = beta.checked_div(&(alpha - &spec.one())).expect("alpha != 1");
    let base = shifted_orbit_product(spec, &shift, &g);
    let m = (0..ell).find(|m| (m * size) % ell == (d - 1) % ell).expect("|G| is invertible mod ell");
    AutGroupStructure {
        case: AutCase::SemidirectFinite { alpha: alpha.clone(), beta: beta.clone(), ell },
        t: InvariantRing::Generated(base.pow(ell)),
        q: base.pow(m),
        n_exponent: Some(m),
        g,
        k,
        p_set,
    }
}

pub fn invariant_ring(ctx: &AhContext) -> Result<InvariantRing> {
    Ok(classify_aut_group(ctx)?.t)
}

pub fn aut_center(ctx: &AhContext) -> Result<AutCenter> {
    let s = classify_aut_group(ctx)?;
    Ok(AutCenter { q: s.q, t: s.t })
}
