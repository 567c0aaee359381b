//! Normal elements (`v A_h = A_h v`), simplicity, and generators of
//! height one prime ideals.

use std::collections::BTreeMap;
use std::fmt;

use crate::ah::{AhContext, OreElement};
use crate::center::{central_decompose, is_central};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::{FactoredPoly, Irreducibility, Poly};

/// `v = (prod u_i^beta_i) * z` with `u_i` prime factors of `h` and `z`
/// central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalClassification {
    pub factors: Vec<(Poly, usize)>,
    pub z: OreElement,
}

impl NormalClassification {
    pub fn reassemble(&self) -> OreElement {
        let spec = self.z.spec();
        let prefix = self.factors.iter().fold(Poly::one(spec), |acc, (u, b)| &acc * &u.pow(*b as u64));
        self.z.left_mul_poly(&prefix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityCertificate {
    pub verdict: bool,
    /// When normal: `[Y, v] = r v`.
    pub r: Option<Poly>,
    /// Present when normal and the factorization of `h` is certified.
    pub classification: Option<NormalClassification>,
}

/// Decides normality: `v` is normal exactly when `[x, v] = 0` and
/// `[Y, v] = r v` for a polynomial `r`. Conjugation by `v` then acts as the
/// automorphism `x -> x`, `Y -> Y + r`.
pub fn is_normal(v: &OreElement) -> Result<NormalityCertificate> {
    let r = normality_witness(v)?;
    let classification = match &r {
        Some(_) => classify_known_normal(v).ok(),
        None => None,
    };
    Ok(NormalityCertificate { verdict: r.is_some(), r, classification })
}

fn normality_witness(v: &OreElement) -> Result<Option<Poly>> {
    let Some(n) = v.ydeg() else {
        return Err(Error::ZeroElement);
    };
    let ctx = v.ctx();
    if !v.commutator(&OreElement::x(ctx))?.is_zero() {
        return Ok(None);
    }
    let bracket = OreElement::yhat(ctx).commutator(v)?;
    let Ok(r) = bracket.coeff(n).exact_div(&v.coeff(n)) else {
        return Ok(None);
    };
    Ok((v.left_mul_poly(&r) == bracket).then_some(r))
}

/// Monic prime factors of `h`, failing when any is uncertified.
pub fn certified_prime_factors(ctx: &AhContext) -> Result<Vec<Poly>> {
    let factored: FactoredPoly = match ctx.supplied_factorization() {
        Some(f) => f.clone(),
        None => ctx.h().factor()?,
    };
    let trusted = ctx.supplied_factorization().is_some();
    let mut out = Vec::new();
    for f in factored.factors {
        if !trusted && f.irreducibility == Irreducibility::Unverified {
            return Err(Error::Unverifiable(f.poly.to_string()));
        }
        out.push(f.poly.monic());
    }
    Ok(out)
}

pub fn classify_normal(v: &OreElement) -> Result<NormalClassification> {
    if normality_witness(v)?.is_none() {
        return Err(Error::NotNormal);
    }
    classify_known_normal(v)
}

fn classify_known_normal(v: &OreElement) -> Result<NormalClassification> {
    let ctx = v.ctx();
    let p = ctx.spec().characteristic() as usize;
    let lead = v.coeff(v.ydeg().expect("nonzero"));
    let mut factors = Vec::new();
    for u in certified_prime_factors(ctx)? {
        if u.derivative().is_zero() {
            continue;
        }
        let m = lead.multiplicity(&u);
        let beta = if p > 0 { m % p } else { m };
        if beta > 0 {
            factors.push((u, beta));
        }
    }
    let prefix = factors.iter().fold(Poly::one(ctx.spec()), |acc, (u, b)| &acc * &u.pow(*b as u64));
    let z = v.map_coeffs(|f| f.exact_div(&prefix).expect("normal elements factor through the u_i"));
    assert!(is_central(&z), "residual factor of a normal element is central");
    let out = NormalClassification { factors, z };
    assert_eq!(&out.reassemble(), v);
    Ok(out)
}

/// Simple exactly when the characteristic is 0 and `h` is a nonzero constant.
pub fn is_simple(ctx: &AhContext) -> bool {
    ctx.spec().characteristic() == 0 && ctx.deg_h() == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeKind {
    FactorOfH,
    CentralIrreducible,
    NotPrimeGenerator,
    Unknown,
}

impl fmt::Display for PrimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeKind::FactorOfH => "FactorOfH",
            PrimeKind::CentralIrreducible => "CentralIrreducible",
            PrimeKind::NotPrimeGenerator => "NotPrimeGenerator",
            PrimeKind::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGeneratorReport {
    pub kind: PrimeKind,
    pub detail: String,
}

fn report(kind: PrimeKind, detail: impl Into<String>) -> PrimeGeneratorReport {
    PrimeGeneratorReport { kind, detail: detail.into() }
}

/// Whether `v A_h` is a height one prime ideal.
///
/// Such ideals are generated by a prime factor of `h` or, in characteristic
/// `p`, by an irreducible element of the center `F[X, Z]` (`X = x^p`,
/// `Z = h^p y^p`) other than an associate of some `u^p`. Central elements are
/// decided when univariate or of degree one in a variable; other bivariate
/// cases are reported as `Unknown`.
pub fn height_one_prime_test(v: &OreElement) -> Result<PrimeGeneratorReport> {
    if v.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ctx = v.ctx();
    let spec = ctx.spec();
    let factored = match ctx.supplied_factorization() {
        Some(f) => f.clone(),
        None => ctx.h().factor()?,
    };
    let trusted = ctx.supplied_factorization().is_some();
    if let Some(f) = v.as_poly().filter(|f| !f.is_constant()) {
        let monic = f.monic();
        if let Some(u) = factored.factors.iter().find(|u| u.poly == monic) {
            return Ok(if trusted || u.irreducibility == Irreducibility::Verified {
                report(PrimeKind::FactorOfH, format!("associate of the prime factor {} of h", u.poly))
            } else {
                report(PrimeKind::Unknown, format!("{} divides h but is not certified irreducible", u.poly))
            });
        }
    }
    if spec.characteristic() == 0 || !is_central(v) {
        return Ok(report(PrimeKind::NotPrimeGenerator, "neither a prime factor of h nor an irreducible central element"));
    }
    // Central: coordinates over F[X, Z].
    let mut biv: BTreeMap<(usize, usize), FieldElem> = BTreeMap::new();
    for (i, j, s, t, c) in central_decompose(v)?.entries() {
        assert!(i == 0 && j == 0, "central elements lie in F[X, Z]");
        biv.insert((s, t), c);
    }
    let deg_x = biv.keys().map(|k| k.0).max().unwrap_or(0);
    let deg_y = biv.keys().map(|k| k.1).max().unwrap_or(0);
    let slice = |use_x: bool, other: usize| {
        let coeffs = (0..=if use_x { deg_x } else { deg_y })
            .map(|e| biv.get(&if use_x { (e, other) } else { (other, e) }).cloned().unwrap_or_else(|| spec.zero()))
            .collect();
        Poly::from_coeffs(spec, coeffs)
    };
    if deg_x == 0 && deg_y == 0 {
        return Ok(report(PrimeKind::NotPrimeGenerator, "a unit"));
    }
    if deg_y == 0 {
        let g = slice(true, 0);
        if g.is_irreducible()? != Some(true) {
            return Ok(report(PrimeKind::NotPrimeGenerator, format!("reducible in X = x^p: {g}")));
        }
        if factored.factors.iter().any(|u| u.poly == g.monic()) {
            return Ok(report(PrimeKind::NotPrimeGenerator, "associate of u^p for a prime factor u of h"));
        }
        return Ok(report(PrimeKind::CentralIrreducible, format!("irreducible polynomial {g} in X = x^p")));
    }
    if deg_x == 0 {
        let g = slice(false, 0);
        return Ok(if g.is_irreducible()? == Some(true) {
            report(PrimeKind::CentralIrreducible, format!("irreducible polynomial {} in Z = h^p y^p", g.to_string().replace('x', "Z")))
        } else {
            report(PrimeKind::NotPrimeGenerator, "reducible in Z = h^p y^p")
        });
    }
    // a(X) + b(X) Z is irreducible iff gcd(a, b) = 1, and symmetrically.
    for (use_x_as_coeff, deg) in [(true, deg_y), (false, deg_x)] {
        if deg == 1 {
            let a = slice(use_x_as_coeff, 0);
            let b = slice(use_x_as_coeff, 1);
            let coprime = a.gcd(&b)?.is_one();
            return Ok(if coprime {
                report(PrimeKind::CentralIrreducible, "degree one in a central generator with coprime coefficients")
            } else {
                report(PrimeKind::NotPrimeGenerator, "degree one in a central generator with a common factor")
            });
        }
    }
    Ok(report(PrimeKind::Unknown, "bivariate central element; irreducibility in F[X, Z] is not decided"))
}
