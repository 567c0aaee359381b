//! Oracles and generators shared by the integration tests.
//!
//! The rewriter never calls the library's product. The normality oracle
//! does multiply with it, but decides membership by linear algebra from the
//! definition rather than through the library's criterion.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weyl_subalgebra::{linalg, AhContext, FieldElem, FieldSpec, OreElement, Poly};

pub fn qq() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn poly(spec: FieldSpec, c: &[i64]) -> Poly {
    Poly::from_ints(spec, c)
}

pub fn ctx(spec: FieldSpec, h: &[i64]) -> AhContext {
    AhContext::new(poly(spec, h)).unwrap()
}

pub fn random_poly(rng: &mut ChaCha8Rng, spec: FieldSpec, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
    poly(spec, &coeffs)
}

pub fn random_element(rng: &mut ChaCha8Rng, ctx: &AhContext, ydeg: usize, cdeg: usize) -> OreElement {
    let n = rng.gen_range(0..=ydeg);
    let coeffs = (0..=n).map(|_| random_poly(rng, ctx.spec(), cdeg)).collect();
    OreElement::from_coeffs(ctx, coeffs)
}

/// Words in the letters `X` (0) and `Y` (1) with scalar coefficients.
type Words = BTreeMap<Vec<u8>, FieldElem>;

fn add_word(acc: &mut Words, w: Vec<u8>, c: FieldElem) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&w) {
        Some(e) => {
            *e = &*e + &c;
            if e.is_zero() {
                acc.remove(&w);
            }
        }
        None => {
            acc.insert(w, c);
        }
    }
}

/// Reduces to sorted words by repeatedly rewriting the leftmost `YX` into
/// `XY + h(X)`, one step at a time. Independent of the closed-form product.
/// Words are taken largest first (with `X < Y`), so rewrites land below the
/// current word and equal words merge before they are expanded.
pub fn rewrite_normal_form(h: &Poly, start: Words) -> Words {
    let mut pending = start;
    let mut done = Words::new();
    while let Some((word, c)) = pending.pop_last() {
        let Some(i) = word.windows(2).position(|w| w == [1, 0]) else {
            add_word(&mut done, word, c);
            continue;
        };
        let mut swapped = word.clone();
        swapped.swap(i, i + 1);
        add_word(&mut pending, swapped, c.clone());
        for (k, hk) in h.coeffs().iter().enumerate() {
            if hk.is_zero() {
                continue;
            }
            let mut w = word[..i].to_vec();
            w.extend(std::iter::repeat_n(0, k));
            w.extend_from_slice(&word[i + 2..]);
            add_word(&mut pending, w, &c * hk);
        }
    }
    done
}

/// `Y^n f(x)` as a normal-form element, via word rewriting.
pub fn naive_yn_times_f(ctx: &AhContext, n: usize, f: &Poly) -> OreElement {
    let mut start = Words::new();
    for (k, c) in f.coeffs().iter().enumerate() {
        let mut w = vec![1u8; n];
        w.extend(std::iter::repeat_n(0, k));
        add_word(&mut start, w, c.clone());
    }
    let spec = ctx.spec();
    let mut coeffs: Vec<Poly> = Vec::new();
    for (w, c) in rewrite_normal_form(ctx.h(), start) {
        let xs = w.iter().filter(|&&l| l == 0).count();
        let ys = w.len() - xs;
        if coeffs.len() <= ys {
            coeffs.resize(ys + 1, Poly::zero(spec));
        }
        coeffs[ys] = &coeffs[ys] + &Poly::monomial(c, xs);
    }
    OreElement::from_coeffs(ctx, coeffs)
}

/// Weight with `w(x) = 1`, `w(Y) = max(deg h, 1)`; the associated graded
/// ring is a commutative domain, so weights add under products.
pub fn weight(a: &OreElement) -> usize {
    let wy = a.ctx().deg_h().max(1);
    a.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .map(|(j, f)| f.deg() + j * wy)
        .max()
        .unwrap_or(0)
}

fn monomials_up_to(ctx: &AhContext, w: usize) -> Vec<OreElement> {
    let wy = ctx.deg_h().max(1);
    let mut out = Vec::new();
    for j in 0..=w / wy {
        for i in 0..=(w - j * wy) {
            out.push(OreElement::monomial(ctx, Poly::monomial(ctx.spec().one(), i), j));
        }
    }
    out
}

fn flatten(elems: &[OreElement], target: &OreElement) -> (Vec<Vec<FieldElem>>, Vec<FieldElem>) {
    let spec = target.spec();
    let mut index = BTreeMap::new();
    for e in elems.iter().chain(std::iter::once(target)) {
        for (j, f) in e.coeffs().iter().enumerate() {
            for (i, c) in f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    let n = index.len();
                    index.entry((j, i)).or_insert(n);
                }
            }
        }
    }
    let vec_of = |e: &OreElement| {
        let mut v = vec![spec.zero(); index.len()];
        for (j, f) in e.coeffs().iter().enumerate() {
            for (i, c) in f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    v[index[&(j, i)]] = c.clone();
                }
            }
        }
        v
    };
    (elems.iter().map(vec_of).collect(), vec_of(target))
}

/// Whether `u` lies in `A v` (left) or `v A` (right), searching multipliers
/// of the only possible weight.
fn in_principal(u: &OreElement, v: &OreElement, left: bool) -> bool {
    if u.is_zero() {
        return true;
    }
    let (wu, wv) = (weight(u), weight(v));
    if wu < wv {
        return false;
    }
    let spans: Vec<OreElement> = monomials_up_to(u.ctx(), wu - wv)
        .into_iter()
        .map(|m| if left { &m * v } else { v * &m })
        .collect();
    let (cols, rhs) = flatten(&spans, u);
    linalg::solve(u.spec(), &cols, &rhs).is_some()
}

/// `vA = Av`, checked on generators: `v x, v Y` in `Av` and `x v, Y v` in `vA`.
pub fn normal_by_definition(v: &OreElement) -> bool {
    let ctx = v.ctx();
    let gens = [OreElement::x(ctx), OreElement::yhat(ctx)];
    gens.iter().all(|g| in_principal(&(v * g), v, true) && in_principal(&(g * v), v, false))
}
