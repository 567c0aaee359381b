//! Automorphism groups: affine data, classification, invariants, isomorphism.

use weyl_subalgebra::aut::{self, Automorphism, PSet};
use weyl_subalgebra::parse::parse_element;
use weyl_subalgebra::{AhContext, FieldSpec, Poly};

fn report(ctx: &AhContext) -> weyl_subalgebra::Result<()> {
    let s = aut::classify_aut_group(ctx)?;
    println!("h = {} over {}", ctx.h(), ctx.spec());
    match &s.p_set {
        PSet::Finite(pairs) => {
            let shown: Vec<String> = pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            println!("  P = {{{}}}", shown.join(", "));
        }
        PSet::OneParameterFamily(lambda) => println!("  P = {{(a, (1 - a) * {lambda}) : a != 0}}"),
    }
    println!("  case {}, invariants {}, center generator q = {}", s.case.name(), s.t, s.q);
    Ok(())
}

fn main() -> weyl_subalgebra::Result<()> {
    let qq = FieldSpec::rationals();
    report(&AhContext::new(Poly::from_ints(qq, &[0, 0, -1, 1]))?)?;
    report(&AhContext::new(Poly::from_ints(qq, &[0, -1, 1]))?)?;
    report(&AhContext::new(Poly::from_ints(qq, &[0, 0, 0, 1]))?)?;
    report(&AhContext::new(Poly::from_ints(FieldSpec::prime(3)?, &[0, -1, 0, 1]))?)?;

    let ctx = AhContext::new(Poly::from_ints(qq, &[0, -1, 1]))?;
    let flip = Automorphism::new(&ctx, qq.int(-1), qq.one(), Poly::x(qq))?;
    let a = parse_element("Y*x", &ctx)?;
    println!("{flip}: {a} -> {}", flip.apply(&a)?);
    println!("inverse: {}", flip.inverse());
    println!("square: {}", flip.compose(&flip)?);

    let h = Poly::from_ints(qq, &[0, 0, 1]);
    let g = Poly::from_ints(qq, &[1, 2, 1]);
    match aut::iso_test(&h, &g)? {
        Some(w) => println!("A_h with h = {h} is isomorphic to A_g with g = {g}: x -> {}*x + {}, scale {}", w.alpha, w.beta, w.nu),
        None => println!("h = {h} and g = {g} give non-isomorphic algebras"),
    }
    Ok(())
}
