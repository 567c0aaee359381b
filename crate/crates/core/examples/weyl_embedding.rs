//! A_h inside the Weyl algebra via Y -> h y, and back.

use weyl_subalgebra::weyl::{self, Side};
use weyl_subalgebra::{AhContext, FieldSpec, OreElement, Poly, WeylElement};

fn main() -> weyl_subalgebra::Result<()> {
    let qq = FieldSpec::rationals();
    let ctx = AhContext::new(Poly::from_ints(qq, &[0, 0, 1]))?;
    let y = OreElement::yhat(&ctx);

    let w = weyl::to_weyl(&y.pow(2));
    println!("Y^2 -> {w}");
    println!("back: {}", weyl::from_weyl(&w, &ctx)?);

    let outside = WeylElement::y(qq);
    match weyl::from_weyl(&outside, &ctx) {
        Ok(a) => println!("y -> {a}"),
        Err(e) => println!("y is not in A_h: {e}"),
    }

    for i in 1..=3 {
        let lhs = weyl::product_formula_lhs(i, Side::Left, &ctx);
        println!("h^{i} y^{i} = {lhs}");
    }

    // A_{x^2} sits inside A_x
    let ax = AhContext::new(Poly::x(qq))?;
    println!("Y in A_x: {}", weyl::embed(&y, &ax)?);

    let wit = weyl::ore_witness(&y.pow(2), &Poly::x(qq), Side::Right)?;
    println!("Y^2 * ({}) = x * ({})", wit.s1, wit.a1);
    Ok(())
}
