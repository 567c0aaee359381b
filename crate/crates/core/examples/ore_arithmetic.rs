//! Normal-form arithmetic in A_h, where Yx - xY = h(x).

use weyl_subalgebra::parse::parse_element;
use weyl_subalgebra::{AhContext, FieldSpec, OreElement, Poly};

fn main() -> weyl_subalgebra::Result<()> {
    let qq = FieldSpec::rationals();
    let ctx = AhContext::new(Poly::from_ints(qq, &[0, 0, 1]))?;
    let x = OreElement::x(&ctx);
    let y = OreElement::yhat(&ctx);

    println!("h = {}", ctx.h());
    println!("Y*x = {}", &y * &x);
    println!("[Y, x] = {}", y.commutator(&x)?);
    println!("Y^3 * x^2 = {}", &y.pow(3) * &x.pow(2));

    let a = parse_element("(Y + x)^2 - 3*x*Y", &ctx)?;
    println!("a = {a}");
    println!("anti(a) = {}", a.antiautomorphism());
    println!("delta^3(x) = {}", ctx.delta_power(&Poly::x(qq), 3));

    let gf3 = FieldSpec::prime(3)?;
    let ctx3 = AhContext::new(Poly::from_ints(gf3, &[1, 0, 1]))?;
    let y3 = OreElement::yhat(&ctx3);
    println!("over {gf3} with h = {}: Y^3 * x = {}", ctx3.h(), &y3.pow(3) * &OreElement::x(&ctx3));
    Ok(())
}
