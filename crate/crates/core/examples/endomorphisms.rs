//! Non-surjective endomorphisms, and moving automorphisms between
//! A_{x^2} and the larger algebra A_x.

use weyl_subalgebra::aut::{self, Automorphism};
use weyl_subalgebra::center;
use weyl_subalgebra::parse::parse_element;
use weyl_subalgebra::{AhContext, FieldSpec, Poly};

fn main() -> weyl_subalgebra::Result<()> {
    let qq = FieldSpec::rationals();
    let ctx = AhContext::new(Poly::from_ints(qq, &[0, 0, 1]))?;
    let eta = aut::eta_endo(&ctx, 2)?;
    println!("eta_2: x -> {}, Y -> {}", eta.x_image(), eta.yhat_image());
    println!("  Y*x -> {}", eta.apply(&parse_element("Y*x", &ctx)?)?);
    println!("  probe: {:?}", eta.probe_surjectivity(3)?);

    let gf2 = FieldSpec::prime(2)?;
    let ctx2 = AhContext::new(Poly::x(gf2))?;
    let c = center::center(&ctx2).generators.expect("positive characteristic").hp_yp;
    let kappa = aut::kappa_endo(&ctx2, &c)?;
    println!("kappa: Y -> {}", kappa.yhat_image());
    println!("  probe: {:?}", kappa.probe_surjectivity(2)?);

    let ax = AhContext::new(Poly::x(qq))?;
    let omega = Automorphism::new(&ctx, qq.int(2), qq.zero(), Poly::x(qq))?;
    match aut::extend_automorphism(&omega, &ax)? {
        Some(psi) => println!("{omega} extends to {psi}"),
        None => println!("{omega} does not extend"),
    }
    let back = aut::restrict_automorphism(&Automorphism::tau(&ax, qq.int(2), qq.zero())?, &ctx)?;
    if let Some(r) = back {
        println!("restriction of x -> 2x to A_{{x^2}}: {r}");
    }
    Ok(())
}
