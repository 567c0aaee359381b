//! Centers in characteristic p, decomposition over the center, and
//! membership in commutator spaces.

use weyl_subalgebra::center::{self, CommutatorSpace};
use weyl_subalgebra::parse::parse_element;
use weyl_subalgebra::{AhContext, FieldSpec, Poly};

fn main() -> weyl_subalgebra::Result<()> {
    let gf3 = FieldSpec::prime(3)?;
    let ctx = AhContext::new(Poly::from_ints(gf3, &[1, 0, 1]))?;
    let z = center::center(&ctx);
    let gens = z.generators.as_ref().expect("positive characteristic");
    println!("center of A_h over {gf3}, h = {}:", ctx.h());
    println!("  {}", gens.xp);
    println!("  {} (correction {})", gens.hp_yp, gens.correction);
    println!("  central: {}", center::is_central(&gens.hp_yp));

    let a = parse_element("x^4*Y^4 + Y + x", &ctx)?;
    let d = center::central_decompose(&a)?;
    for (i, j, s, t, c) in d.entries() {
        println!("  {c} * x^{i} h^{j} y^{j} * (x^3)^{s} (h^3 y^3)^{t}");
    }
    assert_eq!(d.reassemble(&ctx)?, a);

    let qq = FieldSpec::rationals();
    let ctx = AhContext::new(Poly::from_ints(qq, &[0, 0, 1]))?;
    for (src, space) in [("x^2*Y", CommutatorSpace::BracketYhat), ("x^2", CommutatorSpace::BracketX), ("x", CommutatorSpace::LieIdeal)] {
        let a = parse_element(src, &ctx)?;
        let pre = center::commutator_preimage(&a, space)?;
        println!("{src} in {space:?}: {}", pre.map_or("no".into(), |b| format!("yes, via {b}")));
    }
    Ok(())
}
