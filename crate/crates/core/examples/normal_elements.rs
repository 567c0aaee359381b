//! Normal elements, simplicity, and height one prime generators.

use weyl_subalgebra::normal;
use weyl_subalgebra::parse::parse_element;
use weyl_subalgebra::{AhContext, FieldSpec, Poly};

fn main() -> weyl_subalgebra::Result<()> {
    let qq = FieldSpec::rationals();
    let ctx = AhContext::new(Poly::from_ints(qq, &[0, -1, 1]))?;
    for src in ["x", "x^2 - x", "x + 1", "Y"] {
        let v = parse_element(src, &ctx)?;
        let cert = normal::is_normal(&v)?;
        println!("{src}: normal = {}", cert.verdict);
        if let Some(c) = cert.classification {
            println!("  factors {:?}, central part {}", c.factors.iter().map(|(u, b)| format!("({u})^{b}")).collect::<Vec<_>>(), c.z);
        }
    }
    println!("A_1 simple over QQ: {}", normal::is_simple(&AhContext::new(Poly::one(qq))?));
    println!("A_h simple over QQ: {}", normal::is_simple(&ctx));

    let gf3 = FieldSpec::prime(3)?;
    let ctx = AhContext::new(Poly::x(gf3))?;
    for src in ["Y^3 - Y", "x", "x^3", "Y"] {
        let report = normal::height_one_prime_test(&parse_element(src, &ctx)?)?;
        println!("{src}: {} ({})", report.kind, report.detail);
    }
    Ok(())
}
