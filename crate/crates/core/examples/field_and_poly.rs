//! Polynomial arithmetic, factorization and roots over QQ and GF(p).

use weyl_subalgebra::{FieldSpec, Poly};

fn main() -> weyl_subalgebra::Result<()> {
    let qq = FieldSpec::rationals();
    let f = Poly::from_ints(qq, &[-1, 0, 0, 0, 0, 0, 1]);
    println!("over {qq}: {f} = {}", f.factor()?);
    println!("rational roots: {:?}", f.rational_roots()?.iter().map(ToString::to_string).collect::<Vec<_>>());

    let g = Poly::from_ints(qq, &[0, -1, 0, 1]);
    println!("gcd({f}, {g}) = {}", f.gcd(&g)?);
    println!("d/dx {g} = {}", g.derivative());

    for p in [2, 3, 5, 7] {
        let spec = FieldSpec::prime(p)?;
        let f = Poly::from_ints(spec, &[1, 0, 0, 0, 1]);
        let roots: Vec<String> = f.roots()?.iter().map(ToString::to_string).collect();
        println!("over {spec}: {f} = {}  roots {roots:?}", f.factor_with_seed(1)?);
    }
    Ok(())
}
