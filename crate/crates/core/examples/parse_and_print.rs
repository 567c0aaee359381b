//! Reading and printing expressions.

use weyl_subalgebra::parse::{parse_element, parse_poly, parse_scalar, parse_weyl};
use weyl_subalgebra::{AhContext, FieldSpec};

fn main() {
    let qq = FieldSpec::rationals();
    let gf5 = FieldSpec::prime(5).unwrap();
    let ctx = AhContext::new(parse_poly("x^2 - x", qq).unwrap()).unwrap();

    for src in ["Y*x", "-x^2*(Y + 1/2)", "(x*Y)^2", "Y^0"] {
        println!("{src:>16}  ->  {}", parse_element(src, &ctx).unwrap());
    }
    println!("{:>16}  ->  {}", "y*x", parse_weyl("y*x", qq).unwrap());
    println!("{:>16}  ->  {}", "1/2 in GF(5)", parse_scalar("1/2", gf5).unwrap());

    for bad in ["x +", "x^-1", "Y + y", "2x"] {
        println!("{bad:>16}  !!  {}", parse_element(bad, &ctx).unwrap_err());
    }
}
