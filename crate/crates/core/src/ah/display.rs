use std::fmt;

use super::OreElement;
use crate::poly::{monomial_text, write_signed, Poly};

/// Writes `sum_i f_i G^i` for generator letter `G`, highest power first.
/// Single-term coefficients are juxtaposed (`2*x*Y`), longer ones
/// parenthesized (`(x + 1)*Y^2`), and `f_0` is written out termwise.
pub(crate) fn write_normal_form(out: &mut impl fmt::Write, coeffs: &[Poly], gen: &str) -> fmt::Result {
    let mut first = true;
    for (i, f) in coeffs.iter().enumerate().rev() {
        if f.is_zero() {
            continue;
        }
        let power = match i {
            0 => String::new(),
            1 => gen.to_string(),
            _ => format!("{gen}^{i}"),
        };
        let terms: Vec<String> = if i == 0 {
            f.coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| monomial_text(c, k))
                .collect()
        } else if f.term_count() == 1 {
            let k = f.deg();
            let c = f.leading();
            let text = if k == 0 {
                if c.is_one() {
                    power
                } else if (-&c).is_one() && c.is_negative() {
                    format!("-{power}")
                } else {
                    format!("{c}*{power}")
                }
            } else {
                format!("{}*{power}", monomial_text(&c, k))
            };
            vec![text]
        } else {
            vec![format!("({f})*{power}")]
        };
        for t in terms {
            write_signed(out, &t, first)?;
            first = false;
        }
    }
    if first {
        write!(out, "0")?;
    }
    Ok(())
}

impl fmt::Display for OreElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_normal_form(f, self.coeffs(), "Y")
    }
}
