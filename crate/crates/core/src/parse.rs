//! Expression syntax for scalars, polynomials and algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' nat)?
//! atom   := scalar | 'x' | 'Y' | 'y' | '(' expr ')'
//! scalar := digits ('/' digits)?
//! ```
//!
//! `Y` is the generator of `A_h` and `y` the generator of the Weyl algebra;
//! one expression may use at most one of them. Products are evaluated left
//! to right in the noncommutative algebra, so `Y*x` is reordered.

use num_bigint::BigInt;

use crate::ah::{AhContext, OreElement};
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::poly::Poly;
use crate::weyl::WeylElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar { num: BigInt, den: BigInt, pos: usize },
    X,
    Gen(Generator),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `Y`, the generator of `A_h`.
    Yhat,
    /// `y`, the generator of the Weyl algebra.
    Weyl,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    seen: Option<Generator>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        if self.peek() == Some(b'-') {
            return Err(Error::NegativeExponent { pos: start });
        }
        let digits = self.digits();
        if digits.is_empty() {
            return self.error("expected a nonnegative integer exponent");
        }
        let Ok(e) = digits.parse::<u64>() else {
            return Err(Error::Syntax { pos: start, msg: "exponent too large".into() });
        };
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn generator(&mut self, g: Generator) -> Result<Expr> {
        match self.seen {
            Some(other) if other != g => Err(Error::MixedGenerators),
            _ => {
                self.seen = Some(g);
                self.pos += 1;
                Ok(Expr::Gen(g))
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Expr::X)
            }
            Some(b'Y') => self.generator(Generator::Yhat),
            Some(b'y') => self.generator(Generator::Weyl),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let pos = self.pos;
                let num: BigInt = self.digits().parse().expect("digits");
                let den = if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let d = self.digits();
                    if d.is_empty() {
                        return self.error("expected a denominator");
                    }
                    d.parse().expect("digits")
                } else {
                    BigInt::from(1)
                };
                Ok(Expr::Scalar { num, den, pos })
            }
            Some(_) => self.error("unexpected character"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `src` into an expression tree and reports which generator it uses.
pub fn parse_expr(src: &str) -> Result<(Expr, Option<Generator>)> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, seen: None };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.error("unexpected trailing input");
    }
    Ok((e, p.seen))
}

fn eval(e: &Expr, ctx: &AhContext) -> Result<OreElement> {
    Ok(match e {
        Expr::Scalar { num, den, pos } => {
            let c = FieldElem::from_ratio(num, den, ctx.spec()).map_err(|_| Error::Syntax {
                pos: *pos,
                msg: format!("{num}/{den} is undefined in {}", ctx.spec()),
            })?;
            OreElement::scalar(ctx, c)
        }
        Expr::X => OreElement::x(ctx),
        Expr::Gen(_) => OreElement::yhat(ctx),
        Expr::Neg(a) => -&eval(a, ctx)?,
        Expr::Add(a, b) => &eval(a, ctx)? + &eval(b, ctx)?,
        Expr::Sub(a, b) => &eval(a, ctx)? - &eval(b, ctx)?,
        Expr::Mul(a, b) => &eval(a, ctx)? * &eval(b, ctx)?,
        Expr::Pow(a, k) => eval(a, ctx)?.pow(*k),
    })
}

fn wrong_generator(found: Generator) -> Error {
    let msg = match found {
        Generator::Yhat => "`Y` is not allowed here",
        Generator::Weyl => "`y` is not allowed here; write A_h elements with `Y`",
    };
    Error::Syntax { pos: 0, msg: msg.into() }
}

/// An element of `A_h` written with `x` and `Y`.
pub fn parse_element(src: &str, ctx: &AhContext) -> Result<OreElement> {
    let (e, gen) = parse_expr(src)?;
    match gen {
        Some(Generator::Weyl) => Err(wrong_generator(Generator::Weyl)),
        _ => eval(&e, ctx),
    }
}

/// An element of the Weyl algebra written with `x` and `y`.
pub fn parse_weyl(src: &str, spec: FieldSpec) -> Result<WeylElement> {
    let (e, gen) = parse_expr(src)?;
    if gen == Some(Generator::Yhat) {
        return Err(Error::Syntax { pos: 0, msg: "`Y` is not allowed here; write Weyl elements with `y`".into() });
    }
    WeylElement::from_ore(eval(&e, &AhContext::weyl(spec))?)
}

/// A polynomial in `x`.
pub fn parse_poly(src: &str, spec: FieldSpec) -> Result<Poly> {
    let (e, gen) = parse_expr(src)?;
    if let Some(g) = gen {
        return Err(wrong_generator(g));
    }
    Ok(eval(&e, &AhContext::weyl(spec))?.coeff(0))
}

/// A field element, written as an expression without variables.
pub fn parse_scalar(src: &str, spec: FieldSpec) -> Result<FieldElem> {
    let p = parse_poly(src, spec)?;
    if p.deg() > 0 {
        return Err(Error::Syntax { pos: 0, msg: "expected a constant".into() });
    }
    Ok(p.coeff(0))
}
