//! Exact scalars: arbitrary-precision rationals and prime-field residues.
//!
//! A [`FieldSpec`] names the field; a [`FieldElem`] carries enough of it
//! (the modulus, for residues) that mixing fields is always detected.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field: either the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    // 0 encodes the rationals.
    characteristic: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    /// The prime field of order `p`. Fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec { characteristic: p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn kind(&self) -> FieldKind {
        if self.characteristic == 0 {
            FieldKind::Rationals
        } else {
            FieldKind::PrimeField
        }
    }

    /// 0 for the rationals, p for a prime field.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic != 0
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then_some(self.characteristic)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::from_i64(0, *self)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::from_i64(1, *self)
    }

    /// Image of an integer under the canonical map from the integers.
    pub fn int(&self, n: i64) -> FieldElem {
        FieldElem::from_i64(n, *self)
    }

    /// Every element of a prime field, in increasing residue order.
    pub fn enumerate(&self) -> Result<impl Iterator<Item = FieldElem>> {
        if !self.is_finite() {
            return Err(Error::InfiniteField);
        }
        let p = self.characteristic;
        Ok((0..p).map(move |value| FieldElem(Repr::Residue { value, modulus: p })))
    }

    /// The nonzero elements of a prime field.
    pub fn units(&self) -> Result<impl Iterator<Item = FieldElem>> {
        Ok(self.enumerate()?.skip(1))
    }
}

/// `QQ` or `GF:p`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "QQ" {
            return Ok(FieldSpec::rationals());
        }
        let p = s
            .strip_prefix("GF:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown field `{s}`; expected QQ or GF:p")))?;
        FieldSpec::prime(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::PrimeField => write!(f, "GF:{}", self.characteristic),
        }
    }
}

/// Trial division; adequate for the moduli this library is meant for.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An element of a [`FieldSpec`] in canonical form.
///
/// Rationals are kept in lowest terms with a positive denominator and
/// residues are reduced into `[0, p)`, so structural equality is field
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem(Repr);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElem {
    pub fn from_i64(n: i64, spec: FieldSpec) -> Self {
        match spec.kind() {
            FieldKind::Rationals => FieldElem(Repr::Rational(BigRational::from_integer(n.into()))),
            FieldKind::PrimeField => {
                let p = spec.characteristic as i128;
                let value = (n as i128).rem_euclid(p) as u64;
                FieldElem(Repr::Residue { value, modulus: spec.characteristic })
            }
        }
    }

    pub fn from_bigint(n: &BigInt, spec: FieldSpec) -> Self {
        match spec.kind() {
            FieldKind::Rationals => FieldElem(Repr::Rational(BigRational::from_integer(n.clone()))),
            FieldKind::PrimeField => {
                let p = BigInt::from(spec.characteristic);
                let value = n.mod_floor(&p).to_u64().expect("residue fits in u64");
                FieldElem(Repr::Residue { value, modulus: spec.characteristic })
            }
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        FieldElem(Repr::Rational(q))
    }

    /// `num / den` in `spec`; the denominator must be nonzero in the field.
    pub fn from_ratio(num: &BigInt, den: &BigInt, spec: FieldSpec) -> Result<Self> {
        let n = FieldElem::from_bigint(num, spec);
        let d = FieldElem::from_bigint(den, spec);
        n.checked_div(&d)
    }

    pub fn spec(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::rationals(),
            Repr::Residue { modulus, .. } => FieldSpec { characteristic: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(*value),
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(&self.0, Repr::Rational(q) if q.is_negative())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => FieldElem(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => {
                let inv = mod_pow(*value, modulus - 2, *modulus);
                FieldElem(Repr::Residue { value: inv, modulus: *modulus })
            }
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.spec().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Signed power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Multiplicative order of a nonzero element of a prime field.
    pub fn multiplicative_order(&self) -> Option<u64> {
        let Repr::Residue { value, modulus } = self.0 else {
            // Only 1 and -1 have finite order in the rationals.
            if self.is_one() {
                return Some(1);
            }
            if (-self).is_one() {
                return Some(2);
            }
            return None;
        };
        if value == 0 {
            return None;
        }
        let mut acc = value;
        let mut k = 1;
        while acc != 1 {
            acc = ((acc as u128 * value as u128) % modulus as u128) as u64;
            k += 1;
        }
        Some(k)
    }

    /// Checked binary arithmetic.
    pub fn arith(&self, rhs: &Self, op: ArithOp) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.spec() == rhs.spec() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

fn mod_pow(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut b = base as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn mismatch() -> ! {
    panic!("arithmetic between elements of different fields")
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElem(Repr::Rational(a + b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                let s = (*a as u128 + *b as u128) % *p as u128;
                FieldElem(Repr::Residue { value: s as u64, modulus: *p })
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElem(Repr::Rational(a * b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                let s = (*a as u128 * *b as u128) % *p as u128;
                FieldElem(Repr::Residue { value: s as u64, modulus: *p })
            }
            _ => mismatch(),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match &self.0 {
            Repr::Rational(a) => FieldElem(Repr::Rational(-a)),
            Repr::Residue { value, modulus } => {
                let v = if *value == 0 { 0 } else { modulus - value };
                FieldElem(Repr::Residue { value: v, modulus: *modulus })
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

/// Canonical ordering used for deterministic tie-breaking: rationals by
/// value, residues by representative in `[0, p)`.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
            (Repr::Rational(_), Repr::Residue { .. }) => Ordering::Less,
            (Repr::Residue { .. }, Repr::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElem {
        FieldElem::from_ratio(&n.into(), &d.into(), FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn field_names() {
        for name in ["QQ", "GF:2", "GF:7"] {
            assert_eq!(name.parse::<FieldSpec>().unwrap().to_string(), name);
        }
        assert_eq!("GF:4".parse::<FieldSpec>(), Err(Error::NotPrime(4)));
        assert!(matches!("R".parse::<FieldSpec>(), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(5, 6).to_string(), "5/6");
        assert_eq!(q(-4, -8).to_string(), "1/2");
    }

    #[test]
    fn prime_field_products_and_quotients() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.int(3) * f5.int(4), f5.int(2));
        let f7 = FieldSpec::prime(7).unwrap();
        // brute-force inverse table for GF(7)
        let table: Vec<(u64, u64)> = (1..7u64)
            .map(|a| (a, (1..7u64).find(|b| a * b % 7 == 1).unwrap()))
            .collect();
        for (a, inv) in table {
            assert_eq!(f7.int(a as i64).inv().unwrap(), f7.int(inv as i64));
        }
        assert_eq!(f7.int(3).checked_div(&f7.int(5)).unwrap(), f7.int(2));
    }

    #[test]
    fn errors() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.int(1).checked_div(&f5.zero()), Err(Error::DivisionByZero));
        assert_eq!(f5.int(1).arith(&q(1, 2), ArithOp::Add), Err(Error::FieldMismatch));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime(9)));
        assert!(FieldSpec::rationals().enumerate().is_err());
    }

    #[test]
    fn int_embedding() {
        assert_eq!(FieldSpec::rationals().int(5), q(5, 1));
        assert!(FieldSpec::prime(5).unwrap().int(5).is_zero());
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.int(10), f3.int(1));
        assert_eq!(f3.int(-1), f3.int(2));
    }

    #[test]
    fn enumeration() {
        let f3 = FieldSpec::prime(3).unwrap();
        let all: Vec<_> = f3.enumerate().unwrap().map(|e| e.residue().unwrap()).collect();
        assert_eq!(all, vec![0, 1, 2]);
        assert_eq!(FieldSpec::prime(2).unwrap().enumerate().unwrap().count(), 2);
    }

    #[test]
    fn orders() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.int(3).multiplicative_order(), Some(6));
        assert_eq!(f7.int(2).multiplicative_order(), Some(3));
        assert_eq!(q(-1, 1).multiplicative_order(), Some(2));
        assert_eq!(q(2, 1).multiplicative_order(), None);
    }

    fn spec_strategy() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::rationals()),
            Just(FieldSpec::prime(2).unwrap()),
            Just(FieldSpec::prime(5).unwrap()),
            Just(FieldSpec::prime(7).unwrap()),
        ]
    }

    fn elem(spec: FieldSpec) -> impl Strategy<Value = FieldElem> {
        (-20i64..20, 1i64..6).prop_map(move |(n, d)| {
            let d = if spec.is_finite() { 1 } else { d };
            FieldElem::from_ratio(&n.into(), &d.into(), spec).unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in spec_strategy().prop_flat_map(|s| (elem(s), elem(s), elem(s)))) {
            prop_assert_eq!((&a + &b) + c.clone(), &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn int_embed_is_ring_hom(m in -1000i64..1000, n in -1000i64..1000, s in spec_strategy()) {
            prop_assert_eq!(s.int(m + n), s.int(m) + s.int(n));
            prop_assert_eq!(s.int(m * n), s.int(m) * s.int(n));
        }
    }
}
