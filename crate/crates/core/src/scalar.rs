//! Exact scalars over a prime field F_p or over the rationals.
//!
//! Operators (`+`, `-`, `*`, unary `-`) panic when the two operands live in
//! different fields; the `try_*` methods report [`Error::FieldMismatch`]
//! instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field(FieldKind);

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Field(FieldKind::Prime(p)))
    }

    pub fn rationals() -> Field {
        Field(FieldKind::Rationals)
    }

    /// `0` selects the rationals, anything else must be a prime.
    pub fn from_cli(p: u64) -> Result<Field> {
        if p == 0 {
            Ok(Field::rationals())
        } else {
            Field::prime(p)
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.0
    }

    pub fn characteristic(&self) -> u64 {
        match self.0 {
            FieldKind::Prime(p) => p,
            FieldKind::Rationals => 0,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, FieldKind::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0 {
            FieldKind::Prime(p) => Scalar::Fp { v: n.rem_euclid(p as i64) as u64, p },
            FieldKind::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.0 {
            FieldKind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Fp { v: r.to_u64().unwrap(), p }
            }
            FieldKind::Rationals => Scalar::Q(BigRational::from_integer(n.clone())),
        }
    }

    /// Reduces a rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self.0 {
            FieldKind::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                Ok(&num * &den.inv()?)
            }
            FieldKind::Rationals => Ok(Scalar::Q(q.clone())),
        }
    }

    pub fn from_ratio(&self, n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        self.from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Parses `"7"`, `"-3"` or `"3/2"`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
        let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.from_rational(&BigRational::new(n, d))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Prime(p) => write!(f, "F{p}"),
            FieldKind::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { v: u64, p: u64 },
    Q(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { p, .. } => Field(FieldKind::Prime(*p)),
            Scalar::Q(_) => Field(FieldKind::Rationals),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Fp { v, p } => Scalar::Fp { v: pow_mod(*v, p - 2, *p), p: *p },
            Scalar::Q(q) => Scalar::Q(q.recip()),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar> {
        same_field(self, o)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar> {
        same_field(self, o)?;
        Ok(self - o)
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar> {
        same_field(self, o)?;
        Ok(self * o)
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar> {
        same_field(self, o)?;
        Ok(self * &o.inv()?)
    }

    /// `a += b * c` without intermediate allocation in the F_p case.
    pub fn add_mul_assign(&mut self, b: &Scalar, c: &Scalar) {
        match (&mut *self, b, c) {
            (Scalar::Fp { v, p }, Scalar::Fp { v: x, p: q }, Scalar::Fp { v: y, p: r })
                if *p == *q && *p == *r =>
            {
                *v = (*v + x * y % *p) % *p;
            }
            _ => {
                let t = &*self + &(b * c);
                *self = t;
            }
        }
    }

    /// The rational value when over Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    /// A small signed integer representative, when one exists.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Fp { v, p } => {
                let v = *v as i64;
                let p = *p as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
        }
    }

    pub fn is_negative_rep(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }
}

fn same_field(a: &Scalar, b: &Scalar) -> Result<()> {
    if a.field() == b.field() {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $fp:expr, $q:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: &'a Scalar) -> Scalar {
                match (self, o) {
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                        let f: fn(u64, u64, u64) -> u64 = $fp;
                        Scalar::Fp { v: f(*a, *b, *p), p: *p }
                    }
                    (Scalar::Q(a), Scalar::Q(b)) => {
                        let f: fn(&BigRational, &BigRational) -> BigRational = $q;
                        Scalar::Q(f(a, b))
                    }
                    _ => panic!("scalar arithmetic across different fields"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
    };
}

binop!(Add, add, |a, b, p| (a + b) % p, |a, b| a + b);
binop!(Sub, sub, |a, b, p| (a + p - b) % p, |a, b| a - b);
binop!(Mul, mul, |a, b, p| a * b % p, |a, b| a * b);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
            Scalar::Q(q) => Scalar::Q(-q),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
