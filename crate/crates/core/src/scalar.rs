//! Exact Gaussian rationals `a + b i` with `a, b` arbitrary-precision rationals.
//!
//! Text syntax: rationals are written `p` or `p/q`; a Gaussian rational is
//! `a/b+c/d*i`, where either part may be omitted (`3/4`, `-2*i`, `1-i`).

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element of `Q(i)` kept in canonical form (reduced fractions, positive denominators).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(v: i64) -> Self {
        GaussRational { re: BigRational::from_integer(BigInt::from(v)), im: BigRational::zero() }
    }

    /// `num / den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRational { re, im: BigRational::zero() }
    }

    /// `re + im*i` with integer parts.
    pub fn gaussian(re: i64, im: i64) -> Self {
        GaussRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn i() -> Self {
        Self::gaussian(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|^2`, a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(GaussRational { re: &self.re / &d, im: -(&self.im / &d) })
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussRational::one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        use num::ToPrimitive;
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// Floating-point approximation `(re, im)`, used only for numeric root seeding.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num::ToPrimitive;
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        text.parse()
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl Default for GaussRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussRational {
    fn from(v: i64) -> Self {
        GaussRational::from_int(v)
    }
}

impl From<usize> for GaussRational {
    fn from(v: usize) -> Self {
        GaussRational::from_rational(BigRational::from_integer(BigInt::from(v)))
    }
}

fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("invalid rational `{text}`"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    if num.is_empty() || den.is_empty() || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GaussRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(GaussRational::from_rational(parse_rational(&compact)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx)
            .next_back();
        let (re_text, im_text) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() { BigRational::zero() } else { parse_rational(re_text)? };
        let im = match im_text {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(GaussRational { re, im })
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im_abs = self.im.abs();
        let im_text = if im_abs.is_one() { "i".to_string() } else { format!("{}*i", fmt_rational(&im_abs)) };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_text}")
            } else {
                f.write_str(&im_text)
            }
        } else {
            write!(f, "{}{}{}", fmt_rational(&self.re), sign, im_text)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GaussRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

impl Add<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    /// Panics on division by zero, like the underlying rationals.
    fn div(self, rhs: &GaussRational) -> GaussRational {
        if rhs.im.is_zero() {
            assert!(!rhs.re.is_zero(), "division by zero");
            return GaussRational { re: &self.re / &rhs.re, im: &self.im / &rhs.re };
        }
        self * &rhs.inv().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational { (&self).$method(&rhs) }
        }
        impl $tr<&GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: &GaussRational) -> GaussRational { (&self).$method(rhs) }
        }
        impl $tr<GaussRational> for &GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational { self.$method(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussRational {
    fn add_assign(&mut self, rhs: GaussRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl SubAssign for GaussRational {
    fn sub_assign(&mut self, rhs: GaussRational) {
        *self -= &rhs;
    }
}

impl MulAssign<&GaussRational> for GaussRational {
    fn mul_assign(&mut self, rhs: &GaussRational) {
        *self = &*self * rhs;
    }
}

impl MulAssign for GaussRational {
    fn mul_assign(&mut self, rhs: GaussRational) {
        *self = &*self * &rhs;
    }
}

impl Sum for GaussRational {
    fn sum<I: Iterator<Item = GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a GaussRational> for GaussRational {
    fn sum<I: Iterator<Item = &'a GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::zero(), |acc, x| acc + x)
    }
}

impl Product for GaussRational {
    fn product<I: Iterator<Item = GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a GaussRational> for GaussRational {
    fn product<I: Iterator<Item = &'a GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::one(), |acc, x| acc * x)
    }
}

/// Parses a comma-separated list of scalars, e.g. `3,1/2,2-i`.
pub fn parse_scalar_list(text: &str) -> Result<Vec<GaussRational>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(str::parse).collect()
}

/// Shorthand for building scalars from string literals in tests and examples.
pub fn q(text: &str) -> GaussRational {
    text.parse().unwrap_or_else(|e| panic!("bad scalar literal `{text}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(q("3"), GaussRational::from_int(3));
        assert_eq!(q("-1/2"), GaussRational::ratio(-1, 2));
        assert_eq!(q("2/4"), GaussRational::ratio(1, 2));
        assert_eq!(q("i"), GaussRational::i());
        assert_eq!(q("-i"), -GaussRational::i());
        assert_eq!(q("2-i"), GaussRational::gaussian(2, -1));
        assert_eq!(q("1/2+3/4*i").im(), &BigRational::new(3.into(), 4.into()));
        assert_eq!(q("-3*i"), GaussRational::gaussian(0, -3));
        assert_eq!(q(" 1 + 2*i "), GaussRational::gaussian(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "x", "1/-2", "1//2", "2*i*i", "1+"] {
            assert!(bad.parse::<GaussRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("1-1*i").to_string(), "1-i");
        assert_eq!(q("-2/3*i").to_string(), "-2/3*i");
        assert_eq!(q("0+0*i").to_string(), "0");
    }

    #[test]
    fn field_arithmetic() {
        let a = q("1+2*i");
        let b = q("3-i");
        assert_eq!(&a * &b, q("5+5*i"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(a.conj(), q("1-2*i"));
        assert_eq!(a.conj().conj(), a);
        assert!(GaussRational::zero().inv().is_none());
    }

    fn arb_scalar() -> impl Strategy<Value = GaussRational> {
        (-50i64..50, 1i64..12, -50i64..50, 1i64..12).prop_map(|(a, b, c, d)| {
            GaussRational::new(
                BigRational::new(a.into(), b.into()),
                BigRational::new(c.into(), d.into()),
            )
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(x in arb_scalar()) {
            let printed = x.to_string();
            prop_assert_eq!(printed.parse::<GaussRational>().unwrap(), x);
        }

        #[test]
        fn distributive(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
