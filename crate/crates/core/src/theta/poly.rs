use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussRational;

/// A polynomial in one variable (`ω` throughout), coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPolynomial {
    coeffs: Vec<GaussRational>,
}

impl UniPolynomial {
    pub fn new(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UniPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::new(vec![GaussRational::zero(), GaussRational::one()])
    }

    /// `a + b·x`.
    pub fn linear(a: GaussRational, b: GaussRational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = GaussRational::zero();
        Self::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(GaussRational::one()), |acc, _| acc.mul(self))
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let lead_inv = d.leading().and_then(GaussRational::inv).ok_or_else(|| Error::InvalidParams("division by the zero polynomial".into()))?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussRational::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let f = rem.last().expect("non-empty") * &lead_inv;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[shift + i] -= &(&f * c);
            }
            quot[shift] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; the zero polynomial when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("non-zero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(GaussRational::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }
}

impl fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*w"),
                _ => format!("({c})*w^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A reduced quotient of polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: UniPolynomial,
    den: UniPolynomial,
}

impl RationalFunction {
    pub fn new(num: UniPolynomial, den: UniPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParams("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::from_poly(UniPolynomial::zero()));
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g)?;
        let (d, _) = den.div_rem(&g)?;
        let lead = d.leading().expect("non-zero").inv().expect("non-zero");
        Ok(RationalFunction { num: n.scale(&lead), den: d.scale(&lead) })
    }

    pub fn from_poly(p: UniPolynomial) -> Self {
        RationalFunction { num: p, den: UniPolynomial::constant(GaussRational::one()) }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_poly(UniPolynomial::constant(c))
    }

    pub fn numerator(&self) -> &UniPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &UniPolynomial {
        &self.den
    }

    /// The polynomial this function equals, if its reduced denominator is 1.
    pub fn as_polynomial(&self) -> Option<&UniPolynomial> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
            .expect("non-zero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&RationalFunction { num: other.num.neg(), den: other.den.clone() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("non-zero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, x: &GaussRational) -> Result<GaussRational> {
        self.num.eval(x).checked_div(&self.den.eval(x)).ok_or_else(|| Error::InvalidParams(format!("pole at {x}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn p(c: &[&str]) -> UniPolynomial {
        UniPolynomial::new(c.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&["1", "1"]);
        let b = p(&["-1", "1"]);
        assert_eq!(a.mul(&b), p(&["-1", "0", "1"]));
        assert_eq!(a.add(&b), p(&["0", "2"]));
        assert_eq!(a.sub(&a), UniPolynomial::zero());
        assert_eq!(p(&["1", "0", "0"]).degree(), Some(0));
        assert_eq!(a.pow(3).eval(&q("2")), q("27"));
    }

    #[test]
    fn division_and_gcd() {
        let f = p(&["-1", "0", "1"]);
        let (quot, rem) = f.div_rem(&p(&["1", "1"])).unwrap();
        assert_eq!(quot, p(&["-1", "1"]));
        assert!(rem.is_zero());
        let (quot, rem) = p(&["3", "0", "2"]).div_rem(&p(&["0", "1"])).unwrap();
        assert_eq!((quot, rem), (p(&["0", "2"]), p(&["3"])));
        assert_eq!(f.gcd(&p(&["2", "2"])), p(&["1", "1"]));
        assert_eq!(p(&["5"]).div_rem(&p(&["0", "1"])).unwrap(), (UniPolynomial::zero(), p(&["5"])));
    }

    #[test]
    fn rational_functions_reduce() {
        let r = RationalFunction::new(p(&["-1", "0", "1"]), p(&["2", "2"])).unwrap();
        assert_eq!(r.as_polynomial(), Some(&p(&["-1/2", "1/2"])));
        let s = RationalFunction::new(p(&["1"]), p(&["0", "1"])).unwrap();
        assert!(s.as_polynomial().is_none());
        assert_eq!(s.mul(&RationalFunction::from_poly(p(&["0", "1"]))), RationalFunction::constant(q("1")));
        assert_eq!(s.add(&s).eval(&q("4")).unwrap(), q("1/2"));
        assert!(s.eval(&q("0")).is_err());
    }
}
