use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Gaussian rational `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn real(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Scalar::gaussian(0, 1)
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
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar { re: &self.re / &n, im: -(&self.im / &n) })
    }

    /// Sign of the real part when the scalar is real.
    pub fn real_sign(&self) -> Option<std::cmp::Ordering> {
        if !self.is_real() {
            return None;
        }
        Some(self.re.cmp(&BigRational::zero()))
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::real(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'b Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'b Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Scalar { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(Sub, sub, |a, b| Scalar { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return Scalar::real(&a.re * &b.re);
    }
    Scalar {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
});
forward_binop!(Div, div, |a, b| {
    let inv = b.inv().expect("division by zero scalar");
    a * &inv
});

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() { "i".to_string() } else { format!("{}i", fmt_rational(&im_abs)) };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{im_part}")
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            write!(f, "{}{sign}{im_part}", fmt_rational(&self.re))
        }
    }
}

/// Parses `a`, `a/b` (optionally signed) into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let err = || Error::Parse(format!("not a rational number: {s:?}"));
    if t.is_empty() {
        return Err(err());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts a rational `a/b`, or a Gaussian form `re+im i` / `re-im i` / `im i`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !t.ends_with('i') {
            return Ok(Scalar::real(parse_rational(&t)?));
        }
        let body = &t[..t.len() - 1];
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(k, c)| (c == '+' || c == '-') && !body[..k].ends_with('/'))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k])?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(Scalar::new(re, im))
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    re: String,
    im: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr { re: fmt_rational(&self.re), im: fmt_rational(&self.im) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        let re = parse_rational(&r.re).map_err(serde::de::Error::custom)?;
        let im = parse_rational(&r.im).map_err(serde::de::Error::custom)?;
        Ok(Scalar::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = Scalar::gaussian(1, 2);
        let b = Scalar::gaussian(3, -1);
        assert_eq!(&a * &b, Scalar::gaussian(5, 5));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(a.conj(), Scalar::gaussian(1, -2));
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn json_shape() {
        let s = Scalar::ratio(-3, 2);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"re":"-3/2","im":"0"}"#);
        let back: Scalar = serde_json::from_str(r#"{"re":"-3/2","im":"0"}"#).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn parse_forms() {
        assert_eq!("-3/2".parse::<Scalar>().unwrap(), Scalar::ratio(-3, 2));
        assert_eq!("1/2+3i".parse::<Scalar>().unwrap(), Scalar::new(Scalar::ratio(1, 2).re, Scalar::from_int(3).re));
        assert_eq!("-i".parse::<Scalar>().unwrap(), Scalar::gaussian(0, -1));
        assert_eq!("2-1/3i".parse::<Scalar>().unwrap().im(), Scalar::ratio(-1, 3).re());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::ratio(1, 2).to_string(), "1/2");
        assert_eq!(Scalar::gaussian(0, -1).to_string(), "-i");
        assert_eq!(Scalar::gaussian(2, 3).to_string(), "2+3i");
        for s in ["1/2", "-i", "2+3i", "-7/3-2/5i"] {
            assert_eq!(s.parse::<Scalar>().unwrap().to_string(), s);
        }
    }
}
