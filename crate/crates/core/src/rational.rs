//! Exact scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. [`ExtendedRational`] adds a single `+inf` used for
//! infinite ellipsoid axes and unbounded capacity values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reduced. Fails on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, Error> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, Error> {
        Rational::one().checked_div(self)
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Multiplies by a nonnegative integer count.
    pub fn scale_by(&self, count: u64) -> Rational {
        Rational(&self.0 * BigRational::from_integer(BigInt::from(count)))
    }

    /// Lossy conversion, for display only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Always `p/q`, including `p/1` for integers.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Decimal rendering with `digits` significant digits, round-half-even.
    ///
    /// Never uses an exponent: `1/3000` at 5 digits is `0.00033333`, and
    /// `123456` at 3 digits is `123000`.
    pub fn to_significant(&self, digits: u32) -> String {
        assert!(digits >= 1, "at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let negative = self.is_negative();
        let x = self.abs();
        // exponent e with 10^e <= x < 10^(e+1)
        let mut e = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
        if x < pow10(e) {
            e -= 1;
        } else if x >= pow10(e + 1) {
            e += 1;
        }
        let shift = digits as i64 - 1 - e;
        let mut mantissa = round_half_even(&(&x * &pow10(shift)));
        let limit = BigInt::from(10u32).pow(digits);
        if mantissa >= limit {
            mantissa /= 10;
            e += 1;
        }
        let body = mantissa.to_string();
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if e >= 0 {
            let int_len = (e + 1) as usize;
            if int_len >= body.len() {
                out.push_str(&body);
                out.extend(std::iter::repeat_n('0', int_len - body.len()));
            } else {
                out.push_str(&body[..int_len]);
                out.push('.');
                out.push_str(&body[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-e - 1) as usize));
            out.push_str(&body);
        }
        out
    }

    /// Decimal rendering with exactly `places` digits after the point,
    /// round-half-even.
    pub fn to_fixed(&self, places: u32) -> String {
        let scaled = round_half_even(&(self * &pow10(places as i64)));
        let negative = scaled.sign() == Sign::Minus;
        let digits = scaled.abs().to_string();
        let places = places as usize;
        let padded = if digits.len() <= places {
            format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
        } else {
            digits
        };
        let split = padded.len() - places;
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&padded[..split]);
        if places > 0 {
            out.push('.');
            out.push_str(&padded[split..]);
        }
        out
    }
}

fn pow10(exp: i64) -> Rational {
    let p = BigInt::from(10u32).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        Rational::from_integer(p)
    } else {
        Rational(BigRational::new(BigInt::one(), p))
    }
}

fn round_half_even(x: &Rational) -> BigInt {
    let floor = x.floor();
    let frac = x - &Rational::from_integer(floor.clone());
    let half = Rational(BigRational::new(BigInt::one(), BigInt::from(2)));
    match frac.cmp(&half) {
        Ordering::Less => floor,
        Ordering::Greater => floor + 1,
        Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `p/q`, with an optional sign on `p`. Decimal literals
    /// are rejected.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseRational(s.to_string());
        let s_trim = s.trim();
        let (num, den) = match s_trim.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s_trim, None),
        };
        let is_int = |t: &str, signed: bool| {
            let t = if signed {
                t.strip_prefix(['-', '+']).unwrap_or(t)
            } else {
                t
            };
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        if !is_int(num, true) {
            return Err(bad());
        }
        let numer: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
        let denom: BigInt = match den {
            Some(d) if is_int(d, false) => d.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        Rational::new(numer, denom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

/// A rational or `+inf`. `+inf` compares above every rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinity,
}

impl ExtendedRational {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedRational::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            ExtendedRational::Infinity => None,
        }
    }

    /// `p/q` or `inf`.
    pub fn to_fraction_string(&self) -> String {
        match self {
            ExtendedRational::Finite(r) => r.to_fraction_string(),
            ExtendedRational::Infinity => "inf".to_string(),
        }
    }

    pub fn to_significant(&self, digits: u32) -> String {
        match self {
            ExtendedRational::Finite(r) => r.to_significant(digits),
            ExtendedRational::Infinity => "inf".to_string(),
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        ExtendedRational::Finite(r)
    }
}

impl Add<&ExtendedRational> for &ExtendedRational {
    type Output = ExtendedRational;
    fn add(self, rhs: &ExtendedRational) -> ExtendedRational {
        match (self, rhs) {
            (ExtendedRational::Finite(a), ExtendedRational::Finite(b)) => {
                ExtendedRational::Finite(a + b)
            }
            _ => ExtendedRational::Infinity,
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => r.fmt(f),
            ExtendedRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "+inf" | "infinity" => Ok(ExtendedRational::Infinity),
            other => other.parse().map(ExtendedRational::Finite),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(4, -6).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r.to_string(), "-2/3");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Rational::new(1, 0), Err(Error::DivisionByZero)));
        assert!(q("1").checked_div(&Rational::zero()).is_err());
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn parse_accepts_fractions_and_integers_only() {
        assert_eq!(q("3/2"), Rational::new(3, 2).unwrap());
        assert_eq!(q("-7"), Rational::from_integer(-7));
        assert_eq!(q(" 10/4 "), Rational::new(5, 2).unwrap());
        for bad in ["1.5", "1e3", "", "/2", "1/", "1/-2", "a", "inf", "1/0"] {
            assert!(
                bad.parse::<Rational>().is_err(),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn extended_ordering_puts_infinity_last() {
        let inf = ExtendedRational::Infinity;
        let big = ExtendedRational::Finite(q("1000000000000000000000"));
        assert!(big < inf);
        assert_eq!("inf".parse::<ExtendedRational>().unwrap(), inf);
        assert_eq!(inf.to_fraction_string(), "inf");
    }

    #[test]
    fn floor_of_negative() {
        assert_eq!(q("-1/2").floor(), BigInt::from(-1));
        assert_eq!(q("7/2").floor(), BigInt::from(3));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(q("2/3").to_significant(20), "0.66666666666666666667");
        assert_eq!(q("1").to_significant(20), "1.0000000000000000000");
        assert_eq!(q("1/3000").to_significant(5), "0.00033333");
        assert_eq!(q("123456").to_significant(3), "123000");
        assert_eq!(q("99999/1000").to_significant(3), "100");
        assert_eq!(q("-5/2").to_significant(1), "-2");
        assert_eq!(q("7/2").to_significant(1), "4");
        assert_eq!(Rational::zero().to_significant(20), "0");
        assert_eq!(q("10").to_significant(2), "10");
    }

    #[test]
    fn fixed_places() {
        assert_eq!(q("2/3").to_fixed(6), "0.666667");
        assert_eq!(q("1").to_fixed(6), "1.000000");
        assert_eq!(q("1/8").to_fixed(2), "0.12");
        assert_eq!(q("3/8").to_fixed(2), "0.38");
        assert_eq!(q("-2/3").to_fixed(3), "-0.667");
        assert_eq!(q("5/2").to_fixed(0), "2");
    }
}
