use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::FtftError;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator by `num-rational`.
pub type Rational = BigRational;

/// An element of ℚ(i), the exact scalar field underlying the whole crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianScalar {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianScalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianScalar { re, im }
    }

    pub fn zero() -> Self {
        GaussianScalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussianScalar::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianScalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianScalar::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// `n/d` as a real scalar. Panics if `d == 0`.
    pub fn rat(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        GaussianScalar::new(
            Rational::new(BigInt::from(n), BigInt::from(d)),
            Rational::zero(),
        )
    }

    /// `a + b i` with integer parts.
    pub fn gauss(a: i64, b: i64) -> Self {
        GaussianScalar::new(
            Rational::from_integer(BigInt::from(a)),
            Rational::from_integer(BigInt::from(b)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate; a field automorphism fixing the real subfield.
    pub fn conj(&self) -> Self {
        GaussianScalar::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²` (the norm over ℚ).
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero; use `is_zero` first.
    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero in Q(i)");
        GaussianScalar::new(&self.re / &n, -(&self.im / &n))
    }

    /// Integer power, handling negative exponents via `inv`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = GaussianScalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// `(-1)^k` as a scalar.
    pub fn sign_pow(k: u8) -> Self {
        if k % 2 == 0 {
            GaussianScalar::one()
        } else {
            -GaussianScalar::one()
        }
    }
}

impl Default for GaussianScalar {
    fn default() -> Self {
        GaussianScalar::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b GaussianScalar> for &'a GaussianScalar {
            type Output = GaussianScalar;
            fn $method(self, rhs: &'b GaussianScalar) -> GaussianScalar {
                GaussianScalar::new(&self.re $op &rhs.re, &self.im $op &rhs.im)
            }
        }
        impl $trait<GaussianScalar> for GaussianScalar {
            type Output = GaussianScalar;
            fn $method(self, rhs: GaussianScalar) -> GaussianScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);

impl<'a, 'b> Mul<&'b GaussianScalar> for &'a GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, rhs: &'b GaussianScalar) -> GaussianScalar {
        GaussianScalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul<GaussianScalar> for GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, rhs: GaussianScalar) -> GaussianScalar {
        (&self) * (&rhs)
    }
}

impl<'a, 'b> Div<&'b GaussianScalar> for &'a GaussianScalar {
    type Output = GaussianScalar;
    fn div(self, rhs: &'b GaussianScalar) -> GaussianScalar {
        self * &rhs.inv()
    }
}

impl Div<GaussianScalar> for GaussianScalar {
    type Output = GaussianScalar;
    fn div(self, rhs: GaussianScalar) -> GaussianScalar {
        (&self) / (&rhs)
    }
}

impl Neg for GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        GaussianScalar::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        GaussianScalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianScalar> for GaussianScalar {
    fn add_assign(&mut self, rhs: &GaussianScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianScalar> for GaussianScalar {
    fn sub_assign(&mut self, rhs: &GaussianScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianScalar> for GaussianScalar {
    fn mul_assign(&mut self, rhs: &GaussianScalar) {
        *self = (&*self) * rhs;
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Text form used in every file format: `"a/b"`, `"a/b+c/d i"`, `"c/d i"`, with
/// optional sign and denominators omitted when 1 (e.g. `"1"`, `"-i"`, `"1/2-3i"`).
impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            let mag = self.im.abs();
            let sign = if self.im.is_negative() {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            out.push_str(sign);
            if !mag.is_one() {
                out.push_str(&fmt_rational(&mag));
            }
            out.push('i');
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Rational, FtftError> {
    let s = s.trim();
    let bad = || FtftError::Structural(format!("malformed rational `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(FtftError::Structural(format!("zero denominator in `{s}`")));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}

impl FromStr for GaussianScalar {
    type Err = FtftError;

    fn from_str(s: &str) -> Result<Self, FtftError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(FtftError::Structural("empty scalar".into()));
        }
        // Split into at most two signed terms at a top-level '+'/'-' that is
        // not the leading sign and not part of a previous term's separator.
        let bytes = compact.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' {
                split = Some(idx);
                break;
            }
        }
        let (first, second) = match split {
            Some(idx) => (&compact[..idx], Some(&compact[idx..])),
            None => (&compact[..], None),
        };
        let mut out = GaussianScalar::zero();
        for term in std::iter::once(first).chain(second) {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            let mut part = if let Some(mag) = body.strip_suffix('i') {
                let mag = if mag.is_empty() {
                    Rational::one()
                } else {
                    parse_rational(mag)?
                };
                GaussianScalar::new(Rational::zero(), mag)
            } else {
                GaussianScalar::new(parse_rational(body)?, Rational::zero())
            };
            if sign {
                part = -part;
            }
            out += &part;
        }
        Ok(out)
    }
}

impl Serialize for GaussianScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_is_an_involution_and_automorphism() {
        let x = GaussianScalar::gauss(2, -1);
        let y = GaussianScalar::rat(1, 2) + GaussianScalar::i() * GaussianScalar::rat(-3, 1);
        assert_eq!(x.conj().conj(), x);
        assert_eq!((&x * &y).conj(), x.conj() * y.conj());
        assert_eq!((&x + &y).conj(), x.conj() + y.conj());
        assert_eq!(GaussianScalar::rat(3, 2).conj(), GaussianScalar::rat(3, 2));
    }

    #[test]
    fn field_inverse() {
        let x = GaussianScalar::gauss(3, 4);
        assert!((&x * &x.inv()).is_one());
    }

    #[test]
    fn text_form_round_trips() {
        for s in ["1", "-i", "1/2-3i", "0", "2/3+5/7i", "-1/2", "i", "-4+i"] {
            let v: GaussianScalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        // whitespace-tolerant parse
        let v: GaussianScalar = "1/2 - 3 i".parse().unwrap();
        assert_eq!(v.to_string(), "1/2-3i");
    }
}
