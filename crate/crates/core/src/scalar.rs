//! Exact complex scalars with rational real and imaginary parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A Gaussian rational `a + bi` with `a, b ∈ ℚ`.
///
/// Both parts are kept in lowest terms with positive denominators, so two
/// values are equal exactly when their stored representations are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    /// Builds `re_num/re_den + (im_num/im_den)i`.
    ///
    /// Panics if either denominator is zero.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        Self::from(0)
    }

    pub fn one() -> Self {
        Self::from(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn re_num(&self) -> &BigInt {
        self.re.numer()
    }

    pub fn re_den(&self) -> &BigInt {
        self.re.denom()
    }

    pub fn im_num(&self) -> &BigInt {
        self.im.numer()
    }

    pub fn im_den(&self) -> &BigInt {
        self.im.denom()
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

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
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
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::real(BigRational::from_integer(v.into()))
    }
}

impl From<BigRational> for GaussianRational {
    fn from(v: BigRational) -> Self {
        Self::real(v)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: `3/2`, `-1/4i`, `3/2-1/4i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if self.re.is_zero() {
            write_rational(f, &self.im)?;
            return f.write_str("i");
        }
        write_rational(f, &self.re)?;
        f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
        write_rational(f, &self.im.abs())?;
        f.write_str("i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("expected {expected} at position {position}")]
    Syntax {
        position: usize,
        expected: &'static str,
    },
    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ScalarParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ScalarParseError::Syntax {
                position: start,
                expected: "digit",
            });
        }
        // ASCII digits only, so this cannot fail.
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    // rational := '-'? digits ('/' digits)?
    fn rational(&mut self) -> Result<BigRational, ScalarParseError> {
        let negative = self.eat(b'-');
        let num = self.digits()?;
        let den = if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ScalarParseError::ZeroDenominator { position: at });
            }
            den
        } else {
            BigInt::one()
        };
        let r = BigRational::new(num, den);
        Ok(if negative { -r } else { r })
    }

    fn end(&self) -> Result<(), ScalarParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(ScalarParseError::Syntax {
                position: self.pos,
                expected: "end of input",
            }),
        }
    }
}

/// Parses the textual grammar
///
/// ```text
/// rational := '-'? digits ('/' digits)?
/// gaussian := rational | rational sign rational 'i' | rational 'i'
/// sign     := '+' | '-'
/// ```
///
/// into a canonical value (`"2/4"` becomes `1/2`).
pub fn parse_scalar(text: &str) -> Result<GaussianRational, ScalarParseError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let first = cur.rational()?;
    if cur.eat(b'i') {
        cur.end()?;
        return Ok(GaussianRational::new(BigRational::zero(), first));
    }
    let sign = match cur.peek() {
        None => return Ok(GaussianRational::real(first)),
        Some(b'+') => BigRational::one(),
        Some(b'-') => -BigRational::one(),
        Some(_) => {
            return Err(ScalarParseError::Syntax {
                position: cur.pos,
                expected: "'+', '-', 'i' or end of input",
            })
        }
    };
    cur.pos += 1;
    let second = cur.rational()?;
    if !cur.eat(b'i') {
        return Err(ScalarParseError::Syntax {
            position: cur.pos,
            expected: "'i'",
        });
    }
    cur.end()?;
    Ok(GaussianRational::new(first, sign * second))
}

impl FromStr for GaussianRational {
    type Err = ScalarParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b, c, d)
    }

    #[test]
    fn parse_grammar_instances() {
        assert_eq!(parse_scalar("3/2-1/4i").unwrap(), g(3, 2, -1, 4));
        assert_eq!(parse_scalar("0").unwrap(), GaussianRational::zero());
        assert_eq!(parse_scalar("2/4").unwrap(), g(1, 2, 0, 1));
        assert_eq!(parse_scalar("-7i").unwrap(), g(0, 1, -7, 1));
        assert_eq!(parse_scalar("1+1i").unwrap(), g(1, 1, 1, 1));
        assert_eq!(parse_scalar("-0").unwrap(), GaussianRational::zero());
    }

    #[test]
    fn parse_errors_report_position() {
        assert_eq!(
            parse_scalar("1/0"),
            Err(ScalarParseError::ZeroDenominator { position: 2 })
        );
        assert!(matches!(
            parse_scalar(""),
            Err(ScalarParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_scalar("1+2"),
            Err(ScalarParseError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_scalar("1.5"),
            Err(ScalarParseError::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse_scalar("2i3"),
            Err(ScalarParseError::Syntax { position: 2, .. })
        ));
        assert!(parse_scalar(" 1").is_err());
        assert!(parse_scalar("i").is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(g(3, 2, -1, 4).to_string(), "3/2-1/4i");
        assert_eq!(g(0, 1, -1, 2).to_string(), "-1/2i");
        assert_eq!(g(-4, 2, 0, 1).to_string(), "-2");
        assert_eq!(g(1, 3, 2, 1).to_string(), "1/3+2i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    #[test]
    fn field_operations() {
        let a = g(1, 1, 1, 1);
        let b = g(2, 1, -3, 1);
        // (1+i)(2-3i) = 2 - 3i + 2i + 3 = 5 - i
        assert_eq!(&a * &b, g(5, 1, -1, 1));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), -GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn canonical_representation() {
        let a = g(2, -4, 6, 3);
        assert_eq!(a.re_num(), &BigInt::from(-1));
        assert_eq!(a.re_den(), &BigInt::from(2));
        assert_eq!(a.im_num(), &BigInt::from(2));
        assert_eq!(a.im_den(), &BigInt::from(1));
        assert_eq!(GaussianRational::zero().re_den(), &BigInt::from(1));
    }
}
