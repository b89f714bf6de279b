//! Gaussian rationals: exact scalars of the form `a + b*i` with rational
//! `a`, `b`. Purely real values carry an exact zero imaginary part, so the
//! one type covers every weight the engine accepts.
//!
//! Text format: pure reals render as `Rational`; `i` and `-i` are special
//! cased; otherwise `a/b+c/d*i` (or `a/b-c/d*i`).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::rational::{parse_rational, render_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

/// The four field operations, used by the dispatching `gauss_arith` entry
/// point (division is the only fallible one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2 = re^2 + im^2`, an exact rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Multiply by the conjugate; the result is canonical componentwise.
        let n = rhs.norm_sqr();
        let num = self * &rhs.conjugate();
        Ok(Self {
            re: num.re / &n,
            im: num.im / &n,
        })
    }

    pub fn checked_recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// `self^exp` by binary exponentiation, with the convention `0^0 = 1`.
    pub fn pow_u(&self, exp: u64) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

/// Dispatches one exact field operation. Division errors on a zero divisor.
pub fn gauss_arith(op: GaussOp, x: &GaussianRational, y: &GaussianRational) -> Result<GaussianRational> {
    match op {
        GaussOp::Add => Ok(x + y),
        GaussOp::Sub => Ok(x - y),
        GaussOp::Mul => Ok(x * y),
        GaussOp::Div => x.checked_div(y),
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
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

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
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

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self).mul(rhs);
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    /// Exact field division. Panics on a zero divisor; use `checked_div`
    /// when the divisor is not already known to be nonzero.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", render_rational(&self.re));
        }
        let imag = |v: &Rational| -> String {
            if v.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", render_rational(v))
            }
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                return write!(f, "-{}", imag(&-self.im.clone()));
            }
            return write!(f, "{}", imag(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{}-{}",
                render_rational(&self.re),
                imag(&-self.im.clone())
            )
        } else {
            write!(f, "{}+{}", render_rational(&self.re), imag(&self.im))
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if !s.contains('i') {
            return Ok(Self::from_rational(parse_rational(&s)?));
        }
        // Find a '+' or '-' separating the real part from the imaginary
        // part. Signs only occur at position 0 or as that separator.
        let bytes = s.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if b == b'+' || b == b'-' {
                split = Some(idx);
                break;
            }
        }
        let (re_s, im_s) = match split {
            Some(idx) => (&s[..idx], &s[idx..]),
            None => ("0", s.as_str()),
        };
        let im_body = im_s
            .strip_suffix('i')
            .ok_or_else(|| Error::Parse(format!("bad gaussian `{s}`")))?;
        let im_body = im_body.strip_suffix('*').unwrap_or(im_body);
        let im = match im_body {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other)?,
        };
        Ok(Self::new(parse_rational(re_s)?, im))
    }
}
