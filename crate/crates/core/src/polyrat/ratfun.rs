//! Reduced rational functions over the Gaussian rationals.
//!
//! Canonical form: numerator and denominator coprime, denominator monic,
//! zero stored as `0/1`. Equal rational functions therefore have identical
//! representations, which is what the symbolic-equivalence checks rely on.
//!
//! Text format: `(n0,n1,...)/(d0,d1,...)` with coefficients by ascending
//! degree in the exact scalar format.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyrat::poly::Poly;
use crate::scalar::gaussian::GaussianRational;
use crate::scalar::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Reduces `num/den` to canonical form. Errors on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        // Make the denominator monic, folding its leading coefficient into
        // the numerator.
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .checked_recip()
            .expect("nonzero leading coefficient");
        Ok(Self {
            num: num.scale(&lead_inv),
            den: den.monic(),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::constant(GaussianRational::from_rational(q))
    }

    /// The variable `w` as a rational function.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn checked_recip(&self) -> Result<RatFun> {
        RatFun::one().checked_div(self)
    }

    /// `D = w d/dw` via the quotient rule:
    /// `(w (num' den - num den')) / den^2`, reduced.
    pub fn apply_d(&self) -> RatFun {
        let dnum = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let wdnum = &Poly::var() * &dnum;
        RatFun::new(wdnum, &self.den * &self.den).expect("denominator stays nonzero")
    }

    /// Exact evaluation; errors with `PoleAtPoint` when the denominator
    /// vanishes at `w0`.
    pub fn eval_at(&self, w0: &GaussianRational) -> Result<GaussianRational> {
        let den = self.den.eval(w0);
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval(w0).checked_div(&den)
    }

    pub fn pow_u(&self, exp: u32) -> RatFun {
        RatFun {
            num: self.num.pow_u(exp),
            den: self.den.pow_u(exp),
        }
    }
}

/// Reduces `num/den` to the canonical rational function (spec entry point).
pub fn ratfun_reduce(num: Poly, den: Poly) -> Result<RatFun> {
    RatFun::new(num, den)
}

/// `D` applied to a rational function (spec entry point).
pub fn apply_d(f: &RatFun) -> RatFun {
    f.apply_d()
}

impl Zero for RatFun {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("denominator stays nonzero")
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        (&self).add(&rhs)
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("denominator stays nonzero")
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        (&self).sub(&rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator stays nonzero")
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        (&self).mul(&rhs)
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Div for RatFun {
    type Output = RatFun;
    /// Exact field division. Panics on a zero divisor; use `checked_div`
    /// when the divisor is not already known to be nonzero.
    fn div(self, rhs: RatFun) -> RatFun {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for RatFun {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_poly = |body: &str| -> Result<Poly> {
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad polynomial `{body}`")))?;
            if inner.trim().is_empty() {
                return Ok(Poly::zero());
            }
            let coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<GaussianRational>())
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::from_coeffs(coeffs))
        };
        match s.split_once(")/(") {
            Some((nums, dens)) => {
                let num = parse_poly(&format!("{nums})"))?;
                let den = parse_poly(&format!("({dens}"))?;
                RatFun::new(num, den)
            }
            None => Ok(RatFun::from_poly(parse_poly(s)?)),
        }
    }
}
