//! Field abstraction over closed-form coefficients.
//!
//! The sum engine builds the same expressions in two modes: numeric, where
//! every coefficient is a `GaussianRational` at a fixed weight, and
//! symbolic, where coefficients are reduced `RatFun`s in the weight
//! variable. `CoeffField` is the small surface both share, so the
//! construction code exists once.

use std::fmt::Display;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::polyrat::RatFun;
use crate::scalar::{GaussianRational, Rational};

pub trait CoeffField:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Display
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    /// Canonical text form used in JSON payloads.
    fn render(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Result<Self>;
}

impl CoeffField for GaussianRational {
    fn from_rational(q: &Rational) -> Self {
        GaussianRational::from_rational(q.clone())
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        GaussianRational::checked_div(self, rhs)
    }

    fn parse_text(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl CoeffField for RatFun {
    fn from_rational(q: &Rational) -> Self {
        RatFun::from_rational(q.clone())
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        RatFun::checked_div(self, rhs)
    }

    fn parse_text(s: &str) -> Result<Self> {
        s.parse()
    }
}
