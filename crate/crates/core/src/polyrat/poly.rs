//! Dense univariate polynomials over the Gaussian rationals.
//!
//! Coefficients are stored by ascending degree with trailing zeros trimmed,
//! so the zero polynomial is the empty list and `degree = len - 1`
//! otherwise. Degrees stay small here (the characteristic polynomials have
//! degree n+1, and D-iterations only square denominators), so a dense
//! representation with Euclidean gcd is the right tool.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::gaussian::GaussianRational;
use crate::scalar::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

/// Binary polynomial operations for the dispatching entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Gcd,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::constant(GaussianRational::from_rational(q))
    }

    /// The monomial `c * w^deg`.
    pub fn monomial(c: GaussianRational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self { coeffs }
    }

    /// The variable `w`.
    pub fn var() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> GaussianRational {
        self.coeffs.get(i).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by the leading one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let inv = lead.checked_recip().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, w: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * w;
            acc += c;
        }
        acc
    }

    /// Formal derivative with respect to `w`.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &GaussianRational::from_int(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// `D = w d/dw` on polynomials: maps `sum a_r w^r` to `sum r a_r w^r`.
    pub fn apply_d(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &GaussianRational::from_int(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Quotient and remainder of exact field division.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let ddeg = divisor.degree().unwrap();
        let dlead_inv = divisor
            .leading()
            .unwrap()
            .checked_recip()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Poly::zero(), self.clone());
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![GaussianRational::zero(); qlen];
        for qi in (0..qlen).rev() {
            let lead = rem[qi + ddeg].clone();
            if lead.is_zero() {
                continue;
            }
            let factor = &lead * &dlead_inv;
            for (di, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &factor * dc;
                rem[qi + di] -= &sub;
            }
            quot[qi] = factor;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm over Q(i).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow_u(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Rendering used by the CLI and JSON: coefficient strings by
    /// ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Dispatches one binary polynomial operation. `Gcd` requires at least one
/// nonzero operand.
pub fn poly_arith(op: PolyOp, p: &Poly, q: &Poly) -> Result<Poly> {
    match op {
        PolyOp::Add => Ok(p + q),
        PolyOp::Sub => Ok(p - q),
        PolyOp::Mul => Ok(p * q),
        PolyOp::Gcd => {
            if p.is_zero() && q.is_zero() {
                Err(Error::OutOfRange("gcd(0, 0) is undefined".into()))
            } else {
                Ok(p.gcd(q))
            }
        }
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Self::constant(GaussianRational::one())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        (&self).add(&rhs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        (&self).sub(&rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[i + j] += &prod;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        (&self).mul(&rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff_strings().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    #[test]
    fn mul_example() {
        // (1 + w)(1 - w) = 1 - w^2
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(w^2 - 1, w - 1) = w - 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // gcd is returned monic
        assert_eq!(p(&[-2, 0, 2]).gcd(&p(&[-3, 3])), p(&[-1, 1]));
        assert!(poly_arith(PolyOp::Gcd, &Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn add_identity() {
        let q = p(&[3, -2, 5]);
        assert_eq!(&q + &Poly::zero(), q);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[2, -3, 0, 1, 4]);
        let b = p(&[1, 1, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn d_operator_on_polynomials() {
        // D(w^3) = 3 w^3
        assert_eq!(p(&[0, 0, 0, 1]).apply_d(), p(&[0, 0, 0, 3]));
        // D(c) = 0
        assert!(p(&[9]).apply_d().is_zero());
    }
}
