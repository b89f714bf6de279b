//! Exact sign decisions for numbers of the form `a + b*sqrt(5)`.
//!
//! The convergence predicate compares `|w|^2 * phi^(2n)` against 1, which
//! reduces to the sign of such a surd. No floating point is involved: the
//! mixed-sign case is settled by comparing `a^2` with `5 b^2`.

use num_traits::Zero;

use crate::scalar::rational::{rat_int, rational_sign, Rational};

/// `a + b*sqrt(5)` with exact rational components. The representation is
/// unique, so equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub a: Rational,
    pub b: Rational,
}

impl QuadraticSurd {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    /// Exact sign of `a + b*sqrt(5)` as -1 / 0 / +1.
    pub fn sign(&self) -> i8 {
        surd_sign(self)
    }
}

pub fn surd_sign(s: &QuadraticSurd) -> i8 {
    let sa = rational_sign(&s.a);
    let sb = rational_sign(&s.b);
    match (sa, sb) {
        (0, 0) => 0,
        (_, 0) => sa,
        (0, _) => sb,
        _ if sa == sb => sa,
        _ => {
            // Opposite signs: |a| vs |b|*sqrt(5), i.e. a^2 vs 5 b^2.
            let a2 = &s.a * &s.a;
            let b25 = &s.b * &s.b * rat_int(5);
            match a2.cmp(&b25) {
                std::cmp::Ordering::Greater => sa,
                std::cmp::Ordering::Less => sb,
                // a^2 = 5 b^2 with a, b nonzero is impossible over Q
                // (sqrt(5) is irrational), but keep the arm total.
                std::cmp::Ordering::Equal => 0,
            }
        }
    }
}

impl Zero for QuadraticSurd {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl std::ops::Add for QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    #[test]
    fn zero_surd() {
        assert_eq!(QuadraticSurd::zero().sign(), 0);
    }

    #[test]
    fn mixed_signs() {
        // -1 + (1/2) sqrt(5): 5/4 > 1, so positive.
        assert_eq!(QuadraticSurd::new(rat(-1, 1), rat(1, 2)).sign(), 1);
        // -3 + sqrt(5): 9 > 5, so negative.
        assert_eq!(QuadraticSurd::new(rat(-3, 1), rat(1, 1)).sign(), -1);
        // 3 - sqrt(5) > 0.
        assert_eq!(QuadraticSurd::new(rat(3, 1), rat(-1, 1)).sign(), 1);
        // 2 - sqrt(5) < 0.
        assert_eq!(QuadraticSurd::new(rat(2, 1), rat(-1, 1)).sign(), -1);
    }

    #[test]
    fn same_signs() {
        assert_eq!(QuadraticSurd::new(rat(1, 7), rat(2, 9)).sign(), 1);
        assert_eq!(QuadraticSurd::new(rat(-1, 7), rat(-2, 9)).sign(), -1);
        assert_eq!(QuadraticSurd::new(rat(0, 1), rat(-2, 9)).sign(), -1);
        assert_eq!(QuadraticSurd::new(rat(5, 2), rat(0, 1)).sign(), 1);
    }
}
