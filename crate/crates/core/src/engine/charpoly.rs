//! The degree-(n+1) characteristic polynomial whose reciprocal generates
//! the closed forms for sums of `w^j G_j^n`.
//!
//! Coefficient of `w^e` is `(-1)^(ceil(e/2)) * C(n+1, e)_F` with `C(.,.)_F`
//! the Fibonomial coefficient, giving the sign pattern `+ - - + + - - ...`.
//! For n = 1 this is `1 - w - w^2`.

use num_traits::Zero;

use crate::fib::fibonomial;
use crate::polyrat::Poly;
use crate::scalar::GaussianRational;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub n: u32,
    pub poly: Poly,
}

/// Sign `(-1)^(ceil(e/2))` for e >= 0.
pub(crate) fn alt_sign(e: u32) -> i8 {
    if ((e + 1) / 2) % 2 == 1 {
        -1
    } else {
        1
    }
}

pub fn char_poly(n: u32) -> CharPoly {
    let mut coeffs = Vec::with_capacity(n as usize + 2);
    for e in 0..=n + 1 {
        let c = fibonomial(n + 1, e).expect("e <= n+1");
        let signed = if alt_sign(e) < 0 { -c } else { c };
        coeffs.push(GaussianRational::from_rational(Rational::from_integer(
            signed,
        )));
    }
    let poly = Poly::from_coeffs(coeffs);
    debug_assert_eq!(poly.degree(), Some(n as usize + 1));
    CharPoly { n, poly }
}

/// True when the weight is a root of the order-n characteristic
/// polynomial, i.e. the closed form for that (n, w) does not exist.
pub fn is_singular(n: u32, w: &GaussianRational) -> bool {
    char_poly(n).poly.eval(w).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn ints(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    #[test]
    fn small_orders() {
        assert_eq!(char_poly(0).poly, ints(&[1, -1]));
        // 1 - w - w^2
        assert_eq!(char_poly(1).poly, ints(&[1, -1, -1]));
        // w^3 - 2w^2 - 2w + 1
        assert_eq!(char_poly(2).poly, ints(&[1, -2, -2, 1]));
        // w^4 + 3w^3 - 6w^2 - 3w + 1
        assert_eq!(char_poly(3).poly, ints(&[1, -3, -6, 3, 1]));
        // -w^5 + 5w^4 + 15w^3 - 15w^2 - 5w + 1
        assert_eq!(char_poly(4).poly, ints(&[1, -5, -15, 15, 5, -1]));
    }

    #[test]
    fn constant_term_is_one_and_degree_n_plus_one() {
        for n in 0..=8 {
            let cp = char_poly(n);
            assert_eq!(cp.poly.coeff(0), GaussianRational::from_int(1));
            assert_eq!(cp.poly.degree(), Some(n as usize + 1));
        }
    }

    #[test]
    fn known_singular_weights() {
        assert!(is_singular(2, &GaussianRational::from_int(-1)));
        assert!(is_singular(4, &GaussianRational::from_int(1)));
        assert!(!is_singular(1, &GaussianRational::from_int(1)));
        assert!(!is_singular(2, &GaussianRational::from_int(1)));
        assert!(!is_singular(3, &GaussianRational::from_int(-1)));
        assert!(!is_singular(2, &GaussianRational::from_rational(rat(1, 16))));
        assert!(!is_singular(3, &GaussianRational::i()));
    }
}
