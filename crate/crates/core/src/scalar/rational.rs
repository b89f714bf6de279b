//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in canonical form:
//! positive denominator, numerator and denominator coprime, zero stored as
//! `0/1`. The text format is `p/q` in lowest terms, or bare `p` for
//! integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds the canonical lowest-terms fraction `num/den`.
pub fn rat_normalize(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Convenience constructor from machine integers. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat: zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: `p/q`, or `p` when the value is an integer.
pub fn render_rational(q: &Rational) -> String {
    // BigRational's Display already omits a unit denominator.
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{num_s}`")))?;
    let den: BigInt = den_s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{den_s}`")))?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Canonical `num/den` for big operands. `Ratio::new` hands the raw pair
/// to a binary gcd, which degrades badly when the operands are far apart
/// in size; one Euclidean reduction step first keeps the gcd balanced.
pub fn rational_canonical(mut num: BigInt, mut den: BigInt) -> Rational {
    use num_integer::Integer;
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return Rational::zero();
    }
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    if den.is_one() {
        return Rational::new_raw(num, den);
    }
    let g = (&num % &den).gcd(&den);
    if g.is_one() {
        Rational::new_raw(num, den)
    } else {
        Rational::new_raw(num / &g, den / g)
    }
}

/// Exact sign as -1 / 0 / +1.
pub fn rational_sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rational_pow(base: &Rational, exp: u64) -> Rational {
    let mut acc = Rational::from_integer(BigInt::from(1));
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_reduces_to_lowest_terms() {
        let r = rat_normalize(BigInt::from(2), BigInt::from(4)).unwrap();
        assert_eq!(r, rat(1, 2));
        assert_eq!(render_rational(&r), "1/2");
    }

    #[test]
    fn normalize_canonical_zero() {
        let r = rat_normalize(BigInt::from(0), BigInt::from(5)).unwrap();
        assert_eq!(r.numer(), &BigInt::from(0));
        assert_eq!(r.denom(), &BigInt::from(1));
        assert_eq!(render_rational(&r), "0");
    }

    #[test]
    fn normalize_moves_sign_to_numerator() {
        let r = rat_normalize(BigInt::from(3), BigInt::from(-6)).unwrap();
        assert_eq!(r, rat(-1, 2));
        assert_eq!(render_rational(&r), "-1/2");
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        assert_eq!(
            rat_normalize(BigInt::from(1), BigInt::from(0)),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/8", "22/7"] {
            let v = parse_rational(s).unwrap();
            assert_eq!(render_rational(&v), s);
        }
        // Non-canonical input parses to canonical form.
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let b = rat(-3, 7);
        let mut acc = rat_int(1);
        for e in 0..10u64 {
            assert_eq!(rational_pow(&b, e), acc);
            acc *= &b;
        }
    }

    #[test]
    fn canonical_constructor_matches_ratio_new() {
        let cases = [
            (6i64, 4i64),
            (-6, 4),
            (6, -4),
            (-6, -4),
            (0, 9),
            (7, 1),
            (360, 84),
            (1, 1),
        ];
        for (n, d) in cases {
            assert_eq!(
                rational_canonical(BigInt::from(n), BigInt::from(d)),
                Rational::new(BigInt::from(n), BigInt::from(d)),
                "({n}, {d})"
            );
        }
    }
}
