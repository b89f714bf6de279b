//! Fibonacci, Lucas and generalized Fibonacci numbers over all integer
//! indices, plus Fibonomial coefficients.
//!
//! `fib` uses fast doubling, so a single `G_k` costs O(log k) big-integer
//! multiplications; that is what makes closed-form evaluation beat direct
//! summation. Small indices come from a fixed table since Fibonomials and
//! characteristic polynomials hit them constantly.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::rational::{parse_rational, render_rational, Rational};

const MEMO_LIMIT: usize = 64;

fn small_fib_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(MEMO_LIMIT + 1);
        t.push(BigInt::zero());
        t.push(BigInt::one());
        for i in 2..=MEMO_LIMIT {
            let next = &t[i - 1] + &t[i - 2];
            t.push(next);
        }
        t
    })
}

/// `(F_m, F_{m+1})` by recursive fast doubling.
fn fib_pair(m: u64) -> (BigInt, BigInt) {
    if (m as usize) < MEMO_LIMIT {
        let t = small_fib_table();
        return (t[m as usize].clone(), t[m as usize + 1].clone());
    }
    let (a, b) = fib_pair(m / 2); // (F_h, F_{h+1})
    // F_{2h} = F_h (2 F_{h+1} - F_h), F_{2h+1} = F_h^2 + F_{h+1}^2
    let two_b_minus_a = (&b << 1) - &a;
    let c = &a * &two_b_minus_a;
    let d = &a * &a + &b * &b;
    if m & 1 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// `(F_m, F_{m+1})` for m >= -1, the building block of O(log k)
/// evaluation of tail sequence values.
pub(crate) fn fib_pair_signed(m: i64) -> (BigInt, BigInt) {
    if m == -1 {
        (BigInt::one(), BigInt::zero())
    } else {
        assert!(m >= 0);
        fib_pair(m as u64)
    }
}

/// `F_i` for any integer index; `F_{-i} = (-1)^{i+1} F_i`.
pub fn fib(i: i64) -> BigInt {
    if i >= 0 {
        fib_pair(i as u64).0
    } else {
        let m = i.unsigned_abs();
        let f = fib_pair(m).0;
        if m % 2 == 1 {
            f
        } else {
            -f
        }
    }
}

/// `L_i = 2 F_{i+1} - F_i`.
pub fn lucas(i: i64) -> BigInt {
    (fib(i + 1) << 1) - fib(i)
}

/// The seed pair `(G_0, G_1)` defining a generalized Fibonacci sequence.
/// Any pair of exact rationals is admissible, including `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seeds {
    pub g0: Rational,
    pub g1: Rational,
}

impl Seeds {
    pub fn new(g0: Rational, g1: Rational) -> Self {
        Self { g0, g1 }
    }

    /// Fibonacci seeds `(0, 1)`.
    pub fn fibonacci() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Lucas seeds `(2, 1)`.
    pub fn lucas() -> Self {
        Self::new(Rational::from_integer(2.into()), Rational::one())
    }

    pub fn from_ints(g0: i64, g1: i64) -> Self {
        Self::new(
            Rational::from_integer(g0.into()),
            Rational::from_integer(g1.into()),
        )
    }
}

impl fmt::Display for Seeds {
    /// CLI text format: `G0,G1`, e.g. `0,1` or `-1/2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{}",
            render_rational(&self.g0),
            render_rational(&self.g1)
        )
    }
}

impl FromStr for Seeds {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("seeds must be `G0,G1`, got `{s}`")))?;
        Ok(Self::new(parse_rational(a)?, parse_rational(b)?))
    }
}

/// A sequence value paired with its (possibly negative) index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedValue {
    pub index: i64,
    pub value: Rational,
}

/// `G_i = F_{i-1} G_0 + F_i G_1`, valid for every integer `i`; the
/// sign-extended `F` makes this agree with the negative-index extension
/// `G_{-i} = (-1)^i (F_{i+1} G_0 - F_i G_1)`.
pub fn genfib(seeds: &Seeds, i: i64) -> Rational {
    let f_prev = fib(i - 1);
    let f_cur = fib(i);
    &seeds.g0 * Rational::from_integer(f_prev) + &seeds.g1 * Rational::from_integer(f_cur)
}

pub fn genfib_indexed(seeds: &Seeds, i: i64) -> IndexedValue {
    IndexedValue {
        index: i,
        value: genfib(seeds, i),
    }
}

/// Fibonomial coefficient `C(p, q)_F = prod_{j=1}^{q} F_{p-q+j} / F_j`.
/// The product is computed exactly and asserted to be an integer.
pub fn fibonomial(p: u32, q: u32) -> Result<BigInt> {
    if q > p {
        return Err(Error::OutOfRange(format!(
            "fibonomial requires q <= p, got ({p}, {q})"
        )));
    }
    let mut acc = Rational::one();
    for j in 1..=q as i64 {
        let num = Rational::from_integer(fib(p as i64 - q as i64 + j));
        let den = Rational::from_integer(fib(j));
        acc = acc * num / den;
    }
    assert!(
        acc.denom().is_one(),
        "fibonomial({p},{q}) is not an integer: {acc}"
    );
    Ok(acc.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    fn naive_fib(i: i64) -> BigInt {
        let n = i.unsigned_abs();
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for _ in 0..n {
            let next = &a + &b;
            a = b;
            b = next;
        }
        if i >= 0 || n % 2 == 1 {
            a
        } else {
            -a
        }
    }

    #[test]
    fn fib_known_values() {
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(-6), BigInt::from(-8));
    }

    #[test]
    fn fast_doubling_agrees_with_naive_iteration() {
        for i in -200..=200 {
            assert_eq!(fib(i), naive_fib(i), "F_{i}");
        }
    }

    #[test]
    fn lucas_values() {
        let expect = [2i64, 1, 3, 4, 7, 11, 18, 29];
        for (i, l) in expect.iter().enumerate() {
            assert_eq!(lucas(i as i64), BigInt::from(*l));
        }
        assert_eq!(lucas(-3), BigInt::from(-4));
    }

    #[test]
    fn genfib_examples() {
        assert_eq!(genfib(&Seeds::fibonacci(), 7), rat(13, 1));
        assert_eq!(genfib(&Seeds::lucas(), 4), rat(7, 1));
        assert_eq!(genfib(&Seeds::lucas(), -3), rat(-4, 1));
    }

    #[test]
    fn genfib_recurrence_and_negative_extension() {
        let seed_pairs = [
            Seeds::fibonacci(),
            Seeds::lucas(),
            Seeds::new(rat(-1, 2), rat(3, 1)),
            Seeds::new(rat(22, 7), rat(-5, 9)),
            Seeds::new(Rational::zero(), Rational::zero()),
        ];
        for s in &seed_pairs {
            for i in -20..=20i64 {
                let lhs = genfib(s, i + 1);
                let rhs = genfib(s, i) + genfib(s, i - 1);
                assert_eq!(lhs, rhs, "recurrence at {i} for {s}");
            }
            for i in 0..=20i64 {
                let direct = genfib(s, -i);
                let sign = if i % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                let formula = sign
                    * (&s.g0 * Rational::from_integer(fib(i + 1))
                        - &s.g1 * Rational::from_integer(fib(i)));
                assert_eq!(direct, formula, "negative-index formula at {i}");
            }
        }
    }

    #[test]
    fn fibonomial_examples() {
        for p in 0..10 {
            assert_eq!(fibonomial(p, 0).unwrap(), BigInt::one());
        }
        assert_eq!(fibonomial(5, 2).unwrap(), BigInt::from(15));
        assert_eq!(fibonomial(4, 1).unwrap(), BigInt::from(3));
        assert_eq!(fibonomial(4, 3).unwrap(), BigInt::from(3));
        assert!(fibonomial(3, 4).is_err());
    }

    #[test]
    fn fibonomial_symmetry_and_integrality() {
        for p in 0..=30 {
            for q in 0..=p {
                assert_eq!(
                    fibonomial(p, q).unwrap(),
                    fibonomial(p, p - q).unwrap(),
                    "symmetry at ({p},{q})"
                );
            }
        }
        // Integrality up to p = 40 is enforced by the assert inside
        // `fibonomial`; just drive it.
        for p in 31..=40 {
            for q in 0..=p {
                fibonomial(p, q).unwrap();
            }
        }
    }

    #[test]
    fn indexed_values_pair_index_and_value() {
        let iv = genfib_indexed(&Seeds::lucas(), -3);
        assert_eq!(iv.index, -3);
        assert_eq!(iv.value, rat(-4, 1));
    }

    #[test]
    fn seeds_text_round_trip() {
        for s in ["0,1", "2,1", "-1/2,3"] {
            let parsed: Seeds = s.parse().unwrap();
            assert_eq!(parsed.to_string(), s);
        }
        assert!("1;2".parse::<Seeds>().is_err());
    }
}
