//! The rational functions `A_n(w; m) = D^m (1/charpoly_n)` and their
//! triangular recursion, plus the classic integer sequences obtained by
//! specializing n = 1 at w = 1 and w = -1.
//!
//! The recursion solves, at each step m,
//! `A(m) * char = delta_{m0} - sum_{j<m} C(m,j) A(j) B_{m-j}`
//! where `B_p = sum_{e=1}^{n+1} sign(e) C(n+1,e)_F e^p w^e`. It is
//! cross-checked against repeated application of `D` in the tests.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::coeff::CoeffField;
use crate::engine::charpoly::{alt_sign, char_poly};
use crate::error::{Error, Result};
use crate::fib::fibonomial;
use crate::polyrat::RatFun;
use crate::scalar::{GaussianRational, Rational};

/// `A_n(w; m)` for m = 0..=r, in numeric or symbolic coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AFunctions<C> {
    pub n: u32,
    pub r: u32,
    pub values: Vec<C>,
}

pub(crate) fn binom_rational(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn int_pow(base: u32, exp: u32) -> BigInt {
    // 0^0 = 1 by the j^0 = 1 convention.
    BigInt::from(base).pow(exp)
}

/// Core recursion, generic over the coefficient field. `char_in_ring` is
/// the characteristic value (numeric) or polynomial (symbolic) and must be
/// nonzero; `w_ring` is the weight embedded in the same field.
pub(crate) fn a_functions_in<C: CoeffField>(
    n: u32,
    r: u32,
    w_ring: &C,
    char_in_ring: &C,
) -> Result<AFunctions<C>> {
    if char_in_ring.is_zero() {
        return Err(Error::SingularWeight);
    }
    // w^e for e = 0..=n+1.
    let mut w_pows = Vec::with_capacity(n as usize + 2);
    w_pows.push(C::one());
    for _ in 0..=n {
        let next = w_pows.last().unwrap().clone() * w_ring.clone();
        w_pows.push(next);
    }
    let fibs: Vec<Rational> = (0..=n + 1)
        .map(|e| {
            let c = fibonomial(n + 1, e).expect("e <= n+1");
            Rational::from_integer(if alt_sign(e) < 0 { -c } else { c })
        })
        .collect();
    // B_p = sum_{e=1}^{n+1} sign(e) C(n+1,e)_F e^p w^e, p = 1..=r.
    let b: Vec<C> = (1..=r)
        .map(|p| {
            let mut acc = C::zero();
            for e in 1..=n + 1 {
                let scale = &fibs[e as usize] * Rational::from_integer(int_pow(e, p));
                acc = acc + C::from_rational(&scale) * w_pows[e as usize].clone();
            }
            acc
        })
        .collect();
    let mut values: Vec<C> = Vec::with_capacity(r as usize + 1);
    for m in 0..=r {
        let mut rhs = if m == 0 { C::one() } else { C::zero() };
        for (j, aj) in values.iter().enumerate() {
            let c = C::from_rational(&binom_rational(m, j as u32));
            rhs = rhs - c * aj.clone() * b[(m as usize - j) - 1].clone();
        }
        values.push(rhs.checked_div(char_in_ring)?);
    }
    Ok(AFunctions { n, r, values })
}

/// Numeric `A_n(w; m)` for m = 0..=r. Errors with `SingularWeight` when
/// the characteristic polynomial vanishes at `w`.
pub fn a_functions(n: u32, r: u32, w: &GaussianRational) -> Result<AFunctions<GaussianRational>> {
    let char_val = char_poly(n).poly.eval(w);
    a_functions_in(n, r, w, &char_val)
}

/// Symbolic `A_n(w; m)` as reduced rational functions of the weight.
pub fn a_functions_symbolic(n: u32, r: u32) -> AFunctions<RatFun> {
    let char_rf = RatFun::from_poly(char_poly(n).poly);
    a_functions_in(n, r, &RatFun::var(), &char_rf)
        .expect("characteristic polynomial is nonzero")
}

/// The integer sequence behind the w = 1, n = 1 closed forms:
/// `A(m) = -delta_{m0} - sum_{j<m} C(m,j) (2^{m-j} + 1) A(j)`.
pub fn classic_a_upto(m_max: u32) -> Vec<Rational> {
    let mut values: Vec<Rational> = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max {
        let mut acc = if m == 0 {
            -Rational::one()
        } else {
            Rational::zero()
        };
        for (j, aj) in values.iter().enumerate() {
            let p = m - j as u32;
            let factor = binom_rational(m, j as u32)
                * Rational::from_integer(int_pow(2, p) + BigInt::one());
            acc -= factor * aj;
        }
        values.push(acc);
    }
    values
}

pub fn classic_a(m: u32) -> Rational {
    classic_a_upto(m).pop().unwrap()
}

/// The alternating counterpart at w = -1:
/// `Abar(p) = delta_{p0} + sum_{j<p} C(p,j) (2^{p-j} - 1) Abar(j)`.
pub fn bar_a_upto(p_max: u32) -> Vec<Rational> {
    let mut values: Vec<Rational> = Vec::with_capacity(p_max as usize + 1);
    for p in 0..=p_max {
        let mut acc = if p == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
        for (j, aj) in values.iter().enumerate() {
            let q = p - j as u32;
            let factor = binom_rational(p, j as u32)
                * Rational::from_integer(int_pow(2, q) - BigInt::one());
            acc += factor * aj;
        }
        values.push(acc);
    }
    values
}

pub fn bar_a(p: u32) -> Rational {
    bar_a_upto(p).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::Poly;
    use crate::scalar::rat_int;

    #[test]
    fn numeric_values_at_w_one() {
        let a = a_functions(1, 1, &GaussianRational::from_int(1)).unwrap();
        assert_eq!(a.values[0], GaussianRational::from_int(-1));
        assert_eq!(a.values[1], GaussianRational::from_int(3));
    }

    #[test]
    fn symbolic_base_case() {
        let a = a_functions_symbolic(1, 0);
        let expected = RatFun::new(
            Poly::one(),
            Poly::from_coeffs(
                [1, -1, -1]
                    .iter()
                    .map(|&c| GaussianRational::from_int(c))
                    .collect(),
            ),
        )
        .unwrap();
        assert_eq!(a.values[0], expected);
    }

    #[test]
    fn singular_weight_detected() {
        assert_eq!(
            a_functions(2, 0, &GaussianRational::from_int(-1)),
            Err(Error::SingularWeight)
        );
        assert_eq!(
            a_functions(4, 2, &GaussianRational::from_int(1)),
            Err(Error::SingularWeight)
        );
    }

    #[test]
    fn recursion_matches_repeated_d() {
        for n in 0..=3u32 {
            let sym = a_functions_symbolic(n, 4);
            let mut f = RatFun::new(Poly::one(), char_poly(n).poly).unwrap();
            for m in 0..=4usize {
                assert_eq!(sym.values[m], f, "n={n}, m={m}");
                f = f.apply_d();
            }
        }
    }

    #[test]
    fn numeric_mode_equals_symbolic_mode_evaluated() {
        let grid = [
            GaussianRational::from_int(1),
            GaussianRational::from_int(-2),
            GaussianRational::from_rational(crate::scalar::rat(1, 3)),
            GaussianRational::i(),
        ];
        for n in 1..=2u32 {
            let sym = a_functions_symbolic(n, 3);
            for w in &grid {
                let num = a_functions(n, 3, w).unwrap();
                for m in 0..=3usize {
                    assert_eq!(
                        num.values[m],
                        sym.values[m].eval_at(w).unwrap(),
                        "n={n} m={m} w={w}"
                    );
                }
            }
        }
    }

    #[test]
    fn classic_sequences() {
        assert_eq!(classic_a(0), rat_int(-1));
        assert_eq!(classic_a(1), rat_int(3));
        assert_eq!(classic_a(2), rat_int(-13));
        assert_eq!(bar_a(0), rat_int(1));
        assert_eq!(bar_a(1), rat_int(1));
        assert_eq!(bar_a(2), rat_int(5));
    }

    #[test]
    fn classic_sequences_specialize_the_recursion() {
        let at_one = a_functions(1, 6, &GaussianRational::from_int(1)).unwrap();
        let at_minus_one = a_functions(1, 6, &GaussianRational::from_int(-1)).unwrap();
        for m in 0..=6u32 {
            assert_eq!(
                GaussianRational::from_rational(classic_a(m)),
                at_one.values[m as usize],
                "A({m})"
            );
            assert_eq!(
                GaussianRational::from_rational(bar_a(m)),
                at_minus_one.values[m as usize],
                "Abar({m})"
            );
        }
    }
}
