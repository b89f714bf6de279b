//! Alternating even/odd-index sums via the weight `i`.
//!
//! With `f_j = i^j j^r G_j^n`, splitting `sum_{j=0}^{2K} f_j` over even and
//! odd j gives
//!
//! `S_{2K}^n(i, r) = 2^r sum_{j=0}^K (-1)^j j^r G_{2j}^n
//!                  + i  sum_{j=1}^K (-1)^{j-1} (2j-1)^r G_{2j-1}^n`,
//!
//! so the even part is the real part of the closed form at w = i divided
//! by 2^r, and the odd part is the imaginary part. Substituting k = 2K
//! turns `i^{2K}` into `(-1)^K`, which every tail term carries explicitly.

use num_traits::{One, Zero};

use crate::engine::charpoly::is_singular;
use crate::engine::closed::{closed_form, rebase_tail, Basis, ClosedForm};
use crate::error::{Error, Result};
use crate::fib::{genfib, Seeds};
use crate::scalar::rational::{rational_pow, Rational};
use crate::scalar::GaussianRational;

/// One side of the split: `sum head[j] G_j^n` plus tail terms
/// `(-1)^K poly_k(K) G_{2K + offset}^n`. All coefficients are real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExpr {
    pub head: Vec<Rational>,
    pub tail: Vec<SplitTail>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTail {
    pub offset: i64,
    pub poly_k: Vec<Rational>,
}

/// The pair of alternating identities for a given (n, r):
/// `even = sum_{j=0}^K (-1)^j j^r G_{2j}^n` and
/// `odd = sum_{j=1}^K (-1)^{j-1} (2j-1)^r G_{2j-1}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenOddSplit {
    pub n: u32,
    pub r: u32,
    pub even: SplitExpr,
    pub odd: SplitExpr,
}

fn trim(poly: &mut Vec<Rational>) {
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
}

pub fn split_alternating(n: u32, r: u32) -> Result<EvenOddSplit> {
    let i = GaussianRational::i();
    if is_singular(n, &i) {
        return Err(Error::SingularWeight);
    }
    // n = 1 uses the standard basis so the tail lands on {G_2K, G_2K+1};
    // larger n keeps the shifted basis {G_{2K+t}^n}.
    let cf: ClosedForm<GaussianRational> = if n == 1 {
        rebase_tail(&closed_form(1, r, &i)?)?
    } else {
        closed_form(n, r, &i)?
    };
    debug_assert!(n != 1 || cf.basis == Basis::Standard);
    let two_pow_r = rational_pow(&Rational::from_integer(2.into()), r as u64);
    let mut even_head = Vec::with_capacity(cf.head.len());
    let mut odd_head = Vec::with_capacity(cf.head.len());
    for c in &cf.head {
        even_head.push(&c.re / &two_pow_r);
        odd_head.push(c.im.clone());
    }
    let mut even_tail = Vec::with_capacity(cf.tail.len());
    let mut odd_tail = Vec::with_capacity(cf.tail.len());
    for term in &cf.tail {
        // w^{k+e} at k = 2K is (-1)^K i^e; substituting k -> 2K also
        // rescales the polynomial coefficient of K^c by 2^c.
        let i_pow = i.pow_u(term.w_exp_offset as u64);
        let mut even_poly = Vec::with_capacity(term.poly_k.len());
        let mut odd_poly = Vec::with_capacity(term.poly_k.len());
        let mut two_pow_c = Rational::one();
        for c in &term.poly_k {
            let q = &(c * &i_pow) * &GaussianRational::from_rational(two_pow_c.clone());
            even_poly.push(&q.re / &two_pow_r);
            odd_poly.push(q.im.clone());
            two_pow_c *= Rational::from_integer(2.into());
        }
        trim(&mut even_poly);
        trim(&mut odd_poly);
        even_tail.push(SplitTail {
            offset: term.offset,
            poly_k: even_poly,
        });
        odd_tail.push(SplitTail {
            offset: term.offset,
            poly_k: odd_poly,
        });
    }
    Ok(EvenOddSplit {
        n,
        r,
        even: SplitExpr {
            head: even_head,
            tail: even_tail,
        },
        odd: SplitExpr {
            head: odd_head,
            tail: odd_tail,
        },
    })
}

impl SplitExpr {
    /// Exact value at upper index K for concrete seeds.
    pub fn evaluate(&self, n: u32, big_k: i64, seeds: &Seeds) -> Rational {
        assert!(big_k >= 0);
        let g_pow_n =
            |idx: i64| -> Rational { rational_pow(&genfib(seeds, idx), n as u64) };
        let mut acc = Rational::zero();
        for (j, c) in self.head.iter().enumerate() {
            if !c.is_zero() {
                acc += c * g_pow_n(j as i64);
            }
        }
        let sign = if big_k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        let k_rat = Rational::from_integer(big_k.into());
        for term in &self.tail {
            if term.poly_k.is_empty() {
                continue;
            }
            let mut p = Rational::zero();
            for c in term.poly_k.iter().rev() {
                p = p * &k_rat + c;
            }
            acc += &sign * p * g_pow_n(2 * big_k + term.offset);
        }
        acc
    }

    /// Exact linear combination, used to reproduce identities printed as
    /// mixes of the two split weights (e.g. weight `j` on odd indices).
    pub fn linear_combination(parts: &[(Rational, &SplitExpr)]) -> SplitExpr {
        let head_len = parts
            .iter()
            .map(|(_, e)| e.head.len())
            .max()
            .unwrap_or(0);
        let mut head = vec![Rational::zero(); head_len];
        for (c, expr) in parts {
            for (j, h) in expr.head.iter().enumerate() {
                head[j] += c * h;
            }
        }
        let mut offsets: Vec<i64> = parts
            .iter()
            .flat_map(|(_, e)| e.tail.iter().map(|t| t.offset))
            .collect();
        offsets.sort_unstable();
        offsets.dedup();
        let mut tail = Vec::with_capacity(offsets.len());
        for offset in offsets {
            let mut poly_k: Vec<Rational> = Vec::new();
            for (c, expr) in parts {
                if let Some(t) = expr.tail.iter().find(|t| t.offset == offset) {
                    if poly_k.len() < t.poly_k.len() {
                        poly_k.resize(t.poly_k.len(), Rational::zero());
                    }
                    for (i, p) in t.poly_k.iter().enumerate() {
                        poly_k[i] += c * p;
                    }
                }
            }
            trim(&mut poly_k);
            tail.push(SplitTail { offset, poly_k });
        }
        SplitExpr { head, tail }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn split_n1_r0() {
        let s = split_alternating(1, 0).unwrap();
        assert_eq!(s.even.head, vec![rat(3, 5), rat(-1, 5)]);
        assert_eq!(s.even.tail[0].poly_k, vec![rat(2, 5)]);
        assert_eq!(s.even.tail[1].poly_k, vec![rat(1, 5)]);
        assert_eq!(s.odd.head, vec![rat(-1, 5), rat(2, 5)]);
        assert_eq!(s.odd.tail[0].poly_k, vec![rat(1, 5)]);
        assert_eq!(s.odd.tail[1].poly_k, vec![rat(-2, 5)]);
    }

    #[test]
    fn split_n3_r0_even() {
        let s = split_alternating(3, 0).unwrap();
        assert_eq!(
            s.even.head,
            vec![rat(23, 25), rat(-9, 50), rat(-13, 50), rat(3, 50)]
        );
        let tails: Vec<_> = s.even.tail.iter().map(|t| t.poly_k.clone()).collect();
        assert_eq!(
            tails,
            vec![
                vec![rat(-3, 50)],
                vec![rat(37, 50)],
                vec![rat(9, 50)],
                vec![rat(-2, 25)]
            ]
        );
    }

    #[test]
    fn split_n1_r1_matches_hand_derivation() {
        let s = split_alternating(1, 1).unwrap();
        // even: -1/5 G_0 + (-1)^K (2K+1)/5 G_2K + (-1)^K K/5 G_{2K+1}
        assert_eq!(s.even.head, vec![rat(-1, 5), rat(0, 1)]);
        assert_eq!(s.even.tail[0].poly_k, vec![rat(1, 5), rat(2, 5)]);
        assert_eq!(s.even.tail[1].poly_k, vec![rat(0, 1), rat(1, 5)]);
    }

    #[test]
    fn evaluation_matches_direct_alternating_sums() {
        let seeds = Seeds::lucas();
        let s = split_alternating(2, 0).unwrap();
        for big_k in 0..=8i64 {
            let mut even = Rational::zero();
            for j in 0..=big_k {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                even += rat(sign, 1) * rational_pow(&genfib(&seeds, 2 * j), 2);
            }
            assert_eq!(s.even.evaluate(2, big_k, &seeds), even, "K={big_k}");
            let mut odd = Rational::zero();
            for j in 1..=big_k {
                let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
                odd += rat(sign, 1) * rational_pow(&genfib(&seeds, 2 * j - 1), 2);
            }
            assert_eq!(s.odd.evaluate(2, big_k, &seeds), odd, "K={big_k}");
        }
    }
}
