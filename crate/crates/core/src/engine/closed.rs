//! Closed forms for the weighted power sums `sum_{j=0}^k w^j j^r G_j^n`.
//!
//! The primary construction applies `D^r = (w d/dw)^r` with the product
//! rule to the order-n base identity `S * charpoly = head - tail`, giving
//!
//! `S_k^n(w,r) = sum_m C(r,m) A_n(w;m) [D^{r-m} head - D^{r-m} tail]`,
//!
//! where `D^{r-m}` turns `w^e` into `e^{r-m} w^e`. Head terms carry the
//! seed values `G_0^n .. G_n^n`; tail terms are `w^{k+t} P_t(k) G_{k+t}^n`
//! for offsets t = 1..n+1 (the "shifted" basis). For n = 1 there is also
//! the classical four-term presentation on `{G_k, G_{k+1}}` (the
//! "standard" basis), reachable by `rebase_tail` and, independently, by
//! the direct `closed_form_theorem` construction; the two routes must
//! agree and the tests assert they do.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coeff::CoeffField;
use crate::engine::afun::{a_functions, a_functions_symbolic, binom_rational, AFunctions};
use crate::engine::charpoly::{alt_sign, char_poly};
use crate::error::{Error, Result};
use crate::fib::{fibonomial, genfib, Seeds};
use crate::polyrat::RatFun;
use crate::scalar::rational::{rational_canonical, rational_pow};
use crate::scalar::{GaussianRational, Rational};

/// Tail presentation: `Standard` is the n = 1 basis `{G_k, G_{k+1}}` with
/// weight exponents `{k+2, k+1}`; `Shifted` is `{G_{k+1}^n .. G_{k+n+1}^n}`
/// with weight exponent `k+t` on `G_{k+t}^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    Standard,
    Shifted,
}

/// Whether the form is tied to a numeric weight or keeps the weight as a
/// symbol (coefficients are then rational functions of it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightTag {
    Numeric(GaussianRational),
    Symbolic,
}

/// One boundary term `w^{k + w_exp_offset} * poly_k(k) * G_{k + offset}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailTerm<C> {
    pub offset: i64,
    pub w_exp_offset: i64,
    pub poly_k: Vec<C>,
}

/// A synthesized closed form. `head[j]` multiplies `G_j^n`; evaluation of
/// head plus tail at any `k >= 0` equals the direct sum exactly, for every
/// seed pair. `head_only` marks infinite-sum results whose tail has been
/// dropped; `extension` marks parameter ranges exposed beyond the
/// recursion-backed cases (n >= 2 with r >= 1 for infinite sums).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm<C> {
    pub n: u32,
    pub r: u32,
    pub weight: WeightTag,
    pub w_ring: C,
    pub basis: Basis,
    pub head: Vec<C>,
    pub tail: Vec<TailTerm<C>>,
    pub head_only: bool,
    pub extension: bool,
}

/// Signed Fibonomial `(-1)^(ceil((n-s+1)/2)) C(n+1, s)_F` from the base
/// identity.
pub(crate) fn lemma_coeff(n: u32, s: u32) -> Rational {
    let c = fibonomial(n + 1, s).expect("s <= n+1");
    Rational::from_integer(if alt_sign(n + 1 - s) < 0 { -c } else { c })
}

fn int_pow_big(base: i64, exp: u32) -> BigInt {
    // 0^0 = 1 by convention.
    BigInt::from(base).pow(exp)
}

fn trim_poly<C: CoeffField>(poly: &mut Vec<C>) {
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
}

/// `w^e` for e = 0..=max in the coefficient field.
fn weight_powers<C: CoeffField>(w_ring: &C, max: u32) -> Vec<C> {
    let mut pows = Vec::with_capacity(max as usize + 1);
    pows.push(C::one());
    for _ in 0..max {
        let next = pows.last().unwrap().clone() * w_ring.clone();
        pows.push(next);
    }
    pows
}

/// The generic product-rule construction in the shifted basis.
fn leibniz_in<C: CoeffField>(n: u32, r: u32, w_ring: &C, afuns: &AFunctions<C>) -> ClosedForm<C> {
    assert!(n >= 1, "closed forms require n >= 1");
    let w_pows = weight_powers(w_ring, n + 1);
    // H(u) = sum_m C(r,m) A(m) u^{r-m}, the D^r image of a head monomial
    // w^u (with 0^0 = 1 so that u = 0 only survives at m = r).
    let h: Vec<C> = (0..=n as i64)
        .map(|u| {
            let mut acc = C::zero();
            for m in 0..=r {
                let scale = binom_rational(r, m) * Rational::from_integer(int_pow_big(u, r - m));
                acc = acc + C::from_rational(&scale) * afuns.values[m as usize].clone();
            }
            acc
        })
        .collect();
    let mut head = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let mut acc = C::zero();
        for u in j..=n {
            let s = j + n + 1 - u;
            acc = acc
                + C::from_rational(&lemma_coeff(n, s))
                    * w_pows[u as usize].clone()
                    * h[u as usize].clone();
        }
        head.push(acc);
    }
    let mut tail = Vec::with_capacity(n as usize + 1);
    for t in 1..=n + 1 {
        let mut poly_k = vec![C::zero(); r as usize + 1];
        for s in t..=n + 1 {
            // The raw exponent is k + t + n - s + 1; the excess over the
            // canonical k + t is folded into the coefficients.
            let base = -(C::from_rational(&lemma_coeff(n, s))
                * w_pows[(n + 1 - s) as usize].clone());
            let shift = (t + n - s + 1) as i64;
            for m in 0..=r {
                let factor = base.clone() * afuns.values[m as usize].clone();
                let p = r - m;
                let crm = binom_rational(r, m);
                for i in 0..=p {
                    let scale =
                        &crm * (binom_rational(p, i) * Rational::from_integer(int_pow_big(shift, p - i)));
                    poly_k[i as usize] =
                        poly_k[i as usize].clone() + factor.clone() * C::from_rational(&scale);
                }
            }
        }
        trim_poly(&mut poly_k);
        tail.push(TailTerm {
            offset: t as i64,
            w_exp_offset: t as i64,
            poly_k,
        });
    }
    ClosedForm {
        n,
        r,
        weight: WeightTag::Symbolic, // caller fixes the tag
        w_ring: w_ring.clone(),
        basis: Basis::Shifted,
        head,
        tail,
        head_only: false,
        extension: false,
    }
}

/// Numeric closed form in the canonical shifted basis. Errors with
/// `SingularWeight` when the characteristic polynomial vanishes at `w`.
pub fn closed_form(n: u32, r: u32, w: &GaussianRational) -> Result<ClosedForm<GaussianRational>> {
    let afuns = a_functions(n, r, w)?;
    let mut cf = leibniz_in(n, r, w, &afuns);
    cf.weight = WeightTag::Numeric(w.clone());
    Ok(cf)
}

/// Symbolic closed form in the canonical shifted basis.
pub fn closed_form_symbolic(n: u32, r: u32) -> ClosedForm<RatFun> {
    let afuns = a_functions_symbolic(n, r);
    leibniz_in(n, r, &RatFun::var(), &afuns)
}

/// The classical n = 1 construction in the standard basis:
/// head `-G_0 sum_m C(r,m)(w - delta_{rm}) A(w;m) + w G_1 sum_m C(r,m) A(w;m)`,
/// tail `-w^{k+2} G_k sum_m C(r,m)(k+2)^m A(w;r-m)` and the same with
/// `k+1` on `G_{k+1}`. Kept as an independent route; it must agree with
/// `rebase_tail(closed_form(1, r, w))`.
fn theorem_in<C: CoeffField>(r: u32, w_ring: &C, afuns: &AFunctions<C>) -> ClosedForm<C> {
    let total: C = (0..=r).fold(C::zero(), |acc, m| {
        acc + C::from_rational(&binom_rational(r, m)) * afuns.values[m as usize].clone()
    });
    let head0 = afuns.values[r as usize].clone() - w_ring.clone() * total.clone();
    let head1 = w_ring.clone() * total;
    let tail_poly = |shift: i64| -> Vec<C> {
        let mut poly_k = vec![C::zero(); r as usize + 1];
        for m in 0..=r {
            let crm = binom_rational(r, m);
            let a_val = afuns.values[(r - m) as usize].clone();
            for i in 0..=m {
                let scale =
                    &crm * (binom_rational(m, i) * Rational::from_integer(int_pow_big(shift, m - i)));
                poly_k[i as usize] = poly_k[i as usize].clone()
                    - a_val.clone() * C::from_rational(&scale);
            }
        }
        trim_poly(&mut poly_k);
        poly_k
    };
    ClosedForm {
        n: 1,
        r,
        weight: WeightTag::Symbolic,
        w_ring: w_ring.clone(),
        basis: Basis::Standard,
        head: vec![head0, head1],
        tail: vec![
            TailTerm {
                offset: 0,
                w_exp_offset: 2,
                poly_k: tail_poly(2),
            },
            TailTerm {
                offset: 1,
                w_exp_offset: 1,
                poly_k: tail_poly(1),
            },
        ],
        head_only: false,
        extension: false,
    }
}

pub fn closed_form_theorem(r: u32, w: &GaussianRational) -> Result<ClosedForm<GaussianRational>> {
    let afuns = a_functions(1, r, w)?;
    let mut cf = theorem_in(r, w, &afuns);
    cf.weight = WeightTag::Numeric(w.clone());
    Ok(cf)
}

pub fn closed_form_theorem_symbolic(r: u32) -> ClosedForm<RatFun> {
    let afuns = a_functions_symbolic(1, r);
    theorem_in(r, &RatFun::var(), &afuns)
}

/// Rewrites an n = 1 shifted-basis form onto `{G_k, G_{k+1}}` using
/// `G_{k+2} = G_{k+1} + G_k`. Value preserving; a form already in the
/// standard basis is returned unchanged. Errors with `UnsupportedBasis`
/// for n >= 2.
pub fn rebase_tail<C: CoeffField>(cf: &ClosedForm<C>) -> Result<ClosedForm<C>> {
    if cf.n != 1 {
        return Err(Error::UnsupportedBasis);
    }
    if cf.basis == Basis::Standard {
        return Ok(cf.clone());
    }
    let find = |offset: i64| -> Vec<C> {
        cf.tail
            .iter()
            .find(|t| t.offset == offset)
            .map(|t| t.poly_k.clone())
            .unwrap_or_default()
    };
    let p1 = find(1);
    let p2 = find(2);
    // w^{k+1} P1 G_{k+1} + w^{k+2} P2 (G_{k+1} + G_k)
    //   = w^{k+2} P2 G_k + w^{k+1} (P1 + w P2) G_{k+1}
    let mut poly_g_k1 = p1;
    for (i, c) in p2.iter().enumerate() {
        let scaled = cf.w_ring.clone() * c.clone();
        if i < poly_g_k1.len() {
            poly_g_k1[i] = poly_g_k1[i].clone() + scaled;
        } else {
            poly_g_k1.push(scaled);
        }
    }
    trim_poly(&mut poly_g_k1);
    let tail = if cf.head_only {
        Vec::new()
    } else {
        vec![
            TailTerm {
                offset: 0,
                w_exp_offset: 2,
                poly_k: p2,
            },
            TailTerm {
                offset: 1,
                w_exp_offset: 1,
                poly_k: poly_g_k1,
            },
        ]
    };
    Ok(ClosedForm {
        basis: Basis::Standard,
        tail,
        ..cf.clone()
    })
}

/// `(re + im*i)^exp` over the Gaussian integers by binary exponentiation.
fn complex_int_pow(re: &BigInt, im: &BigInt, exp: u64) -> (BigInt, BigInt) {
    let mut acc_re = BigInt::from(1);
    let mut acc_im = BigInt::from(0);
    let mut base_re = re.clone();
    let mut base_im = im.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            let next_re = &acc_re * &base_re - &acc_im * &base_im;
            let next_im = &acc_re * &base_im + &acc_im * &base_re;
            acc_re = next_re;
            acc_im = next_im;
        }
        e >>= 1;
        if e > 0 {
            let next_re = &base_re * &base_re - &base_im * &base_im;
            let next_im = (&base_re * &base_im) << 1;
            base_re = next_re;
            base_im = next_im;
        }
    }
    (acc_re, acc_im)
}

/// `small + big_num / big_den`, canonical, keeping gcd operands balanced.
fn add_big_fraction(small: &Rational, big_num: BigInt, big_den: &BigInt) -> Rational {
    use num_integer::Integer;
    let g = (big_den % small.denom()).gcd(small.denom());
    let cof_big = small.denom() / &g;
    let cof_small = big_den / &g;
    rational_canonical(big_num * &cof_big + small.numer() * cof_small, big_den * cof_big)
}

/// Evaluates a numeric closed form at `k` for concrete seeds.
///
/// Tail sequence values come from fast-doubling Fibonacci numbers and the
/// whole tail is accumulated over cleared denominators, so the cost is
/// O(log k) big-integer multiplications plus O(n r) scalar work; no
/// per-term rational normalization touches the large operands.
pub fn evaluate_closed(
    cf: &ClosedForm<GaussianRational>,
    k: i64,
    seeds: &Seeds,
) -> GaussianRational {
    use num_integer::Integer;
    assert!(k >= 0, "evaluation requires k >= 0");
    let w = match &cf.weight {
        WeightTag::Numeric(w) => w,
        WeightTag::Symbolic => panic!("evaluate_closed requires a numeric closed form"),
    };
    let mut acc = GaussianRational::zero();
    for (j, coeff) in cf.head.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let g = GaussianRational::from_rational(rational_pow(&genfib(seeds, j as i64), cf.n as u64));
        acc += &(coeff * &g);
    }
    let live: Vec<&TailTerm<GaussianRational>> =
        cf.tail.iter().filter(|t| !t.poly_k.is_empty()).collect();
    if cf.head_only || live.is_empty() {
        return acc;
    }
    // Seeds and weight as integers over common denominators.
    let d_seeds: BigInt = seeds.g0.denom().lcm(seeds.g1.denom());
    let a0: BigInt = seeds.g0.numer() * (&d_seeds / seeds.g0.denom());
    let a1: BigInt = seeds.g1.numer() * (&d_seeds / seeds.g1.denom());
    let wd: BigInt = w.re.denom().lcm(w.im.denom());
    let wn_re: BigInt = w.re.numer() * (&wd / w.re.denom());
    let wn_im: BigInt = w.im.numer() * (&wd / w.im.denom());
    let t_min = live.iter().map(|t| t.offset).min().unwrap();
    let e_min = live.iter().map(|t| t.w_exp_offset).min().unwrap();
    let e_max = live.iter().map(|t| t.w_exp_offset).max().unwrap();
    // (wn)^(k+e) for every exponent offset in use.
    let mut w_pows = Vec::with_capacity((e_max - e_min + 1) as usize);
    w_pows.push(complex_int_pow(&wn_re, &wn_im, (k + e_min) as u64));
    for _ in e_min..e_max {
        let (pre, pim) = w_pows.last().unwrap();
        let next_re = pre * &wn_re - pim * &wn_im;
        let next_im = pre * &wn_im + pim * &wn_re;
        w_pows.push((next_re, next_im));
    }
    // P_t(k) values, each cleared over its own small denominator.
    let k_scalar = GaussianRational::from_int(k);
    let mut cleared_polys = Vec::with_capacity(live.len());
    let mut dp = BigInt::from(1);
    for term in &live {
        let mut p = GaussianRational::zero();
        for c in term.poly_k.iter().rev() {
            p = &p * &k_scalar;
            p += c;
        }
        let pd: BigInt = p.re.denom().lcm(p.im.denom());
        let pn_re: BigInt = p.re.numer() * (&pd / p.re.denom());
        let pn_im: BigInt = p.im.numer() * (&pd / p.im.denom());
        dp = dp.lcm(&pd);
        cleared_polys.push((pn_re, pn_im, pd));
    }
    // Accumulate over the common denominator wd^(k+e_max) * dp * d_seeds^n.
    let (mut f_prev, mut f_cur) = crate::fib::fib_pair_signed(k + t_min - 1);
    let mut cur_t = t_min;
    let mut num_re = BigInt::from(0);
    let mut num_im = BigInt::from(0);
    for (term, (pn_re, pn_im, pd)) in live.iter().zip(&cleared_polys) {
        while cur_t < term.offset {
            let f_next = &f_prev + &f_cur;
            f_prev = std::mem::replace(&mut f_cur, f_next);
            cur_t += 1;
        }
        // G_{k+t} = (F_{k+t-1} A0 + F_{k+t} A1) / d_seeds
        let a_t = &f_prev * &a0 + &f_cur * &a1;
        let a_n = num_traits::Pow::pow(&a_t, cf.n);
        let cof = num_traits::Pow::pow(&wd, (e_max - term.w_exp_offset) as u32) * (&dp / pd);
        let scale = a_n * cof;
        let (wp_re, wp_im) = &w_pows[(term.w_exp_offset - e_min) as usize];
        num_re += (wp_re * pn_re - wp_im * pn_im) * &scale;
        num_im += (wp_re * pn_im + wp_im * pn_re) * &scale;
    }
    let den_exp = u32::try_from(k + e_max).expect("weight exponent fits in u32");
    let den = num_traits::Pow::pow(&wd, den_exp) * dp * num_traits::Pow::pow(&d_seeds, cf.n);
    GaussianRational::new(
        add_big_fraction(&acc.re, num_re, &den),
        add_big_fraction(&acc.im, num_im, &den),
    )
}

/// Head-only evaluation (the value of an infinite sum) at concrete seeds.
pub fn evaluate_head(cf: &ClosedForm<GaussianRational>, seeds: &Seeds) -> GaussianRational {
    let g_pow_n = |idx: i64| -> GaussianRational {
        GaussianRational::from_rational(rational_pow(&genfib(seeds, idx), cf.n as u64))
    };
    let mut acc = GaussianRational::zero();
    for (j, coeff) in cf.head.iter().enumerate() {
        acc += &(coeff * &g_pow_n(j as i64));
    }
    acc
}

/// True when the weight is singular for order n (no closed form exists).
pub fn weight_is_singular(n: u32, w: &GaussianRational) -> bool {
    char_poly(n).poly.eval(w).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn gr(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_rational(rat(n, d))
    }

    #[test]
    fn sum_of_j_g_j_at_w_one() {
        // sum j G_j = G_0 + 2 G_1 + (k-1) G_k + (k-2) G_{k+1}
        let cf = rebase_tail(&closed_form(1, 1, &gi(1)).unwrap()).unwrap();
        assert_eq!(cf.head, vec![gi(1), gi(2)]);
        assert_eq!(cf.tail[0].offset, 0);
        assert_eq!(cf.tail[0].w_exp_offset, 2);
        assert_eq!(cf.tail[0].poly_k, vec![gi(-1), gi(1)]);
        assert_eq!(cf.tail[1].offset, 1);
        assert_eq!(cf.tail[1].w_exp_offset, 1);
        assert_eq!(cf.tail[1].poly_k, vec![gi(-2), gi(1)]);
    }

    #[test]
    fn sum_of_j5_g_j_constants() {
        let cf = rebase_tail(&closed_form(1, 5, &gi(1)).unwrap()).unwrap();
        assert_eq!(cf.head, vec![gi(2671), gi(4322)]);
        assert_eq!(
            cf.tail[0].poly_k,
            [-2671i64, 1285, -310, 50, -5, 1].map(gi).to_vec()
        );
        assert_eq!(
            cf.tail[1].poly_k,
            [-4322i64, 2080, -500, 80, -10, 1].map(gi).to_vec()
        );
    }

    #[test]
    fn sum_of_squares_at_w_one() {
        // 3/2 G_0^2 + 1/2 G_1^2 - 1/2 G_2^2 - 3/2 G_{k+1}^2 - 1/2 G_{k+2}^2 + 1/2 G_{k+3}^2
        let cf = closed_form(2, 0, &gi(1)).unwrap();
        assert_eq!(cf.head, vec![gr(3, 2), gr(1, 2), gr(-1, 2)]);
        assert_eq!(cf.tail[0].poly_k, vec![gr(-3, 2)]);
        assert_eq!(cf.tail[1].poly_k, vec![gr(-1, 2)]);
        assert_eq!(cf.tail[2].poly_k, vec![gr(1, 2)]);
    }

    #[test]
    fn sum_of_j_g_j_at_w_two() {
        // (2/5) G_1 + (2^{k+2}/5) k G_k + (2^{k+1}/5)(k-1) G_{k+1}
        let cf = rebase_tail(&closed_form(1, 1, &gi(2)).unwrap()).unwrap();
        assert_eq!(cf.head, vec![GaussianRational::zero(), gr(2, 5)]);
        assert_eq!(cf.tail[0].poly_k, vec![GaussianRational::zero(), gr(1, 5)]);
        assert_eq!(cf.tail[1].poly_k, vec![gr(-1, 5), gr(1, 5)]);
    }

    #[test]
    fn symbolic_r1_head_and_tail_fragment() {
        // Heads (2-w) w^2 / (1-w-w^2)^2 and (w^2+1) w / (1-w-w^2)^2; the
        // G_k tail polynomial is k w^2 + (k+1) w - (k+2) over the same
        // square, i.e. k * (w^2+w-1) + (w-2) before reduction.
        let cf = rebase_tail(&closed_form_symbolic(1, 1)).unwrap();
        let head0: RatFun = "(0,0,2,-1)/(1,-2,-1,2,1)".parse().unwrap();
        let head1: RatFun = "(0,1,0,1)/(1,-2,-1,2,1)".parse().unwrap();
        assert_eq!(cf.head, vec![head0, head1]);
        let p0_const: RatFun = "(-2,1)/(1,-2,-1,2,1)".parse().unwrap();
        let p0_lin: RatFun = "(1)/(-1,1,1)".parse().unwrap();
        assert_eq!(cf.tail[0].poly_k, vec![p0_const, p0_lin]);
    }

    #[test]
    fn singular_weight_is_rejected() {
        assert_eq!(
            closed_form(2, 0, &gi(-1)).unwrap_err(),
            Error::SingularWeight
        );
        assert_eq!(
            closed_form(4, 1, &gi(1)).unwrap_err(),
            Error::SingularWeight
        );
    }

    #[test]
    fn rebase_examples() {
        // Shifted form of sum G_j rebased: -G_1 + G_k + G_{k+1}.
        let cf = closed_form(1, 0, &gi(1)).unwrap();
        let std = rebase_tail(&cf).unwrap();
        assert_eq!(std.head, vec![GaussianRational::zero(), gi(-1)]);
        assert_eq!(std.tail[0].poly_k, vec![gi(1)]);
        assert_eq!(std.tail[1].poly_k, vec![gi(1)]);
        // Already standard: unchanged.
        assert_eq!(rebase_tail(&std).unwrap(), std);
        // Value preservation at k = 10, Fibonacci seeds: F_12 - 1 = 143.
        let seeds = Seeds::fibonacci();
        assert_eq!(evaluate_closed(&cf, 10, &seeds), gi(143));
        assert_eq!(evaluate_closed(&std, 10, &seeds), gi(143));
        // n >= 2 unsupported.
        let sq = closed_form(2, 0, &gi(1)).unwrap();
        assert_eq!(rebase_tail(&sq).unwrap_err(), Error::UnsupportedBasis);
    }

    #[test]
    fn evaluation_examples() {
        let seeds = Seeds::fibonacci();
        let cf = closed_form(1, 1, &gi(1)).unwrap();
        assert_eq!(evaluate_closed(&cf, 5, &seeds), gi(46));
        // k = 0 with r >= 1 gives 0; r = 0 gives G_0^n.
        assert_eq!(evaluate_closed(&cf, 0, &seeds), GaussianRational::zero());
        let cf0 = closed_form(2, 0, &gi(1)).unwrap();
        let lucas = Seeds::lucas();
        assert_eq!(evaluate_closed(&cf0, 0, &lucas), gi(4));
        // Alternating: sum (-1)^j j G_j at k = 4 is 7.
        let cfm = closed_form(1, 1, &gi(-1)).unwrap();
        assert_eq!(evaluate_closed(&cfm, 4, &seeds), gi(7));
    }

    #[test]
    fn theorem_route_matches_leibniz_route() {
        let grid = [gi(1), gi(-1), gi(2), gr(1, 2), gr(-1, 2), gi(3), GaussianRational::i()];
        for w in &grid {
            for r in 0..=4 {
                let via_theorem = closed_form_theorem(r, w).unwrap();
                let via_leibniz = rebase_tail(&closed_form(1, r, w).unwrap()).unwrap();
                assert_eq!(via_theorem, via_leibniz, "w={w}, r={r}");
            }
        }
        for r in 0..=3 {
            let via_theorem = closed_form_theorem_symbolic(r);
            let via_leibniz = rebase_tail(&closed_form_symbolic(1, r)).unwrap();
            assert_eq!(via_theorem, via_leibniz, "symbolic r={r}");
        }
    }

    #[test]
    fn degenerate_weight_zero() {
        // S_k^n(0, r) = delta_{r0} G_0^n for every k.
        let seeds = Seeds::new(rat(-3, 2), rat(5, 7));
        for n in 1..=3 {
            for r in 0..=2 {
                let cf = closed_form(n, r, &GaussianRational::zero()).unwrap();
                for k in 0..=6 {
                    let expect = if r == 0 {
                        GaussianRational::from_rational(rational_pow(&seeds.g0, n as u64))
                    } else {
                        GaussianRational::zero()
                    };
                    assert_eq!(evaluate_closed(&cf, k, &seeds), expect, "n={n} r={r} k={k}");
                }
            }
        }
    }
}
