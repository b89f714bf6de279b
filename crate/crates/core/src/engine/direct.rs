//! A literal term-by-term expansion of the weighted power sum, kept as a
//! comparison route for adjudication.
//!
//! The expansion groups the sum into: (1) `A_n(w;r) G_0^n`; (2) the inner
//! seed terms `sum_m C(r,m) A_n(w;m) sum_{j=1}^n j^{r-m} w^j G_j^n`;
//! (3) the remaining head block over s = 0..n; and (4) the boundary block
//! over s = 0..n+1 with indices j = k+1..k+s. This grouping circulates
//! with the boundary block *added*; exact evaluation (see
//! `docs/boundary-term-sign.md` and the adjudication tests) shows the
//! boundary block must be *subtracted* to equal the direct sum — the
//! product-rule construction in `closed.rs` has it subtracted and is the
//! route the engine trusts. Both signs are exposed here so the comparison
//! is machine-checked rather than asserted.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine::afun::{a_functions, binom_rational};
use crate::engine::closed::lemma_coeff;
use crate::error::Result;
use crate::fib::{genfib, Seeds};
use crate::scalar::rational::{rational_pow, Rational};
use crate::scalar::GaussianRational;

/// Sign with which the boundary block (4) enters the total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundarySign {
    /// The block is added — the published grouping.
    Added,
    /// The block is subtracted — the sign the base identity forces.
    Subtracted,
}

/// The four blocks of the direct expansion, plus their total, evaluated
/// exactly at concrete parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectExpansion {
    pub seed_term: GaussianRational,
    pub inner_terms: GaussianRational,
    pub head_block: GaussianRational,
    pub boundary_block: GaussianRational,
    pub total: GaussianRational,
}

fn int_pow(base: i64, exp: u32) -> Rational {
    // 0^0 = 1 by convention.
    Rational::from_integer(BigInt::from(base).pow(exp))
}

/// Evaluates the direct expansion at `(n, r, w, k, seeds)` with the chosen
/// boundary sign. Errors with `SingularWeight` at characteristic roots.
pub fn direct_expansion(
    n: u32,
    r: u32,
    w: &GaussianRational,
    k: i64,
    seeds: &Seeds,
    boundary: BoundarySign,
) -> Result<DirectExpansion> {
    assert!(k >= 0);
    let afuns = a_functions(n, r, w)?;
    let g_pow_n = |idx: i64| -> GaussianRational {
        GaussianRational::from_rational(rational_pow(&genfib(seeds, idx), n as u64))
    };
    let seed_term = &afuns.values[r as usize] * &g_pow_n(0);

    let mut inner_terms = GaussianRational::zero();
    for m in 0..=r {
        let mut inner = GaussianRational::zero();
        for j in 1..=n as i64 {
            let scale = GaussianRational::from_rational(int_pow(j, r - m));
            inner += &(&(&scale * &w.pow_u(j as u64)) * &g_pow_n(j));
        }
        let weighted = &GaussianRational::from_rational(binom_rational(r, m))
            * &(&afuns.values[m as usize] * &inner);
        inner_terms += &weighted;
    }

    let mut head_block = GaussianRational::zero();
    for m in 0..=r {
        let mut block = GaussianRational::zero();
        for s in 0..=n {
            let lc = GaussianRational::from_rational(lemma_coeff(n, s));
            for j in 0..s as i64 {
                let e = j + n as i64 - s as i64 + 1;
                let scale = GaussianRational::from_rational(int_pow(e, r - m));
                block += &(&lc * &(&(&scale * &w.pow_u(e as u64)) * &g_pow_n(j)));
            }
        }
        let weighted = &GaussianRational::from_rational(binom_rational(r, m))
            * &(&afuns.values[m as usize] * &block);
        head_block += &weighted;
    }

    let mut boundary_block = GaussianRational::zero();
    for m in 0..=r {
        let mut block = GaussianRational::zero();
        for s in 0..=n + 1 {
            let lc = GaussianRational::from_rational(lemma_coeff(n, s));
            for j in k + 1..=k + s as i64 {
                let e = j + n as i64 - s as i64 + 1;
                let scale = GaussianRational::from_rational(int_pow(e, r - m));
                block += &(&lc * &(&(&scale * &w.pow_u(e as u64)) * &g_pow_n(j)));
            }
        }
        let weighted = &GaussianRational::from_rational(binom_rational(r, m))
            * &(&afuns.values[m as usize] * &block);
        boundary_block += &weighted;
    }

    let partial = &(&seed_term + &inner_terms) + &head_block;
    let total = match boundary {
        BoundarySign::Added => &partial + &boundary_block,
        BoundarySign::Subtracted => &partial - &boundary_block,
    };
    Ok(DirectExpansion {
        seed_term,
        inner_terms,
        head_block,
        boundary_block,
        total,
    })
}
