//! Infinite sums: the exact convergence predicate and head-only closed
//! forms (generating functions) for `sum_{j>=0} w^j j^r G_j^n`.
//!
//! The tail terms vanish as k grows exactly when `|w| phi^n < 1` (phi the
//! golden ratio), for generic seeds. Squaring removes the square roots on
//! the |w| side and `phi^{2n} = (L_{2n} + F_{2n} sqrt(5)) / 2` removes them
//! on the other, so the decision reduces to the exact sign of an element
//! of Q(sqrt(5)). Equality counts as divergent: `w^k G_k^n` then circles a
//! fixed magnitude instead of shrinking.

use crate::engine::closed::{closed_form, closed_form_symbolic, ClosedForm};
use crate::error::{Error, Result};
use crate::fib::{fib, lucas};
use crate::polyrat::RatFun;
use crate::scalar::{GaussianRational, QuadraticSurd, Rational};

/// The surd `|w|^2 phi^{2n} - 1` whose sign decides convergence.
pub fn convergence_surd(w: &GaussianRational, n: u32) -> QuadraticSurd {
    let norm = w.norm_sqr();
    let half = Rational::new(1.into(), 2.into());
    let a = &norm * Rational::from_integer(lucas(2 * n as i64)) * &half - Rational::from_integer(1.into());
    let b = norm * Rational::from_integer(fib(2 * n as i64)) * half;
    QuadraticSurd::new(a, b)
}

/// True iff `w^k G_k^n -> 0` for generic seeds, i.e. `|w|^2 phi^{2n} < 1`.
pub fn converges(w: &GaussianRational, n: u32) -> bool {
    convergence_surd(w, n).sign() < 0
}

fn head_only(mut cf: ClosedForm<GaussianRational>) -> ClosedForm<GaussianRational> {
    cf.tail.clear();
    cf.head_only = true;
    cf.extension = cf.n >= 2 && cf.r >= 1;
    cf
}

/// Head-only closed form of the infinite sum. Errors with
/// `DivergentWeight` when the convergence predicate fails and
/// `SingularWeight` when no closed form exists at `w`. For n >= 2 with
/// r >= 1 the result is flagged as an extension: those values follow from
/// the same construction but are verified by partial-sum decay only.
pub fn generating_function(n: u32, r: u32, w: &GaussianRational) -> Result<ClosedForm<GaussianRational>> {
    if !converges(w, n) {
        return Err(Error::DivergentWeight);
    }
    Ok(head_only(closed_form(n, r, w)?))
}

/// Same as `generating_function` but skips the convergence check: the
/// analytic head value at a divergent weight. Singularity is still an
/// error.
pub fn generating_function_analytic(
    n: u32,
    r: u32,
    w: &GaussianRational,
) -> Result<ClosedForm<GaussianRational>> {
    Ok(head_only(closed_form(n, r, w)?))
}

/// Symbolic head-only form; coefficients are rational functions of the
/// weight. Flagged as an extension for n >= 2 with r >= 1.
pub fn generating_function_symbolic(n: u32, r: u32) -> ClosedForm<RatFun> {
    let mut cf = closed_form_symbolic(n, r);
    cf.tail.clear();
    cf.head_only = true;
    cf.extension = n >= 2 && r >= 1;
    cf
}
