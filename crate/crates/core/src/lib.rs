//! Exact synthesis, evaluation and verification of closed forms for
//! weighted generalized Fibonacci power sums
//! `S_k^n(w, r) = sum_{j=0}^k w^j j^r G_j^n`,
//! where `G` is any sequence with `G_{j+1} = G_j + G_{j-1}`.
//!
//! Everything is exact: scalars are arbitrary-precision Gaussian
//! rationals, symbolic coefficients are reduced rational functions of the
//! weight, and the convergence decision for infinite sums is made in
//! `Q(sqrt(5))` without floating point.
//!
//! The crate is organized as:
//! - [`scalar`]: rationals, Gaussian rationals, quadratic surd signs;
//! - [`polyrat`]: dense polynomials and rational functions with `D = w d/dw`;
//! - [`fib`]: fast-doubling Fibonacci, generalized sequences, Fibonomials;
//! - [`engine`]: closed forms, generating functions, alternating splits;
//! - [`oracle`]: independent brute-force ground truth and sweeps.

pub mod coeff;
pub mod engine;
pub mod error;
pub mod fib;
pub mod oracle;
pub mod polyrat;
pub mod scalar;

pub use coeff::CoeffField;
pub use engine::{
    a_functions, a_functions_symbolic, bar_a, char_poly, classic_a, closed_form,
    closed_form_symbolic, closed_form_theorem, converges, evaluate_closed, evaluate_head,
    generating_function, generating_function_symbolic, rebase_tail, split_alternating,
    AnyClosedForm, Basis, ClosedForm, EvenOddSplit, SplitExpr, TailTerm, WeightTag,
};
pub use error::{Error, Result};
pub use fib::{fib, fibonomial, genfib, lucas, Seeds};
pub use oracle::{
    brute_sum, knuth_identity_residual, run_sweep, SweepConfig, VerificationReport,
};
pub use polyrat::{Poly, RatFun};
pub use scalar::{GaussianRational, QuadraticSurd, Rational};
