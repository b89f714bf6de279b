//! Exact scalar arithmetic: rationals, Gaussian rationals, and sign
//! decisions in Q(sqrt(5)). Everything here is immutable and pure; no
//! floating point anywhere.

pub mod gaussian;
pub mod rational;
pub mod surd;

pub use gaussian::{gauss_arith, GaussOp, GaussianRational};
pub use rational::{
    parse_rational, rat, rat_int, rat_normalize, rational_canonical, rational_pow, rational_sign,
    render_rational, Rational,
};
pub use surd::{surd_sign, QuadraticSurd};
