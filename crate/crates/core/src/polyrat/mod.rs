//! Univariate dense polynomials and reduced rational functions over the
//! exact scalar field, with the operator `D = w d/dw`.

pub mod poly;
pub mod ratfun;

pub use poly::{poly_arith, Poly, PolyOp};
pub use ratfun::{apply_d, ratfun_reduce, RatFun};
