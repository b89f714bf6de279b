//! The sum engine: synthesis, specialization, evaluation and rendering of
//! closed forms for `sum_{j=0}^k w^j j^r G_j^n`.

pub mod afun;
pub mod charpoly;
pub mod closed;
pub mod direct;
pub mod genfunc;
pub mod json;
pub mod render;
pub mod split;

pub use afun::{a_functions, a_functions_symbolic, bar_a, classic_a, AFunctions};
pub use charpoly::{char_poly, is_singular, CharPoly};
pub use closed::{
    closed_form, closed_form_symbolic, closed_form_theorem, closed_form_theorem_symbolic,
    evaluate_closed, evaluate_head, rebase_tail, Basis, ClosedForm, TailTerm, WeightTag,
};
pub use direct::{direct_expansion, BoundarySign, DirectExpansion};
pub use genfunc::{
    convergence_surd, converges, generating_function, generating_function_analytic,
    generating_function_symbolic,
};
pub use json::{
    closed_form_from_json, closed_form_to_json, split_expr_from_json, split_expr_to_json,
    split_to_json, AnyClosedForm,
};
pub use render::{closed_form_latex, closed_form_text, poly_text, ratfun_text, split_latex, split_text};
pub use split::{split_alternating, EvenOddSplit, SplitExpr, SplitTail};
