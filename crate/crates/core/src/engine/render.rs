//! Human-readable renderings of closed forms: plain text and LaTeX.
//!
//! These are presentation surfaces; the JSON encoding in `json.rs` is the
//! stable contract. Output is deterministic for identical inputs.

use num_traits::{One, Signed, Zero};

use crate::coeff::CoeffField;
use crate::engine::closed::{ClosedForm, WeightTag};
use crate::engine::split::{EvenOddSplit, SplitExpr};
use crate::polyrat::{Poly, RatFun};
use crate::scalar::{GaussianRational, Rational};

#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

/// A coefficient split into an extracted sign and a magnitude body.
/// An empty body means a factor of one, omitted before another factor.
#[doc(hidden)]
pub struct TermCoeff {
    negative: bool,
    body: String,
}

/// Coefficient kinds the renderer understands. Implemented for the two
/// engine modes (numeric Gaussian scalars and symbolic rational
/// functions).
pub trait RenderCoeff: CoeffField {
    #[doc(hidden)]
    fn coeff_body(&self, style: Style) -> TermCoeff;
}

fn rational_magnitude(q: &Rational, style: Style) -> String {
    let abs = q.abs();
    if abs.is_one() {
        return String::new();
    }
    match style {
        Style::Text => abs.to_string(),
        Style::Latex => {
            if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            }
        }
    }
}

impl RenderCoeff for GaussianRational {
    fn coeff_body(&self, style: Style) -> TermCoeff {
        if self.is_real() {
            TermCoeff {
                negative: self.re.is_negative(),
                body: rational_magnitude(&self.re, style),
            }
        } else {
            let inner = match style {
                Style::Text => self.to_string(),
                Style::Latex => self.to_string().replace('*', " "),
            };
            TermCoeff {
                negative: false,
                body: format!("({inner})"),
            }
        }
    }
}

impl RenderCoeff for RatFun {
    fn coeff_body(&self, style: Style) -> TermCoeff {
        let body = match style {
            Style::Text => {
                if self.is_polynomial() {
                    format!("({})", poly_pretty(self.num(), "w", Style::Text))
                } else {
                    format!(
                        "(({})/({}))",
                        poly_pretty(self.num(), "w", Style::Text),
                        poly_pretty(self.den(), "w", Style::Text)
                    )
                }
            }
            Style::Latex => {
                if self.is_polynomial() {
                    format!("\\left({}\\right)", poly_pretty(self.num(), "w", Style::Latex))
                } else {
                    format!(
                        "\\frac{{{}}}{{{}}}",
                        poly_pretty(self.num(), "w", Style::Latex),
                        poly_pretty(self.den(), "w", Style::Latex)
                    )
                }
            }
        };
        TermCoeff {
            negative: false,
            body,
        }
    }
}

fn var_power(var: &str, deg: usize, style: Style) -> String {
    match (deg, style) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (_, Style::Text) => format!("{var}^{deg}"),
        (_, Style::Latex) => format!("{var}^{{{deg}}}"),
    }
}

fn join_factor(out: &mut String, body: &str, var_part: &str, style: Style) {
    match (body.is_empty(), var_part.is_empty()) {
        (true, true) => out.push('1'),
        (true, false) => out.push_str(var_part),
        (false, true) => out.push_str(body),
        (false, false) => {
            out.push_str(body);
            out.push_str(match style {
                Style::Text => "*",
                Style::Latex => " ",
            });
            out.push_str(var_part);
        }
    }
}

/// Pretty polynomial over any renderable coefficients, descending powers.
fn poly_terms<C: RenderCoeff>(coeffs: &[C], var: &str, style: Style) -> String {
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let tc = c.coeff_body(style);
        if out.is_empty() {
            if tc.negative {
                out.push('-');
            }
        } else if tc.negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        join_factor(&mut out, &tc.body, &var_power(var, deg, style), style);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_pretty(p: &Poly, var: &str, style: Style) -> String {
    poly_terms(p.coeffs(), var, style)
}

/// Pretty polynomial in `w`, descending powers (text style).
pub fn poly_text(p: &Poly) -> String {
    poly_pretty(p, "w", Style::Text)
}

/// Pretty rational function in `w` (text style).
pub fn ratfun_text(f: &RatFun) -> String {
    if f.is_polynomial() {
        poly_pretty(f.num(), "w", Style::Text)
    } else {
        format!(
            "({})/({})",
            poly_pretty(f.num(), "w", Style::Text),
            poly_pretty(f.den(), "w", Style::Text)
        )
    }
}

/// The factor `base^(k+e)`; `None` when the weight is one.
fn weight_power(weight: &WeightTag, exp_offset: i64, style: Style) -> Option<String> {
    let exp = match style {
        Style::Text => format!("^(k+{exp_offset})"),
        Style::Latex => format!("^{{k+{exp_offset}}}"),
    };
    match weight {
        WeightTag::Symbolic => Some(format!("w{exp}")),
        WeightTag::Numeric(w) => {
            if w == &GaussianRational::one() {
                return None;
            }
            let text = w.to_string();
            let bare = text.chars().all(|c| c.is_ascii_digit()) || text == "i";
            let base = match (bare, style) {
                (true, _) => text,
                (false, Style::Text) => format!("({text})"),
                (false, Style::Latex) => format!("\\left({}\\right)", text.replace('*', " ")),
            };
            Some(format!("{base}{exp}"))
        }
    }
}

/// A `poly_k` block as a single factor: constants collapse to a signed
/// coefficient, longer polynomials render parenthesized.
fn kpoly_factor<C: RenderCoeff>(poly: &[C], var: &str, style: Style) -> TermCoeff {
    match poly.len() {
        0 => TermCoeff {
            negative: false,
            body: "0".into(),
        },
        1 => poly[0].coeff_body(style),
        _ => TermCoeff {
            negative: false,
            body: format!("({})", poly_terms(poly, var, style)),
        },
    }
}

fn g_symbol(n: u32, sub: &str, style: Style) -> String {
    let power = match (n, style) {
        (1, _) => String::new(),
        (_, Style::Text) => format!("^{n}"),
        (_, Style::Latex) => format!("^{{{n}}}"),
    };
    let needs_braces = sub.len() > 1 || style == Style::Latex;
    if needs_braces {
        format!("G_{{{sub}}}{power}")
    } else {
        format!("G_{sub}{power}")
    }
}

fn push_term(out: &mut String, negative: bool, factors: &[&str], style: Style) {
    let sep = match style {
        Style::Text => "*",
        Style::Latex => " ",
    };
    let body = factors
        .iter()
        .filter(|f| !f.is_empty())
        .copied()
        .collect::<Vec<_>>()
        .join(sep);
    let body = if body.is_empty() { "1".to_string() } else { body };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    out.push_str(&body);
}

fn render_closed<C: RenderCoeff>(cf: &ClosedForm<C>, style: Style) -> String {
    let mut out = String::new();
    for (j, coeff) in cf.head.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let g = g_symbol(cf.n, &j.to_string(), style);
        let tc = coeff.coeff_body(style);
        push_term(&mut out, tc.negative, &[&tc.body, &g], style);
    }
    for term in &cf.tail {
        if term.poly_k.is_empty() {
            continue;
        }
        let sub = if term.offset == 0 {
            "k".to_string()
        } else {
            format!("k+{}", term.offset)
        };
        let g = g_symbol(cf.n, &sub, style);
        let wp = weight_power(&cf.weight, term.w_exp_offset, style).unwrap_or_default();
        let tc = kpoly_factor(&term.poly_k, "k", style);
        push_term(&mut out, tc.negative, &[&wp, &tc.body, &g], style);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Plain-text rendering, head terms first, then tail terms with explicit
/// weight-power factors.
pub fn closed_form_text<C: RenderCoeff>(cf: &ClosedForm<C>) -> String {
    render_closed(cf, Style::Text)
}

pub fn closed_form_latex<C: RenderCoeff>(cf: &ClosedForm<C>) -> String {
    render_closed(cf, Style::Latex)
}

fn render_split_expr(n: u32, expr: &SplitExpr, style: Style) -> String {
    let mut out = String::new();
    for (j, coeff) in expr.head.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let g = g_symbol(n, &j.to_string(), style);
        let tc = GaussianRational::from_rational(coeff.clone()).coeff_body(style);
        push_term(&mut out, tc.negative, &[&tc.body, &g], style);
    }
    let sign_factor = match style {
        Style::Text => "(-1)^K",
        Style::Latex => "(-1)^{K}",
    };
    for term in &expr.tail {
        if term.poly_k.is_empty() {
            continue;
        }
        let sub = if term.offset == 0 {
            "2K".to_string()
        } else {
            format!("2K+{}", term.offset)
        };
        let g = g_symbol(n, &sub, style);
        let gauss_poly: Vec<GaussianRational> = term
            .poly_k
            .iter()
            .map(|q| GaussianRational::from_rational(q.clone()))
            .collect();
        let tc = kpoly_factor(&gauss_poly, "K", style);
        push_term(&mut out, tc.negative, &[sign_factor, &tc.body, &g], style);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn split_text(s: &EvenOddSplit) -> String {
    format!(
        "even: {}\nodd:  {}",
        render_split_expr(s.n, &s.even, Style::Text),
        render_split_expr(s.n, &s.odd, Style::Text)
    )
}

pub fn split_latex(s: &EvenOddSplit) -> String {
    format!(
        "even: {}\\\\\nodd: {}",
        render_split_expr(s.n, &s.even, Style::Latex),
        render_split_expr(s.n, &s.odd, Style::Latex)
    )
}
