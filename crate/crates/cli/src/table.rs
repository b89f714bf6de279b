//! The golden identity corpus: canonical JSON fixtures of published
//! closed-form identities, regenerated through the engine and diffed.
//!
//! Fixtures are data, transcribed by hand into the engine's canonical
//! JSON encoding, and deliberately not produced by the code they test.

use fibsum_core::engine::{
    closed_form, closed_form_symbolic, closed_form_from_json, closed_form_to_json,
    generating_function, generating_function_symbolic, rebase_tail, split_alternating,
    split_expr_from_json, split_expr_to_json, AnyClosedForm, SplitExpr,
};
use fibsum_core::error::{Error, Result};
use fibsum_core::scalar::{parse_rational, GaussianRational};
use serde_json::Value;

pub const GOLDEN_CORPUS: &str = include_str!("../fixtures/golden_identities.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub id: String,
    pub status: TableStatus,
    /// `(expected, regenerated)` JSON on mismatch.
    pub diff: Option<(Value, Value)>,
}

fn str_field<'a>(entry: &'a Value, key: &str) -> Result<&'a str> {
    entry
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse(format!("fixture missing string `{key}`")))
}

fn u32_field(entry: &Value, key: &str) -> Result<u32> {
    entry
        .get(key)
        .and_then(Value::as_u64)
        .map(|v| v as u32)
        .ok_or_else(|| Error::Parse(format!("fixture missing integer `{key}`")))
}

/// Regenerates one fixture through the engine and returns
/// `(expected, regenerated)` as canonical JSON.
fn regenerate(entry: &Value) -> Result<(Value, Value)> {
    let kind = str_field(entry, "kind")?;
    let expected = entry
        .get("expected")
        .ok_or_else(|| Error::Parse("fixture missing `expected`".into()))?
        .clone();
    let regenerated = match kind {
        "closed" | "genfunc" => {
            let exp_obj = &expected;
            let n = u32_field(exp_obj, "n")?;
            let r = u32_field(exp_obj, "r")?;
            let w_text = str_field(exp_obj, "w")?;
            let basis = str_field(exp_obj, "basis")?;
            if w_text == "symbolic" {
                let cf = if kind == "genfunc" {
                    generating_function_symbolic(n, r)
                } else {
                    closed_form_symbolic(n, r)
                };
                let cf = if basis == "standard" {
                    rebase_tail(&cf)?
                } else {
                    cf
                };
                closed_form_to_json(&cf)
            } else {
                let w: GaussianRational = w_text.parse()?;
                let cf = if kind == "genfunc" {
                    generating_function(n, r, &w)?
                } else {
                    closed_form(n, r, &w)?
                };
                let cf = if basis == "standard" {
                    rebase_tail(&cf)?
                } else {
                    cf
                };
                closed_form_to_json(&cf)
            }
        }
        "split" => {
            let n = u32_field(entry, "n")?;
            let r = u32_field(entry, "r")?;
            let split = split_alternating(n, r)?;
            let part = match str_field(entry, "part")? {
                "even" => &split.even,
                "odd" => &split.odd,
                other => return Err(Error::Parse(format!("unknown part `{other}`"))),
            };
            split_expr_to_json(part)
        }
        "split-combo" => {
            let parts_json = entry
                .get("parts")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("split-combo needs `parts`".into()))?;
            let mut built = Vec::new();
            for p in parts_json {
                let coeff = parse_rational(str_field(p, "coeff")?)?;
                let n = u32_field(p, "n")?;
                let r = u32_field(p, "r")?;
                let split = split_alternating(n, r)?;
                let expr = match str_field(p, "part")? {
                    "even" => split.even,
                    "odd" => split.odd,
                    other => return Err(Error::Parse(format!("unknown part `{other}`"))),
                };
                built.push((coeff, expr));
            }
            let borrowed: Vec<_> = built.iter().map(|(c, e)| (c.clone(), e)).collect();
            let combo = SplitExpr::linear_combination(&borrowed);
            split_expr_to_json(&combo)
        }
        other => return Err(Error::Parse(format!("unknown fixture kind `{other}`"))),
    };
    Ok((expected, regenerated))
}

/// Structural comparison through the typed layer, so formatting of the
/// fixture file cannot mask or fake a mismatch.
fn entries_equal(kind: &str, expected: &Value, regenerated: &Value) -> bool {
    match kind {
        "closed" | "genfunc" => {
            let a = closed_form_from_json(expected);
            let b = closed_form_from_json(regenerated);
            match (a, b) {
                (Ok(AnyClosedForm::Numeric(x)), Ok(AnyClosedForm::Numeric(y))) => x == y,
                (Ok(AnyClosedForm::Symbolic(x)), Ok(AnyClosedForm::Symbolic(y))) => x == y,
                _ => false,
            }
        }
        _ => {
            let a = split_expr_from_json(expected);
            let b = split_expr_from_json(regenerated);
            matches!((a, b), (Ok(x), Ok(y)) if x == y)
        }
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<Value>> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("corpus JSON: {e}")))?;
    v.as_array()
        .cloned()
        .ok_or_else(|| Error::Parse("corpus must be a JSON array".into()))
}

/// Runs the whole table (or the entry selected by `only`) and reports one
/// row per identity.
pub fn run_table(corpus: &[Value], only: Option<&str>) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for entry in corpus {
        let id = str_field(entry, "id")?.to_string();
        if let Some(filter) = only {
            if id != filter {
                continue;
            }
        }
        let kind = str_field(entry, "kind")?.to_string();
        let (expected, regenerated) = regenerate(entry)?;
        if entries_equal(&kind, &expected, &regenerated) {
            rows.push(TableRow {
                id,
                status: TableStatus::Pass,
                diff: None,
            });
        } else {
            rows.push(TableRow {
                id,
                status: TableStatus::Fail,
                diff: Some((expected, regenerated)),
            });
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse(match only {
            Some(id) => format!("no fixture with id `{id}`"),
            None => "empty fixture corpus".into(),
        }));
    }
    Ok(rows)
}
