//! The stable JSON encoding of closed forms and splits.
//!
//! Closed form:
//! ```json
//! {"n":1,"r":1,"w":"1"|"symbolic","basis":"standard"|"shifted",
//!  "head":[{"j":0,"coeff":"1"}],
//!  "tail":[{"offset":0,"w_exp_offset":2,"poly_k":["-1","1"]}],
//!  "meta":{"singular":false,"extension":false}}
//! ```
//! Scalars use the exact text formats; symbolic coefficients use the
//! rational-function format `(n0,n1,...)/(d0,d1,...)`. A head-only form
//! (infinite sum) has `"tail":[]`. Parsing then rendering reproduces the
//! value bit-exactly.
//!
//! Split (both parts, implicit `(-1)^K` on every tail term):
//! ```json
//! {"n":1,"r":0,
//!  "even":{"head":[{"j":0,"coeff":"3/5"}],"tail":[{"offset":0,"poly_k":["2/5"]}]},
//!  "odd":{...}}
//! ```

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::coeff::CoeffField;
use crate::engine::closed::{Basis, ClosedForm, TailTerm, WeightTag};
use crate::engine::split::{EvenOddSplit, SplitExpr, SplitTail};
use crate::error::{Error, Result};
use crate::polyrat::RatFun;
use crate::scalar::rational::{parse_rational, render_rational};
use crate::scalar::GaussianRational;

/// A parsed closed form in either coefficient mode.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyClosedForm {
    Numeric(ClosedForm<GaussianRational>),
    Symbolic(ClosedForm<RatFun>),
}

pub fn closed_form_to_json<C: CoeffField>(cf: &ClosedForm<C>) -> Value {
    let w = match &cf.weight {
        WeightTag::Numeric(w) => w.to_string(),
        WeightTag::Symbolic => "symbolic".to_string(),
    };
    let basis = match cf.basis {
        Basis::Standard => "standard",
        Basis::Shifted => "shifted",
    };
    let head: Vec<Value> = cf
        .head
        .iter()
        .enumerate()
        .map(|(j, c)| json!({"j": j, "coeff": c.render()}))
        .collect();
    let tail: Vec<Value> = cf
        .tail
        .iter()
        .map(|t| {
            json!({
                "offset": t.offset,
                "w_exp_offset": t.w_exp_offset,
                "poly_k": t.poly_k.iter().map(|c| c.render()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "n": cf.n,
        "r": cf.r,
        "w": w,
        "basis": basis,
        "head": head,
        "tail": tail,
        "meta": {"singular": false, "extension": cf.extension},
    })
}

fn field_u32(obj: &Map<String, Value>, key: &str) -> Result<u32> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as u32)
        .ok_or_else(|| Error::Parse(format!("missing integer field `{key}`")))
}

fn field_i64(obj: &Map<String, Value>, key: &str) -> Result<i64> {
    obj.get(key)
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Parse(format!("missing integer field `{key}`")))
}

fn field_str<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a str> {
    obj.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse(format!("missing string field `{key}`")))
}

fn as_object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))
}

fn as_array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("field `{key}` must be an array")))
}

fn parse_generic<C: CoeffField>(
    obj: &Map<String, Value>,
    weight: WeightTag,
    w_ring: C,
) -> Result<ClosedForm<C>> {
    let n = field_u32(obj, "n")?;
    let r = field_u32(obj, "r")?;
    let basis = match field_str(obj, "basis")? {
        "standard" => Basis::Standard,
        "shifted" => Basis::Shifted,
        other => return Err(Error::Parse(format!("unknown basis `{other}`"))),
    };
    let head_arr = as_array(
        obj.get("head")
            .ok_or_else(|| Error::Parse("missing `head`".into()))?,
        "head",
    )?;
    let mut head = vec![C::zero(); n as usize + 1];
    for entry in head_arr {
        let e = as_object(entry)?;
        let j = field_u32(e, "j")? as usize;
        if j >= head.len() {
            return Err(Error::Parse(format!("head index {j} exceeds n")));
        }
        head[j] = C::parse_text(field_str(e, "coeff")?)?;
    }
    let tail_arr = as_array(
        obj.get("tail")
            .ok_or_else(|| Error::Parse("missing `tail`".into()))?,
        "tail",
    )?;
    let mut tail = Vec::with_capacity(tail_arr.len());
    for entry in tail_arr {
        let e = as_object(entry)?;
        let poly = as_array(
            e.get("poly_k")
                .ok_or_else(|| Error::Parse("missing `poly_k`".into()))?,
            "poly_k",
        )?
        .iter()
        .map(|v| {
            v.as_str()
                .ok_or_else(|| Error::Parse("poly_k entries must be strings".into()))
                .and_then(C::parse_text)
        })
        .collect::<Result<Vec<C>>>()?;
        tail.push(TailTerm {
            offset: field_i64(e, "offset")?,
            w_exp_offset: field_i64(e, "w_exp_offset")?,
            poly_k: poly,
        });
    }
    let extension = obj
        .get("meta")
        .and_then(|m| m.get("extension"))
        .and_then(Value::as_bool)
        .unwrap_or(false);
    let head_only = tail.is_empty();
    Ok(ClosedForm {
        n,
        r,
        weight,
        w_ring,
        basis,
        head,
        tail,
        head_only,
        extension,
    })
}

pub fn closed_form_from_json(v: &Value) -> Result<AnyClosedForm> {
    let obj = as_object(v)?;
    let w_text = field_str(obj, "w")?;
    if w_text == "symbolic" {
        Ok(AnyClosedForm::Symbolic(parse_generic(
            obj,
            WeightTag::Symbolic,
            RatFun::var(),
        )?))
    } else {
        let w: GaussianRational = w_text.parse()?;
        Ok(AnyClosedForm::Numeric(parse_generic(
            obj,
            WeightTag::Numeric(w.clone()),
            w,
        )?))
    }
}

pub fn split_expr_to_json(e: &SplitExpr) -> Value {
    let head: Vec<Value> = e
        .head
        .iter()
        .enumerate()
        .map(|(j, c)| json!({"j": j, "coeff": render_rational(c)}))
        .collect();
    let tail: Vec<Value> = e
        .tail
        .iter()
        .map(|t| {
            json!({
                "offset": t.offset,
                "poly_k": t.poly_k.iter().map(render_rational).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({"head": head, "tail": tail})
}

pub fn split_expr_from_json(v: &Value) -> Result<SplitExpr> {
    let obj = as_object(v)?;
    let head_arr = as_array(
        obj.get("head")
            .ok_or_else(|| Error::Parse("missing `head`".into()))?,
        "head",
    )?;
    let max_j = head_arr
        .iter()
        .map(|e| as_object(e).and_then(|o| field_u32(o, "j")))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0) as usize;
    let mut head = vec![crate::scalar::Rational::zero(); max_j + 1];
    for entry in head_arr {
        let e = as_object(entry)?;
        head[field_u32(e, "j")? as usize] = parse_rational(field_str(e, "coeff")?)?;
    }
    let tail_arr = as_array(
        obj.get("tail")
            .ok_or_else(|| Error::Parse("missing `tail`".into()))?,
        "tail",
    )?;
    let mut tail = Vec::with_capacity(tail_arr.len());
    for entry in tail_arr {
        let e = as_object(entry)?;
        let poly = as_array(
            e.get("poly_k")
                .ok_or_else(|| Error::Parse("missing `poly_k`".into()))?,
            "poly_k",
        )?
        .iter()
        .map(|v| {
            v.as_str()
                .ok_or_else(|| Error::Parse("poly_k entries must be strings".into()))
                .and_then(parse_rational)
        })
        .collect::<Result<Vec<_>>>()?;
        tail.push(SplitTail {
            offset: field_i64(e, "offset")?,
            poly_k: poly,
        });
    }
    Ok(SplitExpr { head, tail })
}

pub fn split_to_json(s: &EvenOddSplit) -> Value {
    json!({
        "n": s.n,
        "r": s.r,
        "even": split_expr_to_json(&s.even),
        "odd": split_expr_to_json(&s.odd),
    })
}
