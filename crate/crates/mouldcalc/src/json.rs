//! JSON forms: `{"terms": [{"basis": "...", "coeff": "p/q"}]}` for linear
//! combinations, `{"default": "0", "entries": {"[1.2]": "1/2"}}` for tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use mouldcalc_core::linalg::{parse_rational, BasisDisplay};
use mouldcalc_core::{LinComb, Rational};
use serde_json::{json, Value};

use crate::{usage, Result};

struct Shown<'a, B>(&'a B);

impl<B: BasisDisplay> fmt::Display for Shown<'_, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_basis(f)
    }
}

pub fn basis_string<B: BasisDisplay>(b: &B) -> String {
    Shown(b).to_string()
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn lincomb<B: Ord + BasisDisplay>(lc: &LinComb<B>) -> Value {
    let terms: Vec<Value> = lc
        .iter()
        .map(|(b, c)| json!({"basis": basis_string(b), "coeff": c.to_string()}))
        .collect();
    json!({ "terms": terms })
}

pub fn parse_coeff(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into())),
        _ => usage(format!("expected a rational as a string, found {}", v)),
    }
}

pub fn parse_lincomb<B>(v: &Value) -> Result<LinComb<B>>
where
    B: Ord + FromStr<Err = mouldcalc_core::Error>,
{
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| crate::Error::Usage("expected an object with a `terms` array".into()))?;
    let mut out = LinComb::zero();
    for t in terms {
        let basis = t
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| crate::Error::Usage("term without a `basis` string".into()))?;
        let coeff = t
            .get("coeff")
            .ok_or_else(|| crate::Error::Usage("term without a `coeff`".into()))?;
        out.add_term(basis.parse()?, parse_coeff(coeff)?);
    }
    Ok(out)
}

/// A table with keys parsed by `B::from_str` and an explicit default.
pub fn parse_table<B>(text: &str) -> Result<(BTreeMap<B, Rational>, Rational)>
where
    B: Ord + FromStr<Err = mouldcalc_core::Error>,
{
    let v: Value = serde_json::from_str(text)?;
    let default = match v.get("default") {
        Some(d) => parse_coeff(d)?,
        None => Rational::from_integer(0.into()),
    };
    let mut entries = BTreeMap::new();
    if let Some(e) = v.get("entries") {
        let obj = e
            .as_object()
            .ok_or_else(|| crate::Error::Usage("`entries` must be an object".into()))?;
        for (k, c) in obj {
            entries.insert(k.parse()?, parse_coeff(c)?);
        }
    }
    Ok((entries, default))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mouldcalc_core::words::{qsh, Word};

    #[test]
    fn roundtrip() {
        let u: Word = "[1]".parse().unwrap();
        let v: Word = "[2]".parse().unwrap();
        let lc = qsh(&u, &v);
        let j = lincomb(&lc);
        assert_eq!(j["terms"][2]["basis"], "[3]");
        assert_eq!(parse_lincomb::<Word>(&j).unwrap(), lc);
    }

    #[test]
    fn tables() {
        let (t, d) = parse_table::<Word>(r#"{"default":"0","entries":{"[1.2]":"1/2"}}"#).unwrap();
        assert_eq!(d, Rational::from_integer(0.into()));
        assert_eq!(t.len(), 1);
        assert!(parse_table::<Word>(r#"{"entries":{"[x]":"1"}}"#).is_err());
    }
}
