//! JSON form of a [`SymFunc`]:
//! `{"degree": 3, "basis": "e", "terms": [{"partition": [2,1], "num": 1, "den": 1}]}`.
//!
//! Numerators and denominators are JSON integers when they fit in `i64`, and
//! decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{Basis, Rational, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub(crate) fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub(crate) fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::parse(0, format!("`{n}` is not an integer"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::parse(0, format!("`{s}` is not an integer"))),
        _ => Err(Error::parse(0, "expected an integer")),
    }
}

pub(crate) fn rational_from_json(obj: &Value) -> Result<Rational> {
    let num = big_from_json(obj.get("num").ok_or_else(|| Error::parse(0, "missing `num`"))?)?;
    let den = match obj.get("den") {
        Some(d) => big_from_json(d)?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

impl SymFunc {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(l, c)| {
                json!({
                    "partition": l.parts(),
                    "num": big_to_json(c.numer()),
                    "den": big_to_json(c.denom()),
                })
            })
            .collect();
        json!({"degree": self.degree(), "basis": self.basis().name(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<SymFunc> {
        let degree = v
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse(0, "missing `degree`"))? as usize;
        let basis: Basis = v
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse(0, "missing `basis`"))?
            .parse()?;
        let mut terms = Vec::new();
        for t in v.get("terms").and_then(Value::as_array).into_iter().flatten() {
            let parts = t
                .get("partition")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::parse(0, "missing `partition`"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::parse(0, "partition parts must be integers"))
                })
                .collect::<Result<Vec<usize>>>()?;
            terms.push((Partition::new(parts)?, rational_from_json(t)?));
        }
        SymFunc::from_terms(degree, basis, terms)
    }
}
