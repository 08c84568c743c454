//! JSON forms shared by the library and the command-line tool.
//!
//! A symmetric function in the power-sum basis is
//! `{"basis":"p","terms":[{"partition":[2,1],"coeff":"1/2"}, ...]}` with terms
//! in canonical partition order; a Schur expansion uses `"basis":"s"` plus a
//! `"degree"` field. Coefficients are decimal strings, written `num/den`
//! unless the denominator is one.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::registry::{IdentityReport, Status};
use crate::schur::SchurExpansion;
use crate::symfunc::{Rational, SymFunc};

fn partition_json(lambda: &Partition) -> Value {
    json!(lambda.parts())
}

fn parse_partition(v: &Value) -> Result<Partition> {
    let parts = v
        .as_array()
        .ok_or_else(|| Error::Wire("partition must be an array".into()))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|p| p as usize)
                .ok_or_else(|| Error::Wire(format!("bad part {x}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn parse_coeff<T: FromStr>(v: &Value) -> Result<T> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(Error::Wire(format!("bad coefficient {v}"))),
    };
    text.trim()
        .parse()
        .map_err(|_| Error::Wire(format!("bad coefficient {text:?}")))
}

fn terms_of(v: &Value, basis: &str) -> Result<Vec<(Partition, Value)>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Wire("expected a JSON object".into()))?;
    match obj.get("basis").and_then(Value::as_str) {
        Some(b) if b == basis => {}
        other => return Err(Error::Wire(format!("expected basis {basis:?}, found {other:?}"))),
    }
    obj.get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Wire("missing terms array".into()))?
        .iter()
        .map(|t| {
            let p = parse_partition(t.get("partition").unwrap_or(&Value::Null))?;
            let c = t.get("coeff").cloned().unwrap_or(Value::Null);
            Ok((p, c))
        })
        .collect()
}

pub fn symfunc_to_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(l, c)| json!({"partition": partition_json(l), "coeff": c.to_string()}))
        .collect();
    json!({"basis": "p", "terms": terms})
}

pub fn symfunc_from_json(v: &Value) -> Result<SymFunc> {
    let terms = terms_of(v, "p")?
        .into_iter()
        .map(|(l, c)| Ok((l, parse_coeff::<Rational>(&c)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymFunc::from_terms(terms))
}

pub fn symfunc_from_str(text: &str) -> Result<SymFunc> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Wire(e.to_string()))?;
    symfunc_from_json(&v)
}

pub fn schur_to_json(s: &SchurExpansion) -> Value {
    let terms: Vec<Value> = s
        .terms
        .iter()
        .map(|(l, c)| json!({"partition": partition_json(l), "coeff": c.to_string()}))
        .collect();
    json!({"basis": "s", "degree": s.degree, "terms": terms})
}

pub fn schur_from_json(v: &Value) -> Result<SchurExpansion> {
    let degree = v
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Wire("missing degree".into()))? as usize;
    let mut out = SchurExpansion {
        degree,
        ..Default::default()
    };
    for (l, c) in terms_of(v, "s")? {
        if l.size() != degree {
            return Err(Error::Wire(format!("partition {l} does not have size {degree}")));
        }
        let c: BigInt = parse_coeff(&c)?;
        if c != BigInt::from(0) {
            out.terms.insert(l, c);
        }
    }
    Ok(out)
}

pub fn report_to_json(r: &IdentityReport) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), json!(r.id));
    m.insert("cap".into(), json!(r.cap));
    m.insert("tier".into(), json!(r.tier.as_str()));
    m.insert("status".into(), json!(r.status.as_str()));
    m.insert("degrees".into(), json!([r.min_degree, r.cap]));
    m.insert("checks".into(), json!(r.checks));
    m.insert("failed_checks".into(), json!(r.failed_checks));
    if let Some(f) = &r.first_failure {
        m.insert("first_fail_degree".into(), json!(f.degree));
        m.insert("failed_check".into(), json!(f.label));
        m.insert("difference".into(), symfunc_to_json(&f.difference));
        if let Some((l, c)) = &f.witness {
            m.insert(
                "witness".into(),
                json!({"partition": partition_json(l), "coeff": c.to_string()}),
            );
        }
    }
    if let Some(e) = &r.error {
        m.insert("error".into(), json!(e));
    }
    Value::Object(m)
}

/// One aligned line per report for human output.
pub fn report_line(r: &IdentityReport) -> String {
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    };
    let mut line = format!(
        "{status} {:<16} {:<10} degrees {:>2}..{:<2} {:>6} checks",
        r.id,
        r.tier.as_str(),
        r.min_degree,
        r.cap,
        r.checks
    );
    if let Some(f) = &r.first_failure {
        line.push_str(&format!(
            "  first failure at degree {}: {} ({} failed)",
            f.degree, f.label, r.failed_checks
        ));
        if let Some((l, c)) = &f.witness {
            line.push_str(&format!(" witness s{l} coeff {c}"));
        }
    }
    if let Some(e) = &r.error {
        line.push_str(&format!("  error: {e}"));
    }
    line
}
