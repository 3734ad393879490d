//! JSON encodings of pencils, reports and samples.
//!
//! Rationals are written as JSON integers when integral and within `i64`, otherwise as
//! strings `"a/b"`. Readers accept integers, strings, and finite decimal numbers.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::numeric::{parse_rat, rat_to_string, Rat, SymMat};
use crate::pencil::{MembershipResult, Pencil};
use crate::poly::Poly2;
use crate::region::{CurveSample, Raster, RigidConvexityReport};
use crate::stability::StabilityReport;

pub fn rat_to_json(r: &Rat) -> Value {
    if r.denom().is_one() {
        if let Some(v) = r.numer().to_i64() {
            return Value::from(v);
        }
    }
    Value::String(rat_to_string(r))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(BigInt::from(i)))
            } else {
                parse_rat(&n.to_string())
            }
        }
        Value::String(s) => parse_rat(s),
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

fn matrix_to_json(m: &SymMat) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(rat_to_json).collect()))
            .collect(),
    )
}

fn matrix_from_json(v: &Value, name: &str) -> Result<SymMat> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{name} must be an array of rows")))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse(format!("{name} rows must be arrays")))?
                .iter()
                .map(rat_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SymMat::new(rows)
}

/// `{ "n": int, "F0": [[...]], "Fx": [[...]], "Fy": [[...]], "sigma": ±1 | null }`
pub fn pencil_to_json(pc: &Pencil) -> Value {
    json!({
        "n": pc.n,
        "F0": matrix_to_json(&pc.f0),
        "Fx": matrix_to_json(&pc.fx),
        "Fy": matrix_to_json(&pc.fy),
        "sigma": pc.sigma,
    })
}

pub fn pencil_from_json(v: &Value) -> Result<Pencil> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("pencil must be a JSON object".into()))?;
    let field = |k: &str| obj.get(k).ok_or_else(|| Error::Parse(format!("missing field {k:?}")));
    let n = field("n")?
        .as_u64()
        .ok_or_else(|| Error::Parse("n must be a positive integer".into()))? as usize;
    let f0 = matrix_from_json(field("F0")?, "F0")?;
    let fx = matrix_from_json(field("Fx")?, "Fx")?;
    let fy = matrix_from_json(field("Fy")?, "Fy")?;
    let sigma = match obj.get("sigma") {
        None | Some(Value::Null) => None,
        Some(s) => Some(
            s.as_i64()
                .filter(|s| *s == 1 || *s == -1)
                .ok_or_else(|| Error::Parse("sigma must be 1, -1 or null".into()))? as i8,
        ),
    };
    if f0.size() != n {
        return Err(Error::Parse(format!("n = {n} but F0 is {0}x{0}", f0.size())));
    }
    Pencil::from_parts(f0, fx, fy, sigma)
}

/// `{ "verdict", "routh_first_column", "bezout_signature": [p, m, z], "interlacing",
/// "cauchy_index", "right_half_roots", "agreement" }`
pub fn report_to_json(r: &StabilityReport) -> Value {
    let s = r.bezout_signature;
    json!({
        "verdict": r.verdict.as_str(),
        "routh_first_column": r.routh_first_column.iter().map(rat_to_json).collect::<Vec<_>>(),
        "bezout_signature": [s.plus, s.minus, s.zero],
        "interlacing": r.interlacing,
        "cauchy_index": r.cauchy_index_value,
        "right_half_roots": r.right_half_roots,
        "agreement": r.agreement,
    })
}

pub fn membership_to_json(m: &MembershipResult) -> Value {
    json!({
        "status": m.status.as_str(),
        "min_eig": m.min_eig,
        "exact_det": rat_to_json(&m.exact_det),
    })
}

/// Terms in display order plus a human-readable rendering.
pub fn poly2_to_json(f: &Poly2) -> Value {
    let mut keys: Vec<_> = f.terms().map(|(k, _)| *k).collect();
    keys.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
    let terms: Vec<Value> = keys
        .iter()
        .map(|&(i, j)| json!({ "x": i, "y": j, "c": rat_to_json(&f.coeff(i, j)) }))
        .collect();
    json!({
        "degree": f.total_degree(),
        "terms": terms,
        "text": f.to_string(),
    })
}

pub fn rigid_to_json(r: &RigidConvexityReport) -> Value {
    let probes: Vec<Value> = r
        .per_direction
        .iter()
        .map(|p| {
            json!({
                "direction": [rat_to_json(&p.direction.0), rat_to_json(&p.direction.1)],
                "real_root_count": p.real_root_count,
                "restricted_degree": p.restricted_degree,
            })
        })
        .collect();
    json!({
        "verdict": r.verdict.as_str(),
        "degree_f": r.degree_f,
        "directions_tested": r.directions_tested,
        "degenerate_skipped": r.degenerate_skipped,
        "generic_count": r.generic_count,
        "per_direction": probes,
    })
}

pub fn curve_to_json(samples: &[CurveSample]) -> Value {
    Value::Array(
        samples
            .iter()
            .map(|s| {
                json!({
                    "omega": rat_to_json(&s.omega),
                    "x": rat_to_json(&s.x),
                    "y": rat_to_json(&s.y),
                })
            })
            .collect(),
    )
}

pub fn raster_to_json(r: &Raster) -> Value {
    let mut m = Map::new();
    m.insert("bbox".into(), json!([r.bbox.x0, r.bbox.y0, r.bbox.x1, r.bbox.y1]));
    m.insert("width".into(), json!(r.width));
    m.insert("height".into(), json!(r.height));
    m.insert("rows".into(), json!(r.rows_text()));
    Value::Object(m)
}
