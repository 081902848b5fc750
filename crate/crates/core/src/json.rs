//! JSON encodings for inputs, certificates and reports.

use serde_json::{json, Map, Value};

use crate::bipoly::{parse, BiMonomial, BiPoly, FrameChange};
use crate::boundary::BoundaryPoint;
use crate::classifier::{Certificate, MuSign, Verdict};
use crate::error::Error;
use crate::fibration::PhiSigma;
use crate::oneps::Weight;
use crate::points::format_projective;
use crate::scalars::{parse_rational, Scalar};
use crate::singularity::{CurveComponent, SingularLocus};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// A polynomial given as text, or as a JSON object mapping exponent keys
/// "a0,a1;b0,b1,b2" to rational strings.
pub fn parse_input(text: &str) -> Result<BiPoly, Error> {
    let t = text.trim();
    if !t.starts_with('{') {
        return parse(t);
    }
    let map: Map<String, Value> = serde_json::from_str(t).map_err(|e| parse_err(e.to_string()))?;
    let mut terms = Vec::new();
    for (key, val) in map {
        let (a, b) = key.split_once(';').ok_or_else(|| parse_err(format!("bad exponent key {key:?}")))?;
        let ints = |s: &str| -> Result<Vec<u32>, Error> {
            s.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| parse_err(format!("bad exponent key {key:?}")))).collect()
        };
        let (a, b) = (ints(a)?, ints(b)?);
        let (Ok(a), Ok(b)) = (<[u32; 2]>::try_from(a), <[u32; 3]>::try_from(b)) else {
            return Err(parse_err(format!("bad exponent key {key:?}")));
        };
        let c = match &val {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_i64().map(crate::scalars::rat),
            _ => None,
        }
        .ok_or_else(|| parse_err(format!("bad coefficient {val}")))?;
        terms.push((BiMonomial::new(a, b), Scalar::Rat(c)));
    }
    BiPoly::from_terms((2, 2), terms)
}

fn matrix_json<const N: usize>(m: &[[Scalar; N]; N]) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(|c| json!(c.to_spec_string())).collect())).collect())
}

fn matrix_from_json(v: &Value, n: usize) -> Result<Vec<Vec<Scalar>>, Error> {
    let rows = v.as_array().filter(|r| r.len() == n).ok_or_else(|| parse_err("bad frame matrix"))?;
    rows.iter()
        .map(|row| {
            let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| parse_err("bad frame row"))?;
            row.iter()
                .map(|c| {
                    c.as_str().and_then(Scalar::parse_spec_string).ok_or_else(|| parse_err(format!("bad frame entry {c}")))
                })
                .collect()
        })
        .collect()
}

pub fn weight_json(w: &Weight) -> Value {
    json!({ "r": w.r, "s": w.s })
}

pub fn certificate_json(c: &Certificate) -> Value {
    json!({
        "frame": { "g2": matrix_json(&c.frame.g2), "g3": matrix_json(&c.frame.g3) },
        "weight": weight_json(&c.weight),
        "claimed_mu_sign": c.claimed_mu_sign.to_string(),
    })
}

pub fn certificate_from_json(v: &Value) -> Result<Certificate, Error> {
    let frame = v.get("frame").ok_or_else(|| parse_err("certificate has no frame"))?;
    let g2 = matrix_from_json(frame.get("g2").unwrap_or(&Value::Null), 2)?;
    let g3 = matrix_from_json(frame.get("g3").unwrap_or(&Value::Null), 3)?;
    let frame = FrameChange::from_rows(&g2, &g3)?;
    let w = v.get("weight").ok_or_else(|| parse_err("certificate has no weight"))?;
    let ints = |key: &str, n: usize| -> Result<Vec<i64>, Error> {
        let a = w.get(key).and_then(Value::as_array).filter(|a| a.len() == n).ok_or_else(|| parse_err("bad weight"))?;
        a.iter().map(|x| x.as_i64().ok_or_else(|| parse_err("bad weight entry"))).collect()
    };
    let (r, s) = (ints("r", 2)?, ints("s", 3)?);
    let weight = Weight::new_unchecked([r[0], r[1]], [s[0], s[1], s[2]]);
    let claimed_mu_sign = match v.get("claimed_mu_sign").and_then(Value::as_str) {
        Some("Positive") => MuSign::Positive,
        Some("Zero") => MuSign::Zero,
        _ => return Err(parse_err("bad claimed_mu_sign")),
    };
    Ok(Certificate { frame, weight, claimed_mu_sign })
}

/// A document carrying "polynomial" and "certificate"; classify reports qualify.
pub fn certified_document(f: &BiPoly, c: &Certificate) -> Value {
    json!({ "polynomial": f.to_text(), "certificate": certificate_json(c) })
}

pub fn read_certified_document(text: &str) -> Result<(BiPoly, Certificate), Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let f = v.get("polynomial").and_then(Value::as_str).ok_or_else(|| parse_err("document has no polynomial"))?;
    let f = parse_input(f)?;
    let c = v.get("certificate").filter(|c| !c.is_null()).ok_or_else(|| parse_err("document has no certificate"))?;
    Ok((f, certificate_from_json(c)?))
}

fn phi_json(phi: &PhiSigma) -> Value {
    match phi {
        PhiSigma::Constant(l) => json!({ "kind": "Constant", "line": format_projective(l) }),
        PhiSigma::NonConstant => json!({ "kind": "NonConstant" }),
        PhiSigma::Undefined => json!({ "kind": "Undefined" }),
    }
}

pub fn boundary_json(p: &BoundaryPoint) -> Value {
    json!({
        "stratum": p.stratum.to_string(),
        "coordinate": p.coordinate.as_ref().map(|c| c.iter().map(|s| s.to_spec_string()).collect::<Vec<_>>()),
        "equals_gamma1": p.equals_gamma1(),
    })
}

pub fn verdict_json(f: &BiPoly, v: &Verdict) -> Value {
    let r = &v.report;
    let points: Vec<Value> = r
        .points
        .iter()
        .map(|p| {
            json!({
                "point": p.point.to_string(),
                "type": p.local_type.to_string(),
                "fibre_rank": p.fibre_rank,
                "on_contracted_section": p.on_contracted_section,
                "pullback_cone": p.pullback_cone,
            })
        })
        .collect();
    let sections: Vec<Value> =
        r.sections.iter().map(|s| json!({ "point": format_projective(&s.point), "phi": phi_json(&s.phi) })).collect();
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|x| json!({ "clause": x.clause.name(), "point": x.point.as_ref().map(|p| p.to_string()) }))
        .collect();
    json!({
        "polynomial": f.to_text(),
        "class": v.class.to_string(),
        "factor_bidegrees": r.factor_bidegrees,
        "singular_points": points,
        "curves": r.curve_kinds,
        "contracted_sections": sections,
        "violations": violations,
        "certificate": v.certificate.as_ref().map(certificate_json),
    })
}

pub fn locus_json(s: &SingularLocus) -> Value {
    let points: Vec<Value> =
        s.points.iter().map(|p| json!({ "point": p.point.to_string(), "type": p.local_type.to_string() })).collect();
    let curves: Vec<Value> = s
        .curves
        .iter()
        .map(|c| match c {
            CurveComponent::HorizontalSection(q) => json!({ "kind": c.kind(), "point": format_projective(q) }),
            CurveComponent::FibreLine { p1, line } => {
                json!({ "kind": c.kind(), "base": format_projective(p1), "line": format_projective(line) })
            }
            CurveComponent::FibreConic { p1, conic } => {
                json!({ "kind": c.kind(), "base": format_projective(p1), "conic": conic.to_text() })
            }
            CurveComponent::PlaneCurveImage { v, special_points } => json!({
                "kind": c.kind(),
                "map": v.iter().map(|q| q.to_text()).collect::<Vec<_>>(),
                "special_points": special_points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }),
            CurveComponent::SurfaceComponent(g) => json!({ "kind": c.kind(), "polynomial": g.to_text() }),
        })
        .collect();
    json!({ "points": points, "curves": curves })
}
