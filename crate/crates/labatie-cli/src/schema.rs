//! The JSON document emitted by every subcommand.
//!
//! Top level: `{command, field: {kind, modulus?}, inputs: [string, string],
//! trace?, systems?, points?, closure_count?, verification?}`. Rational
//! scalars serialize as "num/den" strings, prime-field scalars as integers;
//! polynomials as canonical text that re-parses exactly. serde_json keeps
//! object keys sorted, so output is byte-stable across runs.

use serde_json::{json, Map, Value};

use labatie::elimination::{EliminationTrace, TriangularSystem, VerificationReport};
use labatie::field::{FieldElement, FieldSpec};
use labatie::parser::{format_poly, format_unipoly};
use labatie::solver::SolutionReport;

pub fn scalar(value: &FieldElement) -> Value {
    match value.as_rational() {
        Some(r) => Value::String(format!("{}/{}", r.numer(), r.denom())),
        None => json!(value.as_residue().unwrap()),
    }
}

pub fn field(spec: FieldSpec) -> Value {
    match spec {
        FieldSpec::Rationals => json!({ "kind": "rationals" }),
        FieldSpec::PrimeField { modulus } => {
            json!({ "kind": "prime_field", "modulus": modulus })
        }
    }
}

pub fn document(command: &str, spec: FieldSpec, inputs: (&str, &str)) -> Map<String, Value> {
    let mut doc = Map::new();
    doc.insert("command".into(), json!(command));
    doc.insert("field".into(), field(spec));
    doc.insert("inputs".into(), json!([inputs.0, inputs.1]));
    doc
}

pub fn trace(trace: &EliminationTrace) -> Value {
    let polys = |v: &[labatie::BiPoly]| -> Vec<String> { v.iter().map(format_poly).collect() };
    let upolys = |v: &[labatie::UniPoly]| -> Vec<String> { v.iter().map(format_unipoly).collect() };
    json!({
        "steps": trace.steps,
        "remainders": polys(&trace.remainders),
        "quotients": polys(&trace.quotients),
        "multipliers": upolys(&trace.multipliers),
        "contents": upolys(&trace.contents),
        "step_gcds": upolys(&trace.step_gcds),
        "reduced_multipliers": upolys(&trace.reduced_multipliers),
        "cofactors_g": polys(&trace.cofactors_g),
        "cofactors_h": polys(&trace.cofactors_h),
    })
}

pub fn systems(systems: &[TriangularSystem]) -> Value {
    Value::Array(
        systems
            .iter()
            .map(|s| {
                json!({
                    "index": s.index,
                    "bivariate": format_poly(&s.bivariate),
                    "univariate": format_unipoly(&s.univariate),
                    "empty": s.is_empty(),
                })
            })
            .collect(),
    )
}

pub fn points(report: &SolutionReport) -> Value {
    Value::Array(
        report
            .points
            .iter()
            .map(|p| {
                json!({
                    "a": scalar(&p.x),
                    "b": scalar(&p.y),
                    "multiplicity": p.multiplicity,
                    "contributions": p.contributions,
                })
            })
            .collect(),
    )
}

pub fn verification(report: &VerificationReport) -> Value {
    json!({
        "all_passed": report.all_passed(),
        "identities": report
            .checks
            .iter()
            .map(|c| {
                let mut entry = Map::new();
                entry.insert("label".into(), json!(c.label));
                entry.insert("passed".into(), json!(c.passed));
                if let Some(w) = &c.witness {
                    entry.insert("witness".into(), json!(format_poly(w)));
                }
                Value::Object(entry)
            })
            .collect::<Vec<_>>(),
    })
}
