//! Output documents: JSON envelopes and CSV rows.

use degenerate_eulerian::algebra::{MPoly, RatFun};
use degenerate_eulerian::identities::{identity_info, IdentityReport};
use degenerate_eulerian::render::{poly_terms, render_poly, render_ratfun};
use serde_json::{json, Map, Value};

/// Variable order of every exponent vector.
pub const VARIABLES: [&str; 5] = ["x", "t", "λ", "u", "q"];

pub fn envelope(command: &str, argv: &[String], mut params: Map<String, Value>, results: Vec<Value>) -> String {
    params.insert("argv".into(), json!(argv));
    params.insert("variables".into(), json!(VARIABLES));
    let doc = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "params": params,
        "results": results,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn terms_json(p: &MPoly) -> Value {
    Value::Array(poly_terms(p).into_iter().map(|(e, c)| json!([e, c])).collect())
}

pub fn row_json(n: usize, row: &[MPoly]) -> Value {
    json!({
        "n": n,
        "row": row.iter().map(render_poly).collect::<Vec<_>>(),
        "terms": row.iter().map(terms_json).collect::<Vec<_>>(),
    })
}

pub fn poly_value_json(n: usize, p: &MPoly) -> Value {
    json!({ "n": n, "value": render_poly(p), "terms": terms_json(p) })
}

pub fn ratfun_value_json(n: usize, r: &RatFun) -> Value {
    let mut entry = json!({ "n": n, "value": render_ratfun(r), "terms": terms_json(r.num()) });
    if !r.is_poly() {
        entry["denominator_terms"] = terms_json(r.den());
    }
    entry
}

pub fn report_json(r: &IdentityReport) -> Value {
    let info = identity_info(r.id);
    let counterexample = r.counterexample.as_ref().map(|cx| {
        let indices: Map<String, Value> = cx.indices.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        json!({
            "indices": indices,
            "left": cx.left,
            "right": cx.right,
            "difference": cx.difference,
        })
    });
    json!({
        "id": r.id.tag(),
        "description": info.description,
        "anchor": info.anchor,
        "left_side": info.left,
        "right_side": info.right,
        "status": r.status.as_str(),
        "range": { "n_min": r.range.n_min, "n_max": r.range.n_max, "m_max": r.range.m_max },
        "counterexample": counterexample,
        "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
        "notes": r.notes,
    })
}

pub fn csv_rows(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
