//! JSON and text forms of computed results.
//!
//! JSON is canonical: object keys sorted (serde_json's default map), only integers,
//! strings, booleans, arrays and objects. Absent optional values are omitted.

use serde_json::{json, Map, Value};

use daolab_core::blowup;
use daolab_core::dao::{Certificate, ComponentSize, Counted, InvariantReport, ReductionResult, RrTable};
use daolab_core::field::Field;
use daolab_core::lab::{Anomaly, ScenarioResult};
use daolab_core::module::{BettiTable, Resolution};
use daolab_core::poly::Polynomial;
use daolab_core::ring::{Estimate, PresentedRing};
use daolab_core::Result;

use std::sync::Arc;

pub fn certificate_fields(c: &Certificate, obj: &mut Map<String, Value>) {
    obj.insert("certificate".into(), json!(c.name()));
    match *c {
        Certificate::Certified => {}
        Certificate::Probabilistic { trials } => {
            obj.insert("trials".into(), json!(trials));
        }
        Certificate::CapLimited { cap, window, stable } => {
            obj.insert("cap".into(), json!(cap));
            obj.insert("window".into(), json!(window));
            obj.insert("stable".into(), json!(stable));
        }
    }
}

fn counted(c: &Counted) -> Value {
    let mut o = Map::new();
    o.insert("value".into(), json!(c.value));
    certificate_fields(&c.certificate, &mut o);
    Value::Object(o)
}

fn estimate(e: &Estimate) -> Value {
    json!({ "value": e.value, "confidence": e.confidence.name() })
}

fn witnesses<F: Field>(r: &PresentedRing<F>, w: &[(u32, Polynomial<F>)]) -> Value {
    Value::Array(w.iter().map(|(k, p)| json!({ "k": k, "element": r.ring().display(p) })).collect())
}

fn reduction(red: &ReductionResult) -> Value {
    let mut o = Map::new();
    o.insert("answer".into(), json!(red.answer.name()));
    if let Some(n) = red.reduction_number {
        o.insert("reduction_number".into(), json!(n));
    }
    o.insert("scanned_to".into(), json!(red.scanned_to));
    certificate_fields(&red.certificate, &mut o);
    Value::Object(o)
}

pub fn invariant_report<F: Field>(r: &PresentedRing<F>, rep: &InvariantReport<F>) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), json!("invariant_report"));
    o.insert("ring".into(), json!(rep.ring));
    o.insert("ideal".into(), json!(rep.ideal));
    o.insert("mode".into(), json!(rep.mode.name()));
    o.insert("field".into(), json!(rep.field));
    o.insert(
        "config".into(),
        json!({
            "trials": rep.config.trials,
            "cap": rep.config.cap,
            "window": rep.config.window,
            "probe": rep.config.probe,
            "seed": rep.config.seed,
        }),
    );
    o.insert("depth_positive".into(), json!(rep.depth_positive));

    let mut d1 = Map::new();
    d1.insert("value".into(), json!(rep.d1.value));
    d1.insert("scan_value".into(), json!(rep.d1.scan_value));
    d1.insert("witnesses".into(), witnesses(r, &rep.d1.witnesses));
    certificate_fields(&rep.d1.certificate, &mut d1);
    o.insert("d1".into(), Value::Object(d1));

    let mut d2 = Map::new();
    d2.insert("value".into(), json!(rep.d2.value));
    d2.insert("witnesses".into(), witnesses(r, &rep.d2_witnesses));
    certificate_fields(&rep.d2.certificate, &mut d2);
    o.insert("d2".into(), Value::Object(d2));

    let mut d3 = Map::new();
    d3.insert("value".into(), json!(rep.d3.value));
    d3.insert("failing".into(), json!(rep.d3.failing));
    d3.insert("scanned_to".into(), json!(rep.d3.scanned_to));
    if let Some(b) = rep.d3.bound {
        d3.insert("bound".into(), json!(b));
    }
    certificate_fields(&rep.d3.certificate, &mut d3);
    o.insert("d3".into(), Value::Object(d3));

    o.insert("s_of_m".into(), counted(&rep.s_of_m));
    o.insert("reduction".into(), reduction(&rep.reduction));
    o.insert(
        "components".into(),
        Value::Array(
            rep.components
                .iter()
                .map(|(k, c)| match c {
                    ComponentSize::Exact(n) => json!({ "k": k, "dim": n }),
                    ComponentSize::Positive => json!({ "k": k, "dim": "positive" }),
                })
                .collect(),
        ),
    );
    if let Some(v) = rep.rees_ring_regularity {
        o.insert("rees_ring_regularity".into(), json!(v));
    }
    if let Some(v) = rep.rees_regularity {
        o.insert("rees_regularity".into(), json!(v));
    }
    o.insert(
        "checks".into(),
        Value::Array(rep.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect()),
    );
    Value::Object(o)
}

pub fn ring_report<F: Field>(r: &Arc<PresentedRing<F>>, cap: u32) -> Result<Value> {
    let mut o = Map::new();
    o.insert("kind".into(), json!("ring_report"));
    o.insert("ring".into(), json!(r.display()));
    o.insert("mode".into(), json!(r.mode().name()));
    o.insert("field".into(), json!(r.field().name()));
    o.insert("nvars".into(), json!(r.nvars()));
    o.insert("embedding_dimension".into(), json!(r.embedding_dimension()));
    o.insert("dimension".into(), estimate(&r.dimension(cap)));
    o.insert("multiplicity".into(), estimate(&r.multiplicity(cap)));
    let (mm, conf) = r.has_minimal_multiplicity(cap);
    o.insert("minimal_multiplicity".into(), json!({ "value": mm, "confidence": conf.name() }));
    o.insert("depth_positive".into(), json!(r.depth_positive()));
    if r.mode() == daolab_core::ring::Mode::Graded {
        o.insert("rees_ring_regularity".into(), json!(blowup::rees_ring_regularity(r)?));
    }
    Ok(Value::Object(o))
}

pub fn rr_table<F: Field>(r: &PresentedRing<F>, t: &RrTable<F>) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), json!("ratliff_rush"));
    o.insert("ring".into(), json!(r.display()));
    o.insert("top".into(), json!(t.top));
    o.insert("s_of_m".into(), json!(t.s_of_m()));
    let rows = (1..=t.top)
        .map(|k| {
            let c = t.closure(k).expect("k <= top");
            let strict = t.strict.get(k as usize - 1).copied().unwrap_or(false);
            json!({ "k": k, "closure": c.display(), "strict": strict })
        })
        .collect();
    o.insert("closures".into(), Value::Array(rows));
    certificate_fields(&t.certificate, &mut o);
    Value::Object(o)
}

pub fn reduction_report<F: Field>(r: &PresentedRing<F>, ideal: &str, red: &ReductionResult) -> Value {
    let mut v = reduction(red);
    let o = v.as_object_mut().expect("object");
    o.insert("kind".into(), json!("reduction"));
    o.insert("ring".into(), json!(r.display()));
    o.insert("ideal".into(), json!(ideal));
    v
}

pub fn betti(b: &BettiTable) -> Value {
    Value::Array(b.entries().map(|((i, j), beta)| json!({ "i": i, "j": j, "beta": beta })).collect())
}

pub fn resolution<F: Field>(target: &str, module: &str, res: &Resolution<F>) -> Value {
    let b = res.betti();
    let mut o = Map::new();
    o.insert("kind".into(), json!("resolution"));
    o.insert("target".into(), json!(target));
    o.insert("module".into(), json!(module));
    o.insert("betti".into(), betti(&b));
    if let Some(reg) = b.regularity() {
        o.insert("regularity".into(), json!(reg));
    }
    if let Some(pd) = b.projective_dimension() {
        o.insert("projective_dimension".into(), json!(pd));
    }
    o.insert("hilbert_identity".into(), json!(res.hilbert_identity_holds()));
    o.insert("table".into(), json!(b.render()));
    Value::Object(o)
}

pub fn scenario(s: &ScenarioResult) -> Value {
    json!({
        "kind": "scenario",
        "id": s.id,
        "inputs": s.inputs,
        "outcome": s.outcome().name(),
        "claims": s.claims.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.name(),
            "certified": c.certified,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn anomaly(a: &Anomaly) -> Value {
    json!({
        "trial": a.trial,
        "seed": a.seed,
        "ring": a.ring,
        "reduction": a.reduction,
        "d3": a.d3,
        "r_i": a.r_i,
        "s_of_m": a.s_of_m,
        "minimal_multiplicity": a.minimal_multiplicity,
        "field": a.field,
        "rerun": a.rerun,
    })
}

/// Human layout of a JSON value: `key: value` lines, nested objects indented,
/// arrays of objects as numbered entries. A `table` string is printed verbatim.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Null => Some(String::from("-")),
        Value::Array(a) if a.iter().all(|x| scalar(x).is_some() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            let width = o.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, x) in o {
                if k == "table" {
                    if let Value::String(t) = x {
                        for line in t.lines() {
                            out.push_str(&format!("{}  {}\n", pad, line));
                        }
                        continue;
                    }
                }
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{}{:w$} : {}\n", pad, k, s, w = width)),
                    None => {
                        out.push_str(&format!("{}{}:\n", pad, k));
                        render_into(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (n, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{}- {}\n", pad, s)),
                    None => {
                        out.push_str(&format!("{}[{}]\n", pad, n));
                        render_into(out, x, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad, scalar(other).unwrap_or_default())),
    }
}
