//! Browser bindings. Each export takes plain arguments and returns a JSON
//! string; errors come back as thrown strings.

use cgrefine::diagram::LinkDiagram;
use cgrefine::geometry::{
    embedding_from_json, embedding_to_json, project, random_generic_direction, random_rectilinear,
    validate_embedding, Projection, SpatialEmbedding, Q,
};
use cgrefine::invariants::{conway_seifert, conway_skein, linking_number};
use cgrefine::theorems::{
    census_k6, census_k7, embedding_id, verify_embedding, CensusReport, Verification,
};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn f(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Plane picture of a projection: point images, segments by edge, crossings.
fn drawing(e: &SpatialEmbedding, p: &Projection) -> Value {
    let points: Vec<[f64; 2]> = p.images.iter().map(|[a, b]| [f(a), f(b)]).collect();
    let segments: Vec<Value> = p
        .segments
        .iter()
        .map(|s| json!({"edge": e.edge_label(s.edge), "a": s.a, "b": s.b}))
        .collect();
    let crossings: Vec<Value> = p
        .crossings
        .iter()
        .map(|c| {
            json!({
                "at": [f(&c.point[0]), f(&c.point[1])],
                "over": e.edge_label(p.segments[c.over].edge),
                "under": e.edge_label(p.segments[c.under].edge),
                "sign": c.sign,
            })
        })
        .collect();
    json!({"points": points, "vertices": e.vertices().len(), "segments": segments, "crossings": crossings})
}

fn verification_json(v: &Verification) -> Value {
    json!({
        "holds": v.holds(),
        "identities": v.identities.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "bounds": v.bounds.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
    })
}

/// Knotted cycles and linked pairs, for highlighting.
fn nontrivial(v: &Verification) -> Value {
    let Some(r) = &v.report else {
        return json!({"knots": [], "links": []});
    };
    let knots: Vec<Value> = r
        .knots
        .values()
        .flatten()
        .filter(|k| k.a2 != 0)
        .map(|k| json!({"cycle": k.cycle.bracket(), "a2": k.a2, "vertices": k.cycle.vertices()}))
        .collect();
    let links: Vec<Value> = r
        .links
        .values()
        .flatten()
        .filter(|l| l.lk != 0)
        .map(|l| json!({"pair": l.pair.bracket(), "lk": l.lk}))
        .collect();
    json!({"knots": knots, "links": links})
}

fn analyse(e: &SpatialEmbedding, proj_seed: u64) -> Result<Value, String> {
    let check = validate_embedding(e);
    if !check.ok() {
        return Err(format!("not an embedding: {}", check.failures.join("; ")));
    }
    let d = random_generic_direction(e, proj_seed).map_err(|x| x.to_string())?;
    let p = project(e, &d).map_err(|x| x.to_string())?;
    let v = verify_embedding(e, proj_seed).map_err(|x| x.to_string())?;
    let census: Option<CensusReport> = match (&v.report, e.is_rectilinear()) {
        (Some(r), true) if r.order() == 6 => Some(census_k6(r).map_err(|x| x.to_string())?),
        (Some(r), true) if r.order() == 7 => Some(census_k7(r).map_err(|x| x.to_string())?),
        _ => None,
    };
    Ok(json!({
        "graph": e.kind().name(),
        "id": embedding_id(e),
        "embedding": embedding_to_json(e),
        "drawing": drawing(e, &p),
        "verification": verification_json(&v),
        "census": census.map(|c| c.to_json()),
        "nontrivial": nontrivial(&v),
    }))
}

/// Random rectilinear K_n (n = 6 or 7), its identities and census.
pub fn random_complete(n: usize, seed: u64, span: i64) -> Result<String, String> {
    if !(6..=7).contains(&n) {
        return Err(format!("the demo draws K6 or K7, not K{n}"));
    }
    let e = random_rectilinear(n, seed, span).map_err(|x| x.to_string())?;
    Ok(analyse(&e, 0)?.to_string())
}

/// Identities and census of an embedding given as JSON text.
pub fn check_embedding(text: &str, proj_seed: u64) -> Result<String, String> {
    let v: Value = serde_json::from_str(text).map_err(|x| format!("not JSON: {x}"))?;
    let e = embedding_from_json(&v).map_err(|x| x.to_string())?;
    Ok(analyse(&e, proj_seed)?.to_string())
}

/// Conway polynomial of a Gauss code by both routes, and lk for two components.
pub fn gauss_invariants(code: &str) -> Result<String, String> {
    let d = LinkDiagram::from_gauss(code).map_err(|x| x.to_string())?;
    let skein = conway_skein(&d).map_err(|x| x.to_string())?;
    let mut out = json!({
        "components": d.component_count(),
        "crossings": d.crossing_count(),
        "conway": skein.to_string(),
        "coefficients": skein.coeffs,
    });
    match d.component_count() {
        1 => {
            let s = conway_seifert(&d).map_err(|x| x.to_string())?;
            out["a2"] = json!(s.coefficient(2));
            out["seifert_agrees"] = json!(s == skein);
        }
        2 => out["lk"] = json!(linking_number(&d).map_err(|x| x.to_string())?),
        _ => {}
    }
    Ok(out.to_string())
}

#[wasm_bindgen(js_name = randomComplete)]
pub fn random_complete_js(n: usize, seed: u32, span: i32) -> Result<String, JsValue> {
    random_complete(n, seed as u64, span as i64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = checkEmbedding)]
pub fn check_embedding_js(text: &str, proj_seed: u32) -> Result<String, JsValue> {
    check_embedding(text, proj_seed as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = gaussInvariants)]
pub fn gauss_invariants_js(code: &str) -> Result<String, JsValue> {
    gauss_invariants(code).map_err(|e| JsValue::from_str(&e))
}
