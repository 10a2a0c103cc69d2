//! JSON form of an embedding:
//!
//! ```json
//! {"graph": "K6",
//!  "vertices": {"1": ["0", "1/2", "-3"], ...},
//!  "edge_paths": {"1-2": [["1", "1", "1"]], ...}}
//! ```
//!
//! Coordinates are rationals written `"p/q"` or `"p"`; plain JSON integers
//! are accepted on input. `edge_paths` is optional and lists only bent edges.
//! Path points run from the first-named vertex. D4 edges are keyed `e1..e8`.

use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::{GraphKind, Point3, SpatialEmbedding, Q};
use crate::error::{Error, Result};

fn fmt_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Format(msg.into()))
}

fn parse_q(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => {
            Q::from_str(s.trim()).or_else(|_| fmt_err(format!("bad rational '{s}'")))
        }
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(super::q(i)),
            None => fmt_err(format!("non-integer number {n}; write it as \"p/q\"")),
        },
        _ => fmt_err(format!("expected a rational, got {v}")),
    }
}

fn parse_point(v: &Value) -> Result<Point3> {
    let a = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Error::Format(format!("expected [x, y, z], got {v}")))?;
    Ok(Point3::new(
        parse_q(&a[0])?,
        parse_q(&a[1])?,
        parse_q(&a[2])?,
    ))
}

fn point_json(p: &Point3) -> Value {
    json!([p.x.to_string(), p.y.to_string(), p.z.to_string()])
}

pub fn embedding_to_json(e: &SpatialEmbedding) -> Value {
    let mut vertices = Map::new();
    for &v in e.vertices() {
        vertices.insert(v.to_string(), point_json(e.position(v)));
    }
    let mut out = Map::new();
    out.insert("graph".into(), Value::String(e.kind().name()));
    out.insert("vertices".into(), Value::Object(vertices));
    let mut paths = Map::new();
    for i in 0..e.edges().len() {
        if !e.path(i).is_empty() {
            paths.insert(
                e.edge_label(i),
                Value::Array(e.path(i).iter().map(point_json).collect()),
            );
        }
    }
    if !paths.is_empty() {
        out.insert("edge_paths".into(), Value::Object(paths));
    }
    Value::Object(out)
}

pub fn embedding_from_json(v: &Value) -> Result<SpatialEmbedding> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Format("embedding must be a JSON object".into()))?;
    let kind = match obj.get("graph").and_then(Value::as_str) {
        Some(s) => GraphKind::parse(s).map_err(|e| Error::Format(e.to_string()))?,
        None => return fmt_err("missing \"graph\""),
    };
    let verts = obj
        .get("vertices")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Format("missing \"vertices\"".into()))?;
    let mut positions = Vec::new();
    for v in kind.vertices() {
        match verts.get(&v.to_string()) {
            Some(p) => positions.push(parse_point(p)?),
            None => return fmt_err(format!("missing position of vertex {v}")),
        }
    }
    if verts.len() != positions.len() {
        return fmt_err(format!(
            "{kind} has {} vertices, file lists {}",
            positions.len(),
            verts.len()
        ));
    }
    let mut e = SpatialEmbedding::straight(kind, positions)?;
    let mut paths = vec![Vec::new(); e.edges().len()];
    if let Some(p) = obj.get("edge_paths") {
        let p = p
            .as_object()
            .ok_or_else(|| Error::Format("\"edge_paths\" must be an object".into()))?;
        for (key, pts) in p {
            let idx = edge_key_index(&e, key)?;
            let (tail, _) = e.edges()[idx];
            let list = pts
                .as_array()
                .ok_or_else(|| Error::Format(format!("path of {key} must be a list")))?;
            let mut path = list.iter().map(parse_point).collect::<Result<Vec<_>>>()?;
            // "j-i" lists points from j.
            if kind != GraphKind::D4 && key.split('-').next() != Some(tail.to_string().as_str()) {
                path.reverse();
            }
            paths[idx] = path;
        }
    }
    e = SpatialEmbedding::new(kind, e.positions().to_vec(), paths)?;
    Ok(e)
}

fn edge_key_index(e: &SpatialEmbedding, key: &str) -> Result<usize> {
    let bad = || Error::Format(format!("unknown edge '{key}' for {}", e.kind()));
    if e.kind() == GraphKind::D4 {
        let i: usize = key
            .strip_prefix('e')
            .and_then(|r| r.parse().ok())
            .ok_or_else(bad)?;
        return if (1..=8).contains(&i) {
            Ok(i - 1)
        } else {
            Err(bad())
        };
    }
    let (a, b) = key.split_once('-').ok_or_else(bad)?;
    let a: u8 = a.trim().parse().map_err(|_| bad())?;
    let b: u8 = b.trim().parse().map_err(|_| bad())?;
    e.edge_index(a, b).ok_or_else(bad)
}
