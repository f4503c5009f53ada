//! wasm-bindgen entry points for the demo page in `www/`. Each export takes
//! plain strings and returns a JSON string; the `*_value` functions behind
//! them are ordinary Rust and are what the native tests exercise.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use tworow::alpha::alpha_table;
use tworow::immanant::{extract_a_coeffs, hook_immanants, two_row_immanants};
use tworow::paths::{callan_forward, callan_inverse, peak_profile, riordan_double, riordan_halve, LatticePath};
use tworow::poly::Rational;
use tworow::tree::pruefer_decode;
use tworow::{RatPoly, Tree};

pub const MAX_TREE_N: usize = 16;
pub const MAX_ALPHA_N: usize = 60;
pub const MAX_PATH_LEN: usize = 200;

/// `path:N`, `star:N`, `pruefer:a,b,c`, or an edge list such as `1-2,2-3,2-4`.
pub fn parse_tree(spec: &str) -> Result<Tree, String> {
    let spec = spec.trim();
    let size = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad vertex count `{s}`"));
    let tree = if let Some(n) = spec.strip_prefix("path:") {
        Tree::path(size(n)?)
    } else if let Some(n) = spec.strip_prefix("star:") {
        Tree::star(size(n)?)
    } else if let Some(seq) = spec.strip_prefix("pruefer:") {
        let seq: Vec<usize> = if seq.trim().is_empty() {
            Vec::new()
        } else {
            seq.split(',').map(size).collect::<Result<_, _>>()?
        };
        pruefer_decode(seq.len() + 2, &seq)
    } else {
        let mut edges = Vec::new();
        for e in spec.split(',').filter(|e| !e.trim().is_empty()) {
            let (u, v) = e.split_once('-').ok_or_else(|| format!("edge `{e}` should look like 1-2"))?;
            edges.push((size(u)?, size(v)?));
        }
        Tree::new(edges.len() + 1, &edges)
    };
    let tree = tree.map_err(|e| e.to_string())?;
    if tree.n() > MAX_TREE_N {
        return Err(format!("the demo is limited to {MAX_TREE_N} vertices"));
    }
    Ok(tree)
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn curve(p: &RatPoly, lo: f64, hi: f64, samples: usize) -> Vec<[f64; 2]> {
    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    (0..samples)
        .map(|t| {
            let q = lo + (hi - lo) * t as f64 / (samples - 1) as f64;
            let y = coeffs.iter().rev().fold(0.0, |acc, c| acc * q + c);
            [q, y]
        })
        .collect()
}

fn poly_value(label: String, p: &RatPoly, lo: f64, hi: f64, samples: usize) -> Value {
    json!({ "label": label, "text": p.to_string(), "points": curve(p, lo, hi, samples) })
}

/// Normalized two-row and hook immanants of a tree, the `a_i(q)`, and
/// sampled curves on `[-q_max, q_max]`.
pub fn tree_report_value(spec: &str, q_max: f64, samples: usize) -> Result<Value, String> {
    let tree = parse_tree(spec)?;
    if !(q_max.is_finite() && q_max > 0.0) {
        return Err("q range must be a positive number".into());
    }
    let samples = samples.clamp(2, 2000);
    let n = tree.n();
    let two_row: Vec<Value> = two_row_immanants(&tree)
        .iter()
        .enumerate()
        .map(|(k, p)| poly_value(format!("({},{k})", n - k), p, -q_max, q_max, samples))
        .collect();
    let hooks: Vec<Value> = hook_immanants(&tree)
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let k = j + 1;
            poly_value(format!("({k},1^{})", n - k), p, -q_max, q_max, samples)
        })
        .collect();
    let a: Vec<String> = extract_a_coeffs(&tree).iter().map(|p| p.to_string()).collect();
    Ok(json!({
        "tree": tree.to_string(),
        "n": n,
        "edges": tree.edges(),
        "two_row": two_row,
        "hook": hooks,
        "a": a,
    }))
}

pub fn alpha_table_value(n: usize) -> Result<Value, String> {
    if n > MAX_ALPHA_N {
        return Err(format!("the demo is limited to n <= {MAX_ALPHA_N}"));
    }
    Ok(alpha_table(n).to_json())
}

/// `op` is one of `callan`, `callan-inverse`, `double`, `halve`.
pub fn path_map_value(op: &str, path: &str) -> Result<Value, String> {
    let input: LatticePath = path.trim().to_uppercase().parse().map_err(|e: tworow::ParseError| e.to_string())?;
    if input.len() > MAX_PATH_LEN {
        return Err(format!("paths are limited to {MAX_PATH_LEN} steps"));
    }
    let output = match op {
        "callan" => callan_forward(&input),
        "callan-inverse" => callan_inverse(&input),
        "double" => riordan_double(&input),
        "halve" => riordan_halve(&input),
        _ => return Err(format!("unknown operation `{op}`")),
    }
    .map_err(|e| e.to_string())?;
    let describe = |p: &LatticePath| {
        let peaks: Vec<Value> = peak_profile(p)
            .map(|ps| ps.iter().map(|pk| json!({ "x": pk.x, "y": pk.y, "odd": pk.odd })).collect())
            .unwrap_or_default();
        json!({ "path": p.to_string(), "heights": p.heights(), "riordan": p.is_riordan(), "peaks": peaks })
    };
    Ok(json!({ "op": op, "input": describe(&input), "output": describe(&output) }))
}

fn export(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn tree_report(spec: &str, q_max: f64, samples: usize) -> Result<String, JsError> {
    export(tree_report_value(spec, q_max, samples))
}

#[wasm_bindgen]
pub fn alpha_table_json(n: usize) -> Result<String, JsError> {
    export(alpha_table_value(n))
}

#[wasm_bindgen]
pub fn path_map(op: &str, path: &str) -> Result<String, JsError> {
    export(path_map_value(op, path))
}
