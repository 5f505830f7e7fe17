//! WebAssembly bindings for the helm-graph demo page in `www/`.
//!
//! Each export returns a JSON string; the `*_json` functions behind them are
//! plain Rust so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use helmlab::characterization::helm_decomposition;
use helmlab::exact::{determinant, inertia, rank};
use helmlab::graphs::{build_helm, helm_distance_block};
use helmlab::report::{eig_table, verify, EigMatrix};

/// Largest `n` the page accepts; exact elimination stays interactive below it.
pub const MAX_N: usize = 25;

#[derive(Serialize)]
struct Point {
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct DistanceView {
    n: usize,
    order: usize,
    labels: Vec<String>,
    positions: Vec<Point>,
    edges: Vec<(usize, usize)>,
    distance: Vec<Vec<f64>>,
    /// `D^-1` (even n) or `D+` (odd n) from the closed form, as floats.
    inverse: Vec<Vec<f64>>,
    /// Same matrix, exact entries as `p/q`.
    inverse_exact: Vec<Vec<String>>,
    inverse_kind: &'static str,
    alpha: String,
    det: String,
    rank: usize,
    inertia: [usize; 3],
}

fn check_range(n: usize) -> Result<(), String> {
    if !(4..=MAX_N).contains(&n) {
        return Err(format!("n must be between 4 and {MAX_N}, got {n}"));
    }
    Ok(())
}

/// Unit-disc layout: hub at the origin, rim on radius 0.55, pendants on 0.95.
fn layout(n: usize) -> Vec<Point> {
    let rim = n - 1;
    let at = |i: usize, r: f64| {
        let t = std::f64::consts::TAU * (i as f64 - 1.0) / rim as f64 - std::f64::consts::FRAC_PI_2;
        Point {
            x: r * t.cos(),
            y: r * t.sin(),
        }
    };
    std::iter::once(Point { x: 0.0, y: 0.0 })
        .chain((1..n).map(|i| at(i, 0.55)))
        .chain((1..n).map(|i| at(i, 0.95)))
        .collect()
}

pub fn distance_view_json(n: usize) -> Result<String, String> {
    check_range(n)?;
    let g = build_helm(n).map_err(|e| e.to_string())?;
    let d = helm_distance_block(n).map_err(|e| e.to_string())?;
    let dec = helm_decomposition(n).map_err(|e| e.to_string())?;
    let inv = dec.value();
    let view = DistanceView {
        n,
        order: g.vertex_count(),
        labels: (0..g.vertex_count()).map(|v| g.label(v)).collect(),
        positions: layout(n),
        edges: g.edges(),
        distance: d.to_f64_rows(),
        inverse: inv.to_f64_rows(),
        inverse_exact: (0..inv.rows())
            .map(|i| inv.row(i).iter().map(ToString::to_string).collect())
            .collect(),
        inverse_kind: if n.is_multiple_of(2) {
            "inverse"
        } else {
            "moore-penrose"
        },
        alpha: dec.alpha.to_string(),
        det: determinant(&d).map_err(|e| e.to_string())?.to_string(),
        rank: rank(&d),
        inertia: inertia(&d).map_err(|e| e.to_string())?.as_array(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

pub fn spectrum_json(matrix: &str, n: usize) -> Result<String, String> {
    check_range(n)?;
    let which = match matrix {
        "S" | "s" => EigMatrix::S,
        "B" | "b" => EigMatrix::B,
        "A" | "a" => EigMatrix::A,
        other => return Err(format!("unknown matrix {other:?}; expected S, B or A")),
    };
    let table = eig_table(which, n).map_err(|e| e.to_string())?;
    serde_json::to_string(&table).map_err(|e| e.to_string())
}

pub fn verify_json(n: usize) -> Result<String, String> {
    check_range(n)?;
    let report = verify(n).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn distance_view(n: usize) -> Result<String, JsError> {
    distance_view_json(n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn spectrum(matrix: &str, n: usize) -> Result<String, JsError> {
    spectrum_json(matrix, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify_report(n: usize) -> Result<String, JsError> {
    verify_json(n).map_err(|e| JsError::new(&e))
}
