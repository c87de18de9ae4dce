//! Browser bindings. Each exported function returns a flat `Float64Array`
//! of `(H, C)` pairs (or counts) so the page can draw without parsing.
//!
//! The plain-Rust functions behind the exports are public and tested
//! natively; the `#[wasm_bindgen]` wrappers only convert errors.

use permplane::bounds::{max_complexity_curve, min_complexity_curve, CurvePoint};
use permplane::surrogate::{ar1, white_noise};
use permplane::{
    pattern_distribution, shuffle_surrogate, slide, OrdinalConfig, TimeSeries, WindowSpec,
};
use wasm_bindgen::prelude::*;

/// Curves are cheap below this grid size even for D = 6.
const MAX_GRID: usize = 5000;

fn pairs(points: &[CurvePoint]) -> Vec<f64> {
    points
        .iter()
        .flat_map(|p| [p.entropy, p.complexity])
        .collect()
}

fn window_spec(dimension: usize, window: usize, step: usize) -> Result<WindowSpec, String> {
    let ordinal = OrdinalConfig::new(dimension, 1).map_err(|e| e.to_string())?;
    WindowSpec::new(window, step, ordinal).map_err(|e| e.to_string())
}

fn trajectory_pairs(series: &TimeSeries, spec: &WindowSpec) -> Result<Vec<f64>, String> {
    let t = slide(series, spec).map_err(|e| e.to_string())?;
    Ok(t.results
        .iter()
        .flat_map(|w| [w.quantifiers.entropy, w.quantifiers.complexity])
        .collect())
}

/// Minimum curve followed by maximum curve, prefixed by the minimum's point
/// count: `[n_min, h0, c0, …, h_{n-1}, c_{n-1}, h'0, c'0, …]`.
pub fn bounds_pairs(dimension: usize, grid: usize) -> Result<Vec<f64>, String> {
    if !(2..=6).contains(&dimension) {
        return Err("embedding dimension must be between 2 and 6 in the browser".into());
    }
    if !(2..=MAX_GRID).contains(&grid) {
        return Err(format!("grid must be between 2 and {MAX_GRID}"));
    }
    let m = permplane::ordinal::factorial(dimension);
    let min = min_complexity_curve(m, grid).map_err(|e| e.to_string())?;
    let max = max_complexity_curve(m, grid).map_err(|e| e.to_string())?;
    let mut out = vec![min.len() as f64];
    out.extend(pairs(&min));
    out.extend(pairs(&max));
    Ok(out)
}

/// Window trajectory of a seeded AR(1) series (`phi = 0` gives white
/// Gaussian noise; `phi < 0` selects uniform noise) and of its shuffle
/// surrogate, concatenated: `[n_windows, original pairs…, surrogate pairs…]`.
pub fn synthetic_pairs(
    phi: f64,
    length: usize,
    dimension: usize,
    window: usize,
    step: usize,
    seed: u64,
) -> Result<Vec<f64>, String> {
    if phi.is_nan() || phi >= 1.0 {
        return Err("phi must be below 1".into());
    }
    let spec = window_spec(dimension, window, step)?;
    let series = if phi < 0.0 {
        white_noise("noise", length, seed)
    } else {
        ar1("ar1", length, phi, seed)
    }
    .map_err(|e| e.to_string())?;
    let original = trajectory_pairs(&series, &spec)?;
    let surrogate = trajectory_pairs(&shuffle_surrogate(&series, seed.wrapping_add(1)), &spec)?;
    let mut out = vec![(original.len() / 2) as f64];
    out.extend(original);
    out.extend(surrogate);
    Ok(out)
}

/// Whole-series pattern counts followed by the window trajectory of
/// user-supplied values: `[D!, counts…, pairs…]`.
pub fn analyze_values(
    values: Vec<f64>,
    dimension: usize,
    window: usize,
    step: usize,
) -> Result<Vec<f64>, String> {
    let spec = window_spec(dimension, window, step)?;
    let series = TimeSeries::new("input", values).map_err(|e| e.to_string())?;
    let dist = pattern_distribution(&series, spec.ordinal()).map_err(|e| e.to_string())?;
    let mut out = vec![dist.counts().len() as f64];
    out.extend(dist.counts().iter().map(|&c| c as f64));
    out.extend(trajectory_pairs(&series, &spec)?);
    Ok(out)
}

#[wasm_bindgen(js_name = boundsCurves)]
pub fn bounds_curves(dimension: usize, grid: usize) -> Result<Vec<f64>, JsError> {
    bounds_pairs(dimension, grid).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = syntheticTrajectory)]
pub fn synthetic_trajectory(
    phi: f64,
    length: usize,
    dimension: usize,
    window: usize,
    step: usize,
    seed: u32,
) -> Result<Vec<f64>, JsError> {
    synthetic_pairs(phi, length, dimension, window, step, u64::from(seed))
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = analyzeSeries)]
pub fn analyze_series(
    values: Vec<f64>,
    dimension: usize,
    window: usize,
    step: usize,
) -> Result<Vec<f64>, JsError> {
    analyze_values(values, dimension, window, step).map_err(|e| JsError::new(&e))
}
