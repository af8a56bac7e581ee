//! Browser bindings: curve drawing, point evaluation and the oscillator
//! trace. Each export is a thin wrapper over a plain Rust function so the
//! logic is testable off the browser.

use smf_core::curves::{
    sample_booth, sample_elevated, sample_excircle, sample_quadrilobe, Polyline, Run, Sample,
};
use smf_core::export::polyline_svg;
use smf_core::mechanisms::{simulate_oscillator, OscillatorConfig};
use smf_core::{Determination, ExCenter, PlanePoint};
use wasm_bindgen::prelude::*;

/// Order of the values returned by [`evaluate`].
pub const EVAL_FIELDS: [&str; 9] = [
    "rex", "aex", "cex", "sex", "dex", "tex", "cel", "sel", "delta",
];

fn excenter(s: f64, eps: f64) -> Result<ExCenter, String> {
    ExCenter::try_new(s, eps).ok_or_else(|| "s and eps must be finite".to_string())
}

fn determination(det: u8) -> Result<Determination, String> {
    Determination::from_index(det).ok_or_else(|| format!("det must be 1 or 2, got {det}"))
}

pub fn curve_svg_impl(kind: &str, s: f64, eps: f64, det: u8, n: usize) -> Result<String, String> {
    let ex = excenter(s, eps)?;
    let det = determination(det)?;
    let polyline = match kind {
        "booth" => sample_booth(&ex, 1.0, n),
        "excircle" => sample_excircle(&ex, 1.0, n),
        "quadrilobe" => sample_quadrilobe(s, n),
        "elevated" => sample_elevated(&ex, det, n),
        other => return Err(format!("unknown curve kind {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(polyline_svg(&polyline))
}

/// Values in [`EVAL_FIELDS`] order; `NaN` where a function is undefined.
pub fn evaluate_impl(s: f64, eps: f64, det: u8, theta: f64) -> Vec<f64> {
    let (Ok(ex), Ok(det)) = (excenter(s, eps), determination(det)) else {
        return vec![f64::NAN; EVAL_FIELDS.len()];
    };
    let (cex, sex) = ex.cex_sex(theta, det).unwrap_or((f64::NAN, f64::NAN));
    let (cel, sel) = ex.cel_sel(theta, det).unwrap_or((f64::NAN, f64::NAN));
    vec![
        ex.rex(theta, det).unwrap_or(f64::NAN),
        ex.aex(theta, det).unwrap_or(f64::NAN),
        cex,
        sex,
        ex.dex(theta, det).unwrap_or(f64::NAN),
        ex.tex(theta, det).unwrap_or(f64::NAN),
        cel,
        sel,
        ex.delta(theta),
    ]
}

/// One period of the oscillator as an SVG plot: `x(t)/R` and `ω(t)/Ω`
/// against the generator angle `Ωt`.
pub fn oscillator_svg_impl(s: f64, eps: f64, steps: usize) -> Result<String, String> {
    let ex = excenter(s, eps)?;
    if steps == 0 {
        return Err("steps must be positive".to_string());
    }
    let mut cfg = OscillatorConfig::one_period(ex, 1.0, 1.0);
    cfg.dt = cfg.t_end / steps as f64;
    let samples = simulate_oscillator(&cfg).map_err(|e| e.to_string())?;
    let trace = |f: &dyn Fn(&smf_core::mechanisms::OscillatorSample) -> f64| Run {
        samples: samples
            .iter()
            .map(|p| Sample {
                theta: p.theta,
                point: PlanePoint::new(p.theta, f(p)),
            })
            .collect(),
        closed: false,
    };
    let plot = Polyline {
        runs: vec![trace(&|p| p.x), trace(&|p| p.omega)],
    };
    Ok(polyline_svg(&plot))
}

#[wasm_bindgen]
pub fn curve_svg(kind: &str, s: f64, eps: f64, det: u8, n: usize) -> Result<String, JsError> {
    curve_svg_impl(kind, s, eps, det, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn evaluate(s: f64, eps: f64, det: u8, theta: f64) -> Vec<f64> {
    evaluate_impl(s, eps, det, theta)
}

#[wasm_bindgen]
pub fn eval_fields() -> Vec<String> {
    EVAL_FIELDS.iter().map(|f| f.to_string()).collect()
}

#[wasm_bindgen]
pub fn oscillator_svg(s: f64, eps: f64, steps: usize) -> Result<String, JsError> {
    oscillator_svg_impl(s, eps, steps).map_err(|e| JsError::new(&e))
}
