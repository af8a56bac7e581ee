//! Curve samplers.
//!
//! Every sampler walks a uniform grid `θ_k = 2πk/n`, `k = 0..n`, endpoint
//! excluded. Where evaluation fails (the generating line misses the circle)
//! the curve is split into runs, and each run is extended to the exact gap
//! boundary by bisection.

use std::f64::consts::TAU;

use crate::oracle::line_circle_intersections;
use crate::smf::{Determination, EvalError, ExCenter, Phasor, PlanePoint};
use crate::{Error, Result};

/// Bisection stops once the bracket is narrower than this.
const GAP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub theta: f64,
    pub point: PlanePoint,
}

/// A contiguous stretch of valid samples, `theta` strictly increasing.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Run {
    pub samples: Vec<Sample>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polyline {
    pub runs: Vec<Run>,
}

impl Polyline {
    pub fn is_empty(&self) -> bool {
        self.runs.iter().all(|r| r.samples.is_empty())
    }

    pub fn len(&self) -> usize {
        self.runs.iter().map(|r| r.samples.len()).sum()
    }

    pub fn samples(&self) -> impl Iterator<Item = &Sample> {
        self.runs.iter().flat_map(|r| r.samples.iter())
    }

    pub fn points(&self) -> impl Iterator<Item = PlanePoint> + '_ {
        self.samples().map(|s| s.point)
    }
}

/// Where the unit circle of an exotic function sits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExoticConfig {
    /// The pole `S` the generating line turns about.
    pub pole: PlanePoint,
    /// Centre `C(c, γ)` of the unit circle.
    pub circle_center: PlanePoint,
}

impl ExoticConfig {
    pub fn new(pole: PlanePoint, circle_center: PlanePoint) -> Self {
        ExoticConfig {
            pole,
            circle_center,
        }
    }

    /// `S(s, ε)` and `C(c, γ)` in polar coordinates.
    pub fn from_polar(s: f64, eps: f64, c: f64, gamma: f64) -> Self {
        ExoticConfig::new(
            PlanePoint::from_polar(s, eps),
            PlanePoint::from_polar(c, gamma),
        )
    }
}

/// Curve families understood by [`variable_excenter_curve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveFamily {
    /// `ρ(θ) = −2·s·R·cos(θ−ε)`.
    Booth { radius: f64 },
    /// `E + R·rex₁(θ)·rad θ`.
    Excircle { radius: f64 },
    /// `(cel θ, sel θ)`.
    Elevated { det: Determination },
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::invalid(
            "n",
            format!("need at least 3 samples, got {n}"),
        ));
    }
    Ok(())
}

fn check_radius(radius: f64) -> Result<()> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::invalid(
            "R",
            format!("must be positive, got {radius}"),
        ));
    }
    Ok(())
}

fn grid(n: usize, k: usize) -> f64 {
    TAU * k as f64 / n as f64
}

/// Moves from a valid `good` parameter towards an invalid `bad` one and
/// returns the last valid sample found.
fn bisect_boundary<F>(f: &F, mut good: f64, mut bad: f64) -> Option<Sample>
where
    F: Fn(f64) -> Result<PlanePoint, EvalError>,
{
    let mut best = None;
    while (bad - good).abs() > GAP_TOL {
        let mid = 0.5 * (good + bad);
        match f(mid) {
            Ok(point) => {
                good = mid;
                best = Some(Sample { theta: mid, point });
            }
            Err(_) => bad = mid,
        }
    }
    best
}

/// Samples `f` on the uniform grid with gap segmentation.
pub fn sample_parametric<F>(n: usize, f: F) -> Result<Polyline>
where
    F: Fn(f64) -> Result<PlanePoint, EvalError>,
{
    check_n(n)?;
    let values: Vec<(f64, Option<PlanePoint>)> = (0..n)
        .map(|k| {
            let theta = grid(n, k);
            (theta, f(theta).ok())
        })
        .collect();

    if values.iter().all(|(_, p)| p.is_some()) {
        let samples = values
            .into_iter()
            .map(|(theta, p)| Sample {
                theta,
                point: p.unwrap(),
            })
            .collect();
        return Ok(Polyline {
            runs: vec![Run {
                samples,
                closed: true,
            }],
        });
    }

    let mut runs: Vec<Run> = Vec::new();
    let mut current: Option<Run> = None;
    // walk one step past the end so the wrap-around boundary is bisected too
    for k in 0..=n {
        let (theta, point) = match values.get(k) {
            Some(&(t, p)) => (t, p),
            None => (TAU, values[0].1),
        };
        let prev_theta = if k == 0 {
            -TAU / n as f64
        } else {
            grid(n, k - 1)
        };
        let prev_ok = if k == 0 {
            values[n - 1].1.is_some()
        } else {
            values[k - 1].1.is_some()
        };
        match (prev_ok, point) {
            (false, Some(p)) if k < n => {
                let mut run = Run::default();
                if let Some(b) = bisect_boundary(&f, theta, prev_theta) {
                    if b.theta < theta {
                        run.samples.push(b);
                    }
                }
                run.samples.push(Sample { theta, point: p });
                current = Some(run);
            }
            (true, Some(p)) if k < n => {
                current
                    .get_or_insert_with(Run::default)
                    .samples
                    .push(Sample { theta, point: p });
            }
            (true, None) => {
                if let Some(mut run) = current.take() {
                    let last = run.samples.last().map(|s| s.theta).unwrap_or(prev_theta);
                    if let Some(b) = bisect_boundary(&f, prev_theta, theta) {
                        if b.theta > last {
                            run.samples.push(b);
                        }
                    }
                    runs.push(run);
                }
            }
            _ => {}
        }
    }
    if let Some(run) = current.take() {
        runs.push(run);
    }

    // a run that reaches θ = 2π continues into the one starting at θ = 0
    let wraps = values[0].1.is_some() && values[n - 1].1.is_some();
    if wraps && runs.len() > 1 {
        let head = runs.remove(0);
        let tail = runs.last_mut().expect("at least one run remains");
        tail.samples
            .extend(head.samples.into_iter().map(|s| Sample {
                theta: s.theta + TAU,
                point: s.point,
            }));
    }
    Ok(Polyline { runs })
}

/// Booth lemniscate `ρ(θ) = R·(rex₁ θ + rex₂ θ) = −2·s·R·cos(θ−ε)`.
///
/// The closed form on the right is total, so the curve has no gaps even
/// for `s > 1`.
pub fn sample_booth(ex: &ExCenter, radius: f64, n: usize) -> Result<Polyline> {
    check_radius(radius)?;
    let (s, eps) = (ex.s(), ex.eps());
    sample_parametric(n, |theta| Ok(booth_point(theta, s, eps, radius)))
}

fn booth_point(theta: f64, s: f64, eps: f64, radius: f64) -> PlanePoint {
    let rho = -2.0 * s * radius * (theta - eps).cos();
    PlanePoint::from_polar(rho, theta)
}

/// The circle generated from an off-centre point: `E + R·rex₁ θ · rad θ`
/// with `E = R·S`. Every sample lies on the radius-`R` circle about `O`.
pub fn sample_excircle(ex: &ExCenter, radius: f64, n: usize) -> Result<Polyline> {
    check_radius(radius)?;
    if ex.s().abs() > 1.0 {
        return Err(Error::invalid(
            "s",
            format!("excircle needs |s| <= 1, got {}", ex.s()),
        ));
    }
    let ex = *ex;
    sample_parametric(n, move |theta| excircle_point(&ex, theta, radius))
}

fn excircle_point(ex: &ExCenter, theta: f64, radius: f64) -> Result<PlanePoint, EvalError> {
    let r = ex.rex(theta, Determination::First)?;
    Ok(ex.position().scale(radius) + Phasor::rad(theta).scaled(radius * r))
}

/// Quadrilobe point between the unit circle (`s = 0`) and its
/// circumscribed square (`|s| = 1`):
/// `x = cos θ / √(1 − s²·sin²θ)`, `y = sin θ / √(1 − s²·cos²θ)`.
pub fn quadrilobe_point(theta: f64, s: f64) -> Result<PlanePoint> {
    if s.is_nan() || s.abs() > 1.0 {
        return Err(Error::invalid(
            "s",
            format!("quadrilobe needs |s| <= 1, got {s}"),
        ));
    }
    let (sn, c) = theta.sin_cos();
    let k = (1.0 - s) * (1.0 + s);
    // 1 − s²sin² = cos² + (1 − s²)sin², and symmetrically for y
    let dx = (c * c + k * sn * sn).sqrt();
    let dy = (sn * sn + k * c * c).sqrt();
    let x = if dx == 0.0 { 0.0 } else { c / dx };
    let y = if dy == 0.0 { 0.0 } else { sn / dy };
    Ok(PlanePoint::new(x, y))
}

pub fn sample_quadrilobe(s: f64, n: usize) -> Result<Polyline> {
    quadrilobe_point(0.0, s)?;
    sample_parametric(n, |theta| {
        Ok(quadrilobe_point(theta, s).expect("s validated above"))
    })
}

/// Elevated curve `(cel θ, sel θ)`.
pub fn sample_elevated(ex: &ExCenter, det: Determination, n: usize) -> Result<Polyline> {
    let ex = *ex;
    sample_parametric(n, move |theta| {
        ex.cel_sel(theta, det).map(|(x, y)| PlanePoint::new(x, y))
    })
}

/// Intersections of the line through `cfg.pole` at angle `θ` with the unit
/// circle about `cfg.circle_center`, as `(signed distance, point)` pairs
/// ordered first determination first. Empty when the line misses.
pub fn exotic_w_points(theta: f64, cfg: &ExoticConfig) -> Vec<(f64, PlanePoint)> {
    let hit = line_circle_intersections(cfg.pole, theta, cfg.circle_center, 1.0);
    hit.signed_distances.into_iter().zip(hit.points).collect()
}

fn exotic_select(
    theta: f64,
    cfg: &ExoticConfig,
    det: Determination,
    func: &'static str,
) -> Result<(f64, PlanePoint), EvalError> {
    let hits = exotic_w_points(theta, cfg);
    let i = match det {
        Determination::First => 0,
        Determination::Second => hits.len().saturating_sub(1),
    };
    hits.get(i).copied().ok_or(EvalError::Undefined {
        func,
        reason: "the line misses the circle",
    })
}

/// Exotic radial function: signed distance from `S` to the selected point.
pub fn exotic_rex(theta: f64, cfg: &ExoticConfig, det: Determination) -> Result<f64, EvalError> {
    exotic_select(theta, cfg, det, "exotic rex").map(|(t, _)| t)
}

/// Exotic cosine and sine: the coordinates of the selected point.
pub fn exotic_cex_sex(
    theta: f64,
    cfg: &ExoticConfig,
    det: Determination,
) -> Result<(f64, f64), EvalError> {
    exotic_select(theta, cfg, det, "exotic cex/sex").map(|(_, p)| (p.x, p.y))
}

/// Polar curve of the exotic radial function, `rex θ · rad θ` (the exotic
/// counterpart of the elevated curve).
pub fn sample_exotic(cfg: &ExoticConfig, det: Determination, n: usize) -> Result<Polyline> {
    let cfg = *cfg;
    sample_parametric(n, move |theta| {
        exotic_rex(theta, &cfg, det).map(|r| PlanePoint::from_polar(r, theta))
    })
}

/// Samples a family with an ex-center that moves with `θ`.
///
/// `eps_of_theta = |t| n·t` turns the ex-center by a multiple of θ.
pub fn variable_excenter_curve<S, E>(
    s_of_theta: S,
    eps_of_theta: E,
    family: CurveFamily,
    n: usize,
) -> Result<Polyline>
where
    S: Fn(f64) -> f64,
    E: Fn(f64) -> f64,
{
    let ex_at = |theta: f64| -> Result<ExCenter, EvalError> {
        ExCenter::try_new(s_of_theta(theta), eps_of_theta(theta)).ok_or(EvalError::Undefined {
            func: "ex-center schedule",
            reason: "non-finite s or eps",
        })
    };
    match family {
        CurveFamily::Booth { radius } => {
            check_radius(radius)?;
            sample_parametric(n, |theta| {
                let ex = ex_at(theta)?;
                Ok(booth_point(theta, ex.s(), ex.eps(), radius))
            })
        }
        CurveFamily::Excircle { radius } => {
            check_radius(radius)?;
            sample_parametric(n, |theta| excircle_point(&ex_at(theta)?, theta, radius))
        }
        CurveFamily::Elevated { det } => sample_parametric(n, |theta| {
            ex_at(theta)?
                .cel_sel(theta, det)
                .map(|(x, y)| PlanePoint::new(x, y))
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    use Determination::First;

    fn sample_at(p: &Polyline, theta: f64) -> PlanePoint {
        p.samples()
            .find(|s| (s.theta - theta).abs() < 1e-12)
            .map(|s| s.point)
            .expect("sample on grid")
    }

    #[test]
    fn booth_degenerate_at_origin() {
        let p = sample_booth(&ExCenter::centric(), 1.0, 8).unwrap();
        assert_eq!(p.len(), 8);
        assert!(p.points().all(|q| q.x == 0.0 && q.y == 0.0));
    }

    #[test]
    fn booth_half_at_pi() {
        let p = sample_booth(&ExCenter::new(0.5, 0.0), 1.0, 4).unwrap();
        let q = sample_at(&p, PI);
        assert!((q.x + 1.0).abs() < 1e-15 && q.y.abs() < 1e-15);
        // ρ(π) = rex₁(π) + rex₂(π) = 1.5 − 0.5
        let ex = ExCenter::new(0.5, 0.0);
        let sum = ex.rex(PI, First).unwrap() + ex.rex(PI, Determination::Second).unwrap();
        assert!((sum - 1.0).abs() < 1e-15);
    }

    #[test]
    fn booth_s2_reaches_four() {
        let p = sample_booth(&ExCenter::new(2.0, 0.0), 1.0, 720).unwrap();
        assert_eq!(p.runs.len(), 1);
        assert!(p.runs[0].closed);
        let max = p.points().map(PlanePoint::norm).fold(0.0, f64::max);
        assert!((max - 4.0).abs() < 1e-12);
        assert!((sample_at(&p, PI).x + 4.0).abs() < 1e-12);
    }

    #[test]
    fn excircle_centric_is_classical_circle() {
        let p = sample_excircle(&ExCenter::centric(), 3.0, 16).unwrap();
        assert!(p.points().all(|q| (q.norm() - 3.0).abs() < 1e-14));
    }

    #[test]
    fn excircle_examples() {
        let p = sample_excircle(&ExCenter::new(0.5, 0.0), 2.0, 4).unwrap();
        let q = sample_at(&p, FRAC_PI_2);
        assert!((q.x - 1.0).abs() < 1e-15);
        assert!((q.y - 1.732_050_807_568_877_2).abs() < 1e-15);
        assert!((q.norm() - 2.0).abs() < 1e-12);

        let p = sample_excircle(&ExCenter::new(1.0, 0.0), 1.0, 4).unwrap();
        let q = sample_at(&p, FRAC_PI_2);
        assert!((q.x - 1.0).abs() < 1e-15 && q.y.abs() < 1e-15);
    }

    #[test]
    fn excircle_rejects_outer_pole() {
        let err = sample_excircle(&ExCenter::new(1.5, 0.0), 1.0, 8).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { name: "s", .. }));
        assert!(sample_excircle(&ExCenter::new(0.5, 0.0), 0.0, 8).is_err());
        assert!(sample_excircle(&ExCenter::new(0.5, 0.0), 1.0, 2).is_err());
    }

    #[test]
    fn quadrilobe_examples() {
        let q = quadrilobe_point(0.4, 0.0).unwrap();
        assert!((q.x - 0.4f64.cos()).abs() < 1e-15 && (q.y - 0.4f64.sin()).abs() < 1e-15);
        let q = quadrilobe_point(FRAC_PI_4, 1.0).unwrap();
        assert!((q.x - 1.0).abs() < 1e-15 && (q.y - 1.0).abs() < 1e-15);
        let q = quadrilobe_point(FRAC_PI_4, 0.5).unwrap();
        assert!((q.x - 0.755_928_946_018_454_5).abs() < 1e-15);
        assert!((q.y - 0.755_928_946_018_454_5).abs() < 1e-15);
        assert!(quadrilobe_point(0.0, 1.01).is_err());
    }

    #[test]
    fn elevated_examples() {
        let p = sample_elevated(&ExCenter::centric(), First, 12).unwrap();
        assert!(p.points().all(|q| (q.norm() - 1.0).abs() < 1e-15));
        let p = sample_elevated(&ExCenter::new(0.5, 0.0), First, 4).unwrap();
        let q = sample_at(&p, PI);
        assert!((q.x + 1.5).abs() < 1e-15 && q.y.abs() < 1e-15);
        let p = sample_elevated(&ExCenter::new(1.0, 0.0), First, 4).unwrap();
        let q = sample_at(&p, PI);
        assert!((q.x + 2.0).abs() < 1e-15 && q.y.abs() < 1e-15);
    }

    #[test]
    fn elevated_gaps_for_outer_pole() {
        // s = 2, ε = 0: the line hits the circle only for |sin θ| <= 1/2
        let ex = ExCenter::new(2.0, 0.0);
        let p = sample_elevated(&ex, First, 360).unwrap();
        assert_eq!(p.runs.len(), 2);
        for run in &p.runs {
            assert!(!run.closed);
            assert!(run.samples.windows(2).all(|w| w[0].theta < w[1].theta));
        }
        // run boundaries sit on the tangent angles π/6 and 5π/6 (mod π)
        let ends: Vec<f64> = p
            .runs
            .iter()
            .flat_map(|r| [r.samples[0].theta, r.samples.last().unwrap().theta])
            .collect();
        let tangents = [PI / 6.0, 5.0 * PI / 6.0, 7.0 * PI / 6.0, 11.0 * PI / 6.0];
        for e in ends {
            let e = crate::angle::normalize(e);
            assert!(
                tangents.iter().any(|t| (t - e).abs() < 1e-9),
                "boundary {e} not at a tangent angle"
            );
        }
    }

    #[test]
    fn exotic_examples() {
        // C = O: plain ex-centric functions
        let ex = ExCenter::new(0.5, 0.3);
        let cfg = ExoticConfig::new(ex.position(), PlanePoint::ORIGIN);
        for k in 0..20 {
            let theta = k as f64 * 0.31;
            let (c, s) = exotic_cex_sex(theta, &cfg, First).unwrap();
            let (c0, s0) = ex.cex_sex(theta, First).unwrap();
            assert!((c - c0).abs() < 1e-12 && (s - s0).abs() < 1e-12);
            let r = exotic_rex(theta, &cfg, Determination::Second).unwrap();
            assert!((r - ex.rex(theta, Determination::Second).unwrap()).abs() < 1e-12);
        }

        let cfg = ExoticConfig::new(PlanePoint::new(0.5, 0.0), PlanePoint::new(0.2, 0.0));
        let w = exotic_w_points(FRAC_PI_2, &cfg);
        assert_eq!(w.len(), 2);
        assert!((w[0].1.x - 0.5).abs() < 1e-15);
        assert!((w[0].1.y - 0.953_939_201_416_945_6).abs() < 1e-15);
        assert!((w[1].1.y + 0.953_939_201_416_945_6).abs() < 1e-15);

        let cfg = ExoticConfig::new(PlanePoint::ORIGIN, PlanePoint::new(3.0, 0.0));
        assert!(exotic_w_points(FRAC_PI_2, &cfg).is_empty());
        assert!(exotic_rex(FRAC_PI_2, &cfg, First).is_err());
    }

    #[test]
    fn exotic_fully_centric() {
        let cfg = ExoticConfig::from_polar(0.0, 0.0, 0.0, 1.0);
        let (c, s) = exotic_cex_sex(0.9, &cfg, First).unwrap();
        assert!((c - 0.9f64.cos()).abs() < 1e-15 && (s - 0.9f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn variable_constant_schedule_matches_fixed() {
        let fixed = sample_excircle(&ExCenter::centric(), 1.0, 32).unwrap();
        let var =
            variable_excenter_curve(|_| 0.0, |_| 0.0, CurveFamily::Excircle { radius: 1.0 }, 32)
                .unwrap();
        assert_eq!(fixed, var);
    }

    #[test]
    fn variable_rotating_center_has_constant_rex() {
        // ε(θ) = θ makes θ − ε ≡ 0, so rex₁ = −0.5 + 1 = 0.5 throughout
        let p = variable_excenter_curve(|_| 0.5, |t| t, CurveFamily::Excircle { radius: 1.0 }, 64)
            .unwrap();
        for s in p.samples() {
            let pole = PlanePoint::from_polar(0.5, s.theta);
            assert!((s.point.dist(pole) - 0.5).abs() < 1e-12);
            let hit =
                crate::oracle::oracle_point(s.theta, &ExCenter::new(0.5, s.theta), First).unwrap();
            assert!(hit.dist(s.point) < 1e-12);
        }
    }

    #[test]
    fn variable_booth_endpoint() {
        let n = 1000;
        let p =
            variable_excenter_curve(|t| t / TAU, |_| 0.0, CurveFamily::Booth { radius: 1.0 }, n)
                .unwrap();
        let last = p.runs[0].samples.last().unwrap();
        let rho = -2.0 * (last.theta / TAU) * last.theta.cos();
        assert!((last.point.norm() - rho.abs()).abs() < 1e-12);
        // approaches −2·cos(2π) = −2 as θ → 2π
        assert!((rho + 2.0).abs() < 0.02);
    }
}
