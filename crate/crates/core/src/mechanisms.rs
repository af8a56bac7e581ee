//! Kinematic applications: slider-crank stroke, transfer functions, the
//! nonlinear oscillator driven by `ω = Ω·dex θ`, and static elastic
//! characteristics built from `tex`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::smf::{Determination, EvalError, ExCenter, Side};
use crate::{Error, Result};

/// Stroke of the push-pull (slider-crank) mechanism, `R·rex₁ θ` with the
/// ex-center at `s = e/R`, `ε = π`:
/// `e·cos θ + √(R² − e²·sin²θ)`.
///
/// `e` is the crank, `R` the connecting rod.
pub fn stroke(theta: f64, radius: f64, e: f64) -> Result<f64> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::invalid(
            "R",
            format!("must be positive, got {radius}"),
        ));
    }
    if !(e >= 0.0 && e.is_finite()) {
        return Err(Error::invalid(
            "e",
            format!("must be non-negative, got {e}"),
        ));
    }
    let ex = ExCenter::new(e / radius, PI);
    Ok(radius * ex.rex(theta, Determination::First)?)
}

/// Zero-order (position) transfer function. This is `rex`.
pub fn position_transfer(theta: f64, ex: &ExCenter, det: Determination) -> Result<f64, EvalError> {
    ex.rex(theta, det)
}

/// First-order (angular velocity) transfer function. This is `dex`.
pub fn velocity_transfer(theta: f64, ex: &ExCenter, det: Determination) -> Result<f64, EvalError> {
    ex.dex(theta, det)
}

/// Classic fixed-step RK4 for a scalar `dy/dt = f(t, y)`.
pub fn rk4_step<F>(f: F, t: f64, y: f64, h: f64) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
    let k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
    let k4 = f(t + h, y + h * k3);
    y + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorSample {
    pub t: f64,
    /// Generator angle `Ω·t + θ₀`, not reduced mod 2π.
    pub theta: f64,
    /// Closed-form `aex₁ θ`, continuous in time.
    pub alpha: f64,
    /// `α` from integrating `dα/dt = Ω·dex₁(Ωt + θ₀)` with RK4.
    pub alpha_rk4: f64,
    /// Projection `R·cos α`.
    pub x: f64,
    /// Instantaneous angular speed `Ω·dex₁ θ`.
    pub omega: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorConfig {
    pub ex: ExCenter,
    /// Generator speed `Ω`.
    pub omega: f64,
    /// Circle radius, which is the oscillation amplitude.
    pub radius: f64,
    pub t_end: f64,
    pub dt: f64,
    /// Generator phase at `t = 0`.
    pub theta0: f64,
}

impl OscillatorConfig {
    /// One generator period `T = 2π/Ω`, stepped at `T/10⁴`.
    pub fn one_period(ex: ExCenter, omega: f64, radius: f64) -> Self {
        let period = TAU / omega;
        OscillatorConfig {
            ex,
            omega,
            radius,
            t_end: period,
            dt: period / 1e4,
            theta0: 0.0,
        }
    }

    pub fn period(&self) -> f64 {
        TAU / self.omega
    }

    fn validate(&self) -> Result<()> {
        if self.ex.s().abs() > 1.0 {
            return Err(Error::invalid(
                "s",
                format!("oscillator needs |s| <= 1, got {}", self.ex.s()),
            ));
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(Error::invalid(
                "Omega",
                format!("must be positive, got {}", self.omega),
            ));
        }
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::invalid(
                "R",
                format!("must be positive, got {}", self.radius),
            ));
        }
        if !(self.dt > 0.0 && self.t_end.is_finite() && self.dt <= self.t_end) {
            return Err(Error::invalid(
                "dt",
                format!(
                    "need 0 < dt <= t_end, got dt = {}, t_end = {}",
                    self.dt, self.t_end
                ),
            ));
        }
        if !self.theta0.is_finite() {
            return Err(Error::invalid("theta0", "must be finite"));
        }
        Ok(())
    }
}

/// Generator angles strictly inside `(a, b)` where `dex` jumps. Only
/// `|s| = 1` has jumps: they sit at `θ − ε ≡ π/2 (mod π)`.
fn jumps_between(ex: &ExCenter, a: f64, b: f64) -> Vec<f64> {
    if ex.s().abs() != 1.0 {
        return Vec::new();
    }
    let margin = 1e-12 * a.abs().max(b.abs()).max(1.0);
    let base = ex.eps() + FRAC_PI_2;
    let first = ((a - base) / PI).floor() as i64;
    let last = ((b - base) / PI).ceil() as i64;
    (first..=last)
        .map(|k| base + k as f64 * PI)
        .filter(|&j| j > a + margin && j < b - margin)
        .collect()
}

/// Runs the nonlinear oscillator: a point on the circle whose polar angle
/// is `α = aex₁(Ωt + θ₀)`, so it turns at `ω = Ω·dex₁ θ`.
///
/// The RK4 track and the closed form agree to integration accuracy. At
/// `|s| = 1` the speed is piecewise constant (0 or 2Ω); each step is split
/// at those jumps so the integration stays exact.
pub fn simulate_oscillator(cfg: &OscillatorConfig) -> Result<Vec<OscillatorSample>> {
    cfg.validate()?;
    let ex = cfg.ex;
    let det = Determination::First;
    let theta_at = |t: f64| cfg.theta0 + cfg.omega * t;
    let steps = ((cfg.t_end / cfg.dt) - 1e-9).ceil().max(1.0) as usize;
    let time_at = |k: usize| {
        if k == steps {
            cfg.t_end
        } else {
            k as f64 * cfg.dt
        }
    };

    let sample = |t: f64, alpha_rk4: f64| -> Result<OscillatorSample> {
        let theta = theta_at(t);
        let alpha = ex.aex_unwrapped(theta, det)?;
        Ok(OscillatorSample {
            t,
            theta,
            alpha,
            alpha_rk4,
            x: cfg.radius * alpha.cos(),
            omega: cfg.omega * ex.dex(theta, det)?,
        })
    };

    let mut out = Vec::with_capacity(steps + 1);
    let mut alpha_rk4 = ex.aex_unwrapped(theta_at(0.0), det)?;
    out.push(sample(0.0, alpha_rk4)?);
    for k in 0..steps {
        let (t0, t1) = (time_at(k), time_at(k + 1));
        let mut knots = vec![t0];
        knots.extend(
            jumps_between(&ex, theta_at(t0), theta_at(t1))
                .into_iter()
                .map(|j| (j - cfg.theta0) / cfg.omega),
        );
        knots.push(t1);
        for w in knots.windows(2) {
            let (a, b) = (w[0], w[1]);
            let mid = 0.5 * (a + b);
            // one-sided limits at the sub-interval ends
            let rate = |t: f64, _y: f64| {
                let side = if t <= mid { Side::Right } else { Side::Left };
                cfg.omega
                    * ex.dex_one_sided(theta_at(t), det, side)
                        .expect("dex is total for |s| <= 1")
            };
            alpha_rk4 = rk4_step(rate, a, alpha_rk4, b - a);
        }
        out.push(sample(t1, alpha_rk4)?);
    }
    Ok(out)
}

/// A point of a static elastic characteristic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecPoint {
    pub x: f64,
    pub force: f64,
}

/// Static elastic characteristic.
///
/// The linear spring `y = m·x` has slope `m = tan θ`. Displacement is read
/// as `x = tan θ`, and the ex-centric characteristic replaces the slope
/// function by `tex`: `y = tex₁,₂(arctan x)`. With `s = 0` this is exactly
/// `y = x`. With `ε = 0`, `s < 0` gives a hard (progressive) spring and
/// `s > 0` a soft (regressive) one; `ε = π` swaps the two.
pub fn sec_force(x: f64, ex: &ExCenter, det: Determination) -> Result<f64, EvalError> {
    ex.tex(x.atan(), det)
}

/// `n` evenly spaced points of the characteristic on `[-x_max, x_max]`.
pub fn sec_curve(ex: &ExCenter, det: Determination, x_max: f64, n: usize) -> Result<Vec<SecPoint>> {
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(Error::invalid(
            "x_max",
            format!("must be positive, got {x_max}"),
        ));
    }
    if n < 2 {
        return Err(Error::invalid(
            "n",
            format!("need at least 2 samples, got {n}"),
        ));
    }
    (0..n)
        .map(|k| {
            let x = -x_max + 2.0 * x_max * k as f64 / (n - 1) as f64;
            Ok(SecPoint {
                x,
                force: sec_force(x, ex, det)?,
            })
        })
        .collect()
}
