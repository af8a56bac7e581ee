//! Closed-form ex-centric circular functions.
//!
//! Geometry: the pole `S = (s·cos ε, s·sin ε)` sits inside (or outside) the
//! unit circle centred at `O`. The line `d` through `S` at angle `θ` cuts the
//! circle at `W₁` (the `+` root, positive ray for `|s| ≤ 1`) and `W₂` (the `−`
//! root). Functions of the ex-centric variable `θ` are lower case (`rex`,
//! `aex`, ...). Functions of the centric variable `α`, the polar angle of `W`
//! seen from `O`, carry a `_centric` suffix (`Rex`, `Aex`, ... in the usual
//! notation).
//!
//! Every function is an invariant expression in `s`, `ε` and `θ` (or `α`):
//!
//! ```text
//! rex₁,₂ θ = −s·cos(θ−ε) ± √(1 − s²·sin²(θ−ε))
//! aex₁ θ   = θ − asin(s·sin(θ−ε))          aex₂ θ = θ + π + asin(s·sin(θ−ε))
//! dex₁,₂ θ = 1 ∓ s·cos(θ−ε) / √(1 − s²·sin²(θ−ε))
//! Rex α    = ±√(1 + s² − 2·s·cos(α−ε))
//! Dex α    = (1 − s·cos(α−ε)) / Rex² α
//! ```

use std::f64::consts::PI;

use crate::angle::normalize;

/// Half-width of the window around a dex jump at `|s| = 1` where the
/// one-sided limit is returned instead of `sgn(cos)`.
const JUMP_TOL: f64 = 1e-12;

/// Evaluation failure of a single function value.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("{func}: domain error, delta = {delta} < 0 (the line through the ex-center misses the circle)")]
    Domain { func: &'static str, delta: f64 },
    #[error("{func}: undefined ({reason})")]
    Undefined {
        func: &'static str,
        reason: &'static str,
    },
}

/// Which intersection of the generating line with the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Determination {
    /// `+` in front of the square root; `rex₁ ≥ 0` for `|s| ≤ 1`.
    #[default]
    First,
    /// `−` in front of the square root; `rex₂ ≤ 0` for `|s| ≤ 1`.
    Second,
}

impl Determination {
    /// `+1.0` for the first determination, `-1.0` for the second.
    pub fn sign(self) -> f64 {
        match self {
            Determination::First => 1.0,
            Determination::Second => -1.0,
        }
    }

    /// Parses the index used on the command line (`1` or `2`).
    pub fn from_index(index: u8) -> Option<Self> {
        match index {
            1 => Some(Determination::First),
            2 => Some(Determination::Second),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Determination::First => 1,
            Determination::Second => 2,
        }
    }
}

/// Side of a one-sided limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        PlanePoint::new(radius * c, radius * s)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn max_norm(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn scale(self, k: f64) -> Self {
        PlanePoint::new(k * self.x, k * self.y)
    }

    pub fn dist(self, other: PlanePoint) -> f64 {
        (self - other).norm()
    }
}

impl std::ops::Add for PlanePoint {
    type Output = PlanePoint;

    fn add(self, other: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x + other.x, self.y + other.y)
    }
}

impl std::ops::Sub for PlanePoint {
    type Output = PlanePoint;

    fn sub(self, other: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x - other.x, self.y - other.y)
    }
}

/// Unit direction vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phasor {
    x: f64,
    y: f64,
}

impl Phasor {
    /// `rad a = (cos a, sin a)`.
    pub fn rad(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Phasor { x: c, y: s }
    }

    /// `der a = d(rad a)/da = (−sin a, cos a)`.
    pub fn der(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Phasor { x: -s, y: c }
    }

    pub fn x(self) -> f64 {
        self.x
    }

    pub fn y(self) -> f64 {
        self.y
    }

    pub fn dot(self, other: Phasor) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn scaled(self, k: f64) -> PlanePoint {
        PlanePoint::new(k * self.x, k * self.y)
    }
}

/// `(rad a, der a)`.
pub fn rad_der(angle: f64) -> (Phasor, Phasor) {
    (Phasor::rad(angle), Phasor::der(angle))
}

/// The pole `S(s, ε)`: numerical ex-centricity `s = e/R` and polar angle `ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExCenter {
    s: f64,
    eps: f64,
}

impl ExCenter {
    /// Builds an ex-center, normalizing `eps` into `[0, 2π)`.
    ///
    /// # Panics
    ///
    /// If `s` or `eps` is not finite. Use [`ExCenter::try_new`] for
    /// unvalidated input.
    pub fn new(s: f64, eps: f64) -> Self {
        Self::try_new(s, eps).expect("ex-center parameters must be finite")
    }

    pub fn try_new(s: f64, eps: f64) -> Option<Self> {
        (s.is_finite() && eps.is_finite()).then(|| ExCenter {
            s,
            eps: normalize(eps),
        })
    }

    /// `S ≡ O`: the centric case.
    pub fn centric() -> Self {
        ExCenter { s: 0.0, eps: 0.0 }
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Cartesian position of `S` for the unit circle.
    pub fn position(&self) -> PlanePoint {
        PlanePoint::from_polar(self.s, self.eps)
    }

    /// Radicand of rex: `1 − s²·sin²(θ−ε)`. Negative exactly when the line
    /// misses the circle, which needs `|s| > 1`.
    pub fn delta(&self, theta: f64) -> f64 {
        let (sn, c) = (theta - self.eps).sin_cos();
        // same quantity, written without cancellation at |s| = 1
        c * c + (1.0 - self.s) * (1.0 + self.s) * sn * sn
    }

    fn checked_delta(&self, theta: f64, func: &'static str) -> Result<f64, EvalError> {
        let delta = self.delta(theta);
        if delta < 0.0 {
            Err(EvalError::Domain { func, delta })
        } else {
            Ok(delta)
        }
    }

    /// Ex-centric radial function: signed distance from `S` to `W₁,₂` along
    /// the line at angle `θ`.
    pub fn rex(&self, theta: f64, det: Determination) -> Result<f64, EvalError> {
        let delta = self.checked_delta(theta, "rex")?;
        let c = (theta - self.eps).cos();
        Ok(-self.s * c + det.sign() * delta.sqrt())
    }

    /// Ex-centric amplitude `α₁,₂ = aex₁,₂ θ`, in `[0, 2π)`.
    pub fn aex(&self, theta: f64, det: Determination) -> Result<f64, EvalError> {
        self.aex_unwrapped(theta, det).map(normalize)
    }

    /// Same as [`ExCenter::aex`] without the final reduction mod `2π`. For
    /// `|s| ≤ 1` this is continuous in `θ` and gains exactly `2π` per turn.
    pub fn aex_unwrapped(&self, theta: f64, det: Determination) -> Result<f64, EvalError> {
        self.checked_delta(theta, "aex")?;
        let beta = (self.s * (theta - self.eps).sin()).clamp(-1.0, 1.0).asin();
        Ok(match det {
            Determination::First => theta - beta,
            Determination::Second => theta + PI + beta,
        })
    }

    /// `(cex θ, sex θ) = (cos aex θ, sin aex θ)`: the coordinates of `W₁,₂`.
    pub fn cex_sex(&self, theta: f64, det: Determination) -> Result<(f64, f64), EvalError> {
        let (s, c) = self.aex_unwrapped(theta, det)?.sin_cos();
        Ok((c, s))
    }

    /// Ex-centric derivative `dα/dθ`. At `|s| = 1` the function jumps between
    /// 0 and 2; at a jump angle the right-sided limit is returned.
    pub fn dex(&self, theta: f64, det: Determination) -> Result<f64, EvalError> {
        self.dex_one_sided(theta, det, Side::Right)
    }

    /// [`ExCenter::dex`] with an explicit limit side at the `|s| = 1` jumps.
    /// Identical to `dex` everywhere else.
    pub fn dex_one_sided(
        &self,
        theta: f64,
        det: Determination,
        side: Side,
    ) -> Result<f64, EvalError> {
        let (sn, c) = (theta - self.eps).sin_cos();
        if self.s.abs() == 1.0 {
            // √Δ = |cos(θ−ε)|, so s·cos/√Δ = s·sgn(cos)
            let sgn = if c.abs() <= JUMP_TOL {
                match side {
                    Side::Right => -sn.signum(),
                    Side::Left => sn.signum(),
                }
            } else {
                c.signum()
            };
            return Ok(1.0 - det.sign() * self.s * sgn);
        }
        let delta = self.delta(theta);
        if delta <= 0.0 {
            return Err(EvalError::Domain { func: "dex", delta });
        }
        Ok(1.0 - self.s * c / (det.sign() * delta.sqrt()))
    }

    /// Ex-centric tangent `tan(aex θ) = sex θ / cex θ`.
    pub fn tex(&self, theta: f64, det: Determination) -> Result<f64, EvalError> {
        let (c, s) = self.cex_sex(theta, det)?;
        if c == 0.0 {
            return Err(EvalError::Undefined {
                func: "tex",
                reason: "cex = 0",
            });
        }
        Ok(s / c)
    }

    /// Elevated cosine and sine: `rex θ·cos θ`, `rex θ·sin θ`.
    pub fn cel_sel(&self, theta: f64, det: Determination) -> Result<(f64, f64), EvalError> {
        let r = self.rex(theta, det)?;
        let (s, c) = theta.sin_cos();
        Ok((r * c, r * s))
    }

    /// `W₁,₂ = S + rex₁,₂ θ · rad θ`.
    pub fn w_point(&self, theta: f64, det: Determination) -> Result<PlanePoint, EvalError> {
        let r = self.rex(theta, det)?;
        Ok(self.position() + Phasor::rad(theta).scaled(r))
    }

    /// Velocity of `W₁,₂` for a unit generator speed: `dex θ · der α`.
    pub fn w_velocity(&self, theta: f64, det: Determination) -> Result<PlanePoint, EvalError> {
        let d = self.dex(theta, det)?;
        let alpha = self.aex_unwrapped(theta, det)?;
        Ok(Phasor::der(alpha).scaled(d))
    }

    // Functions of the centric variable α.

    /// `(1 − s·cos(α−ε), s·sin(α−ε))`: the components of `W − S` along and
    /// across `rad α`.
    fn centric_parts(&self, alpha: f64) -> (f64, f64) {
        let (sn, c) = (alpha - self.eps).sin_cos();
        (1.0 - self.s * c, self.s * sn)
    }

    /// `Rex α = ±√(1 + s² − 2s·cos(α−ε))`: distance from `S` to the circle
    /// point at centric angle `α`, signed by the determination.
    pub fn rex_centric(&self, alpha: f64, det: Determination) -> f64 {
        let (along, across) = self.centric_parts(alpha);
        det.sign() * along.hypot(across)
    }

    /// `Aex α`: the ex-centric angle `θ` of the line through `S` and
    /// `W = (cos α, sin α)`. Inverse of `aex` for the same determination.
    pub fn aex_centric(&self, alpha: f64, det: Determination) -> Result<f64, EvalError> {
        let (along, across) = self.centric_parts(alpha);
        if along == 0.0 && across == 0.0 {
            return Err(EvalError::Undefined {
                func: "Aex",
                reason: "W coincides with the ex-center",
            });
        }
        let theta = alpha + across.atan2(along);
        Ok(normalize(match det {
            Determination::First => theta,
            Determination::Second => theta + PI,
        }))
    }

    /// `(Cex α, Sex α) = (cos Aex α, sin Aex α)`.
    pub fn cex_sex_centric(&self, alpha: f64, det: Determination) -> Result<(f64, f64), EvalError> {
        let (s, c) = self.aex_centric(alpha, det)?.sin_cos();
        Ok((c, s))
    }

    /// `Dex α = dθ/dα = (1 − s·cos(α−ε)) / Rex² α`. The same for both
    /// determinations.
    pub fn dex_centric(&self, alpha: f64, _det: Determination) -> Result<f64, EvalError> {
        let (along, across) = self.centric_parts(alpha);
        let rex2 = along * along + across * across;
        if rex2 == 0.0 {
            return Err(EvalError::Undefined {
                func: "Dex",
                reason: "Rex = 0",
            });
        }
        Ok(along / rex2)
    }

    /// `(Cel α, Sel α) = (Rex α·cos α, Rex α·sin α)`.
    pub fn cel_sel_centric(&self, alpha: f64, det: Determination) -> (f64, f64) {
        let r = self.rex_centric(alpha, det);
        let (s, c) = alpha.sin_cos();
        (r * c, r * s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::distance;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    use Determination::{First, Second};

    const SQRT_075: f64 = 0.866_025_403_784_438_6;

    fn half() -> ExCenter {
        ExCenter::new(0.5, 0.0)
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn eps_is_normalized() {
        let ex = ExCenter::new(0.3, -FRAC_PI_2);
        close(ex.eps(), 1.5 * PI, 1e-15);
        assert!(ExCenter::try_new(f64::NAN, 0.0).is_none());
        assert!(ExCenter::try_new(0.1, f64::INFINITY).is_none());
    }

    #[test]
    fn delta_examples() {
        close(ExCenter::centric().delta(1.234), 1.0, 1e-15);
        close(half().delta(FRAC_PI_2), 0.75, 1e-15);
        close(ExCenter::new(2.0, 0.0).delta(FRAC_PI_2), -3.0, 1e-15);
    }

    #[test]
    fn rex_examples() {
        close(half().rex(0.0, First).unwrap(), 0.5, 1e-15);
        close(half().rex(0.0, Second).unwrap(), -1.5, 1e-15);
        close(half().rex(FRAC_PI_2, First).unwrap(), SQRT_075, 1e-15);
        for t in [0.0, 1.0, 4.0] {
            close(ExCenter::centric().rex(t, First).unwrap(), 1.0, 1e-15);
            close(ExCenter::centric().rex(t, Second).unwrap(), -1.0, 1e-15);
        }
    }

    #[test]
    fn rex_domain_error_outside() {
        let err = ExCenter::new(2.0, 0.0).rex(FRAC_PI_2, First).unwrap_err();
        assert!(matches!(err, EvalError::Domain { func: "rex", delta } if delta < 0.0));
        assert!(err.to_string().contains("delta"));
        // but the line along the axis still hits the circle
        close(
            ExCenter::new(2.0, 0.0).rex(0.0, First).unwrap(),
            -1.0,
            1e-15,
        );
        close(
            ExCenter::new(2.0, 0.0).rex(0.0, Second).unwrap(),
            -3.0,
            1e-15,
        );
    }

    #[test]
    fn rex_centric_examples() {
        close(ExCenter::centric().rex_centric(2.0, First), 1.0, 1e-15);
        close(half().rex_centric(FRAC_PI_3, First), SQRT_075, 1e-15);
        close(half().rex_centric(0.0, First), 0.5, 1e-15);
        close(half().rex_centric(0.0, Second), -0.5, 1e-15);
    }

    #[test]
    fn aex_examples() {
        close(ExCenter::centric().aex(2.5, First).unwrap(), 2.5, 1e-15);
        close(half().aex(FRAC_PI_2, First).unwrap(), FRAC_PI_3, 1e-15);
        close(half().aex(0.0, First).unwrap(), 0.0, 1e-15);
        close(half().aex(0.0, Second).unwrap(), PI, 1e-15);
        assert!(ExCenter::new(2.0, 0.0).aex(FRAC_PI_2, First).is_err());
    }

    #[test]
    fn aex_centric_examples() {
        close(
            ExCenter::centric().aex_centric(1.1, First).unwrap(),
            1.1,
            1e-15,
        );
        close(
            half().aex_centric(FRAC_PI_3, First).unwrap(),
            FRAC_PI_2,
            1e-15,
        );
        close(half().aex_centric(0.0, First).unwrap(), 0.0, 1e-15);
        let err = ExCenter::new(1.0, 0.7).aex_centric(0.7, First).unwrap_err();
        assert!(matches!(err, EvalError::Undefined { func: "Aex", .. }));
    }

    #[test]
    fn aex_centric_matches_printed_arcsin_form() {
        // θ = α + asin(s·sin(α−ε)/Rex α) wherever 1 − s·cos(α−ε) > 0
        let ex = ExCenter::new(0.7, 0.4);
        for k in 0..64 {
            let alpha = k as f64 * 0.1;
            let rex = ex.rex_centric(alpha, First);
            let printed = alpha + (0.7 * (alpha - 0.4).sin() / rex).asin();
            assert!(distance(ex.aex_centric(alpha, First).unwrap(), printed) < 1e-13);
        }
    }

    #[test]
    fn second_determination_inverse_pair() {
        let ex = ExCenter::new(0.6, 1.0);
        for k in 0..50 {
            let theta = k as f64 * 0.127;
            let a2 = ex.aex(theta, Second).unwrap();
            let back = ex.aex_centric(a2, Second).unwrap();
            assert!(distance(back, theta) < 1e-12, "theta {theta}");
            close(
                ex.rex_centric(a2, Second),
                ex.rex(theta, Second).unwrap(),
                1e-12,
            );
        }
    }

    #[test]
    fn cex_sex_examples() {
        let (c, s) = ExCenter::centric().cex_sex(0.8, First).unwrap();
        close(c, 0.8f64.cos(), 1e-15);
        close(s, 0.8f64.sin(), 1e-15);
        let (c, s) = half().cex_sex(FRAC_PI_2, First).unwrap();
        close(c, 0.5, 1e-15);
        close(s, SQRT_075, 1e-15);
        let (c, s) = half().cex_sex(0.0, Second).unwrap();
        close(c, -1.0, 1e-15);
        close(s, 0.0, 1e-15);
    }

    #[test]
    fn cex_sex_centric_examples() {
        let (c, s) = ExCenter::centric().cex_sex_centric(0.8, First).unwrap();
        close(c, 0.8f64.cos(), 1e-15);
        close(s, 0.8f64.sin(), 1e-15);
        let (c, s) = half().cex_sex_centric(FRAC_PI_3, First).unwrap();
        close(c, 0.0, 1e-15);
        close(s, 1.0, 1e-15);
        let (c, s) = half().cex_sex_centric(0.0, First).unwrap();
        close(c, 1.0, 1e-15);
        close(s, 0.0, 1e-15);
    }

    #[test]
    fn dex_examples() {
        close(ExCenter::centric().dex(0.3, First).unwrap(), 1.0, 1e-15);
        close(half().dex(0.0, First).unwrap(), 0.5, 1e-15);
        close(half().dex(0.0, Second).unwrap(), 1.5, 1e-15);
        close(half().dex(FRAC_PI_2, First).unwrap(), 1.0, 1e-15);
    }

    #[test]
    fn dex_jumps_at_unit_excentricity() {
        let ex = ExCenter::new(1.0, 0.0);
        assert_eq!(ex.dex(0.3, First).unwrap(), 0.0);
        assert_eq!(ex.dex(2.0, First).unwrap(), 2.0);
        assert_eq!(ex.dex(2.0, Second).unwrap(), 0.0);
        // θ = π/2: cos goes + → −, right limit 2, left limit 0
        assert_eq!(ex.dex(FRAC_PI_2, First).unwrap(), 2.0);
        assert_eq!(ex.dex_one_sided(FRAC_PI_2, First, Side::Left).unwrap(), 0.0);
        // θ = 3π/2: cos goes − → +
        assert_eq!(ex.dex(1.5 * PI, First).unwrap(), 0.0);
        assert_eq!(ex.dex_one_sided(1.5 * PI, First, Side::Left).unwrap(), 2.0);
        // s = −1 mirrors the pattern
        let neg = ExCenter::new(-1.0, 0.0);
        assert_eq!(neg.dex(0.3, First).unwrap(), 2.0);
        assert_eq!(neg.dex(FRAC_PI_2, First).unwrap(), 0.0);
    }

    #[test]
    fn dex_tangency_is_domain_error() {
        let ex = ExCenter::new(2.0, 0.0);
        assert!(ex.dex(FRAC_PI_2, First).is_err());
        // near the tangent line θ = π/6 the derivative blows up
        let near = ex.dex(FRAC_PI_6 - 1e-9, First).unwrap();
        assert!(near.abs() > 1e3, "{near}");
    }

    #[test]
    fn dex_centric_examples() {
        close(
            ExCenter::centric().dex_centric(0.4, First).unwrap(),
            1.0,
            1e-15,
        );
        close(half().dex_centric(FRAC_PI_3, First).unwrap(), 1.0, 1e-15);
        close(half().dex_centric(0.0, First).unwrap(), 2.0, 1e-15);
        assert!(ExCenter::new(1.0, 0.0).dex_centric(0.0, First).is_err());
    }

    #[test]
    fn tex_examples() {
        close(
            ExCenter::centric().tex(0.7, First).unwrap(),
            0.7f64.tan(),
            1e-15,
        );
        close(
            half().tex(FRAC_PI_2, First).unwrap(),
            1.732_050_807_568_877_2,
            1e-14,
        );
        close(half().tex(0.0, First).unwrap(), 0.0, 1e-15);
    }

    #[test]
    fn cel_sel_examples() {
        let (c, s) = ExCenter::centric().cel_sel(0.9, First).unwrap();
        close(c, 0.9f64.cos(), 1e-15);
        close(s, 0.9f64.sin(), 1e-15);
        let (c, s) = half().cel_sel(PI, First).unwrap();
        close(c, -1.5, 1e-15);
        close(s, 0.0, 1e-15);
        let (c, s) = half().cel_sel(FRAC_PI_2, First).unwrap();
        close(c, 0.0, 1e-15);
        close(s, SQRT_075, 1e-15);
    }

    #[test]
    fn cel_sel_centric_uses_alpha() {
        let (c, s) = half().cel_sel_centric(FRAC_PI_3, First);
        close(c, SQRT_075 * 0.5, 1e-15);
        close(s, SQRT_075 * SQRT_075, 1e-15);
    }

    #[test]
    fn rad_der_examples() {
        let (r, d) = rad_der(0.0);
        assert_eq!((r.x(), r.y(), d.x(), d.y()), (1.0, 0.0, -0.0, 1.0));
        let (r, d) = rad_der(FRAC_PI_2);
        close(r.x(), 0.0, 1e-15);
        close(r.y(), 1.0, 1e-15);
        close(d.x(), -1.0, 1e-15);
        close(d.y(), 0.0, 1e-15);
        let (r, d) = rad_der(FRAC_PI_4);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        close(r.x(), h, 1e-15);
        close(r.y(), h, 1e-15);
        close(d.x(), -h, 1e-15);
        close(d.y(), h, 1e-15);
        assert!(r.dot(d).abs() < 1e-15);
    }

    #[test]
    fn w_point_examples() {
        let w = half().w_point(FRAC_PI_2, First).unwrap();
        close(w.x, 0.5, 1e-15);
        close(w.y, SQRT_075, 1e-15);
        let w = ExCenter::centric().w_point(1.3, First).unwrap();
        close(w.x, 1.3f64.cos(), 1e-15);
        close(w.y, 1.3f64.sin(), 1e-15);
        let w = half().w_point(0.0, Second).unwrap();
        close(w.x, -1.0, 1e-15);
        close(w.y, 0.0, 1e-15);
    }

    #[test]
    fn w_velocity_examples() {
        let v = ExCenter::centric().w_velocity(0.6, First).unwrap();
        close(v.x, -(0.6f64.sin()), 1e-15);
        close(v.y, 0.6f64.cos(), 1e-15);
        let v = half().w_velocity(FRAC_PI_2, First).unwrap();
        close(v.x, -SQRT_075, 1e-15);
        close(v.y, 0.5, 1e-15);
        let v = half().w_velocity(0.0, First).unwrap();
        close(v.x, 0.0, 1e-15);
        close(v.y, 0.5, 1e-15);
    }

    #[test]
    fn determination_index_round_trip() {
        assert_eq!(Determination::from_index(1), Some(First));
        assert_eq!(Determination::from_index(2), Some(Second));
        assert_eq!(Determination::from_index(3), None);
        assert_eq!(Second.index(), 2);
    }
}
