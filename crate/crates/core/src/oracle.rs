//! Brute-force ground truth for the closed forms in [`crate::smf`].
//!
//! Nothing here calls into `smf`: the intersection points come from solving
//! `|P + t·u − C|² = r²` directly, and derivatives from central differences.

use crate::angle::{normalize, wrapped_diff};
use crate::smf::{Determination, EvalError, ExCenter, PlanePoint};

/// Tolerance on the discriminant below which the line counts as tangent.
const TANGENT_TOL: f64 = 1e-12;

/// Intersections of a directed line with a circle, by decreasing signed
/// distance from the pole.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionResult {
    pub points: Vec<PlanePoint>,
    pub signed_distances: Vec<f64>,
}

impl IntersectionResult {
    pub fn count(&self) -> usize {
        self.points.len()
    }

    fn miss() -> Self {
        IntersectionResult {
            points: Vec::new(),
            signed_distances: Vec::new(),
        }
    }

    /// Intersection chosen by the determination. A tangent line yields the
    /// same point for both.
    pub fn select(&self, det: Determination) -> Option<(f64, PlanePoint)> {
        let i = match (det, self.count()) {
            (_, 0) => return None,
            (Determination::First, _) | (_, 1) => 0,
            (Determination::Second, _) => 1,
        };
        Some((self.signed_distances[i], self.points[i]))
    }
}

/// Solves `|pole + t·(cos θ, sin θ) − center|² = radius²` for `t`.
///
/// The larger-magnitude root is computed first and the other from the
/// product of roots, so neither loses precision to cancellation.
pub fn line_circle_intersections(
    pole: PlanePoint,
    theta: f64,
    center: PlanePoint,
    radius: f64,
) -> IntersectionResult {
    assert!(radius > 0.0, "radius must be positive");
    let (uy, ux) = theta.sin_cos();
    let dx = pole.x - center.x;
    let dy = pole.y - center.y;
    // t² + 2·b·t + c = 0
    let b = dx * ux + dy * uy;
    let c = (dx * dx + dy * dy) - radius * radius;
    let disc = b * b - c;
    let scale = radius * radius;
    if disc < -TANGENT_TOL * scale {
        return IntersectionResult::miss();
    }
    let at = |t: f64| PlanePoint::new(pole.x + t * ux, pole.y + t * uy);
    if disc <= TANGENT_TOL * scale {
        let t = -b;
        return IntersectionResult {
            points: vec![at(t)],
            signed_distances: vec![t],
        };
    }
    let root = disc.sqrt();
    let q = if b >= 0.0 { -b - root } else { -b + root };
    let (t_big, t_small) = (q, c / q);
    let (t1, t2) = if t_big >= t_small {
        (t_big, t_small)
    } else {
        (t_small, t_big)
    };
    IntersectionResult {
        points: vec![at(t1), at(t2)],
        signed_distances: vec![t1, t2],
    }
}

fn unit_circle_hit(
    theta: f64,
    ex: &ExCenter,
    det: Determination,
    func: &'static str,
) -> Result<(f64, PlanePoint), EvalError> {
    let pole = PlanePoint::new(ex.s() * ex.eps().cos(), ex.s() * ex.eps().sin());
    line_circle_intersections(pole, theta, PlanePoint::ORIGIN, 1.0)
        .select(det)
        .ok_or(EvalError::Domain {
            func,
            delta: f64::NAN,
        })
}

/// Signed distance from the pole to the selected unit-circle intersection.
pub fn oracle_rex(theta: f64, ex: &ExCenter, det: Determination) -> Result<f64, EvalError> {
    unit_circle_hit(theta, ex, det, "oracle_rex").map(|(t, _)| t)
}

/// The selected intersection point itself.
pub fn oracle_point(
    theta: f64,
    ex: &ExCenter,
    det: Determination,
) -> Result<PlanePoint, EvalError> {
    unit_circle_hit(theta, ex, det, "oracle_point").map(|(_, p)| p)
}

/// Polar angle of the selected intersection seen from the origin, in `[0, 2π)`.
pub fn oracle_alpha(theta: f64, ex: &ExCenter, det: Determination) -> Result<f64, EvalError> {
    unit_circle_hit(theta, ex, det, "oracle_alpha").map(|(_, p)| normalize(p.y.atan2(p.x)))
}

/// Central difference `(f(x+h) − f(x−h)) / 2h`.
pub fn fd_derivative<E>(f: impl Fn(f64) -> Result<f64, E>, x: f64, h: f64) -> Result<f64, E> {
    debug_assert!(h > 0.0);
    Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
}

/// Central difference of an angle-valued function, unwrapping across `2π`.
pub fn fd_angle_derivative<E>(f: impl Fn(f64) -> Result<f64, E>, x: f64, h: f64) -> Result<f64, E> {
    debug_assert!(h > 0.0);
    Ok(wrapped_diff(f(x + h)?, f(x - h)?) / (2.0 * h))
}

/// Componentwise central difference of a point-valued function.
pub fn fd_point_derivative<E>(
    f: impl Fn(f64) -> Result<PlanePoint, E>,
    x: f64,
    h: f64,
) -> Result<PlanePoint, E> {
    let (hi, lo) = (f(x + h)?, f(x - h)?);
    Ok(PlanePoint::new(
        (hi.x - lo.x) / (2.0 * h),
        (hi.y - lo.y) / (2.0 * h),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::convert::Infallible;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    use Determination::{First, Second};

    #[test]
    fn centred_pole_hits_both_sides() {
        let r = line_circle_intersections(PlanePoint::ORIGIN, 0.0, PlanePoint::ORIGIN, 1.0);
        assert_eq!(r.count(), 2);
        assert_eq!(r.signed_distances, vec![1.0, -1.0]);
        assert!((r.points[0].x - 1.0).abs() < 1e-15 && r.points[0].y.abs() < 1e-15);
        assert!((r.points[1].x + 1.0).abs() < 1e-15 && r.points[1].y.abs() < 1e-15);
    }

    #[test]
    fn interior_pole_vertical_line() {
        let r = line_circle_intersections(
            PlanePoint::new(0.5, 0.0),
            FRAC_PI_2,
            PlanePoint::ORIGIN,
            1.0,
        );
        assert_eq!(r.count(), 2);
        assert!((r.signed_distances[0] - 0.866_025_403_784_438_6).abs() < 1e-15);
        assert!((r.signed_distances[1] + 0.866_025_403_784_438_6).abs() < 1e-15);
        for p in &r.points {
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn exterior_vertical_line_misses() {
        let r = line_circle_intersections(
            PlanePoint::new(2.0, 0.0),
            FRAC_PI_2,
            PlanePoint::ORIGIN,
            1.0,
        );
        assert_eq!(r.count(), 0);
        assert_eq!(r.select(First), None);
    }

    #[test]
    fn tangent_line_counts_once() {
        let r = line_circle_intersections(
            PlanePoint::new(1.0, -3.0),
            FRAC_PI_2,
            PlanePoint::ORIGIN,
            1.0,
        );
        assert_eq!(r.count(), 1);
        assert!((r.signed_distances[0] - 3.0).abs() < 1e-12);
        assert_eq!(r.select(First), r.select(Second));
    }

    #[test]
    fn oracle_rex_examples() {
        let half = ExCenter::new(0.5, 0.0);
        assert!(
            (oracle_rex(FRAC_PI_2, &half, First).unwrap() - 0.866_025_403_784_438_6).abs() < 1e-15
        );
        assert!((oracle_rex(0.0, &half, Second).unwrap() + 1.5).abs() < 1e-15);
        assert!((oracle_rex(2.2, &ExCenter::centric(), First).unwrap() - 1.0).abs() < 1e-15);
        assert!(oracle_rex(FRAC_PI_2, &ExCenter::new(2.0, 0.0), First).is_err());
    }

    #[test]
    fn oracle_alpha_examples() {
        let half = ExCenter::new(0.5, 0.0);
        assert!((oracle_alpha(2.5, &ExCenter::centric(), First).unwrap() - 2.5).abs() < 1e-15);
        assert!((oracle_alpha(FRAC_PI_2, &half, First).unwrap() - FRAC_PI_3).abs() < 1e-15);
        assert!(oracle_alpha(0.0, &half, First).unwrap().abs() < 1e-15);
        assert!((oracle_alpha(0.0, &half, Second).unwrap() - PI).abs() < 1e-15);
    }

    #[test]
    fn fd_examples() {
        let d = fd_derivative(|x| Ok::<_, Infallible>(x.sin()), 0.0, 1e-6).unwrap();
        assert!((d - 1.0).abs() < 1e-10);
        let d = fd_derivative(|_| Ok::<_, Infallible>(3.0), 0.7, 1e-6).unwrap();
        assert_eq!(d, 0.0);
        // oracle amplitude at s = 0.5, θ = π/2 has unit slope
        let half = ExCenter::new(0.5, 0.0);
        let d = fd_angle_derivative(|t| oracle_alpha(t, &half, First), FRAC_PI_2, 1e-6).unwrap();
        assert!((d - 1.0).abs() < 1e-6);
    }

    #[test]
    fn fd_propagates_errors() {
        let ex = ExCenter::new(2.0, 0.0);
        assert!(fd_derivative(|t| oracle_rex(t, &ex, First), FRAC_PI_2, 1e-6).is_err());
    }

    #[test]
    fn fd_angle_unwraps() {
        let d = fd_angle_derivative(|x| Ok::<_, Infallible>(normalize(x)), 0.0, 1e-6).unwrap();
        assert!((d - 1.0).abs() < 1e-9);
    }
}
