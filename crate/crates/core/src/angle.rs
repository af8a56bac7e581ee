//! Angle helpers. All returned angles live in `[0, 2π)`.

use std::f64::consts::{PI, TAU};

/// Maps `a` into `[0, 2π)`.
pub fn normalize(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    // rem_euclid rounds tiny negatives up to exactly TAU
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Signed difference `a - b` wrapped into `[-π, π)`.
pub fn wrapped_diff(a: f64, b: f64) -> f64 {
    normalize(a - b + PI) - PI
}

/// Wrap-aware distance between two angles, in `[0, π]`.
pub fn distance(a: f64, b: f64) -> f64 {
    wrapped_diff(a, b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_range() {
        assert_eq!(normalize(0.0), 0.0);
        assert_eq!(normalize(TAU), 0.0);
        assert_eq!(normalize(-1e-18), 0.0);
        assert!((normalize(-PI / 2.0) - 1.5 * PI).abs() < 1e-15);
        assert!((normalize(7.0 * PI) - PI).abs() < 1e-14);
    }

    #[test]
    fn distance_wraps() {
        assert!(distance(0.01, TAU - 0.01) - 0.02 < 1e-15);
        assert!((distance(0.0, PI) - PI).abs() < 1e-15);
        assert!((wrapped_diff(0.1, TAU - 0.1) - 0.2).abs() < 1e-15);
    }
}
