//! Ex-centric circular supermathematics functions.
//!
//! A straight line rotating about a pole `S(s, ε)` cuts the unit circle in two
//! points `W₁` and `W₂`. Every function here (rex, aex, cex, sex, dex, ...) is
//! a property of that intersection, evaluated in closed form. With `s = 0`
//! everything collapses to the ordinary circular functions.
//!
//! Modules:
//! - [`smf`]: closed-form evaluation, both determinations, both variables.
//! - [`oracle`]: independent line/circle intersection and finite differences.
//! - [`curves`]: Booth lemniscates, generalized circles, quadrilobes,
//!   elevated and exotic curves.
//! - [`mechanisms`]: slider-crank stroke, transfer functions, the nonlinear
//!   oscillator and static elastic characteristics.
//! - [`export`]: CSV and SVG writers.

pub mod angle;
pub mod curves;
pub mod export;
pub mod mechanisms;
pub mod oracle;
pub mod smf;

pub use smf::{Determination, EvalError, ExCenter, Phasor, PlanePoint, Side};

/// Errors raised by samplers and mechanism operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
