//! Error type shared by all modules.

use crate::units::Dimension;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// NaN or infinity handed to an API boundary.
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    /// Arithmetic or conversion between incompatible dimensions.
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: Dimension,
        found: Dimension,
    },

    /// A parameter violates a validity constraint.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// exp(a)*erfc(z) exceeds the largest finite double.
    #[error("overflow in exp(a)*erfc(z): result exponent {exponent:.3e}")]
    Overflow { exponent: f64 },

    /// Quadrature could not reach the requested accuracy within budget.
    /// Carries the best estimate and the achieved error.
    #[error(
        "quadrature accuracy not reached in {context}: value {value:.9e}, \
         achieved error {error:.3e}, requested {requested:.3e}"
    )]
    Accuracy {
        context: &'static str,
        value: f64,
        error: f64,
        requested: f64,
    },

    /// An operation needs the polarimeter purity and none is set.
    #[error("polarimeter purity is required for discernibility estimates")]
    PurityRequired,

    /// An operation needs the background model and none is set.
    #[error("background model (b, epsilon) is required")]
    BackgroundRequired,

    /// The flipped-to-probe ratio never reaches the purity floor.
    #[error(
        "signal nowhere exceeds purity floor: log argument {log_argument:.6e} is not positive"
    )]
    BelowPurityFloor { log_argument: f64 },

    /// The crossing-angle equation has no solution at this azimuth.
    #[error(
        "theta_equal undefined at phi={phi:.6}: {factor} makes theta^2 = {theta_sq:.6e} negative"
    )]
    ThetaEqualDomain {
        phi: f64,
        factor: &'static str,
        theta_sq: f64,
    },

    /// Background window is empty; carries both candidate angles squared.
    #[error(
        "no discernible window: theta^2 candidates {theta_low_sq:.6e} (inner) \
         and {theta_high_sq:.6e} (outer)"
    )]
    NoDiscernibleWindow {
        theta_low_sq: f64,
        theta_high_sq: f64,
    },

    /// A closed form only valid for circular probes was requested.
    #[error(
        "circular transverse probe profile required (w1={w1:.6e}, w2={w2:.6e}); \
         integrate the per-azimuth density instead"
    )]
    CircularProbeRequired { w1: f64, w2: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
