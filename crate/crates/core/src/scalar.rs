//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{Float, FloatConst};

/// Real scalar the kernel is generic over: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Built-in tolerance for algebraic identities (`M = M†`, `U†U = I`, ...).
    const DEFAULT_TOLERANCE: Self;

    /// Lossless-enough conversion from an `f64` literal.
    fn lit(x: f64) -> Self;

    fn to_f64_lossy(self) -> f64;

    /// Tolerance in effect: the global override when one is set, otherwise
    /// [`Real::DEFAULT_TOLERANCE`]. The override is never allowed to drop
    /// below a few ulps of the type.
    fn tolerance() -> Self {
        match tolerance_override() {
            Some(t) => Self::lit(t).max(Self::epsilon() * Self::lit(8.0)),
            None => Self::DEFAULT_TOLERANCE,
        }
    }
}

impl Real for f64 {
    const DEFAULT_TOLERANCE: Self = 1e-12;

    #[inline]
    fn lit(x: f64) -> Self {
        x
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self
    }
}

impl Real for f32 {
    const DEFAULT_TOLERANCE: Self = 1e-5;

    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

// f64 bits of the override; 0 means "unset".
static TOLERANCE_OVERRIDE: AtomicU64 = AtomicU64::new(0);

/// Replace the algebraic tolerance used by every check in the crate.
/// `None` restores the per-type default.
pub fn set_tolerance_override(tol: Option<f64>) {
    let bits = match tol {
        Some(t) if t.is_finite() && t > 0.0 => t.to_bits(),
        _ => 0,
    };
    TOLERANCE_OVERRIDE.store(bits, Ordering::Relaxed);
}

pub fn tolerance_override() -> Option<f64> {
    match TOLERANCE_OVERRIDE.load(Ordering::Relaxed) {
        0 => None,
        bits => Some(f64::from_bits(bits)),
    }
}
