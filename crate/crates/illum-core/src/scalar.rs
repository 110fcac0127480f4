//! Scalar abstraction for the numeric kernels.
//!
//! Everything in this crate is generic over [`Scalar`], which is any IEEE
//! float with the usual elementary functions plus `erf`. Concrete aliases
//! for `f64` live at the crate root.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};

/// Floating-point scalar with the elementary functions the jet arithmetic
/// needs. Implemented for `f32` and `f64`.
pub trait Scalar: Float + FloatConst + Debug + Display + Send + Sync + 'static {
    /// The standard error function `2/sqrt(pi) * integral_0^x exp(-t^2) dt`.
    fn erf(self) -> Self;

    /// Lossy conversion from `f64`, for tolerances and literals.
    fn from_f64(v: f64) -> Self {
        num_traits::cast(v).expect("f64 literal representable in scalar type")
    }

    /// Lossy conversion to `f64`, for diagnostics and serialization.
    fn as_f64(self) -> f64 {
        num_traits::cast(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn erf(self) -> Self {
        libm::erff(self)
    }
}

impl Scalar for f64 {
    fn erf(self) -> Self {
        libm::erf(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_reference_values() {
        // Abramowitz & Stegun table values.
        assert!((Scalar::erf(0.5f64) - 0.5204998778130465).abs() < 1e-15);
        assert!((Scalar::erf(-1.0f64) + 0.8427007929497149).abs() < 1e-15);
        assert_eq!(Scalar::erf(0.0f64), 0.0);
        assert!((Scalar::erf(0.5f32) - 0.52049988).abs() < 1e-6);
    }

    #[test]
    fn f64_round_trip() {
        let x = <f64 as Scalar>::from_f64(1.25e-3);
        assert_eq!(x.as_f64(), 1.25e-3);
    }
}
