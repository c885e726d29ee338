//! Scalar types usable as matrix and algebra coefficients.

use std::fmt::Debug;

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{Float, Num};

/// A coefficient field (or ring) with an involution and a size used for deviations.
///
/// Exact types (`i64`, `Ratio<i64>`) make tolerance-zero checks meaningful; floating types
/// carry rounding error and are compared against a tolerance.
pub trait Scalar: Num + Clone + PartialEq + Debug + Send + Sync + 'static {
    fn conj(&self) -> Self;

    /// Absolute value as `f64`, used only to report deviations.
    fn magnitude(&self) -> f64;

    fn from_f64(x: f64) -> Self;
}

impl Scalar for i64 {
    fn conj(&self) -> Self {
        *self
    }

    fn magnitude(&self) -> f64 {
        self.unsigned_abs() as f64
    }

    fn from_f64(x: f64) -> Self {
        x.round() as i64
    }
}

impl Scalar for Ratio<i64> {
    fn conj(&self) -> Self {
        *self
    }

    fn magnitude(&self) -> f64 {
        (*self.numer() as f64 / *self.denom() as f64).abs()
    }

    fn from_f64(x: f64) -> Self {
        Ratio::approximate_float(x).unwrap_or_else(|| Ratio::from_integer(0))
    }
}

macro_rules! real_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn conj(&self) -> Self {
                *self
            }

            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }

            fn from_f64(x: f64) -> Self {
                x as $t
            }
        }
    };
}

real_scalar!(f32);
real_scalar!(f64);

impl<F: Float + Debug + Send + Sync + 'static> Scalar for Complex<F> {
    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn magnitude(&self) -> f64 {
        self.norm().to_f64().unwrap_or(f64::INFINITY)
    }

    fn from_f64(x: f64) -> Self {
        Complex::new(F::from(x).unwrap_or_else(F::nan), F::zero())
    }
}

/// Real floating-point scalars (`f32`, `f64`) for the numerical routines.
pub trait Real: Float + Scalar {}

impl<F: Float + Scalar> Real for F {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_and_magnitude() {
        let z = Complex::new(3.0f64, -4.0);
        assert_eq!(Scalar::conj(&z), Complex::new(3.0, 4.0));
        assert_eq!(z.magnitude(), 5.0);
        assert_eq!((-7i64).magnitude(), 7.0);
        assert_eq!(Ratio::new(-3i64, 4).magnitude(), 0.75);
        assert_eq!(<f32 as Scalar>::from_f64(0.5), 0.5f32);
    }
}
