//! Real scalar abstraction shared by every numerical routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, NumAssignOps};

/// Floating point type the library is generic over (`f32` and `f64`).
pub trait Real:
    Float + FloatConst + NumAssignOps + Default + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as num_traits::NumCast>::from(x).expect("finite literal")
    }

    /// Converts a count into `Self`.
    #[inline]
    fn from_usize(n: usize) -> Self {
        <Self as num_traits::NumCast>::from(n).expect("representable count")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// `max(floor, k·ε)`: a tolerance that stays meaningful in reduced precision.
    #[inline]
    fn tol_floor(floor: f64, k: f64) -> Self {
        Self::lit(floor).max(Self::epsilon() * Self::lit(k))
    }
}

impl<T> Real for T where
    T: Float + FloatConst + NumAssignOps + Default + Debug + Display + Send + Sync + 'static
{
}
