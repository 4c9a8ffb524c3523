//! Floating-point scalar abstraction for the spectral kernels.

/// Floating point scalar: f32 or f64.
pub trait Scalar:
    num_traits::Float + num_traits::FromPrimitive + std::fmt::Debug + std::fmt::Display + 'static
{
    fn usize(v: usize) -> Self {
        Self::from_usize(v).expect("small integer fits any float")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
