use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the solvers compute fitness in: `f32` or `f64`.
///
/// Delivery dates and rehandle counts are integers; everything derived
/// from them (priorities, fitness sums) is generic over this trait.
pub trait Scalar:
    Float + FromPrimitive + Display + Debug + Copy + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + Display + Debug + Copy + Send + Sync + 'static
{
}
