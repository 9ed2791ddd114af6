//! Scalar traits for the adjacency-matrix algebra.
//!
//! The graph algorithms themselves are combinatorial; matrices only appear as an
//! independent route for counting (traces of powers, Kronecker identities) and
//! for the linear model of vertex duplication. Those routes are written once over
//! [`Scalar`] and instantiated with machine integers, exact rationals, or floats.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// Ring element usable as a matrix entry.
pub trait Scalar: Num + FromPrimitive + Copy + Debug + PartialEq + Send + Sync + 'static {
    /// Whether equality on this type is exact (false for floating point).
    const EXACT: bool;

    fn from_usize(v: usize) -> Self {
        <Self as FromPrimitive>::from_usize(v).expect("value representable in scalar type")
    }

    fn approx_eq(self, other: Self) -> bool;
}

/// Scalars with exact (or IEEE) division, so Gaussian elimination is sound.
pub trait Field: Scalar {}

macro_rules! exact_int {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            const EXACT: bool = true;
            fn approx_eq(self, other: Self) -> bool { self == other }
        }
    )*};
}
exact_int!(i32, i64, i128);

macro_rules! float {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            const EXACT: bool = false;
            fn approx_eq(self, other: Self) -> bool {
                (self - other).abs() <= 1e-9 * (1.0 + self.abs().max(other.abs()))
            }
        }
        impl Field for $t {}
    )*};
}
float!(f32, f64);

macro_rules! rational {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            const EXACT: bool = true;
            fn approx_eq(self, other: Self) -> bool { self == other }
        }
        impl Field for Ratio<$t> {}
    )*};
}
rational!(i64, i128);
