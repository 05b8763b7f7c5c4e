//! Scalar and entry traits underpinning the generic matrix code.

use std::fmt::{Debug, Display, LowerExp};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Float, FloatConst, FromPrimitive, One, Zero};

use crate::complex::Complex;

/// Real floating point scalar the library is generic over: `f32` or `f64`.
///
/// Every scalar is also a matrix [`Entry`] whose associated real type is
/// itself, so real matrices and the real parts of complex computations can
/// share one set of bounds.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + Debug
    + Display
    + LowerExp
    + Entry<Real = Self>
    + 'static
{
    /// Converts an `f64` constant, panicking only for non-representable NaN cases.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// A matrix entry: either a real scalar or a complex pair of them.
///
/// Factorizations (LU, pivoted QR) are written once against this trait and
/// instantiated for both real and complex matrices.
pub trait Entry:
    Copy
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    type Real: Scalar;

    fn from_real(r: Self::Real) -> Self;

    /// |x| as a real number.
    fn modulus(self) -> Self::Real;

    /// Complex conjugate; the identity on real entries.
    fn conj(self) -> Self;

    fn is_finite_entry(self) -> bool;
}

impl Entry for f32 {
    type Real = f32;

    fn from_real(r: f32) -> Self {
        r
    }
    fn modulus(self) -> f32 {
        self.abs()
    }
    fn conj(self) -> Self {
        self
    }
    fn is_finite_entry(self) -> bool {
        self.is_finite()
    }
}

impl Entry for f64 {
    type Real = f64;

    fn from_real(r: f64) -> Self {
        r
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn conj(self) -> Self {
        self
    }
    fn is_finite_entry(self) -> bool {
        self.is_finite()
    }
}

impl<T: Scalar> Entry for Complex<T> {
    type Real = T;

    fn from_real(r: T) -> Self {
        Complex::from_real(r)
    }
    fn modulus(self) -> T {
        Complex::modulus(self)
    }
    fn conj(self) -> Self {
        Complex::conj(self)
    }
    fn is_finite_entry(self) -> bool {
        self.is_finite()
    }
}
