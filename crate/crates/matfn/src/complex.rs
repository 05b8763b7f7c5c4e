//! Complex arithmetic as plain `(re, im)` pairs.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A complex number with real and imaginary parts of type `T`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Complex<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> Complex<T> {
    pub fn new(re: T, im: T) -> Self {
        Complex { re, im }
    }

    /// Embeds a real number.
    pub fn from_real(re: T) -> Self {
        Complex { re, im: T::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Complex { re: T::zero(), im: T::one() }
    }

    /// |z|, computed without intermediate overflow.
    pub fn modulus(self) -> T {
        self.re.hypot(self.im)
    }

    /// The argument in (-pi, pi].
    pub fn arg(self) -> T {
        self.im.atan2(self.re)
    }

    pub fn conj(self) -> Self {
        Complex { re: self.re, im: -self.im }
    }

    /// True when both parts are finite.
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Scales both parts by a real factor.
    pub fn scale(self, s: T) -> Self {
        Complex { re: self.re * s, im: self.im * s }
    }
}

impl<T: Scalar> Add for Complex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Complex { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<T: Scalar> Sub for Complex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Complex { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<T: Scalar> Mul for Complex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Complex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl<T: Scalar> Div for Complex<T> {
    type Output = Self;

    // Smith's algorithm: scale by the larger component of the divisor to
    // avoid overflow in |rhs|^2.
    fn div(self, rhs: Self) -> Self {
        if rhs.im.abs() <= rhs.re.abs() {
            let r = rhs.im / rhs.re;
            let d = rhs.re + rhs.im * r;
            Complex {
                re: (self.re + self.im * r) / d,
                im: (self.im - self.re * r) / d,
            }
        } else {
            let r = rhs.re / rhs.im;
            let d = rhs.re * r + rhs.im;
            Complex {
                re: (self.re * r + self.im) / d,
                im: (self.im * r - self.re) / d,
            }
        }
    }
}

impl<T: Scalar> Neg for Complex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Complex { re: -self.re, im: -self.im }
    }
}

impl<T: Scalar> Zero for Complex<T> {
    fn zero() -> Self {
        Complex { re: T::zero(), im: T::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: Scalar> One for Complex<T> {
    fn one() -> Self {
        Complex { re: T::one(), im: T::zero() }
    }
}

impl<T: Scalar> fmt::Display for Complex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < T::zero() {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = Complex::new(1.0, 2.0);
        let b = Complex::new(3.0, -1.0);
        assert_eq!(a + b, Complex::new(4.0, 1.0));
        assert_eq!(a * b, Complex::new(5.0, 5.0));
        let q = a / b;
        let back = q * b;
        assert!((back - a).modulus() < 1e-15);
    }

    #[test]
    fn modulus_and_arg() {
        let z = Complex::new(0.0, 2.0_f64);
        assert!((z.modulus() - 2.0).abs() < 1e-15);
        assert!((z.arg() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn division_avoids_overflow() {
        let big = 1e300_f64;
        let a = Complex::new(big, big);
        let q = a / a;
        assert!((q - Complex::one()).modulus() < 1e-15);
    }
}
