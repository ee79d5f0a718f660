//! Scalar helpers shared by the matrix code.
//!
//! Complex entries are `num_complex::Complex<f64>`; real matrices carry the
//! same storage with zero imaginary parts. The inner product is
//! conjugate-linear in the first argument: `<x, y> = sum conj(x_i) y_i`.

pub use num_complex::Complex64 as C64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// `e^{i t}` via libm, usable without std.
pub fn cis(t: f64) -> C64 {
    C64::new(libm::cos(t), libm::sin(t))
}

pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub fn hypot(a: f64, b: f64) -> f64 {
    libm::hypot(a, b)
}

/// Modulus of a complex scalar.
pub fn modulus(z: C64) -> f64 {
    libm::hypot(z.re, z.im)
}
