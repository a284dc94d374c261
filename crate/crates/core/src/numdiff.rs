//! Central finite differences.
//!
//! First derivatives use the step `ε^(1/3)·max(1, |x|)` and second
//! derivatives `ε^(1/4)·max(1, |x|)`, which balance truncation against
//! round-off for the respective stencils.

use core::ops::{Add, Mul, Sub};

use crate::math;

/// Values that finite differences can be taken of.
pub trait Linear: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}

impl<T> Linear for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

pub fn first_step(x: f64) -> f64 {
    math::cbrt(f64::EPSILON) * math::abs(x).max(1.0)
}

pub fn second_step(x: f64) -> f64 {
    math::sqrt(math::sqrt(f64::EPSILON)) * math::abs(x).max(1.0)
}

pub fn central_first<T: Linear>(f: impl Fn(f64) -> T, x: f64) -> T {
    let h = first_step(x);
    (f(x + h) - f(x - h)) * (0.5 / h)
}

pub fn central_second<T: Linear>(f: impl Fn(f64) -> T, x: f64) -> T {
    let h = second_step(x);
    let mid = f(x) * 2.0;
    (f(x + h) - mid + f(x - h)) * (1.0 / (h * h))
}

/// Mixed partial ∂²f/∂u∂v by the four-point cross stencil.
pub fn central_mixed<T: Linear>(f: impl Fn(f64, f64) -> T, u: f64, v: f64) -> T {
    let hu = second_step(u);
    let hv = second_step(v);
    (f(u + hu, v + hv) - f(u + hu, v - hv) - f(u - hu, v + hv) + f(u - hu, v - hv))
        * (0.25 / (hu * hv))
}
