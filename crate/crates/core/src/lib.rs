//! Numerical differential geometry of parametric surface patches.
//!
//! Evaluates first fundamental forms, Gauss maps and the Laplace–Beltrami
//! operator `Δ^I` on tubes around Frenet curves, anchor rings, cylinders and
//! control surfaces, and tests the Gauss-map relation `Δ^I n = Λn` for a
//! constant 3×3 matrix `Λ` by minimum-norm least squares.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classifier;
pub mod curves;
mod error;
pub mod geom;
pub mod grid;
pub mod lstsq;
mod math;
pub mod numdiff;
pub mod operators;
pub mod registry;
pub mod surfaces;

pub use error::{Error, Result};
pub use geom::{Mat3, Vec3};
pub use grid::{GridSize, ParamRect};
