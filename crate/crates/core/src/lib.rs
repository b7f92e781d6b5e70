//! Pseudo-spectral asymptotic models for free-surface water waves.
//!
//! The crate provides:
//! - a periodic spectral calculus (Hilbert transform, |D|^s, derivative,
//!   projections, Hou–Li filter, analytic norms) in [`spectral`];
//! - right-hand sides of the linear/quadratic/cubic h-models and the
//!   gravity-capillary, internal-wave and WW2 variants in [`models`];
//! - an arbitrary-order spectral exponential time differencing integrator
//!   in [`etd`];
//! - a boundary-integral free-surface Euler reference solver and a
//!   Dirichlet–Neumann series in [`euler`];
//! - the Stokes-series cascade with its Catalan-majorant certificate in
//!   [`stokes`];
//! - built-in experiments, error norms, convergence studies and the
//!   validation suite in [`harness`].

pub mod error;
pub mod etd;
pub mod euler;
pub mod harness;
pub mod models;
pub mod spectral;
pub mod stokes;

pub use error::{Result, WaveError};
pub use spectral::{Dealias, PeriodicGrid, SpectralField};
