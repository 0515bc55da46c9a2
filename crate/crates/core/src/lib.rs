//! Nonuniqueness counterexamples for the inverse problem of recovering a
//! constant wave speed from surface wavefield data.
//!
//! The acoustic field on a 2-D box with a Neumann boundary solves
//! `c⁻² u_tt − Δu = f(x,t)` with zero initial data, and the observed data are
//! the values of `u` on the surface edge `x₂ = 0`. This crate constructs pairs
//! of wave speeds `c₁ ≠ c₂` together with a source `f` whose forward solutions
//! produce identical surface data for all time, and verifies them three ways:
//!
//! * exact Laplace-domain algebra ([`constructor::verify_identity_symbolic`]),
//! * a closed-form spectral solver ([`spectral`]),
//! * an independent finite-difference oracle ([`fdtd`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion CLI
//! crate carries file formats and command-line orchestration.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod constructor;
pub mod domain;
pub mod error;
pub mod fdtd;
pub mod laplace;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod roots;
pub mod signal;
pub mod source;
pub mod spectral;
pub mod verify;

pub use error::Error;
pub use poly::Polynomial;
pub use roots::{Pole, PoleSet};
