//! Diffraction of particle beams by a cylindrical-barrier "wire" potential.
//!
//! The quantum distributions come from the lowest-order amplitude for an
//! electron scattering off the static barrier: a spinor factor times the
//! disk form factor `₀F₁[2, -¼q²R²] = 2J₁(qR)/(qR)`. They are compared with
//! the classical Fraunhofer slit pattern `sinc²(pR sin θ)`, for one beam
//! and for two coherent beams crossing at the wire.
//!
//! Everything is generic over the scalar type through [`Real`]
//! (`f32`/`f64`); the `*64` aliases below fix it to `f64`, which is what
//! the documented tolerances assume.
//!
//! ```
//! use wirediff_core::{analysis, BeamParams64, WirePotential64};
//!
//! let beam = BeamParams64::electron_nm(633.0).unwrap();
//! let wire = WirePotential64::from_diameter_um(17.0).unwrap();
//! let factor = analysis::overestimation_factor(beam.p_r(&wire)).unwrap();
//! assert!((factor - 1.2195).abs() < 1e-3);
//! ```

// `!(x > 0)` style guards are used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod classical;
pub mod electron;
mod error;
pub mod numerics;
pub mod pattern;
pub mod potential;
pub mod twobeam;

pub use error::{Error, Result};

/// Version of this library, recorded in every CLI output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub use numerics::{Complexv, Real};
pub use pattern::{AngularGrid, Normalization, Pattern};
pub use potential::{BeamParams, WirePotential};

/// Wavelength used for the reference figures, nm.
pub const REFERENCE_WAVELENGTH_NM: f64 = 633.0;
/// Wire diameter used for the reference figures, µm.
pub const REFERENCE_DIAMETER_UM: f64 = 17.0;
/// Beam intersection angle used for the two-beam figures, rad.
pub const REFERENCE_ALPHA: f64 = 0.1;

pub type Complex64 = Complexv<f64>;
pub type AngularGrid64 = AngularGrid<f64>;
pub type Pattern64 = Pattern<f64>;
pub type BeamParams64 = BeamParams<f64>;
pub type WirePotential64 = WirePotential<f64>;
pub type ClassicalConfig64 = classical::ClassicalConfig<f64>;
pub type TwoBeamConfig64 = twobeam::TwoBeamConfig<f64>;
pub type ScanResult64 = twobeam::ScanResult<f64>;
pub type ZeroReport64 = analysis::ZeroReport<f64>;
pub type CurveComparison64 = analysis::CurveComparison<f64>;
