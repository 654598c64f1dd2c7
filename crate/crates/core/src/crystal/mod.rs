//! Dispersion and birefringence of the uniaxial crystal.

mod index;
mod regime;
mod scales;
mod sellmeier;

pub use index::{pump_index, pump_index_derivative, walkoff_slope};
pub use regime::{cone_angle, collinear_threshold, index_mismatch, PRESCAN_POINTS};
pub use scales::{derive_scales, DerivedScales, ExperimentConfig};
pub use sellmeier::{SellmeierSet, SellmeierTerms};
