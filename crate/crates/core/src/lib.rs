//! Azimuthal entanglement of noncollinear type-I biphotons.
//!
//! The crate is organised bottom-up:
//!
//! * [`crystal`]: dispersion data, pump index, emission cone and derived scales.
//! * [`amplitude`]: the two-photon angular amplitude and its approximations.
//! * [`entanglement`]: width ratio, Schmidt spectra (analytic, SVD, OAM).
//! * [`multichannel`]: diametric fiber-pair channelization and its entanglement.
//!
//! Angles are in radians and lengths in micrometres throughout. Every
//! numerical routine is generic over [`Real`] (`f32` or `f64`); the `*F64`
//! aliases below name the usual double-precision instantiations.

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod amplitude;
pub mod crystal;
pub mod entanglement;
pub mod error;
pub mod export;
pub mod multichannel;
pub mod numerics;
pub mod scalar;

pub use error::{Error, ErrorCategory, Result};
pub use scalar::Real;

pub type SellmeierSetF64 = crystal::SellmeierSet<f64>;
pub type ExperimentConfigF64 = crystal::ExperimentConfig<f64>;
pub type DerivedScalesF64 = crystal::DerivedScales<f64>;
pub type AngularPairF64 = amplitude::AngularPair<f64>;
pub type AmplitudeModelF64 = amplitude::AmplitudeModel<f64>;

pub type SellmeierSetF32 = crystal::SellmeierSet<f32>;
pub type ExperimentConfigF32 = crystal::ExperimentConfig<f32>;
pub type DerivedScalesF32 = crystal::DerivedScales<f32>;
pub type AmplitudeModelF32 = amplitude::AmplitudeModel<f32>;
pub type SchmidtSpectrumF64 = entanglement::SchmidtSpectrum<f64>;
pub type AzimuthalDistributionF64 = entanglement::AzimuthalDistribution<f64>;
pub type ChannelLayoutF64 = multichannel::ChannelLayout<f64>;
