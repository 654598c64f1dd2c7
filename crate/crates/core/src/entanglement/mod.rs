//! Azimuthal entanglement: width ratio, Schmidt spectra and their cross-checks.

mod analytic;
mod azimuthal;
mod numeric;
mod oam;
mod spectrum;

pub use analytic::{
    double_gaussian, k_approximate, k_closed_form, reconstruct, schmidt_analytic, schmidt_coefficient, schmidt_mode,
    schmidt_ratio,
};
pub use azimuthal::{azimuthal_widths, r_parameter, AzimuthalDistribution, DensityMap, DENSITY_POINTS_PER_WIDTH};
pub use numeric::{
    double_gaussian_feature_width, kernel_svd, schmidt_numeric, singular_function, spectrum_from_singular_values,
    GridSpec, KernelSvd, MIN_POINTS_PER_FEATURE,
};
pub use oam::{coefficient_check, oam_gram, oam_mode, oam_spectrum, CoefficientCheck, OamSpectrum, OAM_REGIME_LIMIT};
pub use spectrum::{
    entropy_bits, oam_label, schmidt_number, Method, ModeLabel, Parity, SchmidtSpectrum, SpectrumSummary, Truncation,
    MAX_MODES, TRUNCATION_TARGET,
};
