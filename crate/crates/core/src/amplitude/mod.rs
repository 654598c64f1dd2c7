//! Biphoton angular amplitude: geometry, phase mismatch and the model family.

mod geometry;
mod grid;
mod mismatch;
mod model;
mod sinc_fit;
mod validity;

pub use geometry::{
    azimuth_equation_residual, pump_azimuth, pump_azimuth_cos, pump_polar_angle, transverse_sum_diff,
    AngularPair, Geometry, TransverseMagnitudes,
};
pub use grid::{
    density_grid, l2_norm_squared, marginal_over_polar, sample_grid, write_grid_csv, AngularGrid,
    AngularWindow, GridSample, PolarQuadrature, GRID_CSV_HEADER, WINDOW_SIGMAS,
};
pub use mismatch::{dropped_quadratic_term, mismatch_no_walkoff, phase_mismatch, walkoff_contribution, walkoff_linear};
pub use model::{AmplitudeMode, AmplitudeModel, PRINTED_DENSITY_COEFFICIENT, SINC_GAUSS_COEFFICIENT};
pub use sinc_fit::{fit_gaussian_coefficient, sinc_gauss_fit, SincGaussFit, MIN_FIT_POINTS};
pub use validity::{validity_report, RatioCheck, Status, ValidityReport, VALIDITY_THRESHOLD};
