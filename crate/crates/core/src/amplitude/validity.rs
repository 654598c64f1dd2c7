//! Dimensionless checks on the approximations behind the amplitude models.

use serde::Serialize;

use crate::crystal::DerivedScales;
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const VALIDITY_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioCheck<T> {
    pub value: T,
    pub threshold: T,
    pub status: Status,
}

impl<T: Real> RatioCheck<T> {
    fn new(value: T) -> Self {
        let threshold = T::lit(VALIDITY_THRESHOLD);
        let status = if value < threshold { Status::Pass } else { Status::Warn };
        RatioCheck { value, threshold, status }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidityReport<T> {
    /// `L / (8 n_o L_D)`: the azimuthal quadratic term dropped from the sinc argument.
    pub diffraction_ratio: RatioCheck<T>,
    /// `n_o lambda_p / (pi L theta0^2)`: the polar quadratic term dropped by linearization.
    pub linearization_ratio: RatioCheck<T>,
    /// `n_o lambda_p / (pi theta0^2)` in um; the check is `threshold_um / L`.
    pub length_threshold_um: T,
    pub length_threshold: RatioCheck<T>,
    pub rayleigh_range_um: T,
}

impl<T: Real> ValidityReport<T> {
    pub fn all_pass(&self) -> bool {
        [self.diffraction_ratio, self.linearization_ratio, self.length_threshold]
            .iter()
            .all(|c| c.status == Status::Pass)
    }
}

pub fn validity_report<T: Real>(scales: &DerivedScales<T>) -> Result<ValidityReport<T>> {
    if !(scales.theta0 > T::zero()) {
        return Err(Error::CollinearRegime);
    }
    let pi = T::PI();
    let ld = scales.rayleigh_range();
    let threshold = scales.n_o * scales.lambda_p / (pi * scales.theta0 * scales.theta0);
    Ok(ValidityReport {
        diffraction_ratio: RatioCheck::new(scales.length / (T::lit(8.0) * scales.n_o * ld)),
        linearization_ratio: RatioCheck::new(threshold / scales.length),
        length_threshold_um: threshold,
        length_threshold: RatioCheck::new(threshold / scales.length),
        rayleigh_range_um: ld,
    })
}
