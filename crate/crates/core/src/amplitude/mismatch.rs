//! Longitudinal phase mismatch in the linear approximation around the cone.

use crate::crystal::DerivedScales;
use crate::scalar::Real;

use super::geometry::{pump_azimuth_cos, pump_polar_angle, AngularPair, Geometry};

/// Walk-off part of the mismatch, `-(2 pi / lambda_p) zeta phi_p cos(alpha_p)`, built
/// from the pump polar angle and azimuth under the chosen geometry.
///
/// For back-to-back pairs `phi_p = 0` exactly, so the contribution is zero
/// even though `cos(alpha_p)` is undefined.
pub fn walkoff_contribution<T: Real>(
    pair: &AngularPair<T>,
    scales: &DerivedScales<T>,
    geometry: Geometry<T>,
) -> T {
    let phi_p = pump_polar_angle(pair, scales.lambda_p, scales.n_p0, geometry);
    if phi_p == T::zero() {
        return T::zero();
    }
    match pump_azimuth_cos(pair, geometry) {
        Ok(cos_ap) => -T::lit(2.0) * T::PI() / scales.lambda_p * scales.zeta * phi_p * cos_ap,
        Err(_) => T::zero(),
    }
}

/// Closed linear form of the walk-off contribution:
/// `-(pi zeta / (lambda_p n_p)) [(theta1 - theta2) cos(alpha0) - theta0 sin(alpha0) (alpha1 - alpha2)]`.
pub fn walkoff_linear<T: Real>(pair: &AngularPair<T>, scales: &DerivedScales<T>) -> T {
    let (s0, c0) = pair.alpha0().sin_cos();
    let bracket = (pair.theta1 - pair.theta2) * c0 - scales.theta0 * s0 * pair.alpha_diff();
    -T::PI() * scales.zeta / (scales.lambda_p * scales.n_p0) * bracket
}

/// No-walk-off mismatch, linear in the polar deviations:
/// `(pi / (n_o lambda_p)) theta0 (theta1 + theta2 - 2 theta0)`.
pub fn mismatch_no_walkoff<T: Real>(pair: &AngularPair<T>, scales: &DerivedScales<T>) -> T {
    T::PI() / (scales.n_o * scales.lambda_p)
        * scales.theta0
        * (pair.theta1 + pair.theta2 - T::lit(2.0) * scales.theta0)
}

/// Phase mismatch `Delta` (um^-1), optionally including the walk-off term.
pub fn phase_mismatch<T: Real>(
    pair: &AngularPair<T>,
    scales: &DerivedScales<T>,
    include_walkoff: bool,
) -> T {
    let base = mismatch_no_walkoff(pair, scales);
    if include_walkoff {
        base + walkoff_linear(pair, scales)
    } else {
        base
    }
}

/// Size of the azimuthal quadratic term dropped from the sinc argument,
/// `theta0^2 (alpha1 - alpha2)^2 / (8 dtheta_L)`.
pub fn dropped_quadratic_term<T: Real>(scales: &DerivedScales<T>, alpha_diff: T) -> T {
    (scales.theta0 * alpha_diff).powi(2) / (T::lit(8.0) * scales.dtheta_l)
}
