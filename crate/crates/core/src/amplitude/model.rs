//! Biphoton angular amplitudes and probability densities.

use serde::Serialize;

use crate::crystal::DerivedScales;
use crate::numerics::sinc;
use crate::scalar::Real;

use super::geometry::AngularPair;
use super::mismatch::{mismatch_no_walkoff, walkoff_linear};

/// Gaussian replacement constant for `sinc^2(x) -> exp(-c x^2)`.
pub const SINC_GAUSS_COEFFICIENT: f64 = 0.359;
/// The constant as printed in the double-Gaussian density, kept for exact reproduction.
pub const PRINTED_DENSITY_COEFFICIENT: f64 = 0.395;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AmplitudeMode {
    /// Gaussian pump factor times sinc of the walk-off inclusive mismatch.
    Full,
    /// As `Full` with the walk-off slope set to zero.
    NoWalkOff,
    /// Both factors Gaussian, with `sinc^2` replaced by `exp(-c x^2)`.
    DoubleGaussian,
}

/// An amplitude model bound to a set of derived scales, peak-normalized so that
/// the on-cone, equal-azimuth pair has amplitude 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmplitudeModel<T> {
    pub mode: AmplitudeMode,
    pub scales: DerivedScales<T>,
    /// Coefficient `c` in the Gaussian replacement of `sinc^2`.
    pub gauss_coefficient: T,
    /// Whether the double-Gaussian density keeps the walk-off term.
    pub walkoff: bool,
    norm: T,
}

impl<T: Real> AmplitudeModel<T> {
    pub fn new(mode: AmplitudeMode, scales: DerivedScales<T>) -> Self {
        let mut model = AmplitudeModel {
            mode,
            scales,
            gauss_coefficient: T::lit(SINC_GAUSS_COEFFICIENT),
            walkoff: mode != AmplitudeMode::NoWalkOff,
            norm: T::one(),
        };
        model.renormalize();
        model
    }

    /// Uses the printed `0.395` density constant instead of the fitted one.
    pub fn with_printed_constants(self) -> Self {
        self.with_gauss_coefficient(T::lit(PRINTED_DENSITY_COEFFICIENT))
    }

    pub fn with_gauss_coefficient(mut self, c: T) -> Self {
        self.gauss_coefficient = c;
        self.renormalize();
        self
    }

    /// Toggles the walk-off term. Ignored by the `NoWalkOff` mode.
    pub fn with_walkoff(mut self, walkoff: bool) -> Self {
        self.walkoff = walkoff && self.mode != AmplitudeMode::NoWalkOff;
        self.renormalize();
        self
    }

    pub fn normalization(&self) -> T {
        self.norm
    }

    fn renormalize(&mut self) {
        self.norm = T::one();
        let peak = self.raw_amplitude(&AngularPair::on_cone(self.scales.theta0, T::zero()));
        self.norm = T::one() / peak.abs();
    }

    /// `exp(-[(theta1 - theta2)^2 + theta0^2 (alpha1 - alpha2)^2] / (2 dtheta_p^2))`.
    fn pump_factor(&self, pair: &AngularPair<T>) -> T {
        let s = &self.scales;
        let q = (pair.theta1 - pair.theta2).powi(2) + (s.theta0 * pair.alpha_diff()).powi(2);
        (-q / (T::lit(2.0) * s.dtheta_p * s.dtheta_p)).exp()
    }

    /// Argument of the phase-matching sinc, `L Delta / 2`.
    pub fn sinc_argument(&self, pair: &AngularPair<T>) -> T {
        let s = &self.scales;
        let mut delta = mismatch_no_walkoff(pair, s);
        if self.walkoff {
            delta += walkoff_linear(pair, s);
        }
        s.length * delta / T::lit(2.0)
    }

    fn raw_amplitude(&self, pair: &AngularPair<T>) -> T {
        let x = self.sinc_argument(pair);
        let phase_matching = match self.mode {
            AmplitudeMode::Full | AmplitudeMode::NoWalkOff => sinc(x),
            AmplitudeMode::DoubleGaussian => (-self.gauss_coefficient * x * x / T::lit(2.0)).exp(),
        };
        self.pump_factor(pair) * phase_matching
    }

    /// Real, peak-normalized amplitude.
    pub fn amplitude(&self, pair: &AngularPair<T>) -> T {
        self.norm * self.raw_amplitude(pair)
    }

    /// Peak-normalized probability density. For the double-Gaussian model
    /// this is the product of the two Gaussian exponentials directly.
    pub fn probability_density(&self, pair: &AngularPair<T>) -> T {
        match self.mode {
            AmplitudeMode::DoubleGaussian => {
                let s = &self.scales;
                let q = (pair.theta1 - pair.theta2).powi(2) + (s.theta0 * pair.alpha_diff()).powi(2);
                let x = self.sinc_argument(pair);
                (-q / (s.dtheta_p * s.dtheta_p) - self.gauss_coefficient * x * x).exp()
            }
            _ => self.amplitude(pair).powi(2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{derive_scales, ExperimentConfig};

    fn scales() -> DerivedScales<f64> {
        derive_scales(&ExperimentConfig::reference()).unwrap()
    }

    #[test]
    fn peak_is_one_for_every_mode() {
        let s = scales();
        for mode in [AmplitudeMode::Full, AmplitudeMode::NoWalkOff, AmplitudeMode::DoubleGaussian] {
            let m = AmplitudeModel::new(mode, s);
            let p = AngularPair::on_cone(s.theta0, 0.0);
            assert_eq!(m.amplitude(&p), 1.0);
            assert_eq!(m.probability_density(&p), 1.0);
            assert_eq!(m.normalization(), 1.0);
        }
    }

    #[test]
    fn full_with_zero_slope_equals_nwo() {
        let mut s = scales();
        s.zeta = 0.0;
        let full = AmplitudeModel::new(AmplitudeMode::Full, s);
        let nwo = AmplitudeModel::new(AmplitudeMode::NoWalkOff, s);
        let t0 = s.theta0;
        for i in 0..50 {
            let f = i as f64 / 50.0;
            let p = AngularPair::new(t0 + 3e-4 * (f - 0.5), 1.3 * f, t0 - 1e-4 * f, 1.3 * f - 2e-4).unwrap();
            assert!((full.amplitude(&p) - nwo.amplitude(&p)).abs() < 1e-12);
        }
    }

    #[test]
    fn density_drops_to_inverse_e_at_coincidence_width() {
        let s = scales();
        let m = AmplitudeModel::new(AmplitudeMode::DoubleGaussian, s).with_walkoff(false);
        let d = s.coincidence_width();
        let p = AngularPair::new(s.theta0, 0.2 + d, s.theta0, 0.2).unwrap();
        assert!((m.probability_density(&p) - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn double_gaussian_density_is_square_of_modeled_amplitude() {
        let s = scales();
        let m = AmplitudeModel::new(AmplitudeMode::DoubleGaussian, s);
        let p = AngularPair::new(s.theta0 + 1e-4, 0.5, s.theta0 - 2e-5, 0.4998).unwrap();
        let a = m.amplitude(&p);
        assert!((m.probability_density(&p) - a * a).abs() < 1e-14);
        assert!(m.probability_density(&p) <= 1.0);
    }

    #[test]
    fn printed_constant_switch() {
        let s = scales();
        let m = AmplitudeModel::new(AmplitudeMode::DoubleGaussian, s).with_printed_constants();
        assert_eq!(m.gauss_coefficient, 0.395);
    }
}
