use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::regime::cone_angle_from_indices;
use super::{pump_index, walkoff_slope, SellmeierSet};

/// Pump and crystal parameters. Lengths in micrometres, angles in radians.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig<T> {
    /// Pump wavelength.
    pub lambda_p: T,
    /// Pump waist.
    pub waist: T,
    /// Crystal length along the pump.
    pub length: T,
    /// Angle between the optic axis and the pump propagation direction.
    pub phi0: T,
    #[serde(skip)]
    pub crystal: SellmeierSet<T>,
}

impl<T: Real> ExperimentConfig<T> {
    pub fn new(crystal: SellmeierSet<T>, lambda_p: T, waist: T, length: T, phi0: T) -> Result<Self> {
        let config = ExperimentConfig { lambda_p, waist, length, phi0, crystal };
        config.validate()?;
        Ok(config)
    }

    /// BBO pumped at 0.4047 um, phi0 = 0.7, L = 0.5 cm, w = 1464 um.
    pub fn reference() -> Self {
        Self::new(
            SellmeierSet::bbo(),
            T::lit(0.4047),
            T::lit(1464.0),
            T::lit(5000.0),
            T::lit(0.7),
        )
        .expect("reference configuration is valid")
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("lambda_p", self.lambda_p), ("w", self.waist), ("L", self.length)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(Error::invalid(name, format!("must be positive and finite, got {v}")));
            }
        }
        if !(self.phi0 >= T::zero() && self.phi0 <= T::FRAC_PI_2()) {
            return Err(Error::invalid("phi0", format!("must lie in [0, pi/2], got {}", self.phi0)));
        }
        self.crystal.check_wavelength(self.lambda_p)?;
        self.crystal.check_wavelength(T::lit(2.0) * self.lambda_p)?;
        Ok(())
    }
}

/// Every derived quantity the amplitude and entanglement formulas reuse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedScales<T> {
    /// Echo of the pump wavelength (um).
    pub lambda_p: T,
    /// Echo of the pump waist (um).
    pub waist: T,
    /// Echo of the crystal length (um).
    pub length: T,
    /// `n_o(2 lambda_p)`.
    pub n_o: T,
    /// `n_p(lambda_p, 0, 0, phi0)`.
    pub n_p0: T,
    /// Emission cone half-angle (rad).
    pub theta0: T,
    /// Walk-off slope.
    pub zeta: T,
    /// Pump angular width `lambda_p / (pi w)` (rad).
    pub dtheta_p: T,
    /// Phase-matching angular width `n_o lambda_p / (pi L)` (rad).
    pub dtheta_l: T,
    /// Constant part of the sinc argument, `L Delta_0 / 2`.
    pub phi_const: T,
    /// Sum-variable width of the double-Gaussian azimuthal model.
    pub a: T,
    /// Difference-variable width, `dtheta_p / theta0`.
    pub b: T,
}

impl<T: Real> DerivedScales<T> {
    /// Coincidence azimuthal width `dtheta_p / theta0`.
    pub fn coincidence_width(&self) -> T {
        self.dtheta_p / self.theta0
    }

    /// Angular thickness of the emission ring in azimuth units, `dtheta_l / theta0`.
    pub fn ring_thickness(&self) -> T {
        self.dtheta_l / self.theta0
    }

    /// Pump Rayleigh range `pi w^2 / lambda_p` (um).
    pub fn rayleigh_range(&self) -> T {
        T::PI() * self.waist * self.waist / self.lambda_p
    }

    /// Constant phase mismatch `Delta_0 = -pi theta0^2 / (n_o lambda_p)` (um^-1).
    pub fn constant_mismatch(&self) -> T {
        -T::PI() * self.theta0 * self.theta0 / (self.n_o * self.lambda_p)
    }
}

/// Computes [`DerivedScales`]; fails outside the noncollinear regime.
pub fn derive_scales<T: Real>(config: &ExperimentConfig<T>) -> Result<DerivedScales<T>> {
    config.validate()?;
    let crystal = &config.crystal;
    let lambda_p = config.lambda_p;
    let n_o = crystal.ordinary_index(T::lit(2.0) * lambda_p)?;
    let n_p0 = pump_index(crystal, lambda_p, T::zero(), T::zero(), config.phi0)?;
    let theta0 = cone_angle_from_indices(n_o, n_p0)?;
    if theta0 <= T::zero() {
        return Err(Error::CollinearRegime);
    }
    let zeta = walkoff_slope(crystal, lambda_p, config.phi0)?;
    let pi = T::PI();
    let dtheta_p = lambda_p / (pi * config.waist);
    let dtheta_l = n_o * lambda_p / (pi * config.length);
    let phi_const = -pi * theta0 * theta0 * config.length / (T::lit(2.0) * n_o * lambda_p);
    Ok(DerivedScales {
        lambda_p,
        waist: config.waist,
        length: config.length,
        n_o,
        n_p0,
        theta0,
        zeta,
        dtheta_p,
        dtheta_l,
        phi_const,
        a: T::lit(2.0) * pi,
        b: dtheta_p / theta0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn reference_scales() {
        let s = derive_scales(&ExperimentConfig::<f64>::reference()).unwrap();
        assert!((s.theta0 - 0.28).abs() < 0.01);
        assert!((s.zeta - 0.12).abs() < 0.01);
        assert!((s.phi_const + 900.0).abs() < 90.0, "{}", s.phi_const);
        assert!(s.phi_const < 0.0);
        assert!(s.a > s.b);
        assert!(s.dtheta_p > 0.0 && s.dtheta_l > 0.0);
    }

    #[test]
    fn phi_const_is_half_length_times_constant_mismatch() {
        let s = derive_scales(&ExperimentConfig::<f64>::reference()).unwrap();
        let re = -PI * s.theta0.powi(2) * s.length / (2.0 * s.n_o * s.lambda_p);
        assert!((s.phi_const - re).abs() < 1e-12 * re.abs());
        assert!((s.phi_const - s.length * s.constant_mismatch() / 2.0).abs() < 1e-9);
    }

    #[test]
    fn plane_wave_limit() {
        let mut c = ExperimentConfig::<f64>::reference();
        c.waist = 1e30;
        let s = derive_scales(&c).unwrap();
        assert!(s.dtheta_p < 1e-30 && s.b < 1e-29);
    }

    #[test]
    fn entanglement_scale_order() {
        let s = derive_scales(&ExperimentConfig::<f64>::reference()).unwrap();
        let k = PI * PI * s.theta0 * s.waist / s.lambda_p;
        assert!((k.log10() - 4.0).abs() < 0.1, "{k}");
    }

    #[test]
    fn invalid_configs_rejected() {
        let bbo = SellmeierSet::<f64>::bbo();
        assert!(ExperimentConfig::new(bbo.clone(), 0.4047, -1.0, 5000.0, 0.7).is_err());
        assert!(ExperimentConfig::new(bbo.clone(), 0.4047, 1.0, 5000.0, 2.0).is_err());
        // 2 lambda_p outside the validity range
        assert!(matches!(
            ExperimentConfig::new(bbo.clone(), 0.6, 1.0, 5000.0, 0.7),
            Err(Error::WavelengthOutOfRange { .. })
        ));
        let collinear = ExperimentConfig::new(bbo, 0.4047, 1464.0, 5000.0, 0.5).unwrap();
        assert!(matches!(derive_scales(&collinear), Err(Error::CollinearForbidden { .. })));
    }
}
