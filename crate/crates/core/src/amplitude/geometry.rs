//! Free-space photon angles and the transverse-momentum geometry built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Spherical angles of the two down-converted photons in free space after the crystal.
///
/// `alpha1` is measured from the +x axis and `alpha2` from the -x axis, so a
/// pair sitting at opposite ends of a ring diameter has `alpha1 == alpha2`.
/// Under this convention, exchanging the photons must be combined with a shift
/// of both azimuths by pi (see [`AngularPair::transposed`]).
///
/// The reference domain for the half-sum `alpha0` is `(-pi/2, pi/2]`; pairs
/// outside it are still valid inputs, since every formula here is
/// 2pi-periodic in the azimuths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularPair<T> {
    pub theta1: T,
    pub alpha1: T,
    pub theta2: T,
    pub alpha2: T,
}

impl<T: Real> AngularPair<T> {
    pub fn new(theta1: T, alpha1: T, theta2: T, alpha2: T) -> Result<Self> {
        for (name, theta) in [("theta1", theta1), ("theta2", theta2)] {
            if !(theta >= T::zero() && theta <= T::PI()) {
                return Err(Error::invalid(name, format!("polar angle {theta} outside [0, pi]")));
            }
        }
        for (name, alpha) in [("alpha1", alpha1), ("alpha2", alpha2)] {
            if !alpha.is_finite() {
                return Err(Error::invalid(name, "azimuth must be finite"));
            }
        }
        Ok(AngularPair { theta1, alpha1, theta2, alpha2 })
    }

    /// Pair on the cone, diametrically opposite, at azimuth `alpha`.
    pub fn on_cone(theta0: T, alpha: T) -> Self {
        AngularPair { theta1: theta0, alpha1: alpha, theta2: theta0, alpha2: alpha }
    }

    /// Half-sum of the azimuths.
    pub fn alpha0(&self) -> T {
        (self.alpha1 + self.alpha2) / T::lit(2.0)
    }

    pub fn alpha_diff(&self) -> T {
        self.alpha1 - self.alpha2
    }

    pub fn in_reference_domain(&self) -> bool {
        let a0 = self.alpha0();
        a0 > -T::FRAC_PI_2() && a0 <= T::FRAC_PI_2()
    }

    /// Photon exchange: swap the labels and shift both azimuths by pi.
    pub fn transposed(&self) -> Self {
        AngularPair {
            theta1: self.theta2,
            alpha1: self.alpha2 + T::PI(),
            theta2: self.theta1,
            alpha2: self.alpha1 + T::PI(),
        }
    }
}

/// How transverse quantities are evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry<T> {
    /// Full trigonometric expressions.
    Exact,
    /// Small deviations around a cone of half-angle `theta0`: `sin(theta) ~ theta`,
    /// `sin(theta1) sin(theta2) ~ theta0^2`, lowest order in the azimuth difference.
    SmallAngle { theta0: T },
}

/// Squared magnitudes `|k1_perp + k2_perp|^2` and `|k1_perp - k2_perp|^2` (um^-2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransverseMagnitudes<T> {
    pub sum_sq: T,
    pub diff_sq: T,
}

/// Free-space photon wavenumber `pi / lambda_p` for the degenerate pair.
fn photon_k<T: Real>(lambda_p: T) -> T {
    T::PI() / lambda_p
}

pub fn transverse_sum_diff<T: Real>(
    pair: &AngularPair<T>,
    lambda_p: T,
    geometry: Geometry<T>,
) -> TransverseMagnitudes<T> {
    let k2 = photon_k(lambda_p).powi(2);
    let two = T::lit(2.0);
    let (sum, diff) = match geometry {
        Geometry::Exact => {
            let (s1, s2) = (pair.theta1.sin(), pair.theta2.sin());
            let base = s1 * s1 + s2 * s2;
            let cross = two * s1 * s2 * pair.alpha_diff().cos();
            (base - cross, base + cross)
        }
        Geometry::SmallAngle { theta0 } => {
            let az = (theta0 * pair.alpha_diff()).powi(2);
            (
                (pair.theta1 - pair.theta2).powi(2) + az,
                (pair.theta1 + pair.theta2).powi(2) - az,
            )
        }
    };
    TransverseMagnitudes { sum_sq: k2 * sum.max(T::zero()), diff_sq: k2 * diff.max(T::zero()) }
}

/// Pump polar angle inside the crystal, from continuity of the tangential
/// wave-vector component: `phi_p = lambda_p |k1_perp + k2_perp| / (2 pi n_p)`.
pub fn pump_polar_angle<T: Real>(
    pair: &AngularPair<T>,
    lambda_p: T,
    n_p: T,
    geometry: Geometry<T>,
) -> T {
    let sum = transverse_sum_diff(pair, lambda_p, geometry).sum_sq.sqrt();
    lambda_p * sum / (T::lit(2.0) * T::PI() * n_p)
}

/// Cosine of the pump azimuth.
///
/// `Exact` solves the projection equation exactly; `SmallAngle` keeps only
/// the lowest-order terms of the numerator and uses the small-angle
/// magnitude in the denominator. Back-to-back pairs have no defined pump
/// azimuth and return [`Error::DegenerateGeometry`].
pub fn pump_azimuth_cos<T: Real>(pair: &AngularPair<T>, geometry: Geometry<T>) -> Result<T> {
    let (num, den_sq) = match geometry {
        Geometry::Exact => {
            let (s1, s2) = (pair.theta1.sin(), pair.theta2.sin());
            // Components of the transverse sum; avoids cancellation in the law-of-cosines form.
            let x = s1 * pair.alpha1.cos() - s2 * pair.alpha2.cos();
            let y = s1 * pair.alpha1.sin() - s2 * pair.alpha2.sin();
            (x, x * x + y * y)
        }
        Geometry::SmallAngle { theta0 } => {
            let a0 = pair.alpha0();
            let dt = pair.theta1 - pair.theta2;
            let da = theta0 * pair.alpha_diff();
            (dt * a0.cos() - da * a0.sin(), dt * dt + da * da)
        }
    };
    if !(den_sq > T::zero()) {
        return Err(Error::DegenerateGeometry);
    }
    let c = num / den_sq.sqrt();
    // |c| <= 1 holds analytically; clamp rounding excursions only.
    Ok(c.max(-T::one()).min(T::one()))
}

/// Pump azimuth `alpha_p` from the exact transverse sum.
pub fn pump_azimuth<T: Real>(pair: &AngularPair<T>) -> Result<T> {
    let (s1, s2) = (pair.theta1.sin(), pair.theta2.sin());
    let x = s1 * pair.alpha1.cos() - s2 * pair.alpha2.cos();
    let y = s1 * pair.alpha1.sin() - s2 * pair.alpha2.sin();
    if x == T::zero() && y == T::zero() {
        return Err(Error::DegenerateGeometry);
    }
    Ok(y.atan2(x))
}

/// Residual of `sin(theta1) sin(alpha1 - alpha_p) - sin(theta2) sin(alpha2 - alpha_p)`,
/// the projection of transverse-momentum conservation normal to `k_p_perp`.
pub fn azimuth_equation_residual<T: Real>(pair: &AngularPair<T>, alpha_p: T) -> T {
    pair.theta1.sin() * (pair.alpha1 - alpha_p).sin()
        - pair.theta2.sin() * (pair.alpha2 - alpha_p).sin()
}
