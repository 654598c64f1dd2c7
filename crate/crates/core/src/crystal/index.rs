//! Anisotropic pump index and its first angular derivative.

use crate::error::Result;
use crate::scalar::Real;

use super::SellmeierSet;

/// Full extraordinary-wave index of the pump for a wave vector tilted by
/// `phi_p` from the z-axis at azimuth `alpha_p`, with the optic axis in the
/// (xz) plane at angle `phi0` from z. No small-angle approximation.
pub fn pump_index<T: Real>(
    crystal: &SellmeierSet<T>,
    lambda_p: T,
    phi_p: T,
    alpha_p: T,
    phi0: T,
) -> Result<T> {
    let no = crystal.ordinary_index(lambda_p)?;
    let ne = crystal.extraordinary_index(lambda_p)?;
    let (sp, cp) = phi_p.sin_cos();
    let (sa, ca) = alpha_p.sin_cos();
    let (s0, c0) = phi0.sin_cos();
    let along = sp * c0 * ca + cp * s0;
    let axial = cp * c0 - sp * s0 * ca;
    let denom = no * no * (sp * sp * sa * sa + along * along) + ne * ne * axial * axial;
    Ok(no * ne / denom.sqrt())
}

/// Walk-off slope `zeta` such that `dn_p/dphi_p |_(phi_p = 0) = -zeta cos(alpha_p)`.
///
/// Closed form obtained by differentiating [`pump_index`]:
/// `zeta = n_o n_e (n_o^2 - n_e^2) sin(phi0) cos(phi0) / (n_o^2 sin^2 phi0 + n_e^2 cos^2 phi0)^(3/2)`.
/// Non-negative for `0 <= phi0 <= pi/2` in a negative uniaxial crystal.
pub fn walkoff_slope<T: Real>(crystal: &SellmeierSet<T>, lambda_p: T, phi0: T) -> Result<T> {
    let no = crystal.ordinary_index(lambda_p)?;
    let ne = crystal.extraordinary_index(lambda_p)?;
    let (s0, c0) = phi0.sin_cos();
    let d = no * no * s0 * s0 + ne * ne * c0 * c0;
    Ok(no * ne * (no * no - ne * ne) * s0 * c0 / (d * d.sqrt()))
}

/// `dn_p/dphi_p` at `phi_p = 0` for arbitrary pump azimuth.
pub fn pump_index_derivative<T: Real>(
    crystal: &SellmeierSet<T>,
    lambda_p: T,
    alpha_p: T,
    phi0: T,
) -> Result<T> {
    Ok(-walkoff_slope(crystal, lambda_p, phi0)? * alpha_p.cos())
}
