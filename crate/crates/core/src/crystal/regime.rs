//! Emission-cone angle and the phase-matching regime boundaries.

use crate::error::{Error, Result};
use crate::numerics::{bisect, scan_sign_changes};
use crate::scalar::Real;

use super::{pump_index, SellmeierSet};

/// Points in the uniform pre-scan that brackets regime boundaries.
pub const PRESCAN_POINTS: usize = 200;

/// `n_p(lambda_p, 0, 0, phi0) - n_o(2 lambda_p)`. Negative in the noncollinear window.
pub fn index_mismatch<T: Real>(crystal: &SellmeierSet<T>, lambda_p: T, phi0: T) -> Result<T> {
    let n_signal = crystal.ordinary_index(T::lit(2.0) * lambda_p)?;
    Ok(pump_index(crystal, lambda_p, T::zero(), T::zero(), phi0)? - n_signal)
}

/// Cone opening angle `theta0 = sqrt(2 n_o (n_o - n_p))`.
///
/// Returns zero exactly at the collinear threshold and an error, never NaN,
/// when the pump index exceeds the signal index.
pub fn cone_angle<T: Real>(crystal: &SellmeierSet<T>, lambda_p: T, phi0: T) -> Result<T> {
    let n_signal = crystal.ordinary_index(T::lit(2.0) * lambda_p)?;
    let n_pump = pump_index(crystal, lambda_p, T::zero(), T::zero(), phi0)?;
    cone_angle_from_indices(n_signal, n_pump)
}

pub(crate) fn cone_angle_from_indices<T: Real>(n_signal: T, n_pump: T) -> Result<T> {
    if n_pump > n_signal {
        return Err(Error::CollinearForbidden {
            n_pump: n_pump.as_f64(),
            n_signal: n_signal.as_f64(),
        });
    }
    Ok((T::lit(2.0) * n_signal * (n_signal - n_pump)).sqrt())
}

/// The two optic-axis angles on `[0, pi]` between which SPDC is noncollinear.
///
/// Brackets come from a 200-point pre-scan, then bisection. The bracket
/// is shrunk to `1e-12` rad, well inside the `1e-6` rad requirement, so the
/// index mismatch itself vanishes to ~1e-13 at the returned roots.
pub fn collinear_threshold<T: Real>(crystal: &SellmeierSet<T>, lambda_p: T) -> Result<(T, T)> {
    // Validate both wavelengths before scanning.
    index_mismatch(crystal, lambda_p, T::zero())?;
    let f = |phi0: T| index_mismatch(crystal, lambda_p, phi0).unwrap_or(T::nan());
    let brackets = scan_sign_changes(f, T::zero(), T::PI(), PRESCAN_POINTS);
    if brackets.len() < 2 {
        return Err(Error::NoNoncollinearWindow);
    }
    let tol = T::lit(1e-12).max(T::epsilon() * T::lit(4.0));
    let (a0, a1) = brackets[0];
    let (b0, b1) = brackets[brackets.len() - 1];
    let low = bisect(f, a0, a1, tol).ok_or(Error::NoNoncollinearWindow)?;
    let high = bisect(f, b0, b1, tol).ok_or(Error::NoNoncollinearWindow)?;
    Ok((low, high))
}
