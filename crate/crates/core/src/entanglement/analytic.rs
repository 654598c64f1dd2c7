//! Closed-form Schmidt decomposition of the double-Gaussian amplitude
//! `exp(-(x1 + x2)^2 / 2a^2) exp(-(x1 - x2)^2 / 2b^2)`.

use crate::error::{Error, Result};
use crate::numerics::hermite_function;
use crate::scalar::Real;

use super::spectrum::{Method, SchmidtSpectrum, MAX_MODES, TRUNCATION_TARGET};

fn check_widths<T: Real>(a: T, b: T) -> Result<()> {
    for (name, v) in [("a", a), ("b", b)] {
        if !(v > T::zero() && v.is_finite()) {
            return Err(Error::invalid(name, format!("width must be positive, got {v}")));
        }
    }
    Ok(())
}

/// `(a - b) / (a + b)`; the weights fall off as its square.
pub fn schmidt_ratio<T: Real>(a: T, b: T) -> T {
    (a - b) / (a + b)
}

/// `(a^2 + b^2) / 2ab`.
pub fn k_closed_form<T: Real>(a: T, b: T) -> T {
    (a * a + b * b) / (T::lit(2.0) * a * b)
}

/// Leading term `a / 2b` of [`k_closed_form`] for `a >> b`.
pub fn k_approximate<T: Real>(a: T, b: T) -> T {
    a / (T::lit(2.0) * b)
}

/// Signed expansion coefficient `sqrt(lambda_n)` with the sign of `q^n`.
pub fn schmidt_coefficient<T: Real>(n: usize, a: T, b: T) -> T {
    let q = schmidt_ratio(a, b);
    let c0 = T::lit(2.0) * (a * b).sqrt() / (a + b);
    c0 * q.powi(n as i32)
}

/// Modes needed so that the trailing mass `q^(2N)` drops below `target`.
fn modes_for_target<T: Real>(q: T, target: T) -> usize {
    let q2 = q * q;
    if q2 == T::zero() {
        return 1;
    }
    if q2 >= T::one() {
        return usize::MAX;
    }
    let n = (target.ln() / q2.ln()).ceil();
    n.to_usize().unwrap_or(usize::MAX).max(1)
}

/// Weights `lambda_n = 4ab/(a+b)^2 q^(2n)` for `n = 0..N`.
///
/// `N` is at least `n_max + 1` and is extended until the trailing mass
/// `q^(2N)` falls below 1e-9, up to [`MAX_MODES`].
pub fn schmidt_analytic<T: Real>(a: T, b: T, n_max: usize) -> Result<SchmidtSpectrum<T>> {
    check_widths(a, b)?;
    let q = schmidt_ratio(a, b);
    let needed = modes_for_target(q, T::lit(TRUNCATION_TARGET));
    let capped = needed > MAX_MODES;
    let modes = needed.min(MAX_MODES).max(n_max.saturating_add(1).min(MAX_MODES));
    let lambda0 = T::lit(4.0) * a * b / ((a + b) * (a + b));
    let ln_q2 = (q * q).ln();
    let weights: Vec<T> = (0..modes)
        .map(|n| if n == 0 { lambda0 } else if q == T::zero() { T::zero() } else { lambda0 * (ln_q2 * T::from_count(n)).exp() })
        .collect();
    let residual = if q == T::zero() { T::zero() } else { (ln_q2 * T::from_count(modes)).exp() };
    Ok(SchmidtSpectrum::from_weights(Method::AnalyticDg, weights, residual, capped)
        .with_closed_form_k(k_closed_form(a, b)))
}

/// Schmidt mode `psi_n(x) = (2/ab)^(1/4) u_n(sqrt(2) x / sqrt(ab))`.
pub fn schmidt_mode<T: Real>(n: usize, a: T, b: T, x: T) -> T {
    let ab = a * b;
    (T::lit(2.0) / ab).powf(T::lit(0.25)) * hermite_function(n, T::lit(2.0).sqrt() * x / ab.sqrt())
}

/// The amplitude itself, normalized to unit L2 norm on the plane.
pub fn double_gaussian<T: Real>(a: T, b: T, x1: T, x2: T) -> T {
    let two = T::lit(2.0);
    let norm = (two / (T::PI() * a * b)).sqrt();
    let u = x1 + x2;
    let v = x1 - x2;
    norm * (-u * u / (two * a * a) - v * v / (two * b * b)).exp()
}

/// Partial Schmidt sum `sum_{n <= n_max} c_n psi_n(x1) psi_n(x2)`.
pub fn reconstruct<T: Real>(a: T, b: T, n_max: usize, x1: T, x2: T) -> T {
    let ab = a * b;
    let scale = T::lit(2.0).sqrt() / ab.sqrt();
    let u1 = crate::numerics::hermite_functions(n_max, scale * x1);
    let u2 = crate::numerics::hermite_functions(n_max, scale * x2);
    let pref = (T::lit(2.0) / ab).sqrt();
    let q = schmidt_ratio(a, b);
    let mut c = T::lit(2.0) * ab.sqrt() / (a + b);
    let mut sum = T::zero();
    for n in 0..=n_max {
        sum += c * u1[n] * u2[n];
        c *= q;
    }
    pref * sum
}
