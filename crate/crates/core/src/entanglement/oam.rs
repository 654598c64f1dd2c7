//! Orbital-angular-momentum Schmidt decomposition of the azimuthal ridge.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{midpoint, midpoint_nodes};
use crate::scalar::{compensated_sum, Real};

use super::azimuthal::AzimuthalDistribution;
use super::spectrum::{oam_label, Method, ModeLabel, Parity, SchmidtSpectrum, MAX_MODES, TRUNCATION_TARGET};

/// Largest coincidence width for which the OAM picture is used.
pub const OAM_REGIME_LIMIT: f64 = 0.1;

/// OAM spectrum with the three Schmidt-number estimates it is compared against.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OamSpectrum<T> {
    /// Stored modes `(0, cos), (1, cos), (1, sin), ...`, weights `~ exp(-l^2 dalpha_c^2)`.
    pub spectrum: SchmidtSpectrum<T>,
    pub l_max: usize,
    /// The printed closed form `2 sqrt(2 pi) theta0 w / lambda_p = 2 sqrt(2 pi) / (pi dalpha_c)`.
    pub closed_form_k: T,
    /// Continuum limit of the stored-mode sum, `sqrt(2 pi) / dalpha_c`.
    pub continuum_k: T,
    /// `1 / (2 sum_l lambda_l^2)` with `2 sum_l lambda_l = 1` over all integer `l`,
    /// which counts `l = 0` twice.
    pub doubled_sum_k: T,
}

fn check_regime<T: Real>(dist: &AzimuthalDistribution<T>) -> Result<T> {
    let w = dist.coincidence_width;
    if !(w < T::lit(OAM_REGIME_LIMIT)) {
        return Err(Error::Precondition(format!(
            "OAM decomposition needs dalpha_c < {OAM_REGIME_LIMIT}, got {w}"
        )));
    }
    Ok(w)
}

/// `l_max` after which the stored-mode tail mass is below `target`.
fn auto_l_max<T: Real>(w: T, target: T) -> usize {
    // Both parities beyond L carry ~ 2 exp(-L^2 w^2) / (2 L w^2) against a total of sqrt(pi) / w.
    let mut l = (T::one() / w).ceil().to_usize().unwrap_or(1).max(1);
    loop {
        let lf = T::from_count(l);
        let tail = (-(lf * w).powi(2)).exp() / (lf * w * T::PI().sqrt());
        if tail < target / T::lit(2.0) || 2 * l + 1 >= MAX_MODES {
            return l;
        }
        l += (l / 16).max(1);
    }
}

/// Unnormalized weight of each stored mode with angular momentum `l`.
fn raw_weight<T: Real>(l: usize, w: T) -> T {
    (-(T::from_count(l) * w).powi(2)).exp()
}

/// OAM Schmidt spectrum. `l_max = None` extends until the tail mass drops
/// below 1e-9, capped at [`MAX_MODES`] stored modes.
pub fn oam_spectrum<T: Real>(dist: &AzimuthalDistribution<T>, l_max: Option<usize>) -> Result<OamSpectrum<T>> {
    let w = check_regime(dist)?;
    let target = T::lit(TRUNCATION_TARGET);
    let auto = auto_l_max(w, target);
    let cap = (MAX_MODES - 1) / 2;
    let l_max = l_max.unwrap_or(auto).min(cap);
    let capped = l_max == cap && auto > cap;

    // Total over every l, summed far past the stored range for the residual.
    let far = (l_max.max(auto) * 2).max(l_max + 64);
    let total = T::one() + T::lit(2.0) * compensated_sum((1..=far).map(|l| raw_weight(l, w)));
    let mut weights = Vec::with_capacity(2 * l_max + 1);
    weights.push(T::one() / total);
    for l in 1..=l_max {
        let v = raw_weight(l, w) / total;
        weights.push(v);
        weights.push(v);
    }
    let stored = compensated_sum(weights.iter().copied());
    let residual = (T::one() - stored).max(T::zero());
    let spectrum = SchmidtSpectrum::from_weights(Method::Oam, weights, residual, capped);

    let pi = T::PI();
    let sqrt_2pi = (T::lit(2.0) * pi).sqrt();
    let closed_form_k = T::lit(2.0) * sqrt_2pi / (pi * w);
    // Doubled-sum convention: lambda_l = e_l / (2 Z) over l in Z, Z = 1 + 2 sum_{l>0} e_l.
    let z = total;
    let z2 = T::one() + T::lit(2.0) * compensated_sum((1..=far).map(|l| raw_weight(l, w).powi(2)));
    let doubled_sum_k = T::lit(2.0) * z * z / z2;
    Ok(OamSpectrum {
        spectrum: spectrum.with_closed_form_k(closed_form_k),
        l_max,
        closed_form_k,
        continuum_k: sqrt_2pi / w,
        doubled_sum_k,
    })
}

/// OAM mode `sqrt(2/pi) cos(l alpha)` or `sqrt(2/pi) sin(l alpha)` on `|alpha| <= pi/2`.
pub fn oam_mode<T: Real>(l: usize, parity: Parity, alpha: T) -> Result<T> {
    let limit = T::FRAC_PI_2();
    if !(alpha.abs() <= limit) {
        return Err(Error::AngleOutOfRange { angle: alpha.as_f64(), limit: limit.as_f64() });
    }
    let x = T::from_count(l) * alpha;
    let norm = (T::lit(2.0) / T::PI()).sqrt();
    Ok(norm * match parity {
        Parity::Cos => x.cos(),
        Parity::Sin => x.sin(),
    })
}

/// Gram matrix of the stored OAM modes up to `l_max` on `[-pi/2, pi/2]`, in
/// storage order. The `l = 0` mode has norm 2 and cosines (or sines) whose
/// `l` differ by an odd number overlap.
pub fn oam_gram<T: Real>(l_max: usize, points: usize) -> Vec<Vec<T>> {
    let labels: Vec<(usize, Parity)> = (0..=2 * l_max)
        .map(|i| match oam_label(i) {
            ModeLabel::Oam { l, parity } => (l, parity),
            ModeLabel::Index(_) => unreachable!(),
        })
        .collect();
    let (nodes, h) = midpoint_nodes(-T::FRAC_PI_2(), T::FRAC_PI_2(), points);
    let samples: Vec<Vec<T>> = labels
        .iter()
        .map(|&(l, p)| nodes.iter().map(|&x| oam_mode(l, p, x).expect("node inside range")).collect())
        .collect();
    samples
        .iter()
        .map(|u| {
            samples
                .iter()
                .map(|v| h * compensated_sum(u.iter().zip(v).map(|(a, b)| *a * *b)))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientCheck<T> {
    /// `C_l / C_0` from quadrature, `l = 0..=l_max`.
    pub ratios: Vec<T>,
    /// Largest `|C_l / C_0 - exp(-l^2 dalpha_c^2 / 2)| / exp(-l^2 dalpha_c^2 / 2)`.
    pub max_relative_deviation: T,
}

/// Fourier coefficients `C_l = int exp(-delta^2 / 2 dalpha_c^2) exp(i l delta) d delta`
/// by quadrature, compared against the Gaussian closed form. `l_max = None`
/// uses `ceil(3 / dalpha_c)`.
pub fn coefficient_check<T: Real>(dist: &AzimuthalDistribution<T>, l_max: Option<usize>) -> Result<CoefficientCheck<T>> {
    let w = check_regime(dist)?;
    let l_max = l_max.unwrap_or_else(|| (T::lit(3.0) / w).ceil().to_usize().unwrap_or(0));
    let half = (T::lit(14.0) * w).min(T::PI());
    // Enough nodes for the fastest oscillation across the window.
    let cycles = T::from_count(l_max) * half / T::PI();
    let points = (cycles * T::lit(64.0)).ceil().to_usize().unwrap_or(0).max(1024);
    let amplitude = |d: T| (-(d * d) / (T::lit(2.0) * w * w)).exp();
    let c0 = midpoint(amplitude, -half, half, points);
    let ratios: Vec<T> = (0..=l_max)
        .into_par_iter()
        .map(|l| {
            let lf = T::from_count(l);
            midpoint(|d| amplitude(d) * (lf * d).cos(), -half, half, points) / c0
        })
        .collect();
    let max_relative_deviation = ratios
        .iter()
        .enumerate()
        .map(|(l, r)| {
            let expect = (-(T::from_count(l) * w).powi(2) / T::lit(2.0)).exp();
            ((*r - expect) / expect).abs()
        })
        .fold(T::zero(), |m, v| m.max(v));
    Ok(CoefficientCheck { ratios, max_relative_deviation })
}
