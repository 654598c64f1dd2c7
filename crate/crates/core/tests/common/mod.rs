//! Oracles shared by the integration test targets.
#![allow(dead_code)]

use biphoton::amplitude::{transverse_sum_diff, AngularPair, Geometry};
use biphoton::crystal::{derive_scales, DerivedScales, ExperimentConfig};

pub const LAMBDA_P: f64 = 0.4047;

pub fn reference_scales() -> DerivedScales<f64> {
    derive_scales(&ExperimentConfig::reference()).expect("reference config is noncollinear")
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Unit-scale sample `(ring offset, polar half-difference, azimuth difference, alpha0)`.
pub type GeometrySample = (f64, f64, f64, f64);

/// Aggregate relative disagreement of the exact and small-angle transverse
/// magnitudes when the cone angle and every deviation scale with `eps`.
///
/// Pairs are placed at `theta_{1,2} = theta0 + ring eps^2 +- half eps`, so
/// the polar sum stays on the phase-matched ring to the order of its thickness.
pub fn geometry_error(samples: &[GeometrySample], eps: f64) -> f64 {
    let theta0 = 0.28 * eps;
    let (mut err, mut norm) = (0.0, 0.0);
    for &(ring, half, delta, alpha0) in samples {
        let centre = theta0 + ring * 0.01 * eps * eps;
        let t = half * 0.01 * eps;
        let d = delta * 0.01 * eps;
        let pair = AngularPair::new(centre + t, alpha0 + d / 2.0, centre - t, alpha0 - d / 2.0).unwrap();
        let exact = transverse_sum_diff(&pair, LAMBDA_P, Geometry::Exact);
        let small = transverse_sum_diff(&pair, LAMBDA_P, Geometry::SmallAngle { theta0 });
        err += (exact.sum_sq - small.sum_sq).abs() + (exact.diff_sq - small.diff_sq).abs();
        norm += exact.sum_sq + exact.diff_sq;
    }
    err / norm
}

/// Log-log slope of [`geometry_error`] over four successive halvings.
pub fn geometry_convergence_slope(samples: &[GeometrySample]) -> (f64, Vec<f64>) {
    let eps = [1.0, 0.5, 0.25, 0.125];
    let errs: Vec<f64> = eps.iter().map(|e| geometry_error(samples, *e)).collect();
    (loglog_slope(&eps, &errs), errs)
}
