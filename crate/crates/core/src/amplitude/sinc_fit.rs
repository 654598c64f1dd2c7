use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{bisect, golden_section_minimize, linspace, sinc};
use crate::scalar::Real;

pub const MIN_FIT_POINTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SincGaussFit<T> {
    /// Least-squares coefficient `c` of `exp(-c x^2)`.
    pub coefficient: T,
    /// Root-mean-square residual at the optimum.
    pub rms_residual: T,
    /// Largest pointwise deviation `|sinc^2 - exp(-c x^2)|` on the grid.
    pub max_deviation: T,
    /// Coefficient that matches the half-maximum width of `sinc^2` instead.
    pub half_max_coefficient: T,
    pub half_range: T,
    pub grid_size: usize,
}

/// Least-squares coefficient `c` of `exp(-c x^2)` against samples `ys` at `xs`.
pub fn fit_gaussian_coefficient<T: Real>(xs: &[T], ys: &[T]) -> T {
    let sse = |c: T| {
        xs.iter()
            .zip(ys)
            .map(|(&x, &y)| (y - (-c * x * x).exp()).powi(2))
            .fold(T::zero(), |a, b| a + b)
    };
    golden_section_minimize(sse, T::lit(1e-4), T::lit(10.0), T::lit(1e-12).max(T::epsilon()))
}

/// Fits `exp(-c x^2)` to `sinc^2(x)` on a uniform grid over `|x| <= half_range`.
pub fn sinc_gauss_fit<T: Real>(half_range: T, grid_size: usize) -> Result<SincGaussFit<T>> {
    if grid_size < MIN_FIT_POINTS {
        return Err(Error::Resolution {
            what: "sinc-Gaussian fit".into(),
            required: MIN_FIT_POINTS,
            actual: grid_size,
        });
    }
    if !(half_range > T::zero() && half_range.is_finite()) {
        return Err(Error::invalid("fit_range", "half range must be positive"));
    }
    let xs = linspace(-half_range, half_range, grid_size);
    let ys: Vec<T> = xs.iter().map(|&x| sinc(x).powi(2)).collect();
    let c = fit_gaussian_coefficient(&xs, &ys);
    let residuals: Vec<T> = xs.iter().zip(&ys).map(|(&x, &y)| y - (-c * x * x).exp()).collect();
    let n = T::from_count(grid_size);
    let rms = (residuals.iter().map(|r| *r * *r).fold(T::zero(), |a, b| a + b) / n).sqrt();
    let max_dev = residuals.iter().fold(T::zero(), |m, r| m.max(r.abs()));
    let half = T::lit(0.5);
    let x_half = bisect(|x| sinc(x).powi(2) - half, T::lit(0.1), T::lit(3.0), T::epsilon())
        .expect("sinc^2 crosses one half inside its main lobe");
    Ok(SincGaussFit {
        coefficient: c,
        rms_residual: rms,
        max_deviation: max_dev,
        half_max_coefficient: T::LN_2() / (x_half * x_half),
        half_range,
        grid_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_fit_recovers_coefficient() {
        let xs = linspace(-3.0f64, 3.0, 200);
        let ys: Vec<f64> = xs.iter().map(|x| (-0.5 * x * x).exp()).collect();
        assert!((fit_gaussian_coefficient(&xs, &ys) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn residual_shrinks_with_range() {
        let mut previous = f64::INFINITY;
        for r in [3.1, 2.5, 2.0, 1.5, 1.0, 0.5, 0.25] {
            let fit = sinc_gauss_fit(r, 512).unwrap();
            assert!(fit.rms_residual < previous, "range {r}");
            previous = fit.rms_residual;
        }
    }

    #[test]
    fn half_maximum_match() {
        let fit = sinc_gauss_fit(std::f64::consts::PI, 512).unwrap();
        // sinc^2(x) = 1/2 at x = 1.391557...
        assert!((fit.half_max_coefficient - 0.357_951).abs() < 1e-5);
    }

    #[test]
    fn grid_too_small() {
        assert!(matches!(sinc_gauss_fit(1.0f64, 10), Err(Error::Resolution { .. })));
    }
}
