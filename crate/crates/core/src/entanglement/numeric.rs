//! Schmidt spectrum of a sampled two-argument kernel by singular value decomposition.

use nalgebra::{DMatrix, DVector, RealField};
use num_traits::Float;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::midpoint_nodes;
use crate::scalar::{compensated_sum, Real};

use super::analytic::{schmidt_ratio};
use super::spectrum::{Method, SchmidtSpectrum};

/// Points a kernel feature must span on the grid.
pub const MIN_POINTS_PER_FEATURE: usize = 8;

/// Symmetric midpoint grid `[lo, hi]` shared by both kernel arguments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<T> {
    pub lo: T,
    pub hi: T,
    pub points: usize,
}

impl<T: Real> GridSpec<T> {
    pub fn new(lo: T, hi: T, points: usize) -> Result<Self> {
        if !(hi > lo) || points == 0 {
            return Err(Error::invalid("grid", "need hi > lo and at least one point"));
        }
        Ok(GridSpec { lo, hi, points })
    }

    pub fn spacing(&self) -> T {
        (self.hi - self.lo) / T::from_count(self.points)
    }

    /// Smallest point count for which a feature of `width` spans
    /// [`MIN_POINTS_PER_FEATURE`] cells.
    pub fn required_points(&self, width: T) -> usize {
        let n = (T::from_count(MIN_POINTS_PER_FEATURE) * (self.hi - self.lo) / width).ceil();
        n.to_usize().unwrap_or(usize::MAX)
    }

    pub fn check_resolution(&self, width: T) -> Result<()> {
        let required = self.required_points(width);
        if self.points < required {
            return Err(Error::Resolution {
                what: format!("kernel feature of width {width}"),
                required,
                actual: self.points,
            });
        }
        Ok(())
    }

    /// Grid for the double-Gaussian kernel: wide enough for every mode above
    /// a 1e-10 weight and `oversample` times the minimum density.
    pub fn for_double_gaussian(a: T, b: T, oversample: T) -> Result<Self> {
        let q = schmidt_ratio(a, b).abs();
        let lambda0 = T::lit(4.0) * a * b / ((a + b) * (a + b));
        let n_sig = if q > T::zero() {
            ((T::lit(1e-10) / lambda0).ln() / (q * q).ln()).max(T::zero())
        } else {
            T::zero()
        };
        // Classical turning point of the highest significant Hermite mode plus a Gaussian tail.
        let half = (a * b / T::lit(2.0)).sqrt() * ((T::lit(2.0) * n_sig + T::one()).sqrt() + T::lit(6.0));
        let probe = GridSpec { lo: -half, hi: half, points: 1 };
        let needed = T::from_count(probe.required_points(double_gaussian_feature_width(a, b)));
        let points = (needed * oversample.max(T::one())).ceil().to_usize().unwrap_or(usize::MAX);
        GridSpec::new(-half, half, points)
    }
}

/// Full 1/e width of the double-Gaussian amplitude along one argument:
/// `2 sqrt(2) / sqrt(1/a^2 + 1/b^2)`.
pub fn double_gaussian_feature_width<T: Real>(a: T, b: T) -> T {
    T::lit(2.0) * T::lit(2.0).sqrt() / (T::one() / (a * a) + T::one() / (b * b)).sqrt()
}

/// Singular values with optional singular vectors, in descending order.
#[derive(Debug, Clone)]
pub struct KernelSvd<T: RealField> {
    pub singular_values: Vec<T>,
    pub u: Option<DMatrix<T>>,
    pub v_t: Option<DMatrix<T>>,
    pub nodes: Vec<T>,
    pub spacing: T,
}

/// SVD of `M_ij = h K(x_i, x_j)` on the midpoint nodes of `grid`. Folding the
/// quadrature weight into the matrix makes the singular values approximate
/// those of the integral operator independently of the grid.
pub fn kernel_svd<T, F>(kernel: F, grid: &GridSpec<T>, vectors: bool) -> KernelSvd<T>
where
    T: Real + RealField,
    F: Fn(T, T) -> T + Sync,
{
    let (nodes, h) = midpoint_nodes(grid.lo, grid.hi, grid.points);
    let n = nodes.len();
    let rows: Vec<Vec<T>> = nodes
        .par_iter()
        .map(|&x| nodes.iter().map(|&y| h * kernel(x, y)).collect())
        .collect();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let mut svd = m.svd(vectors, vectors);
    svd.sort_by_singular_values();
    KernelSvd {
        singular_values: svd.singular_values.iter().copied().collect(),
        u: svd.u,
        v_t: svd.v_t,
        nodes,
        spacing: h,
    }
}

/// Numerical Schmidt spectrum of `kernel`, requiring the narrowest feature of
/// width `feature_width` to span at least eight grid cells.
pub fn schmidt_numeric<T, F>(kernel: F, grid: &GridSpec<T>, feature_width: T) -> Result<SchmidtSpectrum<T>>
where
    T: Real + RealField,
    F: Fn(T, T) -> T + Sync,
{
    grid.check_resolution(feature_width)?;
    let svd = kernel_svd(kernel, grid, false);
    Ok(spectrum_from_singular_values(&svd.singular_values))
}

pub fn spectrum_from_singular_values<T: Real>(singular_values: &[T]) -> SchmidtSpectrum<T> {
    let squares: Vec<T> = singular_values.iter().map(|s| *s * *s).collect();
    let total = compensated_sum(squares.iter().copied());
    let weights = squares.into_iter().map(|s| s / total).collect();
    SchmidtSpectrum::from_weights(Method::NumericSvd, weights, T::zero(), false)
}

/// Discretized singular function `j` from a [`KernelSvd`], L2-normalized on the grid.
pub fn singular_function<T: Real + RealField>(svd: &KernelSvd<T>, j: usize, left: bool) -> Option<DVector<T>> {
    let scale = T::one() / Float::sqrt(svd.spacing);
    if left {
        svd.u.as_ref().map(|u| u.column(j).map(|x| x * scale))
    } else {
        svd.v_t.as_ref().map(|v| v.row(j).transpose().map(|x| x * scale))
    }
}
