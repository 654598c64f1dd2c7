//! Azimuthal two-photon distribution after integration over the polar angles.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::DerivedScales;
use crate::error::{Error, Result};
use crate::export::{format_float, write_csv};
use crate::numerics::{bisect, linspace, midpoint};
use crate::scalar::Real;

/// Density-map spacing must be at most this fraction of the coincidence width.
pub const DENSITY_POINTS_PER_WIDTH: usize = 4;

/// `exp(-(alpha1 - alpha2)^2 / dalpha_c^2)` restricted to `|alpha0| <= pi/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AzimuthalDistribution<T> {
    /// `dtheta_p / theta0` (rad).
    pub coincidence_width: T,
    /// Always pi (rad).
    pub single_width: T,
}

impl<T: Real> AzimuthalDistribution<T> {
    pub fn from_coincidence_width(coincidence_width: T) -> Result<Self> {
        if !(coincidence_width > T::zero() && coincidence_width.is_finite()) {
            return Err(Error::invalid("coincidence_width", "must be positive"));
        }
        Ok(AzimuthalDistribution { coincidence_width, single_width: T::PI() })
    }

    /// Peak-normalized density. Zero when the half-sum leaves `[-pi/2, pi/2]`,
    /// which keeps each diametric pair counted once.
    pub fn density(&self, alpha1: T, alpha2: T) -> T {
        let a0 = (alpha1 + alpha2) / T::lit(2.0);
        if a0.abs() > T::FRAC_PI_2() {
            return T::zero();
        }
        let d = (alpha1 - alpha2) / self.coincidence_width;
        (-d * d).exp()
    }

    /// One detector fixed at `alpha2`, the other scanned.
    pub fn conditional(&self, alpha1: T, alpha2: T) -> T {
        self.density(alpha1, alpha2)
    }

    /// Single-detector rate at `alpha1`: the density integrated over `alpha2`.
    pub fn single(&self, alpha1: T) -> T {
        let h = T::lit(10.0) * self.coincidence_width;
        midpoint(|a2| self.density(alpha1, a2), alpha1 - h, alpha1 + h, 400)
    }

    /// Measured 1/e half-width of the conditional profile around `alpha2`.
    pub fn conditional_half_width(&self, alpha2: T) -> T {
        let level = (-T::one()).exp();
        let w = self.coincidence_width;
        bisect(|x| self.conditional(alpha2 + x, alpha2) - level, T::zero(), T::lit(5.0) * w, T::epsilon() * w)
            .unwrap_or(T::nan())
    }

    /// Measured full width at half maximum of the single-detector profile.
    pub fn single_full_width(&self) -> T {
        let peak = self.single(T::zero());
        let half = peak / T::lit(2.0);
        let edge = bisect(|x| self.single(x) - half, T::zero(), T::PI(), T::lit(1e-12).max(T::epsilon()))
            .unwrap_or(T::nan());
        T::lit(2.0) * edge
    }

    /// Density on the square `[lo, hi]^2`, rejecting grids coarser than a
    /// quarter of the coincidence width.
    pub fn density_map(&self, lo: T, hi: T, points: usize) -> Result<DensityMap<T>> {
        if !(hi > lo) {
            return Err(Error::invalid("density range", "need hi > lo"));
        }
        let max_step = self.coincidence_width / T::from_count(DENSITY_POINTS_PER_WIDTH);
        let required = ((hi - lo) / max_step).ceil().to_usize().unwrap_or(usize::MAX).saturating_add(1);
        if points < required {
            return Err(Error::Resolution { what: "azimuthal density ridge".into(), required, actual: points });
        }
        let axis = linspace(lo, hi, points);
        let values = axis
            .par_iter()
            .flat_map_iter(|&a1| axis.iter().map(move |&a2| self.density(a1, a2)))
            .collect();
        Ok(DensityMap { axis, values })
    }
}

/// Row-major density samples; row index is `alpha1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMap<T> {
    pub axis: Vec<T>,
    pub values: Vec<T>,
}

impl<T: Real> DensityMap<T> {
    pub fn get(&self, i: usize, j: usize) -> T {
        self.values[i * self.axis.len() + j]
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let n = self.axis.len();
        write_csv(
            writer,
            &["alpha1", "alpha2", "density"],
            self.values
                .iter()
                .enumerate()
                .map(|(k, v)| [format_float(self.axis[k / n]), format_float(self.axis[k % n]), format_float(*v)]),
        )
    }
}

pub fn azimuthal_widths<T: Real>(scales: &DerivedScales<T>) -> AzimuthalDistribution<T> {
    AzimuthalDistribution { coincidence_width: scales.coincidence_width(), single_width: T::PI() }
}

/// Width ratio `R = dalpha_s / dalpha_c = pi theta0 / dtheta_p`.
pub fn r_parameter<T: Real>(dist: &AzimuthalDistribution<T>) -> T {
    dist.single_width / dist.coincidence_width
}
