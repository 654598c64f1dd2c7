//! Grid evaluation of the angular density and quadrature over the polar angles.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::DerivedScales;
use crate::error::{Error, Result};
use crate::export::{format_float, write_csv};
use crate::numerics::{linspace, midpoint_nodes};
use crate::scalar::{compensated_sum, Real};

use super::geometry::AngularPair;
use super::model::AmplitudeModel;

/// Multiples of the natural widths used for default grid windows.
pub const WINDOW_SIGMAS: f64 = 8.0;

pub const GRID_CSV_HEADER: [&str; 5] = ["theta1", "theta2", "alpha1", "alpha2", "value"];

/// Default sampling window around the cone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularWindow<T> {
    pub theta_lo: T,
    pub theta_hi: T,
    /// Half-range of `alpha1 - alpha2`.
    pub alpha_diff_half: T,
}

impl<T: Real> AngularWindow<T> {
    /// `theta0 +- 8 dtheta_L / theta0` and `|alpha1 - alpha2| <= 8 dtheta_p / theta0`.
    pub fn around_cone(scales: &DerivedScales<T>) -> Self {
        let k = T::lit(WINDOW_SIGMAS);
        let dt = k * scales.ring_thickness();
        AngularWindow {
            theta_lo: (scales.theta0 - dt).max(T::zero()),
            theta_hi: scales.theta0 + dt,
            alpha_diff_half: k * scales.coincidence_width(),
        }
    }
}

/// Cartesian product of four axes.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularGrid<T> {
    pub theta1: Vec<T>,
    pub theta2: Vec<T>,
    pub alpha1: Vec<T>,
    pub alpha2: Vec<T>,
}

impl<T: Real> AngularGrid<T> {
    /// Square grid over `window`, with both azimuths centred on `alpha0`.
    pub fn from_window(window: &AngularWindow<T>, alpha0: T, theta_points: usize, alpha_points: usize) -> Self {
        let thetas = linspace(window.theta_lo, window.theta_hi, theta_points);
        let h = window.alpha_diff_half / T::lit(2.0);
        let alphas = linspace(alpha0 - h, alpha0 + h, alpha_points);
        AngularGrid { theta1: thetas.clone(), theta2: thetas, alpha1: alphas.clone(), alpha2: alphas }
    }

    pub fn len(&self) -> usize {
        self.theta1.len() * self.theta2.len() * self.alpha1.len() * self.alpha2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Point at flat index `i`, `alpha2` varying fastest.
    pub fn pair(&self, i: usize) -> AngularPair<T> {
        let (n2, na1, na2) = (self.theta2.len(), self.alpha1.len(), self.alpha2.len());
        let ia2 = i % na2;
        let ia1 = (i / na2) % na1;
        let it2 = (i / (na2 * na1)) % n2;
        let it1 = i / (na2 * na1 * n2);
        AngularPair {
            theta1: self.theta1[it1],
            alpha1: self.alpha1[ia1],
            theta2: self.theta2[it2],
            alpha2: self.alpha2[ia2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSample<T> {
    pub pair: AngularPair<T>,
    pub value: T,
}

/// Evaluates `f` at every grid point in parallel. Output order is the flat
/// grid order regardless of scheduling.
pub fn sample_grid<T, F>(grid: &AngularGrid<T>, f: F) -> Vec<GridSample<T>>
where
    T: Real,
    F: Fn(&AngularPair<T>) -> T + Sync,
{
    (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let pair = grid.pair(i);
            GridSample { pair, value: f(&pair) }
        })
        .collect()
}

pub fn density_grid<T: Real>(model: &AmplitudeModel<T>, grid: &AngularGrid<T>) -> Vec<GridSample<T>> {
    sample_grid(grid, |p| model.probability_density(p))
}

pub fn write_grid_csv<W: Write, T: Real>(writer: W, samples: &[GridSample<T>]) -> Result<()> {
    write_csv(
        writer,
        &GRID_CSV_HEADER,
        samples.iter().map(|s| {
            [s.pair.theta1, s.pair.theta2, s.pair.alpha1, s.pair.alpha2, s.value].map(format_float)
        }),
    )
}

/// Quadrature resolution for [`marginal_over_polar`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarQuadrature {
    /// Nodes along the polar sum `theta1 + theta2 - 2 theta0`.
    pub sum_points: usize,
    /// Nodes along the polar difference `theta1 - theta2`.
    pub diff_points: usize,
    /// Window half-widths in units of the respective e-folding scales.
    pub extent: f64,
}

impl Default for PolarQuadrature {
    fn default() -> Self {
        PolarQuadrature { sum_points: 200, diff_points: 200, extent: 10.0 }
    }
}

/// Integrates the model density over `(theta1, theta2)` at fixed azimuths.
///
/// Works in the rotated variables `s = theta1 + theta2 - 2 theta0` and
/// `d = theta1 - theta2` (Jacobian 1/2). For every `d` the `s` window is
/// centred where the sinc argument vanishes, which absorbs the walk-off shift.
/// Sized for the Gaussian models; sinc tails beyond the window are dropped.
pub fn marginal_over_polar<T: Real>(
    model: &AmplitudeModel<T>,
    alpha1: T,
    alpha2: T,
    quad: PolarQuadrature,
) -> Result<T> {
    if quad.sum_points < 8 || quad.diff_points < 8 {
        return Err(Error::Resolution {
            what: "polar marginal".into(),
            required: 8,
            actual: quad.sum_points.min(quad.diff_points),
        });
    }
    let s = &model.scales;
    let two = T::lit(2.0);
    let extent = T::lit(quad.extent);
    let c = model.gauss_coefficient;
    let s_scale = two * s.ring_thickness() / c.sqrt();
    let (ds, hd) = midpoint_nodes(-extent * s.dtheta_p, extent * s.dtheta_p, quad.diff_points);
    let pair_at = |sum: T, diff: T| AngularPair {
        theta1: s.theta0 + (sum + diff) / two,
        alpha1,
        theta2: s.theta0 + (sum - diff) / two,
        alpha2,
    };
    let rows: Vec<T> = ds
        .par_iter()
        .map(|&d| {
            // The sinc argument is affine in s.
            let x0 = model.sinc_argument(&pair_at(T::zero(), d));
            let x1 = model.sinc_argument(&pair_at(s_scale, d));
            let centre = -x0 * s_scale / (x1 - x0);
            let (ss, hs) = midpoint_nodes(centre - extent * s_scale, centre + extent * s_scale, quad.sum_points);
            hs * compensated_sum(ss.iter().map(|&sv| model.probability_density(&pair_at(sv, d))))
        })
        .collect();
    Ok(hd * compensated_sum(rows) / two)
}

/// Squared L2 norm of the amplitude over the polar angles, the relative
/// azimuth and `alpha0` in `(-pi/2, pi/2]`.
pub fn l2_norm_squared<T: Real>(model: &AmplitudeModel<T>, quad: PolarQuadrature, alpha_points: usize) -> Result<T> {
    let half = T::lit(quad.extent) * model.scales.coincidence_width();
    let (deltas, h) = midpoint_nodes(-half, half, alpha_points);
    let mut values = Vec::with_capacity(deltas.len());
    for d in deltas {
        values.push(marginal_over_polar(model, d / T::lit(2.0), -d / T::lit(2.0), quad)?);
    }
    Ok(T::PI() * h * compensated_sum(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplitude::AmplitudeMode;
    use crate::crystal::{derive_scales, ExperimentConfig};

    fn model(mode: AmplitudeMode) -> AmplitudeModel<f64> {
        AmplitudeModel::new(mode, derive_scales(&ExperimentConfig::reference()).unwrap())
    }

    #[test]
    fn flat_index_order() {
        let g = AngularGrid { theta1: vec![1.0, 2.0], theta2: vec![3.0], alpha1: vec![4.0, 5.0], alpha2: vec![6.0, 7.0] };
        assert_eq!(g.len(), 8);
        let p = g.pair(5);
        assert_eq!((p.theta1, p.theta2, p.alpha1, p.alpha2), (2.0, 3.0, 4.0, 7.0));
    }

    #[test]
    fn grid_is_deterministic_and_bounded() {
        let m = model(AmplitudeMode::DoubleGaussian);
        let w = AngularWindow::around_cone(&m.scales);
        let g = AngularGrid::from_window(&w, 0.3, 9, 7);
        let a = density_grid(&m, &g);
        let b = density_grid(&m, &g);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| (0.0..=1.0).contains(&s.value)));
    }

    #[test]
    fn csv_export() {
        let m = model(AmplitudeMode::Full);
        let g = AngularGrid::from_window(&AngularWindow::around_cone(&m.scales), 0.0, 2, 2);
        let mut out = Vec::new();
        write_grid_csv(&mut out, &density_grid(&m, &g)).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("theta1,theta2,alpha1,alpha2,value\n"));
        assert_eq!(text.lines().count(), 17);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn marginal_is_gaussian_in_azimuth_difference() {
        let m = model(AmplitudeMode::DoubleGaussian);
        let s = m.scales;
        let quad = PolarQuadrature { sum_points: 80, diff_points: 80, extent: 9.0 };
        let base = marginal_over_polar(&m, 0.4, 0.4, quad).unwrap();
        let delta = s.coincidence_width();
        let off = marginal_over_polar(&m, 0.4 + delta / 2.0, 0.4 - delta / 2.0, quad).unwrap();
        assert!((off / base - (-1.0f64).exp()).abs() < 1e-6, "{}", off / base);
    }

    #[test]
    fn marginal_rejects_coarse_quadrature() {
        let m = model(AmplitudeMode::DoubleGaussian);
        let quad = PolarQuadrature { sum_points: 4, diff_points: 4, extent: 10.0 };
        assert!(matches!(marginal_over_polar(&m, 0.0, 0.0, quad), Err(Error::Resolution { .. })));
    }
}
