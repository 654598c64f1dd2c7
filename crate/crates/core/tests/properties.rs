mod common;

use std::f64::consts::PI;

use biphoton::amplitude::{
    azimuth_equation_residual, pump_azimuth, pump_azimuth_cos, AmplitudeMode, AmplitudeModel, AngularPair, Geometry,
};
use biphoton::crystal::{derive_scales, pump_index, ExperimentConfig, SellmeierSet};
use biphoton::entanglement::{
    azimuthal_widths, double_gaussian, k_approximate, k_closed_form, kernel_svd, r_parameter, schmidt_analytic,
    schmidt_mode, spectrum_from_singular_values, GridSpec,
};
use biphoton::multichannel::{equally_spaced, multichannel_entanglement, state_for_planes, validate_layout, ChannelLayout};
use biphoton::numerics::midpoint;
use proptest::prelude::*;

use common::{geometry_convergence_slope, reference_scales};

fn near_cone() -> impl Strategy<Value = AngularPair<f64>> {
    let t0 = reference_scales().theta0;
    (-5e-4..5e-4f64, -PI..PI, -5e-4..5e-4f64, -PI..PI)
        .prop_map(move |(d1, a1, d2, a2)| AngularPair::new(t0 + d1, a1, t0 + d2, a2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn full_amplitude_transposition_symmetric(p in near_cone()) {
        let m = AmplitudeModel::new(AmplitudeMode::Full, reference_scales());
        prop_assert!((m.amplitude(&p) - m.amplitude(&p.transposed())).abs() < 1e-12);
    }

    #[test]
    fn nwo_depends_on_azimuth_difference_only(p in near_cone(), shift in -3.0..3.0f64) {
        let m = AmplitudeModel::new(AmplitudeMode::NoWalkOff, reference_scales());
        let q = AngularPair { alpha1: p.alpha1 + shift, alpha2: p.alpha2 + shift, ..p };
        prop_assert!((m.amplitude(&p) - m.amplitude(&q)).abs() < 1e-12);
    }

    #[test]
    fn nwo_factorizes(p in near_cone(), q in near_cone()) {
        let m = AmplitudeModel::new(AmplitudeMode::NoWalkOff, reference_scales());
        let swap = |x: &AngularPair<f64>, y: &AngularPair<f64>| AngularPair { alpha1: y.alpha1, alpha2: y.alpha2, ..*x };
        let lhs = m.amplitude(&p) * m.amplitude(&q);
        let rhs = m.amplitude(&swap(&p, &q)) * m.amplitude(&swap(&q, &p));
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn zero_slope_full_equals_nwo(p in near_cone()) {
        let mut s = reference_scales();
        s.zeta = 0.0;
        let full = AmplitudeModel::new(AmplitudeMode::Full, s);
        let nwo = AmplitudeModel::new(AmplitudeMode::NoWalkOff, s);
        prop_assert!((full.amplitude(&p) - nwo.amplitude(&p)).abs() < 1e-12);
    }

    #[test]
    fn double_gaussian_density_bounded_and_squared(p in near_cone(), walkoff in any::<bool>()) {
        let m = AmplitudeModel::new(AmplitudeMode::DoubleGaussian, reference_scales()).with_walkoff(walkoff);
        let d = m.probability_density(&p);
        prop_assert!((0.0..=1.0).contains(&d));
        prop_assert!((d - m.amplitude(&p).powi(2)).abs() < 1e-12);
    }

    #[test]
    fn exact_pump_azimuth_solves_projection(t1 in 0.01..1.5f64, a1 in -PI..PI, t2 in 0.01..1.5f64, a2 in -PI..PI) {
        let p = AngularPair::new(t1, a1, t2, a2).unwrap();
        let ap = pump_azimuth(&p).unwrap();
        prop_assert!(azimuth_equation_residual(&p, ap).abs() < 1e-10);
        let c = pump_azimuth_cos(&p, Geometry::Exact).unwrap();
        prop_assert!((-1.0..=1.0).contains(&c));
    }

    #[test]
    fn collinear_pump_index_ignores_azimuth(alpha in -PI..PI, phi0 in 0.0..PI) {
        let bbo = SellmeierSet::<f64>::bbo();
        let a = pump_index(&bbo, 0.4047, 0.0, alpha, phi0).unwrap();
        let b = pump_index(&bbo, 0.4047, 0.0, 0.0, phi0).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn analytic_spectrum_invariants(a in 0.01..50.0f64, b in 0.01..50.0f64) {
        let s = schmidt_analytic(a, b, 0).unwrap();
        prop_assert!(s.weights.iter().all(|w| *w >= 0.0));
        prop_assert!(s.weights.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!((s.weight_sum() + s.truncation.residual - 1.0).abs() < 1e-12);
        prop_assert!(s.truncation.residual < 1e-9);
        prop_assert!((s.k * s.purity() - 1.0).abs() < 1e-12);
        prop_assert!(s.k >= 1.0);
        prop_assert!((s.k - k_closed_form(a, b)).abs() < 1e-6 * s.k);
    }

    #[test]
    fn schmidt_modes_orthonormal(n in 0usize..=50, m in 0usize..=50, a in 1.0..10.0f64, b in 0.05..1.0f64) {
        let half = 15.0 * (a * b).sqrt();
        let v = midpoint(|x| schmidt_mode(n, a, b, x) * schmidt_mode(m, a, b, x), -half, half, 4000);
        let expect = if n == m { 1.0 } else { 0.0 };
        prop_assert!((v - expect).abs() < 1e-8, "{} {} {}", n, m, v);
    }

    #[test]
    fn r_equals_leading_k(w in 200.0..5000.0f64, l in 1000.0..20000.0f64, phi0 in 0.55..1.4f64) {
        let mut c = ExperimentConfig::<f64>::reference();
        c.waist = w;
        c.length = l;
        c.phi0 = phi0;
        let s = derive_scales(&c).unwrap();
        let dist = azimuthal_widths(&s);
        let r = r_parameter(&dist);
        let k = k_approximate(2.0 * PI, dist.coincidence_width);
        prop_assert!(((r - k) / k).abs() < 1e-12);
    }

    #[test]
    fn geometry_agrees_to_second_order(seed in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.5..1.5f64), 20)) {
        let (slope, errs) = geometry_convergence_slope(&seed);
        prop_assert!((slope - 2.0).abs() < 0.3, "slope {} errors {:?}", slope, errs);
    }

    #[test]
    fn shrinking_widths_preserve_feasibility(n in 1usize..200, shrink in 0.05..1.0f64) {
        let s = reference_scales();
        let layout = ChannelLayout::for_scales(equally_spaced(n), &s, None, None).unwrap();
        prop_assume!(validate_layout(&layout).feasible);
        let mut smaller = layout.clone();
        smaller.fiber_radius *= shrink;
        smaller.ring_thickness *= shrink;
        prop_assert!(validate_layout(&smaller).feasible);
        let mut narrower = layout;
        narrower.coincidence_width *= shrink;
        prop_assert!(validate_layout(&narrower).feasible);
    }
}

#[test]
fn entropy_increases_with_width_ratio() {
    let ratios = [1.0f64, 1.1, 2.0, 3.0, 10.0, 30.0, 100.0, 1000.0];
    let entropies: Vec<f64> = ratios.iter().map(|r| schmidt_analytic(*r, 1.0, 0).unwrap().entropy_bits).collect();
    assert!(entropies.windows(2).all(|w| w[1] > w[0]), "{entropies:?}");
}

#[test]
fn numeric_k_converges_under_refinement() {
    let (a, b) = (5.0f64, 1.0);
    let exact = k_closed_form(a, b);
    let floor = 1e-12;
    let errors: Vec<f64> = [12usize, 24, 48, 96]
        .iter()
        .map(|&points| {
            let grid = GridSpec::new(-25.0, 25.0, points).unwrap();
            let svd = kernel_svd(|x, y| double_gaussian(a, b, x, y), &grid, false);
            let k = spectrum_from_singular_values(&svd.singular_values).k;
            ((k - exact) / exact).abs()
        })
        .collect();
    for w in errors.windows(2) {
        assert!(w[1] <= w[0] / 2.0 || w[1] < floor, "{errors:?}");
    }
    assert!(errors[0] > floor, "coarsest level already at the floor: {errors:?}");
}

#[test]
fn multichannel_closed_forms_for_all_n() {
    for n in 1..=10_000usize {
        let st = state_for_planes::<f64>(n);
        let e = multichannel_entanglement(&st);
        assert!((e.k - 2.0 * n as f64).abs() <= 1e-12 * (2.0 * n as f64).max(1.0), "K at {n}: {}", e.k);
        assert!((e.entropy_bits - (1.0 + (n as f64).log2())).abs() <= 1e-12, "S at {n}");
        assert!((st.norm_squared() - 1.0).abs() <= 1e-12, "norm at {n}");
    }
}

#[test]
fn single_precision_pipeline() {
    let s = derive_scales(&ExperimentConfig::<f32>::reference()).unwrap();
    assert!((s.theta0 - 0.28).abs() < 0.01);
    let dist = azimuthal_widths(&s);
    assert!((r_parameter(&dist) / 1.0e4 - 1.0).abs() < 0.01);
}
