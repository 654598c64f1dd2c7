//! Diametric fiber-pair planes on the emission ring and their feasibility.

use std::io::Write;

use serde::Serialize;

use crate::crystal::DerivedScales;
use crate::error::{Error, Result};
use crate::export::{format_float, write_csv};
use crate::numerics::midpoint;
use crate::scalar::Real;

pub const DEFAULT_SAFETY: f64 = 3.0;
/// Default fiber angular radius in units of the ring thickness.
pub const DEFAULT_FIBER_FACTOR: f64 = 2.0;

pub const FIBER_COVERS_RING: &str = "fiber_radius_exceeds_ring_thickness";
pub const GAP_EXCEEDS_FIBER: &str = "gap_exceeds_fiber_diameter";
pub const GAP_EXCEEDS_COINCIDENCE: &str = "gap_exceeds_coincidence_width";
pub const PLANES_ORDERED: &str = "planes_increasing_in_half_turn";
pub const AT_LEAST_ONE_PLANE: &str = "at_least_one_plane";

/// `N` planes through the ring centre, each carrying one fiber pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelLayout<T> {
    /// Plane azimuths, strictly increasing in `(-pi/2, pi/2]`.
    pub planes: Vec<T>,
    /// Angular radius of each receiving fiber (rad).
    pub fiber_radius: T,
    /// Ring thickness `dtheta_L / theta0` (rad).
    pub ring_thickness: T,
    /// Coincidence width `dtheta_p / theta0` (rad).
    pub coincidence_width: T,
    /// Multiplier in the "gap much larger than" requirement.
    pub safety: T,
}

impl<T: Real> ChannelLayout<T> {
    pub fn new(planes: Vec<T>, fiber_radius: T, ring_thickness: T, coincidence_width: T, safety: T) -> Result<Self> {
        for (name, v) in [
            ("fiber_radius", fiber_radius),
            ("ring_thickness", ring_thickness),
            ("coincidence_width", coincidence_width),
        ] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(Error::invalid(name, "must be positive"));
            }
        }
        if !(safety >= T::lit(DEFAULT_SAFETY)) {
            return Err(Error::invalid("safety", format!("must be at least {DEFAULT_SAFETY}, got {safety}")));
        }
        Ok(ChannelLayout { planes, fiber_radius, ring_thickness, coincidence_width, safety })
    }

    /// Layout with widths taken from `scales`; the fiber radius defaults to
    /// twice the ring thickness.
    pub fn for_scales(planes: Vec<T>, scales: &DerivedScales<T>, fiber_radius: Option<T>, safety: Option<T>) -> Result<Self> {
        let thickness = scales.ring_thickness();
        Self::new(
            planes,
            fiber_radius.unwrap_or(T::lit(DEFAULT_FIBER_FACTOR) * thickness),
            thickness,
            scales.coincidence_width(),
            safety.unwrap_or(T::lit(DEFAULT_SAFETY)),
        )
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    /// Gap from each plane to the next, the last one wrapping through pi.
    pub fn gaps(&self) -> Vec<T> {
        let n = self.planes.len();
        (0..n)
            .map(|i| {
                if i + 1 < n {
                    self.planes[i + 1] - self.planes[i]
                } else {
                    self.planes[0] + T::PI() - self.planes[i]
                }
            })
            .collect()
    }

    /// Smallest allowed gap, `safety * max(2 r, dalpha_c)`.
    pub fn required_gap(&self) -> T {
        self.safety * (T::lit(2.0) * self.fiber_radius).max(self.coincidence_width)
    }
}

/// Planes at `-pi/2 + pi (2n + 1) / 2N`.
pub fn equally_spaced<T: Real>(n: usize) -> Vec<T> {
    let nf = T::from_count(n);
    (0..n)
        .map(|i| -T::FRAC_PI_2() + T::PI() * T::from_count(2 * i + 1) / (T::lit(2.0) * nf))
        .collect()
}

/// Largest `N` whose equally spaced layout satisfies the gap constraints,
/// `N < pi / (safety max(2 r, dalpha_c))`.
pub fn max_feasible_planes<T: Real>(fiber_radius: T, coincidence_width: T, safety: T) -> usize {
    let unit = safety * (T::lit(2.0) * fiber_radius).max(coincidence_width);
    let bound = T::PI() / unit;
    let n = bound.ceil().to_usize().unwrap_or(usize::MAX).saturating_sub(1);
    // Equal spacing hits the bound exactly when pi/unit is an integer.
    if T::PI() / T::from_count(n.max(1)) > unit { n } else { n.saturating_sub(1) }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintCheck<T> {
    pub name: &'static str,
    pub passed: bool,
    /// Measured minus required; positive when satisfied.
    pub margin: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayoutReport<T> {
    pub planes: usize,
    pub feasible: bool,
    pub constraints: Vec<ConstraintCheck<T>>,
    pub gaps: Vec<T>,
    pub min_gap: T,
    pub required_gap: T,
    pub max_feasible_planes: usize,
    /// Largest fraction of the conditional ridge reaching a neighbouring fiber.
    pub max_overlap: T,
    /// Reserved: ideal collection is assumed.
    pub collection_efficiency: T,
    /// Reserved: ideal two-photon interference is assumed.
    pub hom_visibility: T,
}

impl<T: Real> LayoutReport<T> {
    pub fn first_violation(&self) -> Option<&'static str> {
        self.constraints.iter().find(|c| !c.passed).map(|c| c.name)
    }
}

/// Fraction of the conditional azimuthal Gaussian centred at `from` that
/// lands in a fiber of radius `r` centred at `to`.
pub fn channel_overlap<T: Real>(from: T, to: T, r: T, coincidence_width: T) -> T {
    let w = coincidence_width;
    let points = (T::lit(16.0) * r / w).ceil().to_usize().unwrap_or(256).clamp(256, 1 << 20);
    let norm = T::PI().sqrt() * w;
    midpoint(|a| (-((a - from) / w).powi(2)).exp(), to - r, to + r, points) / norm
}

pub fn validate_layout<T: Real>(layout: &ChannelLayout<T>) -> LayoutReport<T> {
    let mut constraints = Vec::new();
    let n = layout.len();
    constraints.push(ConstraintCheck {
        name: AT_LEAST_ONE_PLANE,
        passed: n >= 1,
        margin: T::from_count(n) - T::one(),
    });
    let ordered = layout.planes.windows(2).all(|w| w[1] > w[0])
        && layout.planes.iter().all(|a| *a > -T::FRAC_PI_2() && *a <= T::FRAC_PI_2());
    constraints.push(ConstraintCheck { name: PLANES_ORDERED, passed: ordered, margin: T::zero() });
    constraints.push(ConstraintCheck {
        name: FIBER_COVERS_RING,
        passed: layout.fiber_radius > layout.ring_thickness,
        margin: layout.fiber_radius - layout.ring_thickness,
    });
    let gaps = if ordered { layout.gaps() } else { Vec::new() };
    let min_gap = gaps.iter().copied().fold(T::infinity(), T::min);
    let min_gap = if gaps.is_empty() { T::zero() } else { min_gap };
    let fiber_req = layout.safety * T::lit(2.0) * layout.fiber_radius;
    let coinc_req = layout.safety * layout.coincidence_width;
    constraints.push(ConstraintCheck { name: GAP_EXCEEDS_FIBER, passed: min_gap > fiber_req, margin: min_gap - fiber_req });
    constraints.push(ConstraintCheck {
        name: GAP_EXCEEDS_COINCIDENCE,
        passed: min_gap > coinc_req,
        margin: min_gap - coinc_req,
    });
    let max_overlap = if ordered && n > 1 {
        gaps.iter()
            .map(|g| channel_overlap(T::zero(), *g, layout.fiber_radius, layout.coincidence_width))
            .fold(T::zero(), T::max)
    } else {
        T::zero()
    };
    LayoutReport {
        planes: n,
        feasible: constraints.iter().all(|c| c.passed),
        constraints,
        gaps,
        min_gap,
        required_gap: layout.required_gap(),
        max_feasible_planes: max_feasible_planes(layout.fiber_radius, layout.coincidence_width, layout.safety),
        max_overlap,
        collection_efficiency: T::one(),
        hom_visibility: T::one(),
    }
}

/// Per-plane geometry: index, azimuth, gap to the next plane and its margin.
pub fn write_layout_csv<W: Write, T: Real>(writer: W, layout: &ChannelLayout<T>) -> Result<()> {
    let gaps = layout.gaps();
    let required = layout.required_gap();
    write_csv(
        writer,
        &["plane", "alpha", "gap_to_next", "gap_margin"],
        layout.planes.iter().zip(&gaps).enumerate().map(|(i, (a, g))| {
            [i.to_string(), format_float(*a), format_float(*g), format_float(*g - required)]
        }),
    )
}
