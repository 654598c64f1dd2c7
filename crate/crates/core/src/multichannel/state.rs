//! Multichannel biphoton state before and after pairwise two-photon interference.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::entanglement::{entropy_bits, schmidt_number};

use super::layout::{validate_layout, ChannelLayout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Arm {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Channel<T> {
    pub plane: usize,
    pub arm: Arm,
    pub amplitude: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultichannelState<T> {
    pub planes: usize,
    /// One pair amplitude per plane before interference, each `1/sqrt(N)`.
    pub pre_interference: Vec<T>,
    /// Up and down output of every plane, `+-1/sqrt(2N)`.
    pub channels: Vec<Channel<T>>,
    /// Schmidt weights `1 / 2N`.
    pub weights: Vec<T>,
}

impl<T: Real> MultichannelState<T> {
    pub fn norm_squared(&self) -> T {
        crate::scalar::compensated_sum(self.channels.iter().map(|c| c.amplitude * c.amplitude))
    }
}

/// Builds the ideal state for a feasible layout.
pub fn build_state<T: Real>(layout: &ChannelLayout<T>) -> Result<MultichannelState<T>> {
    let report = validate_layout(layout);
    if let Some(name) = report.first_violation() {
        return Err(Error::InfeasibleLayout { constraint: name.to_string() });
    }
    Ok(state_for_planes(layout.len()))
}

/// The state for `n` ideal, non-overlapping planes.
pub fn state_for_planes<T: Real>(n: usize) -> MultichannelState<T> {
    let nf = T::from_count(n);
    let pair = T::one() / nf.sqrt();
    let out = T::one() / (T::lit(2.0) * nf).sqrt();
    let channels = (0..n)
        .flat_map(|plane| {
            [
                Channel { plane, arm: Arm::Up, amplitude: out },
                Channel { plane, arm: Arm::Down, amplitude: -out },
            ]
        })
        .collect();
    MultichannelState {
        planes: n,
        pre_interference: vec![pair; n],
        channels,
        weights: vec![T::one() / T::from_count(2 * n); 2 * n],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultichannelEntanglement<T> {
    #[serde(rename = "K")]
    pub k: T,
    #[serde(rename = "S_r")]
    pub entropy_bits: T,
    /// `2N`.
    pub k_closed_form: T,
    /// `1 + log2 N`.
    pub entropy_closed_form: T,
}

pub fn multichannel_entanglement<T: Real>(state: &MultichannelState<T>) -> MultichannelEntanglement<T> {
    let nf = T::from_count(state.planes);
    MultichannelEntanglement {
        k: schmidt_number(&state.weights),
        entropy_bits: entropy_bits(&state.weights),
        k_closed_form: T::lit(2.0) * nf,
        entropy_closed_form: T::one() + nf.log2(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multichannel::equally_spaced;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn single_plane() {
        let s = state_for_planes::<f64>(1);
        let amps: Vec<f64> = s.channels.iter().map(|c| c.amplitude).collect();
        assert!((amps[0] - FRAC_1_SQRT_2).abs() < 1e-15 && (amps[1] + FRAC_1_SQRT_2).abs() < 1e-15);
        let e = multichannel_entanglement(&s);
        assert_eq!((e.k, e.entropy_bits), (2.0, 1.0));
    }

    #[test]
    fn four_planes() {
        let s = state_for_planes::<f64>(4);
        assert_eq!(s.channels.len(), 8);
        assert!(s.channels.iter().all(|c| (c.amplitude.abs() - 8f64.sqrt().recip()).abs() < 1e-15));
        assert!(s.channels.iter().all(|c| (c.arm == Arm::Down) == (c.amplitude < 0.0)));
        let e = multichannel_entanglement(&s);
        assert!((e.k - 8.0).abs() < 1e-12 && (e.entropy_bits - 3.0).abs() < 1e-12);
    }

    #[test]
    fn three_planes_entropy() {
        let e = multichannel_entanglement(&state_for_planes::<f64>(3));
        assert!((e.entropy_bits - (1.0 + 3f64.log2())).abs() < 1e-12);
        assert!((e.k - 6.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_layout_is_an_error() {
        let l = ChannelLayout::new(vec![0.0f64, 0.001], 1e-4, 5e-5, 1e-3, 3.0).unwrap();
        assert!(matches!(build_state(&l), Err(Error::InfeasibleLayout { .. })));
        let ok = ChannelLayout::new(equally_spaced(4), 1e-4, 5e-5, 1e-3, 3.0).unwrap();
        let s: MultichannelState<f64> = build_state(&ok).unwrap();
        assert!((s.norm_squared() - 1.0).abs() < 1e-15);
        assert!(s.pre_interference.iter().all(|a| (a - 0.5).abs() < 1e-15));
    }
}
