//! Schmidt spectra and the entanglement measures derived from them.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::export::{format_float, write_csv};
use crate::scalar::{compensated_sum, Real};

/// Largest number of stored modes before a spectrum is marked as capped.
pub const MAX_MODES: usize = 1_000_000;
/// Target trailing mass for automatically sized spectra.
pub const TRUNCATION_TARGET: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    AnalyticDg,
    NumericSvd,
    Oam,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Cos,
    Sin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeLabel {
    Index(usize),
    Oam { l: usize, parity: Parity },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Truncation<T> {
    pub modes: usize,
    /// Probability mass not represented by the stored weights.
    pub residual: T,
    /// Set when the mode cap stopped the extension before the target residual.
    pub capped: bool,
}

/// Ordered Schmidt weights with their Schmidt number and entropy.
///
/// Weights are stored normalized to the full (untruncated) spectrum, so they
/// sum to `1 - truncation.residual`. OAM spectra store `(0, cos)` first and
/// then `(l, cos), (l, sin)` for `l = 1, 2, ...`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchmidtSpectrum<T> {
    pub method: Method,
    pub weights: Vec<T>,
    /// `1 / sum(lambda^2)` over the stored weights.
    pub k: T,
    /// `-sum(lambda log2 lambda)` over the stored weights, in bits.
    pub entropy_bits: T,
    pub truncation: Truncation<T>,
    /// Closed-form Schmidt number, when the method has one.
    pub closed_form_k: Option<T>,
}

impl<T: Real> SchmidtSpectrum<T> {
    pub fn from_weights(method: Method, weights: Vec<T>, residual: T, capped: bool) -> Self {
        let k = schmidt_number(&weights);
        let entropy_bits = entropy_bits(&weights);
        let modes = weights.len();
        SchmidtSpectrum {
            method,
            weights,
            k,
            entropy_bits,
            truncation: Truncation { modes, residual, capped },
            closed_form_k: None,
        }
    }

    pub fn with_closed_form_k(mut self, k: T) -> Self {
        self.closed_form_k = Some(k);
        self
    }

    pub fn weight_sum(&self) -> T {
        compensated_sum(self.weights.iter().copied())
    }

    pub fn purity(&self) -> T {
        compensated_sum(self.weights.iter().map(|w| *w * *w))
    }

    pub fn label(&self, index: usize) -> ModeLabel {
        match self.method {
            Method::Oam => oam_label(index),
            _ => ModeLabel::Index(index),
        }
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        write_csv(
            writer,
            &["index", "weight"],
            self.weights.iter().enumerate().map(|(i, w)| [i.to_string(), format_float(*w)]),
        )
    }

    pub fn summary(&self) -> SpectrumSummary<T> {
        SpectrumSummary {
            method: self.method,
            k: self.k,
            s_r: self.entropy_bits,
            residual: self.truncation.residual,
            modes: self.truncation.modes,
            capped: self.truncation.capped,
            closed_form_k: self.closed_form_k,
        }
    }
}

/// Machine-readable digest of a spectrum, without the weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumSummary<T> {
    pub method: Method,
    #[serde(rename = "K")]
    pub k: T,
    #[serde(rename = "S_r")]
    pub s_r: T,
    pub residual: T,
    pub modes: usize,
    pub capped: bool,
    pub closed_form_k: Option<T>,
}

/// Storage index of OAM modes: 0 is `(0, cos)`, `2l - 1` is `(l, cos)`, `2l` is `(l, sin)`.
pub fn oam_label(index: usize) -> ModeLabel {
    if index == 0 {
        return ModeLabel::Oam { l: 0, parity: Parity::Cos };
    }
    let l = index.div_ceil(2);
    let parity = if index % 2 == 1 { Parity::Cos } else { Parity::Sin };
    ModeLabel::Oam { l, parity }
}

pub fn schmidt_number<T: Real>(weights: &[T]) -> T {
    T::one() / compensated_sum(weights.iter().map(|w| *w * *w))
}

pub fn entropy_bits<T: Real>(weights: &[T]) -> T {
    -compensated_sum(weights.iter().filter(|w| **w > T::zero()).map(|w| *w * w.log2()))
}
