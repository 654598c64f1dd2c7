//! Dispersion data for uniaxial crystals.
//!
//! Crystal files are TOML with named coefficient tables:
//!
//! ```toml
//! format_version = 1
//! name = "BBO"
//! provenance = "free text"
//! validity_um = [0.22, 1.06]
//! [ordinary]
//! a = 2.7359
//! b = 0.01878
//! c = 0.01822
//! d = 0.01354
//! [extraordinary]
//! # same fields
//! ```
//!
//! Both waves use `n^2 = a + b / (lambda^2 - c) - d lambda^2` with lambda in micrometres.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

const BUILTIN_BBO: &str = include_str!("../../data/bbo.toml");
const SUPPORTED_FORMAT: u32 = 1;

/// Coefficients of one dispersion polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SellmeierTerms<T> {
    /// Dimensionless constant term.
    pub a: T,
    /// Pole strength, um^2.
    pub b: T,
    /// Pole position, um^2.
    pub c: T,
    /// Infrared correction, um^-2.
    pub d: T,
}

impl<T: Real> SellmeierTerms<T> {
    fn index_squared(&self, lambda_um: T) -> T {
        let l2 = lambda_um * lambda_um;
        self.a + self.b / (l2 - self.c) - self.d * l2
    }

    fn cast(raw: SellmeierTerms<f64>) -> Self {
        SellmeierTerms { a: T::lit(raw.a), b: T::lit(raw.b), c: T::lit(raw.c), d: T::lit(raw.d) }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrystalFile {
    format_version: u32,
    name: String,
    provenance: String,
    validity_um: [f64; 2],
    ordinary: SellmeierTerms<f64>,
    extraordinary: SellmeierTerms<f64>,
}

/// Ordinary and extraordinary dispersion of a uniaxial crystal. Immutable
/// once loaded.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SellmeierSet<T> {
    name: String,
    provenance: String,
    ordinary: SellmeierTerms<T>,
    extraordinary: SellmeierTerms<T>,
    validity: (T, T),
}

impl<T: Real> SellmeierSet<T> {
    pub fn new(
        name: impl Into<String>,
        provenance: impl Into<String>,
        ordinary: SellmeierTerms<T>,
        extraordinary: SellmeierTerms<T>,
        validity: (T, T),
    ) -> Result<Self> {
        let (lo, hi) = validity;
        if !(lo > T::zero() && hi > lo && hi.is_finite()) {
            return Err(Error::CrystalData(format!(
                "validity range [{lo}, {hi}] um must be positive and increasing"
            )));
        }
        let set = SellmeierSet {
            name: name.into(),
            provenance: provenance.into(),
            ordinary,
            extraordinary,
            validity,
        };
        set.validate()?;
        Ok(set)
    }

    /// The shipped default dataset.
    pub fn bbo() -> Self {
        Self::from_toml_str(BUILTIN_BBO).expect("built-in BBO data is valid")
    }

    /// Resolves a built-in name (`"BBO"`, case-insensitive) or a file path.
    pub fn load(name_or_path: &str) -> Result<Self> {
        if name_or_path.eq_ignore_ascii_case("bbo") {
            return Ok(Self::bbo());
        }
        Self::from_path(name_or_path)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::CrystalData(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: CrystalFile =
            toml::from_str(text).map_err(|e| Error::CrystalData(e.to_string()))?;
        if raw.format_version != SUPPORTED_FORMAT {
            return Err(Error::CrystalData(format!(
                "unsupported format_version {} (expected {SUPPORTED_FORMAT})",
                raw.format_version
            )));
        }
        Self::new(
            raw.name,
            raw.provenance,
            SellmeierTerms::cast(raw.ordinary),
            SellmeierTerms::cast(raw.extraordinary),
            (T::lit(raw.validity_um[0]), T::lit(raw.validity_um[1])),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn validity_range(&self) -> (T, T) {
        self.validity
    }

    pub fn contains(&self, lambda_um: T) -> bool {
        lambda_um >= self.validity.0 && lambda_um <= self.validity.1
    }

    pub fn check_wavelength(&self, lambda_um: T) -> Result<()> {
        if self.contains(lambda_um) {
            Ok(())
        } else {
            Err(Error::WavelengthOutOfRange {
                wavelength: lambda_um.as_f64(),
                min: self.validity.0.as_f64(),
                max: self.validity.1.as_f64(),
            })
        }
    }

    /// Ordinary-wave index `n_o(lambda)`.
    pub fn ordinary_index(&self, lambda_um: T) -> Result<T> {
        self.check_wavelength(lambda_um)?;
        Ok(self.ordinary.index_squared(lambda_um).sqrt())
    }

    /// Principal extraordinary index `n_e(lambda)` (propagation normal to the optic axis).
    pub fn extraordinary_index(&self, lambda_um: T) -> Result<T> {
        self.check_wavelength(lambda_um)?;
        Ok(self.extraordinary.index_squared(lambda_um).sqrt())
    }

    /// Checks that both indices are real and above 1 and that the crystal is
    /// negative uniaxial across the validity range.
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.validity;
        let samples = 256;
        for i in 0..=samples {
            let lambda = lo + (hi - lo) * T::from_count(i) / T::from_count(samples);
            let no2 = self.ordinary.index_squared(lambda);
            let ne2 = self.extraordinary.index_squared(lambda);
            if !(no2 > T::one() && ne2 > T::one()) || !no2.is_finite() || !ne2.is_finite() {
                return Err(Error::CrystalData(format!(
                    "{}: index not real and > 1 at {lambda} um",
                    self.name
                )));
            }
            if ne2 >= no2 {
                return Err(Error::CrystalData(format!(
                    "{}: n_e >= n_o at {lambda} um; only negative uniaxial crystals are supported",
                    self.name
                )));
            }
        }
        Ok(())
    }
}
