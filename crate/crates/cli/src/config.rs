//! Run configuration: a flat `key = value` file with unit-suffixed numbers,
//! overridden by command-line flags.
//!
//! ```text
//! # comment
//! lambda_p = 0.4047um
//! phi0 = 0.7rad
//! L = 0.5cm
//! w = 1464um
//! crystal = BBO
//! ```
//!
//! Lengths accept `nm`, `um` (also `µm`, `μm`), `mm`, `cm` and `m` and default
//! to micrometres; angles accept `rad`, `mrad` and `deg` and default to radians.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    /// Pump wavelength, um.
    pub lambda_p: f64,
    /// Optic-axis tilt, rad.
    pub phi0: f64,
    /// Crystal length, um.
    pub length: f64,
    /// Pump waist, um.
    pub waist: f64,
    /// Built-in crystal name or path to a crystal file.
    pub crystal: String,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub grid: Option<usize>,
    pub walkoff: bool,
    pub exact_paper_constants: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            lambda_p: 0.4047,
            phi0: 0.7,
            length: 5000.0,
            waist: 1464.0,
            crystal: "BBO".into(),
            out: None,
            format: Format::Csv,
            grid: None,
            walkoff: true,
            exact_paper_constants: false,
        }
    }
}

fn split_number(text: &str) -> (&str, &str) {
    let end = text
        .char_indices()
        .find(|(i, c)| {
            !(c.is_ascii_digit() || *c == '.' || *c == '+' || *c == '-' || *c == 'e' || *c == 'E')
                || ((*c == 'e' || *c == 'E') && !text[i + 1..].starts_with(|n: char| n.is_ascii_digit() || n == '-' || n == '+'))
        })
        .map(|(i, _)| i)
        .unwrap_or(text.len());
    (text[..end].trim(), text[end..].trim())
}

fn parse_number(key: &str, text: &str) -> Result<(f64, String), CliError> {
    let (num, unit) = split_number(text.trim());
    let value: f64 = num
        .parse()
        .map_err(|_| CliError::Config(format!("`{key}`: cannot parse number from `{text}`")))?;
    if !value.is_finite() {
        return Err(CliError::Config(format!("`{key}`: value must be finite")));
    }
    Ok((value, unit.to_string()))
}

/// Length in micrometres.
pub fn parse_length(key: &str, text: &str) -> Result<f64, CliError> {
    let (v, unit) = parse_number(key, text)?;
    let scale = match unit.as_str() {
        "" | "um" | "µm" | "μm" => 1.0,
        "nm" => 1e-3,
        "mm" => 1e3,
        "cm" => 1e4,
        "m" => 1e6,
        other => return Err(CliError::Config(format!("`{key}`: unknown length unit `{other}`"))),
    };
    Ok(v * scale)
}

/// Angle in radians.
pub fn parse_angle(key: &str, text: &str) -> Result<f64, CliError> {
    let (v, unit) = parse_number(key, text)?;
    let scale = match unit.as_str() {
        "" | "rad" => 1.0,
        "mrad" => 1e-3,
        "deg" => std::f64::consts::PI / 180.0,
        other => return Err(CliError::Config(format!("`{key}`: unknown angle unit `{other}`"))),
    };
    Ok(v * scale)
}

fn parse_bool(key: &str, text: &str) -> Result<bool, CliError> {
    match text.trim().to_ascii_lowercase().as_str() {
        "true" | "on" | "yes" | "1" => Ok(true),
        "false" | "off" | "no" | "0" => Ok(false),
        _ => Err(CliError::Config(format!("`{key}`: expected a boolean, got `{text}`"))),
    }
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let value = value.trim();
        match key {
            "lambda_p" | "wavelength" => self.lambda_p = parse_length(key, value)?,
            "phi0" => self.phi0 = parse_angle(key, value)?,
            "L" | "length" => self.length = parse_length(key, value)?,
            "w" | "waist" => self.waist = parse_length(key, value)?,
            "crystal" => self.crystal = value.to_string(),
            "out" | "output" => self.out = Some(PathBuf::from(value)),
            "format" => {
                self.format = Format::from_str(value, true)
                    .map_err(|_| CliError::Config(format!("`format`: expected csv or json, got `{value}`")))?
            }
            "grid" => {
                self.grid = Some(
                    value
                        .parse()
                        .map_err(|_| CliError::Config(format!("`grid`: expected a point count, got `{value}`")))?,
                )
            }
            "walkoff" | "include_walkoff" => self.walkoff = parse_bool(key, value)?,
            "exact_paper_constants" => self.exact_paper_constants = parse_bool(key, value)?,
            other => return Err(CliError::Config(format!("unknown configuration key `{other}`"))),
        }
        Ok(())
    }

    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", n + 1)))?;
            self.set(key.trim(), value)
                .map_err(|e| CliError::Config(format!("line {}: {}", n + 1, e.message())))?;
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        let mut config = RunConfig::default();
        config.apply_text(&text)?;
        Ok(config)
    }
}
