use biphoton::entanglement::{
    azimuthal_widths, coefficient_check, double_gaussian, double_gaussian_feature_width, k_closed_form, oam_spectrum,
    schmidt_analytic, schmidt_numeric, GridSpec, SchmidtSpectrum,
};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use super::Context;
use crate::error::CliError;
use crate::output::{json_bytes, Table};

/// Largest kernel matrix side the numeric method will decompose.
pub const MAX_SVD_POINTS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchmidtMethod {
    Analytic,
    Numeric,
    Oam,
}

#[derive(Args, Debug)]
pub struct SchmidtArgs {
    #[arg(long, value_enum, default_value_t = SchmidtMethod::Analytic)]
    pub method: SchmidtMethod,
    /// Width ratio a/b of the double Gaussian, replacing the configured widths
    #[arg(long)]
    pub ratio: Option<f64>,
    /// Minimum number of analytic modes; more are added until the tail drops below 1e-9
    #[arg(long, default_value_t = 0)]
    pub n_max: usize,
    /// Highest OAM index kept; chosen from the truncation target when omitted
    #[arg(long)]
    pub l_max: Option<usize>,
}

fn widths(ctx: &Context, args: &SchmidtArgs) -> Result<(f64, f64), CliError> {
    match args.ratio {
        Some(r) if r > 0.0 && r.is_finite() => Ok((r, 1.0)),
        Some(r) => Err(CliError::Config(format!("--ratio must be positive, got {r}"))),
        None => {
            let s = ctx.scales()?;
            Ok((s.a, s.b))
        }
    }
}

fn numeric(ctx: &Context, a: f64, b: f64) -> Result<(SchmidtSpectrum<f64>, Value), CliError> {
    let auto = GridSpec::for_double_gaussian(a, b, 1.0)?;
    let grid = match ctx.config.grid {
        Some(n) => GridSpec::new(auto.lo, auto.hi, n)?,
        None => auto,
    };
    let width = double_gaussian_feature_width(a, b);
    grid.check_resolution(width)?;
    if grid.points > MAX_SVD_POINTS {
        return Err(biphoton::Error::Resolution {
            what: format!("kernel SVD at a/b = {} (limit {MAX_SVD_POINTS} points)", a / b),
            required: grid.points,
            actual: MAX_SVD_POINTS,
        }
        .into());
    }
    let spectrum = schmidt_numeric(|x, y| double_gaussian(a, b, x, y), &grid, width)?
        .with_closed_form_k(k_closed_form(a, b));
    let extras = json!({ "grid": { "lo": grid.lo, "hi": grid.hi, "points": grid.points } });
    Ok((spectrum, extras))
}

pub fn compute(ctx: &Context, args: &SchmidtArgs) -> Result<(SchmidtSpectrum<f64>, Value), CliError> {
    match args.method {
        SchmidtMethod::Analytic => {
            let (a, b) = widths(ctx, args)?;
            Ok((schmidt_analytic(a, b, args.n_max)?, json!({ "a": a, "b": b })))
        }
        SchmidtMethod::Numeric => {
            let (a, b) = widths(ctx, args)?;
            let (s, mut extras) = numeric(ctx, a, b)?;
            extras["a"] = json!(a);
            extras["b"] = json!(b);
            Ok((s, extras))
        }
        SchmidtMethod::Oam => {
            let dist = azimuthal_widths(&ctx.scales()?);
            let oam = oam_spectrum(&dist, args.l_max)?;
            let check = coefficient_check(&dist, None)?;
            let extras = json!({
                "coincidence_width": dist.coincidence_width,
                "l_max": oam.l_max,
                "K_closed_form": oam.closed_form_k,
                "K_continuum": oam.continuum_k,
                "K_doubled_sum": oam.doubled_sum_k,
                "coefficient_check": {
                    "l_max": check.ratios.len() - 1,
                    "max_relative_deviation": check.max_relative_deviation,
                },
            });
            Ok((oam.spectrum, extras))
        }
    }
}

pub fn run(ctx: &Context, args: &SchmidtArgs) -> Result<(), CliError> {
    let (spectrum, extras) = compute(ctx, args)?;
    let mut summary = serde_json::to_value(spectrum.summary())?;
    summary["config"] = serde_json::to_value(&ctx.config)?;
    summary["details"] = extras;
    let name = match args.method {
        SchmidtMethod::Analytic => "analytic",
        SchmidtMethod::Numeric => "numeric",
        SchmidtMethod::Oam => "oam",
    };
    let table = Table {
        header: vec!["index", "weight"],
        rows: spectrum.weights.iter().enumerate().map(|(i, w)| vec![i as f64, *w]).collect(),
    };
    let summary_bytes = json_bytes(&summary)?;
    if ctx.sink.to_stdout() {
        // One stream only: the summary for JSON, the spectrum for CSV.
        return match ctx.config.format {
            crate::config::Format::Json => ctx.sink.emit("", &summary_bytes, true),
            crate::config::Format::Csv => ctx.sink.emit("", &table.render(crate::config::Format::Csv)?, true),
        };
    }
    ctx.sink.emit(&format!("spectrum_{name}.csv"), &table.render(crate::config::Format::Csv)?, true)?;
    ctx.sink.emit(&format!("summary_{name}.json"), &summary_bytes, true)
}
