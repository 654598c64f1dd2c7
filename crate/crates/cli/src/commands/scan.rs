use biphoton::amplitude::{sinc_gauss_fit, MIN_FIT_POINTS, SINC_GAUSS_COEFFICIENT};
use biphoton::crystal::{index_mismatch, pump_index_derivative};
use biphoton::numerics::sinc;
use clap::{Args, ValueEnum};
use std::f64::consts::PI;

use super::Context;
use crate::error::CliError;
use crate::output::{extension, json_bytes, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// `n_p(phi0) - n_o(2 lambda_p)` against the optic-axis tilt
    NpMinusNo,
    /// `dn_p/dphi_p` at normal pump incidence against the pump azimuth
    Walkoff,
    /// `sinc^2(x)` next to its Gaussian replacement
    Sincfit,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    /// Start of the scanned range
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<f64>,
    /// End of the scanned range
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<f64>,
    /// Number of samples, including both ends
    #[arg(long, default_value_t = 201)]
    pub points: usize,
}

fn axis(from: f64, to: f64, points: usize) -> Result<Vec<f64>, CliError> {
    if points < 2 || to.partial_cmp(&from) != Some(std::cmp::Ordering::Greater) {
        return Err(CliError::Config(format!(
            "scan needs --points >= 2 and --to > --from, got {points} points on [{from}, {to}]"
        )));
    }
    Ok((0..points).map(|i| from + (to - from) * i as f64 / (points - 1) as f64).collect())
}

pub fn table(ctx: &Context, args: &ScanArgs) -> Result<Table, CliError> {
    let crystal = &ctx.experiment.crystal;
    let lp = ctx.config.lambda_p;
    let (lo, hi) = match args.quantity {
        Quantity::NpMinusNo | Quantity::Walkoff => (0.0, PI),
        Quantity::Sincfit => (-6.0, 6.0),
    };
    let xs = axis(args.from.unwrap_or(lo), args.to.unwrap_or(hi), args.points)?;
    let mut rows = Vec::with_capacity(xs.len());
    let header = match args.quantity {
        Quantity::NpMinusNo => {
            for x in xs {
                rows.push(vec![x, index_mismatch(crystal, lp, x)?]);
            }
            vec!["phi0", "np_minus_no"]
        }
        Quantity::Walkoff => {
            for x in xs {
                rows.push(vec![x, pump_index_derivative(crystal, lp, x, ctx.config.phi0)?]);
            }
            vec!["alpha_p", "dnp_dphip"]
        }
        Quantity::Sincfit => {
            let c = SINC_GAUSS_COEFFICIENT;
            for x in xs {
                let s: f64 = sinc(x);
                rows.push(vec![x, s * s, (-c * x * x).exp()]);
            }
            vec!["x", "sinc_squared", "gaussian"]
        }
    };
    Ok(Table { header, rows })
}

pub fn run(ctx: &Context, args: &ScanArgs) -> Result<(), CliError> {
    let name = match args.quantity {
        Quantity::NpMinusNo => "np_minus_no",
        Quantity::Walkoff => "walkoff",
        Quantity::Sincfit => "sincfit",
    };
    let table = table(ctx, args)?;
    let bytes = table.render(ctx.config.format)?;
    ctx.sink.emit(&format!("scan_{name}.{}", extension(ctx.config.format)), &bytes, true)?;
    if args.quantity == Quantity::Sincfit {
        // Least-squares coefficient over the scanned range, for comparison with the fixed one.
        let half_range = table.rows.iter().map(|r| r[0].abs()).fold(0.0, f64::max);
        let fit = sinc_gauss_fit(half_range, args.points.max(MIN_FIT_POINTS))?;
        let max_deviation = table.rows.iter().map(|r| (r[1] - r[2]).abs()).fold(0.0, f64::max);
        let summary = serde_json::json!({
            "coefficient": SINC_GAUSS_COEFFICIENT,
            "max_deviation": max_deviation,
            "least_squares_fit": fit,
        });
        ctx.sink.emit("scan_sincfit_fit.json", &json_bytes(&summary)?, false)?;
    }
    Ok(())
}
