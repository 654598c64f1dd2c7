use biphoton::amplitude::{density_grid, AmplitudeMode, AngularGrid, AngularWindow};
use biphoton::entanglement::{azimuthal_widths, DENSITY_POINTS_PER_WIDTH};
use clap::{Args, ValueEnum};

use super::Context;
use crate::error::CliError;
use crate::output::{extension, Table};

/// Largest automatically chosen axis length for the azimuthal map.
pub const MAX_AUTO_POINTS: usize = 2001;
/// Default points per axis of the four-dimensional grid.
pub const DEFAULT_JOINT_POINTS: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Full,
    NoWalkoff,
    DoubleGaussian,
}

impl From<Mode> for AmplitudeMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Full => AmplitudeMode::Full,
            Mode::NoWalkoff => AmplitudeMode::NoWalkOff,
            Mode::DoubleGaussian => AmplitudeMode::DoubleGaussian,
        }
    }
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    /// Half-span of both azimuth axes (rad); the full pi/2 needs ~4 points per coincidence width
    #[arg(long)]
    pub span: Option<f64>,
    /// Sample the four-dimensional (theta1, theta2, alpha1, alpha2) density instead
    #[arg(long)]
    pub joint: bool,
    /// Amplitude model for --joint
    #[arg(long, value_enum, default_value_t = Mode::DoubleGaussian)]
    pub mode: Mode,
    /// Mean azimuth of the --joint grid (rad)
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha0: f64,
}

fn azimuthal_table(ctx: &Context, args: &DensityArgs) -> Result<Table, CliError> {
    let dist = azimuthal_widths(&ctx.scales()?);
    let w = dist.coincidence_width;
    let span = args.span.unwrap_or(std::f64::consts::FRAC_PI_2);
    if !(span > 0.0 && span.is_finite()) {
        return Err(CliError::Config(format!("--span must be positive, got {span}")));
    }
    let points = match ctx.config.grid {
        Some(n) => n,
        None => {
            let step = w / DENSITY_POINTS_PER_WIDTH as f64;
            let required = (2.0 * span / step).ceil() as usize + 1;
            if required > MAX_AUTO_POINTS {
                return Err(biphoton::Error::Resolution {
                    what: format!("azimuthal density over +-{span} rad (pass --grid or a smaller --span)"),
                    required,
                    actual: MAX_AUTO_POINTS,
                }
                .into());
            }
            required
        }
    };
    let map = dist.density_map(-span, span, points)?;
    let n = map.axis.len();
    let rows = map.values.iter().enumerate().map(|(k, v)| vec![map.axis[k / n], map.axis[k % n], *v]).collect();
    Ok(Table { header: vec!["alpha1", "alpha2", "density"], rows })
}

fn joint_table(ctx: &Context, args: &DensityArgs) -> Result<Table, CliError> {
    let model = ctx.model(args.mode.into())?;
    let n = ctx.config.grid.unwrap_or(DEFAULT_JOINT_POINTS);
    if n < 2 {
        return Err(CliError::Config(format!("--grid must be at least 2 for --joint, got {n}")));
    }
    let window = AngularWindow::around_cone(&model.scales);
    let grid = AngularGrid::from_window(&window, args.alpha0, n, n);
    let rows = density_grid(&model, &grid)
        .into_iter()
        .map(|s| vec![s.pair.theta1, s.pair.theta2, s.pair.alpha1, s.pair.alpha2, s.value])
        .collect();
    Ok(Table { header: biphoton::amplitude::GRID_CSV_HEADER.to_vec(), rows })
}

pub fn run(ctx: &Context, args: &DensityArgs) -> Result<(), CliError> {
    let (table, name) = if args.joint {
        (joint_table(ctx, args)?, "joint_density")
    } else {
        (azimuthal_table(ctx, args)?, "azimuthal_density")
    };
    let bytes = table.render(ctx.config.format)?;
    ctx.sink.emit(&format!("{name}.{}", extension(ctx.config.format)), &bytes, true)
}
