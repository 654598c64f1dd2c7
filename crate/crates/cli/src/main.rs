//! `biphoton`: command-line front end for the azimuthal biphoton library.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Context;
use config::{parse_angle, parse_length, Format, RunConfig};
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "biphoton", version, about = "Azimuthal entanglement of type-I SPDC biphotons")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Configuration file of `key = value` lines
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory; results go to stdout when omitted
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for tables and reports
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Grid points per axis (command specific)
    #[arg(long, global = true)]
    grid: Option<usize>,

    /// Keep the walk-off term in the amplitude
    #[arg(long, global = true, overrides_with = "no_walkoff")]
    walkoff: bool,

    /// Drop the walk-off term from the amplitude
    #[arg(long, global = true)]
    no_walkoff: bool,

    /// Use the printed 0.395 density constant instead of the fitted 0.359
    #[arg(long, global = true)]
    exact_paper_constants: bool,

    /// Pump wavelength, e.g. `0.4047um` or `404.7nm`
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda_p: Option<String>,

    /// Optic-axis tilt, e.g. `0.7rad` or `40deg`
    #[arg(long, global = true, allow_hyphen_values = true)]
    phi0: Option<String>,

    /// Crystal length, e.g. `0.5cm`
    #[arg(long, global = true, allow_hyphen_values = true)]
    length: Option<String>,

    /// Pump waist, e.g. `1464um`
    #[arg(long, global = true, allow_hyphen_values = true)]
    waist: Option<String>,

    /// Built-in crystal name (BBO) or path to a crystal TOML file
    #[arg(long, global = true)]
    crystal: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print derived scales, regime window and validity checks
    Params,
    /// One-dimensional scans of crystal and model quantities
    Scan(commands::scan::ScanArgs),
    /// Azimuthal coincidence density on a square grid
    Density(commands::density::DensityArgs),
    /// Schmidt spectrum of the azimuthal amplitude
    Schmidt(commands::schmidt::SchmidtArgs),
    /// Validate a multichannel layout and report its entanglement
    Multichannel(commands::multichannel::MultichannelArgs),
}

impl GlobalArgs {
    fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut config = match &self.config {
            Some(path) => RunConfig::from_file(path)?,
            None => RunConfig::default(),
        };
        if let Some(v) = &self.lambda_p {
            config.lambda_p = parse_length("lambda_p", v)?;
        }
        if let Some(v) = &self.phi0 {
            config.phi0 = parse_angle("phi0", v)?;
        }
        if let Some(v) = &self.length {
            config.length = parse_length("length", v)?;
        }
        if let Some(v) = &self.waist {
            config.waist = parse_length("waist", v)?;
        }
        if let Some(v) = &self.crystal {
            config.crystal = v.clone();
        }
        if let Some(v) = &self.out {
            config.out = Some(v.clone());
        }
        if let Some(v) = self.format {
            config.format = v;
        }
        if let Some(v) = self.grid {
            config.grid = Some(v);
        }
        if self.walkoff {
            config.walkoff = true;
        }
        if self.no_walkoff {
            config.walkoff = false;
        }
        if self.exact_paper_constants {
            config.exact_paper_constants = true;
        }
        Ok(config)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = Context::new(cli.global.resolve()?)?;
    match cli.command {
        Command::Params => commands::params::run(&ctx),
        Command::Scan(args) => commands::scan::run(&ctx, &args),
        Command::Density(args) => commands::density::run(&ctx, &args),
        Command::Schmidt(args) => commands::schmidt::run(&ctx, &args),
        Command::Multichannel(args) => commands::multichannel::run(&ctx, &args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(error::exit::SUCCESS),
        Err(e) => {
            eprintln!("biphoton: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
