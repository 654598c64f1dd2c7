use std::path::PathBuf;

use biphoton::multichannel::{
    build_state, equally_spaced, multichannel_entanglement, validate_layout, write_layout_csv, ChannelLayout,
};
use clap::Args;
use serde::Deserialize;
use serde_json::json;

use super::Context;
use crate::config::Format;
use crate::error::CliError;
use crate::output::json_bytes;

#[derive(Args, Debug)]
pub struct MultichannelArgs {
    /// Number of equally spaced planes
    #[arg(long, default_value_t = 4, conflicts_with = "layout")]
    pub planes: usize,
    /// JSON file with explicit plane azimuths: {"planes": [...], "fiber_radius": .., "safety": ..}
    #[arg(long)]
    pub layout: Option<PathBuf>,
    /// Angular fiber radius (rad); defaults to twice the ring thickness
    #[arg(long)]
    pub fiber_radius: Option<f64>,
    /// Factor by which plane gaps must exceed the fiber and coincidence widths (at least 3)
    #[arg(long)]
    pub safety: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutFile {
    planes: Vec<f64>,
    fiber_radius: Option<f64>,
    safety: Option<f64>,
}

fn load_layout(ctx: &Context, args: &MultichannelArgs) -> Result<ChannelLayout<f64>, CliError> {
    let scales = ctx.scales()?;
    match &args.layout {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            let file: LayoutFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Config(format!("layout {}: {e}", path.display())))?;
            let radius = args.fiber_radius.or(file.fiber_radius);
            let safety = args.safety.or(file.safety);
            Ok(ChannelLayout::for_scales(file.planes, &scales, radius, safety)?)
        }
        None => Ok(ChannelLayout::for_scales(equally_spaced(args.planes), &scales, args.fiber_radius, args.safety)?),
    }
}

pub fn run(ctx: &Context, args: &MultichannelArgs) -> Result<(), CliError> {
    if args.layout.is_none() && args.planes == 0 {
        return Err(CliError::Config("--planes must be at least 1".into()));
    }
    let layout = load_layout(ctx, args)?;
    let report = validate_layout(&layout);
    let state = build_state(&layout);
    let entanglement = state.as_ref().ok().map(multichannel_entanglement);
    let value = json!({
        "config": ctx.config,
        "layout": layout,
        "report": report,
        "entanglement": entanglement,
    });
    let mut layout_csv = Vec::new();
    write_layout_csv(&mut layout_csv, &layout)?;
    let report_bytes = json_bytes(&value)?;
    // The report is written even for an infeasible layout, then the violation is raised.
    if ctx.sink.to_stdout() {
        let bytes = match ctx.config.format {
            Format::Json => report_bytes,
            Format::Csv => layout_csv,
        };
        ctx.sink.emit("", &bytes, true)?;
    } else {
        ctx.sink.emit("multichannel.json", &report_bytes, true)?;
        ctx.sink.emit("layout.csv", &layout_csv, true)?;
    }
    state.map(|_| ()).map_err(CliError::from)
}
