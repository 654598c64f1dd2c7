use biphoton::amplitude::{validity_report, AngularWindow};
use biphoton::crystal::collinear_threshold;
use biphoton::entanglement::{azimuthal_widths, k_approximate, k_closed_form, oam_spectrum, r_parameter};
use biphoton::export::format_float;
use serde_json::{json, Value};

use super::Context;
use crate::config::Format;
use crate::error::CliError;
use crate::output::{extension, json_bytes};

pub fn report(ctx: &Context) -> Result<Value, CliError> {
    let crystal = &ctx.experiment.crystal;
    let lp = ctx.config.lambda_p;
    let scales = ctx.scales()?;
    let (phi_lo, phi_hi) = collinear_threshold(crystal, lp)?;
    let dist = azimuthal_widths(&scales);
    // The OAM estimates only exist in their regime; report null outside it.
    let oam = oam_spectrum(&dist, None).ok();
    Ok(json!({
        "config": ctx.config,
        "crystal": {
            "name": crystal.name(),
            "provenance": crystal.provenance(),
            "validity_um": crystal.validity_range(),
            "n_o_pump": crystal.ordinary_index(lp)?,
            "n_e_pump": crystal.extraordinary_index(lp)?,
            "n_o_signal": scales.n_o,
        },
        "noncollinear_window": { "phi0_min": phi_lo, "phi0_max": phi_hi },
        "scales": scales,
        "theta0_deg": scales.theta0.to_degrees(),
        "coincidence_width": scales.coincidence_width(),
        "ring_thickness": scales.ring_thickness(),
        "rayleigh_range_um": scales.rayleigh_range(),
        "window": AngularWindow::around_cone(&scales),
        "validity": validity_report(&scales)?,
        "azimuthal": {
            "coincidence_width": dist.coincidence_width,
            "single_width": dist.single_width,
            "R": r_parameter(&dist),
        },
        "schmidt": {
            "K_closed_form": k_closed_form(scales.a, scales.b),
            "K_approximate": k_approximate(scales.a, scales.b),
            "K_oam_closed_form": oam.as_ref().map(|o| o.closed_form_k),
            "K_oam_continuum": oam.as_ref().map(|o| o.continuum_k),
        },
        "gauss_coefficient": ctx.gauss_coefficient(),
        "walkoff": ctx.config.walkoff,
    }))
}

/// Flattens nested objects into dotted `key,value` rows.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<[String; 2]>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| flatten(&key(&i.to_string()), v, out)),
        Value::Number(n) => out.push([prefix.to_string(), n.as_f64().map(format_float).unwrap_or_else(|| n.to_string())]),
        Value::String(s) => out.push([prefix.to_string(), s.clone()]),
        Value::Bool(b) => out.push([prefix.to_string(), b.to_string()]),
        Value::Null => out.push([prefix.to_string(), String::new()]),
    }
}

pub fn run(ctx: &Context) -> Result<(), CliError> {
    let value = report(ctx)?;
    let bytes = match ctx.config.format {
        Format::Json => json_bytes(&value)?,
        Format::Csv => {
            let mut rows = Vec::new();
            flatten("", &value, &mut rows);
            let mut buf = Vec::new();
            biphoton::export::write_csv(&mut buf, &["key", "value"], rows)?;
            buf
        }
    };
    ctx.sink.emit(&format!("params.{}", extension(ctx.config.format)), &bytes, true)
}
