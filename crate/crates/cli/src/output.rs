//! Where command results go: files under `--out`, or standard output.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use biphoton::export::{format_float, write_csv};
use serde::Serialize;

use crate::config::Format;
use crate::error::CliError;

/// A numeric table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        let mut buf = Vec::new();
        match format {
            Format::Csv => write_csv(&mut buf, &self.header, self.rows.iter().map(|r| r.iter().map(|v| format_float(*v))))?,
            Format::Json => {
                let objects: Vec<serde_json::Map<String, serde_json::Value>> = self
                    .rows
                    .iter()
                    .map(|r| self.header.iter().map(|h| h.to_string()).zip(r.iter().map(|v| serde_json::json!(v))).collect())
                    .collect();
                serde_json::to_writer_pretty(&mut buf, &objects)?;
                buf.push(b'\n');
            }
        }
        Ok(buf)
    }
}

pub fn json_bytes<S: Serialize>(value: &S) -> Result<Vec<u8>, CliError> {
    let mut buf = serde_json::to_vec_pretty(value)?;
    buf.push(b'\n');
    Ok(buf)
}

pub fn extension(format: Format) -> &'static str {
    match format {
        Format::Csv => "csv",
        Format::Json => "json",
    }
}

pub struct Sink {
    dir: Option<PathBuf>,
}

impl Sink {
    pub fn new(dir: Option<PathBuf>) -> Result<Self, CliError> {
        if let Some(d) = &dir {
            fs::create_dir_all(d)?;
        }
        Ok(Sink { dir })
    }

    pub fn to_stdout(&self) -> bool {
        self.dir.is_none()
    }

    /// Writes `name` under the output directory, or to stdout when `primary`
    /// and no directory was given. Secondary artifacts are dropped on stdout.
    pub fn emit(&self, name: &str, bytes: &[u8], primary: bool) -> Result<(), CliError> {
        match &self.dir {
            Some(d) => fs::write(d.join(name), bytes)?,
            None if primary => {
                let mut out = io::stdout().lock();
                match out.write_all(bytes).and_then(|_| out.flush()) {
                    // A closed reader (e.g. `| head`) is not a failure.
                    Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                    other => other?,
                }
            }
            None => {}
        }
        Ok(())
    }
}
