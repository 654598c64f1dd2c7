//! Text serialization helpers shared by the CSV writers.

use std::io::Write;

use crate::error::Result;
use crate::scalar::Real;

/// Shortest round-trip representation, switching to exponent form outside
/// `[1e-4, 1e7)`. Always uses `.` as the decimal separator.
pub fn format_float<T: Real>(value: T) -> String {
    let x = value.as_f64();
    let a = x.abs();
    if x == 0.0 || (1e-4..1e7).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Writes a header row and one newline-terminated row per record.
pub fn write_csv<W: Write, R>(
    writer: W,
    header: &[&str],
    rows: impl IntoIterator<Item = R>,
) -> Result<()>
where
    R: IntoIterator,
    R::Item: AsRef<str>,
{
    let mut csv = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
    csv.write_record(header)?;
    for row in rows {
        let fields: Vec<String> = row.into_iter().map(|f| f.as_ref().to_owned()).collect();
        csv.write_record(&fields)?;
    }
    csv.flush()?;
    Ok(())
}
