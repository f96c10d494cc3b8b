//! Data-file rendering. CSV schemas are written by hand so the column
//! layout is exact and stable; JSON carries the same rows as an array of
//! objects. Numbers are formatted with Rust's shortest round-trip
//! representation, which makes the bytes reproducible.

use serde::Serialize;

use crate::config::OutputFormat;
use crate::error::Result;

/// A row type that knows its CSV header and line rendering.
pub trait CsvRow {
    fn header() -> &'static str;
    fn push_line(&self, out: &mut String);
}

pub fn render_rows<R: CsvRow + Serialize>(rows: &[R], format: OutputFormat) -> Result<Vec<u8>> {
    match format {
        OutputFormat::Csv => {
            let mut out = String::new();
            out.push_str(R::header());
            out.push('\n');
            for row in rows {
                row.push_line(&mut out);
                out.push('\n');
            }
            Ok(out.into_bytes())
        }
        OutputFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(rows)?;
            bytes.push(b'\n');
            Ok(bytes)
        }
    }
}

pub fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn fmt_opt_bool(v: Option<bool>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
