//! CSV and JSON serialization of reports and of the comparison table.
//!
//! CSV rows are `model,parity,index,z,z_squared` with numbers printed to 12
//! significant digits, LF line endings. The table export prefixes a `well`
//! column since it stacks three wells.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{SpectrumReport, TableOne};
use crate::welldomain::{EigenResult, WellSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

pub const REPORT_HEADER: [&str; 5] = ["model", "parity", "index", "z", "z_squared"];

/// Plain decimal rendering with 12 significant digits.
pub fn significant(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn eigen_fields(r: &EigenResult) -> [String; 5] {
    [
        r.model.short_name().to_owned(),
        r.parity.name().to_owned(),
        r.index.to_string(),
        significant(r.z),
        significant(r.z_squared),
    ]
}

fn csv_writer(buf: &mut Vec<u8>) -> csv::Writer<&mut Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(buf)
}

pub fn report_csv(report: &SpectrumReport) -> Result<String> {
    let mut buf = Vec::new();
    {
        let mut w = csv_writer(&mut buf);
        w.write_record(REPORT_HEADER).map_err(csv_err)?;
        for r in report.rows() {
            w.write_record(eigen_fields(r)).map_err(csv_err)?;
        }
        w.flush().map_err(|e| csv_err(e.into()))?;
    }
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}

fn well_label(spec: WellSpec) -> String {
    match spec {
        WellSpec::Finite(s) => s.to_string(),
        WellSpec::Infinite => "inf".to_owned(),
    }
}

pub fn table_csv(table: &TableOne) -> Result<String> {
    let mut buf = Vec::new();
    {
        let mut w = csv_writer(&mut buf);
        let mut header = vec!["well"];
        header.extend(REPORT_HEADER);
        w.write_record(header).map_err(csv_err)?;
        for column in &table.columns {
            let label = well_label(column.spec);
            for r in column.rows() {
                let mut record = vec![label.clone()];
                record.extend(eigen_fields(r));
                w.write_record(record).map_err(csv_err)?;
            }
        }
        w.flush().map_err(|e| csv_err(e.into()))?;
    }
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}

fn csv_err(source: csv::Error) -> Error {
    Error::Csv {
        path: "<memory>".into(),
        source,
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn render_report(report: &SpectrumReport, format: Format) -> Result<String> {
    match format {
        Format::Csv => report_csv(report),
        Format::Json => json(report),
    }
}

pub fn render_table(table: &TableOne, format: Format) -> Result<String> {
    match format {
        Format::Csv => table_csv(table),
        Format::Json => json(table),
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn export_report(report: &SpectrumReport, format: Format, path: &Path) -> Result<()> {
    write_file(path, &render_report(report, format)?)
}

pub fn export_table(table: &TableOne, format: Format, path: &Path) -> Result<()> {
    write_file(path, &render_table(table, format)?)
}
