//! CSV reading and writing of numerical datasets.
//!
//! Layout: the first row holds a leading ID cell (any content, usually empty)
//! followed by attribute names; every further row holds an object name
//! followed by one number per attribute.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use tribic::NumericalDataset;

use crate::error::{CliError, Result};

pub fn ingest_csv(path: &Path) -> Result<NumericalDataset> {
    let file = File::open(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_csv(file).map_err(|e| match e {
        CliError::Csv(msg) => CliError::Csv(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_csv<R: Read>(reader: R) -> Result<NumericalDataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut records = rdr.records();

    let header = match records.next() {
        None => return Err(CliError::Csv("empty file".into())),
        Some(r) => r.map_err(|e| CliError::Csv(e.to_string()))?,
    };
    let attributes: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    if attributes.is_empty() {
        return Err(CliError::Csv("header row names no attributes".into()));
    }
    if let Some(i) = attributes.iter().position(String::is_empty) {
        return Err(CliError::Csv(format!(
            "line 1: attribute {} has an empty name",
            i + 1
        )));
    }

    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for record in records {
        let record = record.map_err(|e| CliError::Csv(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let name = record.get(0).unwrap_or_default();
        if name.is_empty() {
            return Err(CliError::Csv(format!("line {line}: missing object name")));
        }
        if record.len() != attributes.len() + 1 {
            return Err(CliError::Csv(format!(
                "line {line} ({name}): {} cells, expected {}",
                record.len().saturating_sub(1),
                attributes.len()
            )));
        }
        let mut row = Vec::with_capacity(attributes.len());
        for (cell, attr) in record.iter().skip(1).zip(&attributes) {
            if cell.is_empty() {
                return Err(CliError::Csv(format!(
                    "line {line}: missing value at ({name}, {attr})"
                )));
            }
            let v: f64 = cell.parse().map_err(|_| {
                CliError::Csv(format!(
                    "line {line}: non-numeric value {cell:?} at ({name}, {attr})"
                ))
            })?;
            if !v.is_finite() {
                return Err(CliError::Csv(format!(
                    "line {line}: non-finite value {cell:?} at ({name}, {attr})"
                )));
            }
            row.push(v);
        }
        objects.push(name.to_owned());
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Csv("no object rows".into()));
    }
    Ok(NumericalDataset::new(objects, attributes, rows)?)
}

/// Renders a dataset in the layout [`parse_csv`] reads. Values use Rust's
/// shortest round-trip float formatting.
pub fn write_csv(d: &NumericalDataset) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("").chain(d.attribute_ids().iter().map(String::as_str));
    w.write_record(header).expect("in-memory write");
    for (g, name) in d.object_ids().iter().enumerate() {
        let cells = std::iter::once(name.clone()).chain(d.row(g).iter().map(f64::to_string));
        w.write_record(cells).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}
