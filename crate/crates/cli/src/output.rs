//! Machine-readable renderings of mining results.

use std::time::Duration;

use serde::Serialize;

use tribic::tca::ModalBicluster;
use tribic::{MiningReport, NumericalDataset, ScaleDimension, ThetaAnnotatedBicluster};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BiclusterRecord {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
    pub theta: f64,
    pub value_min: f64,
    pub value_max: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modus: Option<Vec<String>>,
}

impl BiclusterRecord {
    pub fn new(d: &NumericalDataset, b: &ThetaAnnotatedBicluster) -> Self {
        BiclusterRecord {
            extent: d.object_labels(&b.bicluster.extent),
            intent: d.attribute_labels(&b.bicluster.intent),
            theta: b.theta.value(),
            value_min: b.value_range.lo,
            value_max: b.value_range.hi,
            modus: None,
        }
    }

    pub fn with_modus(d: &NumericalDataset, scale: &ScaleDimension, b: &ModalBicluster) -> Self {
        BiclusterRecord {
            modus: Some(
                b.modus
                    .iter()
                    .map(|&c| scale.conditions[c].to_string())
                    .collect(),
            ),
            ..BiclusterRecord::new(d, &b.annotated)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DatasetSummary {
    pub objects: usize,
    pub attributes: usize,
    pub distinct_values: usize,
}

impl DatasetSummary {
    pub fn of(d: &NumericalDataset) -> Self {
        DatasetSummary {
            objects: d.object_count(),
            attributes: d.attribute_count(),
            distinct_values: d.distinct_values().len(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase_mine_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase_modus_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase_maxcheck_ms: Option<f64>,
}

impl Timing {
    pub fn of_report(r: &MiningReport) -> Self {
        Timing {
            elapsed_ms: ms(r.elapsed),
            phase_mine_ms: Some(ms(r.phases.concept_mining)),
            phase_modus_ms: Some(ms(r.phases.modus)),
            phase_maxcheck_ms: Some(ms(r.phases.maximality)),
        }
    }

    pub fn elapsed(elapsed: Duration) -> Self {
        Timing {
            elapsed_ms: ms(elapsed),
            ..Default::default()
        }
    }
}

pub fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Top-level JSON document of every mining command.
#[derive(Debug, Clone, Serialize)]
pub struct MiningOutput {
    pub dataset: DatasetSummary,
    pub scale: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    pub conditions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dyadic_concepts: Option<u64>,
    pub timing: Timing,
    pub biclusters: Vec<BiclusterRecord>,
}

impl MiningOutput {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => serde_json::to_string_pretty(self)
                .map(|mut s| {
                    s.push('\n');
                    s
                })
                .map_err(|e| CliError::Output(e.to_string())),
            Format::Csv => biclusters_csv(&self.biclusters),
        }
    }
}

/// One bicluster per row, labels pipe-joined within a cell.
pub fn biclusters_csv(records: &[BiclusterRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["extent", "intent", "theta", "value_min", "value_max"])
        .map_err(|e| CliError::Output(e.to_string()))?;
    for r in records {
        w.write_record([
            r.extent.join("|"),
            r.intent.join("|"),
            r.theta.to_string(),
            r.value_min.to_string(),
            r.value_max.to_string(),
        ])
        .map_err(|e| CliError::Output(e.to_string()))?;
    }
    finish(w)
}

/// One line of the `bench` metrics table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsRow {
    pub theta: f64,
    pub blocks: usize,
    pub density: f64,
    pub dyadic_concepts: u64,
    pub biclusters: usize,
    pub elapsed_ms: f64,
    pub phase_mine_ms: f64,
    pub phase_modus_ms: f64,
    pub phase_maxcheck_ms: f64,
}

pub const METRICS_HEADER: &str = "theta,blocks,density,dyadic_concepts,biclusters,elapsed_ms,\
phase_mine_ms,phase_modus_ms,phase_maxcheck_ms";

pub fn metrics_csv(rows: &[MetricsRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| CliError::Output(e.to_string()))?;
    }
    if rows.is_empty() {
        return Ok(format!("{METRICS_HEADER}\n"));
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}
