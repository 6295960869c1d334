//! Command-line front end: argument parsing, dataset ingestion and the
//! subcommands of the `tribic` binary. Every command renders to a `String`
//! so it can be exercised without spawning a process.

pub mod error;
pub mod ingest;
pub mod output;
pub mod synth;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tribic::oracle::oracle_maximal_biclusters;
use tribic::scaling::{interordinal_scale, scaled_crosses, scaled_density, tolerance_blocks};
use tribic::tca::{mine_all_theta, AllThetaFilter};
use tribic::{
    trimax_mine, MiningConstraints, NumericalDataset, ScaleMode, Theta, ThetaAnnotatedBicluster,
};

pub use error::{CliError, Result};
use output::{BiclusterRecord, DatasetSummary, Format, MetricsRow, MiningOutput, Timing};
use synth::SyntheticSpec;

#[derive(Debug, Parser)]
#[command(
    name = "tribic",
    version,
    about = "Mine maximal biclusters of similar values"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the tolerance blocks of the dataset's values for θ.
    Blocks {
        input: PathBuf,
        #[arg(long)]
        theta: f64,
    },
    /// Print the interordinal scale conditions.
    Scale {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = InterordinalMode::Observed)]
        scale: InterordinalMode,
    },
    /// Maximal biclusters for one θ (tolerance-block miner).
    Mine {
        input: PathBuf,
        #[arg(long)]
        theta: f64,
        #[command(flatten)]
        constraints: ConstraintArgs,
        #[arg(long, default_value_t = default_threads())]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Maximal biclusters for every θ (interordinal triadic concepts).
    MineAll {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = InterordinalMode::Observed)]
        scale: InterordinalMode,
        #[arg(long)]
        min_rows: Option<usize>,
        #[arg(long)]
        min_cols: Option<usize>,
        #[arg(long)]
        min_modus: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Block count, density and context sizes for θ.
    Stats {
        input: PathBuf,
        #[arg(long)]
        theta: f64,
    },
    /// Sweep θ over seeded synthetic data and print a metrics table.
    Bench {
        #[arg(long, default_value_t = 200)]
        rows: usize,
        #[arg(long, default_value_t = 12)]
        cols: usize,
        #[arg(long, default_value_t = 1000)]
        vmax: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        planted: usize,
        /// Number of evenly spaced θ values in [0, vmax].
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[command(flatten)]
        constraints: ConstraintArgs,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Brute-force reference miner (small inputs only).
    #[command(hide = true)]
    Oracle {
        input: PathBuf,
        #[arg(long)]
        theta: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InterordinalMode {
    Observed,
    Dense,
}

impl From<InterordinalMode> for ScaleMode {
    fn from(m: InterordinalMode) -> Self {
        match m {
            InterordinalMode::Observed => ScaleMode::InterordinalObserved,
            InterordinalMode::Dense => ScaleMode::InterordinalDense,
        }
    }
}

/// Size constraints; rows bound the extent, columns the intent.
#[derive(Debug, Clone, Copy, Default, Args)]
pub struct ConstraintArgs {
    #[arg(long)]
    pub min_rows: Option<usize>,
    #[arg(long)]
    pub max_rows: Option<usize>,
    #[arg(long)]
    pub min_cols: Option<usize>,
    #[arg(long)]
    pub max_cols: Option<usize>,
    #[arg(long)]
    pub min_area: Option<usize>,
}

impl From<ConstraintArgs> for MiningConstraints {
    fn from(c: ConstraintArgs) -> Self {
        MiningConstraints {
            min_extent: c.min_rows,
            max_extent: c.max_rows,
            min_intent: c.min_cols,
            max_intent: c.max_cols,
            min_area: c.min_area,
        }
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Blocks { input, theta } => cmd_blocks(&ingest::ingest_csv(&input)?, theta),
        Command::Scale { input, scale } => cmd_scale(&ingest::ingest_csv(&input)?, scale),
        Command::Mine {
            input,
            theta,
            constraints,
            threads,
            format,
        } => cmd_mine(
            &ingest::ingest_csv(&input)?,
            theta,
            &constraints.into(),
            threads,
            format,
        ),
        Command::MineAll {
            input,
            scale,
            min_rows,
            min_cols,
            min_modus,
            format,
        } => cmd_mine_all(
            &ingest::ingest_csv(&input)?,
            scale,
            AllThetaFilter {
                min_extent: min_rows,
                min_intent: min_cols,
                min_modus,
            },
            format,
        ),
        Command::Stats { input, theta } => cmd_stats(&ingest::ingest_csv(&input)?, theta),
        Command::Bench {
            rows,
            cols,
            vmax,
            seed,
            planted,
            steps,
            constraints,
            threads,
        } => {
            let spec = SyntheticSpec {
                rows,
                cols,
                vmax,
                planted,
                seed,
            };
            let table = bench(&spec, steps, &constraints.into(), threads)?;
            output::metrics_csv(&table)
        }
        Command::Oracle {
            input,
            theta,
            format,
        } => cmd_oracle(&ingest::ingest_csv(&input)?, theta, format),
    }
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let mut s = items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    s.push('\n');
    s
}

pub fn cmd_blocks(d: &NumericalDataset, theta: f64) -> Result<String> {
    let scale = tolerance_blocks(&d.distinct_values(), Theta::new(theta)?)?;
    Ok(joined(&scale.conditions))
}

pub fn cmd_scale(d: &NumericalDataset, mode: InterordinalMode) -> Result<String> {
    let scale = interordinal_scale(&d.distinct_values(), mode.into())?;
    Ok(joined(&scale.conditions))
}

pub fn cmd_mine(
    d: &NumericalDataset,
    theta: f64,
    constraints: &MiningConstraints,
    threads: usize,
    format: Format,
) -> Result<String> {
    let report = trimax_mine(d, Theta::new(theta)?, constraints, threads)?;
    MiningOutput {
        dataset: DatasetSummary::of(d),
        scale: "tolerance_blocks",
        theta: Some(theta),
        conditions: report.blocks,
        dyadic_concepts: Some(report.dyadic_concepts_generated),
        timing: Timing::of_report(&report),
        biclusters: records(d, &report.biclusters),
    }
    .render(format)
}

fn records(d: &NumericalDataset, found: &[ThetaAnnotatedBicluster]) -> Vec<BiclusterRecord> {
    found.iter().map(|b| BiclusterRecord::new(d, b)).collect()
}

pub fn cmd_mine_all(
    d: &NumericalDataset,
    mode: InterordinalMode,
    filter: AllThetaFilter,
    format: Format,
) -> Result<String> {
    let start = Instant::now();
    let (scale, found) = mine_all_theta(d, mode.into(), filter)?;
    MiningOutput {
        dataset: DatasetSummary::of(d),
        scale: match mode {
            InterordinalMode::Observed => "interordinal_observed",
            InterordinalMode::Dense => "interordinal_dense",
        },
        theta: None,
        conditions: scale.len(),
        dyadic_concepts: None,
        timing: Timing::elapsed(start.elapsed()),
        biclusters: found
            .iter()
            .map(|b| BiclusterRecord::with_modus(d, &scale, b))
            .collect(),
    }
    .render(format)
}

pub fn cmd_stats(d: &NumericalDataset, theta: f64) -> Result<String> {
    let w = d.distinct_values();
    let blocks = tolerance_blocks(&w, Theta::new(theta)?)?;
    let interordinal = interordinal_scale(&w, ScaleMode::InterordinalObserved)?;
    let lines = [
        format!("objects: {}", d.object_count()),
        format!("attributes: {}", d.attribute_count()),
        format!("distinct_values: {}", w.len()),
        format!("theta: {theta}"),
        format!("blocks: {}", blocks.len()),
        format!(
            "triadic_cells: {}",
            d.object_count() * d.attribute_count() * blocks.len()
        ),
        format!("crosses: {}", scaled_crosses(d, &blocks)),
        format!("density: {}", scaled_density(d, &blocks)),
        format!("interordinal_conditions: {}", interordinal.len()),
        format!("interordinal_density: {}", scaled_density(d, &interordinal)),
    ];
    Ok(lines.join("\n") + "\n")
}

/// θ values `k·vmax/(steps-1)` for `k = 0..steps`.
pub fn theta_sweep(vmax: u32, steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![0.0],
        _ => (0..steps)
            .map(|k| f64::from(vmax) * k as f64 / (steps - 1) as f64)
            .collect(),
    }
}

pub fn bench_row(
    d: &NumericalDataset,
    theta: f64,
    constraints: &MiningConstraints,
    threads: usize,
) -> Result<MetricsRow> {
    let theta = Theta::new(theta)?;
    let report = trimax_mine(d, theta, constraints, threads)?;
    let blocks = tolerance_blocks(&d.distinct_values(), theta)?;
    Ok(MetricsRow {
        theta: theta.value(),
        blocks: report.blocks,
        density: scaled_density(d, &blocks),
        dyadic_concepts: report.dyadic_concepts_generated,
        biclusters: report.biclusters.len(),
        elapsed_ms: output::ms(report.elapsed),
        phase_mine_ms: output::ms(report.phases.concept_mining),
        phase_modus_ms: output::ms(report.phases.modus),
        phase_maxcheck_ms: output::ms(report.phases.maximality),
    })
}

pub fn bench(
    spec: &SyntheticSpec,
    steps: usize,
    constraints: &MiningConstraints,
    threads: usize,
) -> Result<Vec<MetricsRow>> {
    let d = synth::generate(spec)?;
    theta_sweep(spec.vmax, steps)
        .into_iter()
        .map(|theta| bench_row(&d, theta, constraints, threads))
        .collect()
}

pub fn cmd_oracle(d: &NumericalDataset, theta: f64, format: Format) -> Result<String> {
    let start = Instant::now();
    let theta = Theta::new(theta)?;
    let found = oracle_maximal_biclusters(d, theta)?
        .into_iter()
        .map(|b| ThetaAnnotatedBicluster::from_dataset(d, b))
        .collect::<tribic::Result<Vec<_>>>()?;
    MiningOutput {
        dataset: DatasetSummary::of(d),
        scale: "none",
        theta: Some(theta.value()),
        conditions: 0,
        dyadic_concepts: None,
        timing: Timing::elapsed(start.elapsed()),
        biclusters: records(d, &found),
    }
    .render(format)
}
