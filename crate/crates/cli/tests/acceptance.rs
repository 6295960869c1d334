//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tribic::oracle::{oracle_cross_count, oracle_maximal_biclusters};
use tribic::sample::toy_dataset;
use tribic::scaling::{
    block_context, build_triadic_context, context_density, interordinal_scale, tolerance_blocks,
};
use tribic::tca::{enumerate_triconcepts, mine_all_theta, theta_of_modus, AllThetaFilter};
use tribic::{
    trimax_mine, Bicluster, MiningConstraints, NumericalDataset, ScaleMode, Theta,
    ThetaAnnotatedBicluster,
};
use tribic_cli::output::Format;
use tribic_cli::synth::{generate, SyntheticSpec};
use tribic_cli::{bench, cmd_mine, theta_sweep, InterordinalMode};

type Check = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("1 toy dataset golden values", golden),
        ("2 miner equals oracle on 6x5 matrices", oracle_equivalence),
        (
            "3 triconcepts biject onto maximal biclusters of all thetas",
            bijection,
        ),
        ("4 dense scale theta = s - |U| + 1", dense_formula),
        (
            "5 output identical for 1, 2 and 8 threads",
            parallel_determinism,
        ),
        ("6 sweep shape on 200x12 synthetic data", sweep_shape),
        ("7 size constraints filter and prune", constraint_pruning),
        ("8 toy tolerance context density 0.28", density_golden),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| Err(panic_message(&p)));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("PASS criterion {name} ({secs:.2}s) {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2}s) {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn panic_message(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn theta(t: f64) -> Theta {
    Theta::new(t).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, vmax: u32) -> NumericalDataset {
    let data = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| f64::from(rng.gen_range(0..=vmax)))
                .collect()
        })
        .collect();
    NumericalDataset::from_rows(data).unwrap()
}

fn mined_set(d: &NumericalDataset, t: f64, c: &MiningConstraints) -> BTreeSet<Bicluster> {
    trimax_mine(d, theta(t), c, 1)
        .unwrap()
        .biclusters
        .into_iter()
        .map(|b| b.bicluster)
        .collect()
}

fn bic(extent: &[usize], intent: &[usize]) -> Bicluster {
    Bicluster::new(extent.to_vec(), intent.to_vec())
}

/// Rows are objects, each row lists attributes per condition separated by
/// spaces; `x` marks a cross.
fn crosses_of(pattern: &[&str], incident: impl Fn(usize, usize, usize) -> bool) -> Vec<String> {
    let conditions = pattern[0].split(' ').count();
    let width = pattern[0].split(' ').next().unwrap().len();
    (0..pattern.len())
        .map(|g| {
            (0..conditions)
                .map(|c| {
                    (0..width)
                        .map(|m| if incident(g, m, c) { 'x' } else { '.' })
                        .collect::<String>()
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn golden() -> Result<String, String> {
    let start = Instant::now();
    let d = toy_dataset();
    let w = d.distinct_values();
    ensure!(w == [0., 1., 2., 6., 7., 8., 9.], "distinct values {w:?}");

    let scale = interordinal_scale(&w, ScaleMode::InterordinalObserved).unwrap();
    let labels: Vec<String> = scale.conditions.iter().map(ToString::to_string).collect();
    let expected = [
        "[0,0]", "[0,1]", "[0,2]", "[0,6]", "[0,7]", "[0,8]", "[0,9]", "[1,9]", "[2,9]", "[6,9]",
        "[7,9]", "[8,9]", "[9,9]",
    ];
    ensure!(labels == expected, "interordinal conditions {labels:?}");
    let value_by_condition = [
        "xxxxxxx......",
        ".xxxxxxx.....",
        "..xxxxxxx....",
        "...xxxxxxx...",
        "....xxxxxxx..",
        ".....xxxxxxx.",
        "......xxxxxxx",
    ];
    for (v, row) in w.iter().zip(value_by_condition) {
        let got: String = scale
            .conditions
            .iter()
            .map(|c| if c.contains(*v) { 'x' } else { '.' })
            .collect();
        ensure!(got == row, "scale row of {v}: {got}, expected {row}");
    }

    let blocks = |t: f64| -> Vec<String> {
        tolerance_blocks(&w, theta(t))
            .unwrap()
            .conditions
            .iter()
            .map(ToString::to_string)
            .collect()
    };
    ensure!(
        blocks(1.0) == ["[0,1]", "[1,2]", "[6,7]", "[7,8]", "[8,9]"],
        "θ=1 blocks {:?}",
        blocks(1.0)
    );
    ensure!(
        blocks(2.0) == ["[0,2]", "[6,8]", "[7,9]"],
        "θ=2 blocks {:?}",
        blocks(2.0)
    );

    let table = [
        "x..x. xxxx. ....x ..... .....",
        ".xxx. xxx.. ....x ..... .....",
        "..x.. xxx.. ...xx ...x. .....",
        "..... ..x.. ...xx x...x xx...",
    ];
    let one = tolerance_blocks(&w, theta(1.0)).unwrap();
    let slices: Vec<_> = one
        .conditions
        .iter()
        .map(|b| block_context(&d, b))
        .collect();
    let got = crosses_of(&table, |g, m, c| slices[c].incident(g, m));
    ensure!(got == table, "θ=1 block contexts {got:?}");

    let csv = tribic_cli::ingest::write_csv(&d);
    let d = tribic_cli::ingest::parse_csv(csv.as_bytes()).map_err(|e| e.to_string())?;
    let mine = |t: f64| -> BTreeSet<String> {
        cmd_mine(&d, t, &MiningConstraints::default(), 2, Format::Csv)
            .unwrap()
            .lines()
            .skip(1)
            .map(|l| l.split(',').take(2).collect::<Vec<_>>().join(","))
            .collect()
    };
    let at_one = mine(1.0);
    ensure!(
        at_one.contains("g1|g2|g3,m1|m2|m3"),
        "θ=1 output {at_one:?}"
    );
    ensure!(
        !at_one.contains("g3,m4"),
        "θ=1 output contains ({{g3}},{{m4}})"
    );
    let at_zero = mine(0.0);
    ensure!(at_zero.contains("g1|g2|g3,m5"), "θ=0 output {at_zero:?}");

    let (scale, all) = mine_all_theta(
        &d,
        InterordinalMode::Observed.into(),
        AllThetaFilter::default(),
    )
    .unwrap();
    let hit = all
        .iter()
        .find(|b| b.annotated.bicluster == bic(&[0, 1, 2], &[0, 1, 2]))
        .ok_or("all-θ output misses ({g1,g2,g3},{m1,m2,m3})")?;
    ensure!(
        hit.modus == (2..=7).collect::<Vec<_>>(),
        "modus {:?}",
        hit.modus
    );
    ensure!(
        hit.annotated.theta.value() == 1.0,
        "θ {}",
        hit.annotated.theta
    );
    ensure!(scale.len() == 13, "{} conditions", scale.len());

    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "{} maximal at θ=1, {} over all θ",
        at_one.len(),
        all.len()
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut total = 0;
    for case in 0..200 {
        let d = random_matrix(&mut rng, 6, 5, 9);
        for t in [0.0, 1.0, 2.0, 3.0] {
            let expected = oracle_maximal_biclusters(&d, theta(t)).unwrap();
            let got = mined_set(&d, t, &MiningConstraints::default());
            ensure!(
                got == expected,
                "case {case} θ={t}: {got:?} != {expected:?}"
            );
            total += got.len();
        }
    }
    Ok(format!("{total} biclusters compared"))
}

fn bijection() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut total = 0;
    for case in 0..100 {
        let d = random_matrix(&mut rng, 5, 4, 9);
        let scale =
            interordinal_scale(&d.distinct_values(), ScaleMode::InterordinalObserved).unwrap();
        let concepts: Vec<_> = enumerate_triconcepts(&build_triadic_context(&d, &scale))
            .into_iter()
            .filter(|c| !c.is_degenerate())
            .collect();
        let mapped: BTreeSet<Bicluster> = concepts.iter().map(|c| c.bicluster()).collect();
        ensure!(
            mapped.len() == concepts.len(),
            "case {case}: two triconcepts share a bicluster"
        );
        let mut union = BTreeSet::new();
        for t in 0..=9 {
            union.extend(oracle_maximal_biclusters(&d, theta(f64::from(t))).unwrap());
        }
        ensure!(mapped == union, "case {case}: {mapped:?} != {union:?}");
        for c in &concepts {
            let (lo, hi) = d.range_of(&c.extent, &c.intent).unwrap();
            let t = theta_of_modus(&scale, &c.modus).unwrap().value();
            ensure!(
                t == hi - lo,
                "case {case}: θ {t} for cell range {}",
                hi - lo
            );
        }
        total += concepts.len();
    }
    Ok(format!("{total} triconcepts matched"))
}

fn dense_formula() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut total = 0;
    for case in 0..50 {
        let d = random_matrix(&mut rng, 4, 4, 9);
        let scale = interordinal_scale(&d.distinct_values(), ScaleMode::InterordinalDense).unwrap();
        let s = scale.dense.unwrap().s as i64;
        for c in enumerate_triconcepts(&build_triadic_context(&d, &scale)) {
            if c.is_degenerate() {
                continue;
            }
            let (lo, hi) = d.range_of(&c.extent, &c.intent).unwrap();
            let range = (hi - lo) as i64;
            let formula = s - c.modus.len() as i64 + 1;
            ensure!(
                range == formula,
                "case {case}: range {range}, s-|U|+1 = {formula}"
            );
            total += 1;
        }
    }
    Ok(format!("{total} triconcepts checked"))
}

fn parallel_determinism() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut runs = 0;
    for case in 0..5 {
        let d = random_matrix(&mut rng, 50, 10, 20);
        for t in [0.0, 2.0, 5.0] {
            let render = |threads: usize, format: Format| {
                cmd_mine(&d, t, &MiningConstraints::default(), threads, format).unwrap()
            };
            let csv = render(1, Format::Csv);
            let json = biclusters_json(&render(1, Format::Json));
            for threads in [2, 8] {
                ensure!(
                    render(threads, Format::Csv) == csv,
                    "case {case} θ={t} csv, {threads} threads"
                );
                ensure!(
                    biclusters_json(&render(threads, Format::Json)) == json,
                    "case {case} θ={t} json, {threads} threads"
                );
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} comparisons"))
}

/// The JSON document minus its wall-clock timings.
fn biclusters_json(text: &str) -> String {
    let mut doc: serde_json::Value = serde_json::from_str(text).unwrap();
    doc.as_object_mut().unwrap().remove("timing");
    doc.to_string()
}

fn synthetic() -> SyntheticSpec {
    SyntheticSpec {
        rows: 200,
        cols: 12,
        vmax: 1000,
        planted: 0,
        seed: 7,
    }
}

fn sweep_shape() -> Result<String, String> {
    let spec = synthetic();
    let start = Instant::now();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let rows =
        bench(&spec, 10, &MiningConstraints::default(), threads).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let d = generate(&spec).unwrap();

    ensure!(rows.len() == 10, "{} sweep rows", rows.len());
    for pair in rows.windows(2) {
        ensure!(
            pair[1].blocks <= pair[0].blocks,
            "blocks grow from {} at θ={} to {} at θ={}",
            pair[0].blocks,
            pair[0].theta,
            pair[1].blocks,
            pair[1].theta
        );
        ensure!(
            pair[1].density >= pair[0].density,
            "density falls from {} at θ={} to {} at θ={}",
            pair[0].density,
            pair[0].theta,
            pair[1].density,
            pair[1].theta
        );
    }
    let last = rows.last().unwrap();
    ensure!(
        last.theta == 1000.0 && last.density == 1.0,
        "density {} at θ={}",
        last.density,
        last.theta
    );
    ensure!(
        rows[0].blocks == d.distinct_values().len(),
        "{} blocks at θ=0 for {} values",
        rows[0].blocks,
        d.distinct_values().len()
    );
    for r in &rows {
        ensure!(
            r.dyadic_concepts >= r.biclusters as u64,
            "θ={}: {} concepts < {} biclusters",
            r.theta,
            r.dyadic_concepts,
            r.biclusters
        );
    }
    ensure!(elapsed < Duration::from_secs(60), "sweep took {elapsed:?}");
    Ok(format!("sweep in {:.2}s", elapsed.as_secs_f64()))
}

fn constraint_pruning() -> Result<String, String> {
    let d = generate(&synthetic()).unwrap();
    let t = theta_sweep(1000, 10)[4];
    let bounded = MiningConstraints {
        min_extent: Some(10),
        max_extent: Some(40),
        ..Default::default()
    };
    let fastest = |c: &MiningConstraints| {
        (0..3)
            .map(|_| trimax_mine(&d, theta(t), c, 1).unwrap())
            .min_by_key(|r| r.elapsed)
            .unwrap()
    };
    let full = fastest(&MiningConstraints::default());
    let cut = fastest(&bounded);
    let filtered: Vec<&ThetaAnnotatedBicluster> = full
        .biclusters
        .iter()
        .filter(|b| bounded.accepts(b.bicluster.extent.len(), b.bicluster.intent.len()))
        .collect();
    ensure!(
        cut.biclusters.iter().eq(filtered.iter().copied()),
        "constrained output ({}) differs from filtered output ({})",
        cut.biclusters.len(),
        filtered.len()
    );
    ensure!(
        cut.elapsed < full.elapsed,
        "constrained {:?} not faster than unconstrained {:?}",
        cut.elapsed,
        full.elapsed
    );
    Ok(format!(
        "θ={t:.1}: {} of {} kept, {:.0} ms vs {:.0} ms",
        cut.biclusters.len(),
        full.biclusters.len(),
        cut.elapsed.as_secs_f64() * 1e3,
        full.elapsed.as_secs_f64() * 1e3
    ))
}

fn density_golden() -> Result<String, String> {
    let d = toy_dataset();
    let scale = tolerance_blocks(&d.distinct_values(), theta(1.0)).unwrap();
    let crosses = oracle_cross_count(&d, &scale);
    let cells = d.object_count() * d.attribute_count() * scale.len();
    ensure!(
        crosses == 28 && cells == 100,
        "{crosses} crosses over {cells} cells"
    );
    let density = crosses as f64 / cells as f64;
    ensure!(density == 0.28, "oracle density {density}");
    let reported = context_density(&build_triadic_context(&d, &scale));
    ensure!(reported == density, "context reports {reported}");
    Ok("28 / 100".into())
}
