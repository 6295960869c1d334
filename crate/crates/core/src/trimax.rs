//! Maximal biclusters of similar values for a fixed θ.
//!
//! Each tolerance block gets its own dyadic context, mined independently.
//! A concept (A, B) of block `i` is a bicluster of similar values; its modus
//! U (the blocks containing its value range) is a contiguous run of block
//! indices. It is reported only from the last block of U, and only if it is
//! also closed in every earlier block of U. A concept that is not closed in
//! some block of U can be extended inside that block, so it is not maximal.

use std::ops::Range;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::dataset::{Bicluster, NumericalDataset, Theta};
use crate::error::{Error, Result};
use crate::scaling::{block_context, tolerance_blocks, Interval, ScaleDimension};
use crate::tca::ThetaAnnotatedBicluster;

/// Size bounds on reported biclusters. `None` means unbounded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MiningConstraints {
    pub min_extent: Option<usize>,
    pub max_extent: Option<usize>,
    pub min_intent: Option<usize>,
    pub max_intent: Option<usize>,
    /// Minimum of |A|·|B|.
    pub min_area: Option<usize>,
}

impl MiningConstraints {
    pub fn validate(&self) -> Result<()> {
        let pairs = [
            ("extent", self.min_extent, self.max_extent),
            ("intent", self.min_intent, self.max_intent),
        ];
        for (name, lo, hi) in pairs {
            if let (Some(lo), Some(hi)) = (lo, hi) {
                if lo > hi {
                    return Err(Error::input(format!(
                        "min {name} size {lo} exceeds max {name} size {hi}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_unconstrained(&self) -> bool {
        *self == MiningConstraints::default()
    }

    pub fn accepts(&self, extent: usize, intent: usize) -> bool {
        self.min_extent.is_none_or(|k| extent >= k)
            && self.max_extent.is_none_or(|k| extent <= k)
            && self.min_intent.is_none_or(|k| intent >= k)
            && self.max_intent.is_none_or(|k| intent <= k)
            && self.min_area.is_none_or(|k| extent * intent >= k)
    }
}

/// Time spent in each stage, summed over all blocks (and so over workers).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimings {
    /// Building block contexts and enumerating their concepts.
    pub concept_mining: Duration,
    /// Outer derivation (value range and block lookup) of each concept.
    pub modus: Duration,
    /// Closure checks in earlier blocks of the modus.
    pub maximality: Duration,
}

impl PhaseTimings {
    fn add(&mut self, other: &PhaseTimings) {
        self.concept_mining += other.concept_mining;
        self.modus += other.modus;
        self.maximality += other.maximality;
    }
}

#[derive(Debug, Clone)]
pub struct MiningReport {
    pub theta: Theta,
    /// Sorted by (extent, intent).
    pub biclusters: Vec<ThetaAnnotatedBicluster>,
    /// Non-degenerate dyadic concepts produced across all blocks.
    pub dyadic_concepts_generated: u64,
    pub blocks: usize,
    pub elapsed: Duration,
    pub phases: PhaseTimings,
}

/// Runs TriMax on `threads` worker threads. Output does not depend on the
/// thread count.
pub fn trimax_mine(
    d: &NumericalDataset,
    theta: Theta,
    constraints: &MiningConstraints,
    threads: usize,
) -> Result<MiningReport> {
    parallel_driver(d, theta, constraints, threads)
}

/// Partitions tolerance blocks across a dedicated pool of `threads` workers
/// and merges their results into one sorted list.
pub fn parallel_driver(
    d: &NumericalDataset,
    theta: Theta,
    constraints: &MiningConstraints,
    threads: usize,
) -> Result<MiningReport> {
    if threads == 0 {
        return Err(Error::input("thread count must be at least 1"));
    }
    constraints.validate()?;
    let start = Instant::now();
    let scale = tolerance_blocks(&d.distinct_values(), theta)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invariant(format!("cannot start worker pool: {e}")))?;
    let per_block: Vec<BlockOutput> = pool.install(|| {
        (0..scale.len())
            .into_par_iter()
            .map(|i| mine_block(d, &scale, i, constraints))
            .collect::<Result<_>>()
    })?;

    let mut biclusters = Vec::new();
    let mut generated = 0;
    let mut phases = PhaseTimings::default();
    for out in per_block {
        biclusters.extend(out.biclusters);
        generated += out.generated;
        phases.add(&out.phases);
    }
    biclusters.sort_by(|a, b| a.bicluster.cmp(&b.bicluster));
    if let Some(w) = biclusters
        .windows(2)
        .find(|w| w[0].bicluster == w[1].bicluster)
    {
        return Err(Error::invariant(format!(
            "bicluster {:?} reported twice",
            w[0].bicluster
        )));
    }

    Ok(MiningReport {
        theta,
        biclusters,
        dyadic_concepts_generated: generated,
        blocks: scale.len(),
        elapsed: start.elapsed(),
        phases,
    })
}

struct BlockOutput {
    biclusters: Vec<ThetaAnnotatedBicluster>,
    generated: u64,
    phases: PhaseTimings,
}

fn mine_block(
    d: &NumericalDataset,
    scale: &ScaleDimension,
    current: usize,
    constraints: &MiningConstraints,
) -> Result<BlockOutput> {
    let mut phases = PhaseTimings::default();

    let t = Instant::now();
    let ctx = block_context(d, &scale.conditions[current]);
    let mut generated = 0u64;
    let mut candidates = Vec::new();
    ctx.for_each_concept(constraints.min_extent.unwrap_or(0), |extent, intent| {
        if extent.is_empty() || intent.is_empty() {
            return;
        }
        generated += 1;
        let (ne, ni) = (extent.count(), intent.count());
        if constraints.accepts(ne, ni) {
            candidates.push(Bicluster {
                extent: extent.to_vec(),
                intent: intent.to_vec(),
            });
        }
    });
    phases.concept_mining = t.elapsed();

    let mut biclusters = Vec::new();
    for b in candidates {
        let t = Instant::now();
        let (lo, hi) = d
            .range_of(&b.extent, &b.intent)
            .expect("non-empty concept has a value range");
        let modus = scale.block_span(lo, hi);
        phases.modus += t.elapsed();

        if !modus.contains(&current) {
            return Err(Error::invariant(format!(
                "concept {b:?} of block {current} has modus {modus:?} not containing it"
            )));
        }
        if modus.end - 1 != current {
            // reported again from the last block of its modus
            continue;
        }
        if modus.len() > 1 {
            let t = Instant::now();
            let maximal = maximality_check(d, scale, &b, modus.clone(), current);
            phases.maximality += t.elapsed();
            if !maximal {
                continue;
            }
        }
        if !closed_in_block(d, &scale.conditions[current], &b) {
            return Err(Error::invariant(format!(
                "concept {b:?} is not closed in its own block {current}"
            )));
        }
        biclusters.push(ThetaAnnotatedBicluster {
            bicluster: b,
            theta: Theta::new(hi - lo)?,
            value_range: Interval { lo, hi },
        });
    }

    Ok(BlockOutput {
        biclusters,
        generated,
        phases,
    })
}

/// True iff `b` is closed in every block of `modus` strictly before `current`.
///
/// Block contexts are not built; derivations are evaluated directly against
/// the data restricted to each block.
pub fn maximality_check(
    d: &NumericalDataset,
    scale: &ScaleDimension,
    b: &Bicluster,
    modus: Range<usize>,
    current: usize,
) -> bool {
    (modus.start..current).all(|y| closed_in_block(d, &scale.conditions[y], b))
}

/// Whether (A, B) equals its closure in the dyadic context of `block`,
/// assuming A×B lies inside the block.
fn closed_in_block(d: &NumericalDataset, block: &Interval, b: &Bicluster) -> bool {
    let attr_grows = (0..d.attribute_count())
        .filter(|m| b.intent.binary_search(m).is_err())
        .any(|m| b.extent.iter().all(|&g| block.contains(d.value(g, m))));
    if attr_grows {
        return false;
    }
    let obj_grows = (0..d.object_count())
        .filter(|g| b.extent.binary_search(g).is_err())
        .any(|g| b.intent.iter().all(|&m| block.contains(d.value(g, m))));
    !obj_grows
}
