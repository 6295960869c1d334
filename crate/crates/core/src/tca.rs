//! Triadic concepts of scaled contexts and their reading as biclusters.
//!
//! Triconcepts are enumerated in two nested dyadic passes: every concept
//! (A1, Z) of the flattened context (G, M×C), then every concept (A2, A3) of
//! Z read as an M × C context. A triple is kept iff A1 is exactly the set of
//! objects incident with all of A2 × A3.

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::dataset::{Bicluster, NumericalDataset, Theta};
use crate::error::{Error, Result};
use crate::fca::FormalContext;
use crate::scaling::{
    build_triadic_context, interordinal_scale, Interval, ScaleDimension, ScaleMode, TriadicContext,
};

/// A maximal fully incident box (extent, intent, modus). Components are sorted
/// index lists; the derived order is lexicographic on the triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriadicConcept {
    pub extent: Vec<usize>,
    pub intent: Vec<usize>,
    pub modus: Vec<usize>,
}

impl TriadicConcept {
    pub fn is_degenerate(&self) -> bool {
        self.extent.is_empty() || self.intent.is_empty() || self.modus.is_empty()
    }

    pub fn bicluster(&self) -> Bicluster {
        Bicluster {
            extent: self.extent.clone(),
            intent: self.intent.clone(),
        }
    }
}

/// A bicluster with the spread of its values.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaAnnotatedBicluster {
    pub bicluster: Bicluster,
    /// Smallest θ for which the bicluster is one of similar values.
    pub theta: Theta,
    pub value_range: Interval,
}

impl ThetaAnnotatedBicluster {
    pub fn from_dataset(d: &NumericalDataset, bicluster: Bicluster) -> Result<Self> {
        d.check_bounds(&bicluster)?;
        let (lo, hi) = d
            .range_of(&bicluster.extent, &bicluster.intent)
            .ok_or_else(|| Error::contract("cannot annotate an empty bicluster"))?;
        Ok(ThetaAnnotatedBicluster {
            bicluster,
            theta: Theta::new(hi - lo)?,
            value_range: Interval { lo, hi },
        })
    }
}

/// Outer derivation of a non-empty bicluster: the scale conditions containing
/// every value of A×B, computed from the data without a materialised context.
pub fn outer_modus(
    d: &NumericalDataset,
    scale: &ScaleDimension,
    b: &Bicluster,
) -> Result<Vec<usize>> {
    d.check_bounds(b)?;
    let (lo, hi) = d
        .range_of(&b.extent, &b.intent)
        .ok_or_else(|| Error::input("modus of a bicluster with empty extent or intent"))?;
    Ok(scale.conditions_containing(lo, hi))
}

/// Every triadic concept of `ctx`, each once, sorted by (extent, intent, modus).
pub fn enumerate_triconcepts(ctx: &TriadicContext) -> Vec<TriadicConcept> {
    let flat = ctx.flatten();
    let nm = ctx.attribute_count();
    let nc = ctx.condition_count();
    let outer = flat.enumerate_concepts();

    let mut found: Vec<TriadicConcept> = outer
        .par_iter()
        .flat_map_iter(|outer_concept| {
            let z = &outer_concept.intent;
            let inner = FormalContext::from_fn(nm, nc, |m, c| z.contains(m * nc + c));
            inner
                .enumerate_concepts()
                .into_iter()
                .filter_map(|ic| {
                    let mut box_attrs = BitSet::new(nm * nc);
                    for m in ic.extent.iter() {
                        for c in ic.intent.iter() {
                            box_attrs.insert(m * nc + c);
                        }
                    }
                    (flat.derive_extent(&box_attrs) == outer_concept.extent).then(|| {
                        TriadicConcept {
                            extent: outer_concept.extent.to_vec(),
                            intent: ic.extent.to_vec(),
                            modus: ic.intent.to_vec(),
                        }
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort_unstable();
    found.dedup();
    found
}

/// θ of a modus: the length of the intersection of its conditions.
///
/// In dense interordinal mode this also equals `s - |U| + 1`.
pub fn theta_of_modus(scale: &ScaleDimension, modus: &[usize]) -> Result<Theta> {
    let (&first, rest) = modus
        .split_first()
        .ok_or_else(|| Error::contract("theta of an empty modus"))?;
    let cond = |i: usize| {
        scale.conditions.get(i).copied().ok_or(Error::OutOfBounds {
            axis: "condition",
            index: i,
            len: scale.len(),
        })
    };
    let mut meet = cond(first)?;
    for &i in rest {
        meet = meet.intersect(&cond(i)?).ok_or_else(|| {
            Error::contract(format!("conditions of modus {modus:?} do not intersect"))
        })?;
    }
    Theta::new(meet.length())
}

/// Optional size thresholds for [`mine_all_theta`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AllThetaFilter {
    pub min_extent: Option<usize>,
    pub min_intent: Option<usize>,
    pub min_modus: Option<usize>,
}

impl AllThetaFilter {
    fn accepts(&self, t: &TriadicConcept) -> bool {
        self.min_extent.is_none_or(|k| t.extent.len() >= k)
            && self.min_intent.is_none_or(|k| t.intent.len() >= k)
            && self.min_modus.is_none_or(|k| t.modus.len() >= k)
    }
}

/// A bicluster read off a triconcept, together with its modus.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalBicluster {
    pub annotated: ThetaAnnotatedBicluster,
    pub modus: Vec<usize>,
}

/// Maximal biclusters of similar values for every θ at once.
///
/// Builds the interordinal triadic context (`mode` is observed or dense),
/// enumerates its triconcepts and reads each non-degenerate one as a
/// bicluster tagged with the smallest θ at which it is maximal. The context
/// has `|G|·|M|·(2|W|-1)` cells, so this is meant for small and medium
/// inputs; use [`crate::trimax`] for a fixed θ.
pub fn mine_all_theta(
    d: &NumericalDataset,
    mode: ScaleMode,
    filter: AllThetaFilter,
) -> Result<(ScaleDimension, Vec<ModalBicluster>)> {
    let scale = interordinal_scale(&d.distinct_values(), mode)?;
    let ctx = build_triadic_context(d, &scale);
    let mut out = Vec::new();
    for t in enumerate_triconcepts(&ctx) {
        if t.extent.is_empty() || t.intent.is_empty() || !filter.accepts(&t) {
            continue;
        }
        let theta = theta_of_modus(&scale, &t.modus)?;
        let annotated = ThetaAnnotatedBicluster::from_dataset(d, t.bicluster())?;
        if annotated.theta != theta {
            return Err(Error::invariant(format!(
                "modus of {:?} gives θ = {theta} but its cells span {}",
                t.bicluster(),
                annotated.theta
            )));
        }
        out.push(ModalBicluster {
            annotated,
            modus: t.modus,
        });
    }
    Ok((scale, out))
}
