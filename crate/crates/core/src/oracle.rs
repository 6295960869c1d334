//! Brute-force reference miners.
//!
//! Exponential and deliberately naive: they enumerate subsets and check the
//! definitions literally, sharing no closure code with [`crate::fca`],
//! [`crate::tca`] or [`crate::trimax`]. Agreement with those modules is
//! therefore evidence rather than tautology.

use std::collections::BTreeSet;

use crate::dataset::{Bicluster, NumericalDataset, Theta};
use crate::error::{Error, Result};
use crate::scaling::{ScaleDimension, TriadicContext};
use crate::tca::TriadicConcept;

pub const MAX_OBJECTS: usize = 12;
pub const MAX_ATTRIBUTES: usize = 12;
const MAX_SUBSET_BITS: usize = 20;

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// All maximal biclusters of similar values for `theta`.
pub fn oracle_maximal_biclusters(
    d: &NumericalDataset,
    theta: Theta,
) -> Result<BTreeSet<Bicluster>> {
    let (ng, nm) = (d.object_count(), d.attribute_count());
    if ng > MAX_OBJECTS || nm > MAX_ATTRIBUTES {
        return Err(Error::input(format!(
            "oracle limited to {MAX_OBJECTS}×{MAX_ATTRIBUTES}, got {ng}×{nm}"
        )));
    }
    let t = theta.value();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << ng) {
        let extent = members(mask, ng);
        // per-column (min, max) over the chosen rows
        let cols: Vec<(usize, f64, f64)> = (0..nm)
            .map(|m| {
                let vals = extent.iter().map(|&g| d.value(g, m));
                let lo = vals.clone().fold(f64::INFINITY, f64::min);
                let hi = vals.fold(f64::NEG_INFINITY, f64::max);
                (m, lo, hi)
            })
            .filter(|&(_, lo, hi)| hi - lo <= t)
            .collect();
        // every similar attribute set fits a window starting at one of the
        // column minima
        for &(_, start, _) in &cols {
            let intent: Vec<usize> = cols
                .iter()
                .filter(|&&(_, lo, hi)| lo >= start && hi - start <= t)
                .map(|&(m, _, _)| m)
                .collect();
            if intent.is_empty() {
                continue;
            }
            let b = Bicluster::new(extent.clone(), intent);
            if d.is_similar_bicluster(&b, theta)? && d.is_maximal_similar_bicluster(&b, theta)? {
                out.insert(b);
            }
        }
    }
    Ok(out)
}

/// All triadic concepts of `ctx`, degenerate ones included.
///
/// Enumerates every (extent, intent) pair of subsets, takes the largest
/// modus and keeps the triple iff no component can grow with the other two
/// fixed.
pub fn oracle_triconcepts(ctx: &TriadicContext) -> Result<BTreeSet<TriadicConcept>> {
    let (ng, nm, nc) = (
        ctx.object_count(),
        ctx.attribute_count(),
        ctx.condition_count(),
    );
    if ng + nm > MAX_SUBSET_BITS {
        return Err(Error::input(format!(
            "oracle limited to |G| + |M| <= {MAX_SUBSET_BITS}, got {}",
            ng + nm
        )));
    }
    let full_box = |gs: &[usize], ms: &[usize], cs: &[usize]| {
        gs.iter().all(|&g| {
            ms.iter()
                .all(|&m| cs.iter().all(|&c| ctx.incident(g, m, c)))
        })
    };
    let mut out = BTreeSet::new();
    for gmask in 0u32..(1 << ng) {
        let extent = members(gmask, ng);
        for mmask in 0u32..(1 << nm) {
            let intent = members(mmask, nm);
            let modus: Vec<usize> = (0..nc)
                .filter(|&c| full_box(&extent, &intent, &[c]))
                .collect();
            let extent_max = (0..ng)
                .filter(|g| !extent.contains(g))
                .all(|g| !full_box(&[g], &intent, &modus));
            let intent_max = (0..nm)
                .filter(|m| !intent.contains(m))
                .all(|m| !full_box(&extent, &[m], &modus));
            if extent_max && intent_max {
                out.insert(TriadicConcept {
                    extent: extent.clone(),
                    intent: intent.clone(),
                    modus,
                });
            }
        }
    }
    Ok(out)
}

/// `|Y|` of the scaled context, counted cell by cell and condition by
/// condition.
pub fn oracle_cross_count(d: &NumericalDataset, scale: &ScaleDimension) -> usize {
    let mut n = 0;
    for g in 0..d.object_count() {
        for m in 0..d.attribute_count() {
            let w = d.value(g, m);
            for c in &scale.conditions {
                if c.lo <= w && w <= c.hi {
                    n += 1;
                }
            }
        }
    }
    n
}
