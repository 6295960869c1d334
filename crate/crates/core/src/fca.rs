//! Dyadic formal concept analysis over bitset contexts.
//!
//! A [`FormalContext`] stores its incidence twice, as object rows and as
//! attribute columns, so both derivation operators are word-parallel
//! intersections. Concepts are enumerated with Close-by-One: a depth-first
//! walk over attributes in which each intent is generated from exactly one
//! parent, the one passing the canonicity test.

use crate::bitset::BitSet;
use crate::dataset::Bicluster;
use crate::error::{Error, Result};

/// Binary incidence between `object_count` objects and `attribute_count`
/// attributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    rows: Vec<BitSet>,
    cols: Vec<BitSet>,
}

/// A pair (extent, intent) closed under the derivation operators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicConcept {
    pub extent: BitSet,
    pub intent: BitSet,
}

impl DyadicConcept {
    pub fn to_bicluster(&self) -> Bicluster {
        Bicluster {
            extent: self.extent.to_vec(),
            intent: self.intent.to_vec(),
        }
    }
}

impl FormalContext {
    pub fn from_fn(
        object_count: usize,
        attribute_count: usize,
        mut incident: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let mut rows = vec![BitSet::new(attribute_count); object_count];
        let mut cols = vec![BitSet::new(object_count); attribute_count];
        for (g, row) in rows.iter_mut().enumerate() {
            for (m, col) in cols.iter_mut().enumerate() {
                if incident(g, m) {
                    row.insert(m);
                    col.insert(g);
                }
            }
        }
        FormalContext { rows, cols }
    }

    pub fn from_rows(attribute_count: usize, rows: &[Vec<usize>]) -> Self {
        let sets: Vec<BitSet> = rows
            .iter()
            .map(|r| BitSet::from_indices(attribute_count, r.iter().copied()))
            .collect();
        FormalContext::from_fn(rows.len(), attribute_count, |g, m| sets[g].contains(m))
    }

    pub fn object_count(&self) -> usize {
        self.rows.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    pub fn row(&self, g: usize) -> &BitSet {
        &self.rows[g]
    }

    pub fn column(&self, m: usize) -> &BitSet {
        &self.cols[m]
    }

    /// Number of incident pairs.
    pub fn crosses(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    /// Attributes shared by every object of `objects`; all attributes for ∅.
    pub fn derive_intent(&self, objects: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.attribute_count());
        for (m, col) in self.cols.iter().enumerate() {
            if objects.is_subset(col) {
                out.insert(m);
            }
        }
        out
    }

    /// Objects having every attribute of `attributes`; all objects for ∅.
    pub fn derive_extent(&self, attributes: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.object_count());
        for (g, row) in self.rows.iter().enumerate() {
            if attributes.is_subset(row) {
                out.insert(g);
            }
        }
        out
    }

    pub fn object_set(&self, objects: &[usize]) -> Result<BitSet> {
        index_set("object", self.object_count(), objects)
    }

    pub fn attribute_set(&self, attributes: &[usize]) -> Result<BitSet> {
        index_set("attribute", self.attribute_count(), attributes)
    }

    /// Closes a fully incident rectangle (A, B) to the concept (A″, A′).
    pub fn inner_closure(&self, b: &Bicluster) -> Result<DyadicConcept> {
        let extent = self.object_set(&b.extent)?;
        let intent = self.attribute_set(&b.intent)?;
        let derived = self.derive_intent(&extent);
        if !intent.is_subset(&derived) {
            return Err(Error::contract(format!(
                "rectangle {:?} × {:?} is not fully incident",
                b.extent, b.intent
            )));
        }
        Ok(DyadicConcept {
            extent: self.derive_extent(&derived),
            intent: derived,
        })
    }

    pub fn is_concept(&self, extent: &BitSet, intent: &BitSet) -> bool {
        self.derive_intent(extent) == *intent && self.derive_extent(intent) == *extent
    }

    /// Every concept of the context, each exactly once, in Close-by-One order.
    pub fn enumerate_concepts(&self) -> Vec<DyadicConcept> {
        let mut out = Vec::new();
        self.for_each_concept(0, |extent, intent| {
            out.push(DyadicConcept {
                extent: extent.clone(),
                intent: intent.clone(),
            })
        });
        out
    }

    /// Visits every concept whose extent has at least `min_extent` objects.
    ///
    /// Extents only shrink along a Close-by-One branch, so subtrees below the
    /// bound are cut without being generated.
    pub fn for_each_concept<F>(&self, min_extent: usize, mut visit: F)
    where
        F: FnMut(&BitSet, &BitSet),
    {
        if self.object_count() < min_extent {
            return;
        }
        let extent = BitSet::full(self.object_count());
        let intent = self.derive_intent(&extent);
        self.close_by_one(&extent, &intent, 0, min_extent, &mut visit);
    }

    fn close_by_one<F>(
        &self,
        extent: &BitSet,
        intent: &BitSet,
        start: usize,
        min_extent: usize,
        visit: &mut F,
    ) where
        F: FnMut(&BitSet, &BitSet),
    {
        visit(extent, intent);
        for j in start..self.attribute_count() {
            if intent.contains(j) {
                continue;
            }
            let child_extent = extent.intersection(&self.cols[j]);
            if child_extent.count() < min_extent {
                continue;
            }
            let child_intent = self.derive_intent(&child_extent);
            // canonicity: closing must not add any attribute before j
            if child_intent.agrees_below(intent, j) {
                self.close_by_one(&child_extent, &child_intent, j + 1, min_extent, visit);
            }
        }
    }
}

fn index_set(axis: &'static str, len: usize, indices: &[usize]) -> Result<BitSet> {
    let mut s = BitSet::new(len);
    for &i in indices {
        if i >= len {
            return Err(Error::OutOfBounds {
                axis,
                index: i,
                len,
            });
        }
        s.insert(i);
    }
    Ok(s)
}
