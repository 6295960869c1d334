//! Numerical datasets (many-valued contexts), biclusters and the similarity
//! predicates every miner in this crate is judged against.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Similarity parameter: two values are similar iff they differ by at most θ.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Theta(f64);

impl Theta {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::input(format!(
                "theta must be a finite non-negative number, got {value}"
            )));
        }
        Ok(Theta(value))
    }

    pub fn zero() -> Self {
        Theta(0.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `w1 ≃θ w2`: reflexive and symmetric, not transitive.
#[inline]
pub fn is_similar(w1: f64, w2: f64, theta: Theta) -> bool {
    (w1 - w2).abs() <= theta.0
}

/// A complete object × attribute matrix of finite values.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericalDataset {
    object_ids: Vec<String>,
    attribute_ids: Vec<String>,
    // row-major, objects × attributes
    values: Vec<f64>,
}

impl NumericalDataset {
    pub fn new(
        object_ids: Vec<String>,
        attribute_ids: Vec<String>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if object_ids.is_empty() || attribute_ids.is_empty() {
            return Err(Error::input(
                "dataset needs at least one object and one attribute",
            ));
        }
        check_unique("object", &object_ids)?;
        check_unique("attribute", &attribute_ids)?;
        if rows.len() != object_ids.len() {
            return Err(Error::input(format!(
                "{} object labels but {} rows",
                object_ids.len(),
                rows.len()
            )));
        }
        let mut values = Vec::with_capacity(object_ids.len() * attribute_ids.len());
        for (g, row) in rows.into_iter().enumerate() {
            if row.len() != attribute_ids.len() {
                return Err(Error::input(format!(
                    "row {} ({}) has {} cells, expected {}",
                    g,
                    object_ids[g],
                    row.len(),
                    attribute_ids.len()
                )));
            }
            for (m, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::input(format!(
                        "cell ({}, {}) is not a finite number: {v}",
                        object_ids[g], attribute_ids[m]
                    )));
                }
            }
            values.extend(row);
        }
        Ok(NumericalDataset {
            object_ids,
            attribute_ids,
            values,
        })
    }

    /// Builds a dataset labelled `g1..gn` × `m1..mk`.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n_attr = rows.first().map_or(0, Vec::len);
        let objects = (1..=rows.len()).map(|i| format!("g{i}")).collect();
        let attributes = (1..=n_attr).map(|i| format!("m{i}")).collect();
        NumericalDataset::new(objects, attributes, rows)
    }

    pub fn object_count(&self) -> usize {
        self.object_ids.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attribute_ids.len()
    }

    pub fn object_ids(&self) -> &[String] {
        &self.object_ids
    }

    pub fn attribute_ids(&self) -> &[String] {
        &self.attribute_ids
    }

    #[inline]
    pub fn value(&self, g: usize, m: usize) -> f64 {
        self.values[g * self.attribute_ids.len() + m]
    }

    pub fn row(&self, g: usize) -> &[f64] {
        let k = self.attribute_ids.len();
        &self.values[g * k..(g + 1) * k]
    }

    pub fn cells(&self) -> &[f64] {
        &self.values
    }

    /// Strictly increasing list of every distinct cell value.
    pub fn distinct_values(&self) -> Vec<f64> {
        let mut w = self.values.clone();
        w.sort_by(f64::total_cmp);
        w.dedup();
        w
    }

    /// (min, max) over all cells.
    pub fn value_range(&self) -> (f64, f64) {
        self.values
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }

    /// (min, max) over the A×B rectangle, `None` when it is empty.
    pub fn range_of(&self, extent: &[usize], intent: &[usize]) -> Option<(f64, f64)> {
        if extent.is_empty() || intent.is_empty() {
            return None;
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &g in extent {
            let row = self.row(g);
            for &m in intent {
                let v = row[m];
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        Some((lo, hi))
    }

    pub fn check_bounds(&self, b: &Bicluster) -> Result<()> {
        for &g in &b.extent {
            if g >= self.object_count() {
                return Err(Error::OutOfBounds {
                    axis: "object",
                    index: g,
                    len: self.object_count(),
                });
            }
        }
        for &m in &b.intent {
            if m >= self.attribute_count() {
                return Err(Error::OutOfBounds {
                    axis: "attribute",
                    index: m,
                    len: self.attribute_count(),
                });
            }
        }
        Ok(())
    }

    /// Every pair of cells of A×B is pairwise similar.
    pub fn is_similar_bicluster(&self, b: &Bicluster, theta: Theta) -> Result<bool> {
        self.check_bounds(b)?;
        Ok(self.similar_unchecked(&b.extent, &b.intent, theta))
    }

    fn similar_unchecked(&self, extent: &[usize], intent: &[usize], theta: Theta) -> bool {
        match self.range_of(extent, intent) {
            Some((lo, hi)) => is_similar(lo, hi, theta),
            None => true,
        }
    }

    /// A similar bicluster to which no single object or attribute can be added
    /// without breaking similarity.
    pub fn is_maximal_similar_bicluster(&self, b: &Bicluster, theta: Theta) -> Result<bool> {
        if !self.is_similar_bicluster(b, theta)? {
            return Err(Error::contract(
                "maximality is only defined for biclusters of similar values",
            ));
        }
        let Some((lo, hi)) = self.range_of(&b.extent, &b.intent) else {
            // an empty rectangle grows along whichever side is non-empty
            return Ok(false);
        };
        let fits = |cells: &mut dyn Iterator<Item = f64>| {
            let (l, h) = cells.fold((lo, hi), |(l, h), v| (l.min(v), h.max(v)));
            is_similar(l, h, theta)
        };
        for g in (0..self.object_count()).filter(|g| !b.extent.contains(g)) {
            if fits(&mut b.intent.iter().map(|&m| self.value(g, m))) {
                return Ok(false);
            }
        }
        for m in (0..self.attribute_count()).filter(|m| !b.intent.contains(m)) {
            if fits(&mut b.extent.iter().map(|&g| self.value(g, m))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn object_labels(&self, indices: &[usize]) -> Vec<String> {
        indices
            .iter()
            .map(|&g| self.object_ids[g].clone())
            .collect()
    }

    pub fn attribute_labels(&self, indices: &[usize]) -> Vec<String> {
        indices
            .iter()
            .map(|&m| self.attribute_ids[m].clone())
            .collect()
    }
}

fn check_unique(axis: &str, labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::input(format!("duplicate {axis} label {l:?}")));
        }
    }
    Ok(())
}

/// A pair (objects, attributes), both kept sorted and deduplicated.
///
/// The derived ordering is lexicographic on extent, then intent; every miner
/// sorts its output by it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bicluster {
    pub extent: Vec<usize>,
    pub intent: Vec<usize>,
}

impl Bicluster {
    pub fn new(mut extent: Vec<usize>, mut intent: Vec<usize>) -> Self {
        extent.sort_unstable();
        extent.dedup();
        intent.sort_unstable();
        intent.dedup();
        Bicluster { extent, intent }
    }

    pub fn is_degenerate(&self) -> bool {
        self.extent.is_empty() || self.intent.is_empty()
    }

    pub fn area(&self) -> usize {
        self.extent.len() * self.intent.len()
    }
}
