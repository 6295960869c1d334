//! Scale dimensions over the value set of a dataset and the contexts they
//! induce.
//!
//! A scale is an ordered list of closed intervals ("conditions"). A cell
//! (g, m) is incident with condition c iff its value lies in c. Interordinal
//! scales contain every down-set `[min, w]` and up-set `[w, max]`; tolerance
//! block scales contain the maximal sets of pairwise θ-similar values, each
//! written as its convex hull.

use std::fmt;

use crate::dataset::{NumericalDataset, Theta};
use crate::error::{Error, Result};
use crate::fca::FormalContext;

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !matches!(lo.partial_cmp(&hi), Some(o) if o.is_le()) {
            return Err(Error::input(format!("interval [{lo},{hi}] has lo > hi")));
        }
        Ok(Interval { lo, hi })
    }

    #[inline]
    pub fn contains(&self, w: f64) -> bool {
        self.lo <= w && w <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    /// `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleMode {
    /// Interordinal scale over the observed distinct values.
    InterordinalObserved,
    /// Interordinal scale over every integer between min and max.
    InterordinalDense,
    /// Tolerance blocks for a fixed θ.
    ToleranceBlocks,
}

/// Parameters of a dense interordinal scale: `s = q - r` with `r` the
/// smallest and `q` the largest value; the scale has `2s + 1` conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DenseParams {
    pub r: f64,
    pub q: f64,
    pub s: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScaleDimension {
    pub mode: ScaleMode,
    pub conditions: Vec<Interval>,
    pub theta: Option<Theta>,
    pub dense: Option<DenseParams>,
}

// Refuse dense scales that would not fit comfortably in memory.
const MAX_DENSE_SPAN: f64 = 1e7;

impl ScaleDimension {
    pub fn len(&self) -> usize {
        self.conditions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditions.is_empty()
    }

    /// Indices of conditions containing the whole interval `[lo, hi]`, ascending.
    pub fn conditions_containing(&self, lo: f64, hi: f64) -> Vec<usize> {
        match self.mode {
            ScaleMode::ToleranceBlocks => {
                let r = self.block_span(lo, hi);
                r.collect()
            }
            _ => self
                .conditions
                .iter()
                .enumerate()
                .filter(|(_, c)| c.lo <= lo && hi <= c.hi)
                .map(|(i, _)| i)
                .collect(),
        }
    }

    /// For tolerance blocks: the contiguous index range of blocks containing
    /// `[lo, hi]`. Relies on both endpoints being non-decreasing.
    pub fn block_span(&self, lo: f64, hi: f64) -> std::ops::Range<usize> {
        let end = self.conditions.partition_point(|c| c.lo <= lo);
        let start = self.conditions.partition_point(|c| c.hi < hi);
        start..end.max(start)
    }

    /// Number of conditions containing the single value `w`.
    pub fn membership_count(&self, w: f64) -> usize {
        match self.mode {
            ScaleMode::ToleranceBlocks => self.block_span(w, w).len(),
            _ => self.conditions.iter().filter(|c| c.contains(w)).count(),
        }
    }
}

fn check_values(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::input("value set is empty"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::input("value set contains a non-finite number"));
    }
    if values
        .windows(2)
        .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::input("value set must be strictly increasing"));
    }
    Ok(())
}

fn interordinal_conditions(values: &[f64]) -> Vec<Interval> {
    let first = values[0];
    let last = values[values.len() - 1];
    let down = values.iter().map(|&w| Interval { lo: first, hi: w });
    let up = values[1..].iter().map(|&w| Interval { lo: w, hi: last });
    down.chain(up).collect()
}

/// Interordinal scale over `values` (strictly increasing).
///
/// Observed mode yields `2|W| - 1` conditions ordered
/// `[w1,w1], [w1,w2], …, [w1,wn], [w2,wn], …, [wn,wn]`. Dense mode does the
/// same over every integer in `[min, max]`, giving `2s + 1` conditions.
pub fn interordinal_scale(values: &[f64], mode: ScaleMode) -> Result<ScaleDimension> {
    check_values(values)?;
    match mode {
        ScaleMode::InterordinalObserved => Ok(ScaleDimension {
            mode,
            conditions: interordinal_conditions(values),
            theta: None,
            dense: None,
        }),
        ScaleMode::InterordinalDense => {
            if let Some(v) = values.iter().find(|v| v.fract() != 0.0) {
                return Err(Error::input(format!(
                    "dense interordinal scaling needs integer values, found {v}"
                )));
            }
            let r = values[0];
            let q = values[values.len() - 1];
            if q - r > MAX_DENSE_SPAN {
                return Err(Error::input(format!(
                    "value span {} too large for dense scaling",
                    q - r
                )));
            }
            let s = (q - r) as u64;
            let all: Vec<f64> = (0..=s).map(|k| r + k as f64).collect();
            Ok(ScaleDimension {
                mode,
                conditions: interordinal_conditions(&all),
                theta: None,
                dense: Some(DenseParams { r, q, s }),
            })
        }
        ScaleMode::ToleranceBlocks => Err(Error::input(
            "tolerance blocks are built with tolerance_blocks(values, theta)",
        )),
    }
}

/// Tolerance blocks of `values` (strictly increasing) for `theta`, ordered by
/// lower endpoint.
///
/// Two-pointer sweep: for each left index find the furthest value within θ;
/// the candidate is a block unless its predecessor already reaches as far.
pub fn tolerance_blocks(values: &[f64], theta: Theta) -> Result<ScaleDimension> {
    check_values(values)?;
    let t = theta.value();
    let mut blocks = Vec::new();
    let mut reach = 0;
    let mut prev_reach = None;
    for (left, &lo) in values.iter().enumerate() {
        reach = reach.max(left);
        while reach + 1 < values.len() && values[reach + 1] - lo <= t {
            reach += 1;
        }
        if prev_reach.is_none_or(|p| reach > p) {
            blocks.push(Interval {
                lo,
                hi: values[reach],
            });
        }
        prev_reach = Some(reach);
    }
    Ok(ScaleDimension {
        mode: ScaleMode::ToleranceBlocks,
        conditions: blocks,
        theta: Some(theta),
        dense: None,
    })
}

/// Dyadic context of one condition: `(g, m)` incident iff `value(g, m) ∈ block`.
pub fn block_context(d: &NumericalDataset, block: &Interval) -> FormalContext {
    FormalContext::from_fn(d.object_count(), d.attribute_count(), |g, m| {
        block.contains(d.value(g, m))
    })
}

/// Number of triples of the scaled triadic context, computed without
/// materialising it.
pub fn scaled_crosses(d: &NumericalDataset, scale: &ScaleDimension) -> usize {
    d.cells().iter().map(|&w| scale.membership_count(w)).sum()
}

/// `|Y| / (|G|·|M|·|C|)` of the scaled triadic context.
pub fn scaled_density(d: &NumericalDataset, scale: &ScaleDimension) -> f64 {
    let cells = d.object_count() * d.attribute_count() * scale.len();
    if cells == 0 {
        return 0.0;
    }
    scaled_crosses(d, scale) as f64 / cells as f64
}

/// Materialised ternary incidence objects × attributes × conditions, stored as
/// one dyadic slice per condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriadicContext {
    object_count: usize,
    attribute_count: usize,
    slices: Vec<FormalContext>,
}

impl TriadicContext {
    pub fn from_fn(
        object_count: usize,
        attribute_count: usize,
        condition_count: usize,
        mut incident: impl FnMut(usize, usize, usize) -> bool,
    ) -> Self {
        let slices = (0..condition_count)
            .map(|c| {
                FormalContext::from_fn(object_count, attribute_count, |g, m| incident(g, m, c))
            })
            .collect();
        TriadicContext {
            object_count,
            attribute_count,
            slices,
        }
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn attribute_count(&self) -> usize {
        self.attribute_count
    }

    pub fn condition_count(&self) -> usize {
        self.slices.len()
    }

    #[inline]
    pub fn incident(&self, g: usize, m: usize, c: usize) -> bool {
        self.slices[c].incident(g, m)
    }

    pub fn slice(&self, c: usize) -> &FormalContext {
        &self.slices[c]
    }

    pub fn crosses(&self) -> usize {
        self.slices.iter().map(FormalContext::crosses).sum()
    }

    /// Conditions under which every (g, m) of `extent × intent` is incident.
    pub fn modus(&self, extent: &[usize], intent: &[usize]) -> Vec<usize> {
        (0..self.condition_count())
            .filter(|&c| {
                extent
                    .iter()
                    .all(|&g| intent.iter().all(|&m| self.incident(g, m, c)))
            })
            .collect()
    }

    /// The dyadic context (G, M×C) with attribute `(m, c)` at `m·|C| + c`.
    pub fn flatten(&self) -> FormalContext {
        let nc = self.condition_count();
        FormalContext::from_fn(self.object_count, self.attribute_count * nc, |g, mc| {
            self.incident(g, mc / nc, mc % nc)
        })
    }
}

/// Triadic scaled context: `(g, m, c) ∈ Y` iff `value(g, m) ∈ conditions[c]`.
pub fn build_triadic_context(d: &NumericalDataset, scale: &ScaleDimension) -> TriadicContext {
    TriadicContext {
        object_count: d.object_count(),
        attribute_count: d.attribute_count(),
        slices: scale
            .conditions
            .iter()
            .map(|block| block_context(d, block))
            .collect(),
    }
}

/// `|Y| / (|G|·|M|·|C|)`.
pub fn context_density(t: &TriadicContext) -> f64 {
    let cells = t.object_count * t.attribute_count * t.condition_count();
    if cells == 0 {
        return 0.0;
    }
    t.crosses() as f64 / cells as f64
}
