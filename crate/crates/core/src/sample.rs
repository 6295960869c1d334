//! Small built-in datasets for docs, tests and smoke runs.

use crate::dataset::NumericalDataset;

/// Four objects `g1..g4` over five attributes `m1..m5`, values in {0,1,2,6,7,8,9}.
///
/// ```text
///      m1 m2 m3 m4 m5
///  g1   1  2  2  1  6
///  g2   2  1  1  0  6
///  g3   2  2  1  7  6
///  g4   8  9  2  6  7
/// ```
pub fn toy_dataset() -> NumericalDataset {
    NumericalDataset::from_rows(vec![
        vec![1.0, 2.0, 2.0, 1.0, 6.0],
        vec![2.0, 1.0, 1.0, 0.0, 6.0],
        vec![2.0, 2.0, 1.0, 7.0, 6.0],
        vec![8.0, 9.0, 2.0, 6.0, 7.0],
    ])
    .expect("toy dataset is well formed")
}
