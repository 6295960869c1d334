//! Maximal biclusters of similar values in numerical tables, mined through
//! triadic concept analysis.
//!
//! Two routes are provided:
//!
//! * [`tca::mine_all_theta`] scales values interordinally and reads every
//!   triadic concept as a bicluster that is maximal for some θ;
//! * [`trimax::trimax_mine`] scales values into tolerance blocks for one θ
//!   and mines each block's dyadic context independently.
//!
//! [`oracle`] holds brute-force reference miners for testing both.

pub mod bitset;
pub mod dataset;
pub mod error;
pub mod fca;
pub mod oracle;
pub mod sample;
pub mod scaling;
pub mod tca;
pub mod trimax;

pub use dataset::{is_similar, Bicluster, NumericalDataset, Theta};
pub use error::{Error, Result};
pub use scaling::{Interval, ScaleDimension, ScaleMode};
pub use tca::{ThetaAnnotatedBicluster, TriadicConcept};
pub use trimax::{trimax_mine, MiningConstraints, MiningReport};
