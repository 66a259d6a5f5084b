//! Exact computation of the reciprocal of a coefficient sequence.
//!
//! Given `a = (1, a1, a2, ...)`, the sequence `b` with
//! `sum_{h=0}^{n} a_{n-h} b_h = 1` for `n = 0` and `0` otherwise is computed
//! exactly by several independent routes: the linear recursion, sums over
//! compositions, partitions and diophantine solutions of `n`, a
//! lower-Hessenberg determinant, and a truncated power-series inverse.
//!
//! ```
//! use partseq::catalog::{named_value, CatalogEntry};
//! use partseq::exact::Rational;
//! use partseq::recurrence::MethodId;
//!
//! let b4 = named_value(CatalogEntry::Bernoulli, 4, MethodId::Partition, 26).unwrap();
//! assert_eq!(b4, Rational::ratio(-1, 30));
//! ```
//!
//! Runnable walkthroughs live in `examples/`; the `partseq` binary exposes
//! the same operations on the command line (see [`cli`]).

pub mod catalog;
pub mod cli;
pub mod error;
pub mod exact;
pub mod partitions;
pub mod recurrence;

pub use catalog::CatalogEntry;
pub use error::{Error, Result};
pub use exact::Rational;
pub use recurrence::{CoefficientSequence, MethodId};
