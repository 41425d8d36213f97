//! Lattice paths with long up steps ("k-vector Dyck paths"), the sweep map
//! and its linear inverse, the area/dinv/bounce statistics, and exact
//! `q,t`-polynomials aggregated over whole path families.
//!
//! The central object is [`KDyckPath`]: a sequence of up steps of prescribed
//! positive lengths and unit down steps that stays on or above the
//! horizontal axis. [`sweep_map`] reorders the steps of a path by start
//! level (bottom to top, right to left within a level); [`inverse_sweep`]
//! undoes it in linear time via a pair of tableau constructions. The
//! statistics transport along the map — dinv becomes area, area becomes
//! bounce — and [`verify`] re-checks that, and everything around it,
//! exhaustively at desk scale.
//!
//! ```
//! use kdyck::{sweep_map, inverse_sweep, area, dinv, bounce, KDyckPath};
//!
//! let path = KDyckPath::parse("S3 W S1 W W W S4 W W S1 S1 W W W W")?;
//! let image = sweep_map(&path);
//!
//! assert_eq!(dinv(&path).total, area(&image));
//! assert_eq!(area(&path), bounce(&image).value);
//! assert_eq!(inverse_sweep(&image), path);
//! # Ok::<(), kdyck::Error>(())
//! ```
//!
//! Runnable tours of each capability live in the `examples/` directory.

mod error;
mod path;
mod poly;
mod stats;
mod sweep;
pub mod verify;

pub use error::Error;
pub use path::{
    compositions_of, compositions_up_to, enumerate_paths, partitions_up_to, Composition,
    CompositionsOf, KDyckPath, Limits, Partition, PathEnumerator, RankSequence, RowCounts, Step,
};
pub use poly::{c_lambda, n2_involution, symmetry_defect, QTPolynomial, StatisticPair};
pub use stats::{
    area, bounce, bounce_closed_form_n3, dinv, remove_top_cell, statistics, BounceTrace,
    DinvBreakdown, PathStatistics,
};
pub use sweep::{
    filling_tableau, inverse_sweep, ranking_tableau, ranks_by_index, sweep_map, sweep_order,
    swept_start_rank, FillingTableau, RankTableau, SweepKey,
};
