//! The crate-wide error type.

use thiserror::Error;

/// Errors reported by path construction, parsing, and guarded enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A path must contain at least one step.
    #[error("path has no steps")]
    EmptyPath,

    /// Signed step lengths must sum to zero so the path returns to the axis.
    #[error("path ends at level {final_level}, not on the axis")]
    NonzeroTotal { final_level: i64 },

    /// Prefix sums must stay nonnegative. `index` is the 1-based step after
    /// which the path first dips below the axis.
    #[error("path dips below the axis after step {index}")]
    PrefixNegative { index: usize },

    /// Up steps must have positive length.
    #[error("up step at position {index} has zero length")]
    ZeroUpLength { index: usize },

    /// Unrecognized token in the text form. `position` is 1-based.
    #[error("bad token {token:?} at position {position}")]
    Syntax { position: usize, token: String },

    /// Red ranks must start at 0 and satisfy `r[i+1] <= r[i] + k[i]`.
    /// `index` is the 1-based offending entry (0 for a length mismatch).
    #[error("red rank {index} out of range for the composition")]
    BadRedRanks { index: usize },

    /// Composition parts must be positive, and there must be at least one.
    #[error("composition needs at least one part, all positive")]
    BadComposition,

    /// Partition parts must be positive and weakly decreasing.
    #[error("partition parts must be positive and weakly decreasing")]
    BadPartition,

    /// The operation needs a composition with exactly three parts.
    #[error("composition has {parts} parts, expected exactly 3")]
    NotThreeParts { parts: usize },

    /// A configured size limit would be exceeded.
    #[error("size guard exceeded: {detail}")]
    SizeGuard { detail: String },

    /// Step index outside `1..=step_count`.
    #[error("step index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },

    /// The rank-reversing involution is defined only for two up steps.
    #[error("path has {ups} up steps, expected exactly 2")]
    NotTwoUps { ups: usize },

    /// Cell removal needs positive area.
    #[error("path already has area 0")]
    ZeroArea,
}
