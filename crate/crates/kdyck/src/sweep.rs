//! The sweep map, the tableau pair that recovers preimage ranks, and the
//! linear inverse built on them.
//!
//! Sweeping reads the steps of a path by start level, bottom to top, and
//! right to left within a level, producing a new path over some rearrangement
//! of the same up-step lengths. The map is a bijection on the union of path
//! families over all rearrangements of a fixed multiset of up lengths.
//!
//! Inverting it is the interesting part: the filling tableau records, column
//! by column, which image step index lands in which cell; the ranking tableau
//! then assigns each index the start level its preimage step had. With those
//! levels known, the preimage can be rebuilt greedily in one left-to-right
//! pass.

use std::cmp::Reverse;

use serde::Serialize;

use crate::error::Error;
use crate::path::{KDyckPath, Step};

/// Sort key realizing the sweep order: start level ascending, ties broken
/// right to left in the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SweepKey {
    pub start_rank: usize,
    /// Reversed position, so that later steps compare smaller within a level.
    pub position: Reverse<usize>,
}

impl SweepKey {
    pub fn new(start_rank: usize, position: usize) -> Self {
        SweepKey {
            start_rank,
            position: Reverse(position),
        }
    }
}

/// The 0-based step indices of `path` in sweep order.
pub fn sweep_order(path: &KDyckPath) -> Vec<usize> {
    let ranks = path.rank_sequence();
    let mut order: Vec<usize> = (0..path.step_count()).collect();
    order.sort_by_key(|&i| SweepKey::new(ranks.start_ranks()[i], i));
    order
}

/// Rearranges the steps of `path` into sweep order.
///
/// The result is always a valid path; that it is reflects the nontrivial
/// geometry of the map, so validity is asserted rather than returned.
pub fn sweep_map(path: &KDyckPath) -> KDyckPath {
    let steps: Vec<Step> = sweep_order(path)
        .into_iter()
        .map(|i| path.steps()[i])
        .collect();
    KDyckPath::new(steps).expect("sweep image of a valid path is a valid path")
}

/// Columns of step indices produced by the filling pass; see
/// [`filling_tableau`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillingTableau {
    columns: Vec<Vec<usize>>,
}

impl FillingTableau {
    /// Validates the tableau shape: every index `1..=m` exactly once,
    /// columns increasing downward, tops increasing left to right.
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self, Error> {
        let m: usize = columns.iter().map(|c| c.len()).sum();
        let mut seen = vec![false; m + 1];
        for col in &columns {
            if col.is_empty() || col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadComposition);
            }
            for &idx in col {
                if idx == 0 || idx > m || seen[idx] {
                    return Err(Error::BadComposition);
                }
                seen[idx] = true;
            }
        }
        if columns.windows(2).any(|w| w[0][0] >= w[1][0]) {
            return Err(Error::BadComposition);
        }
        Ok(FillingTableau { columns })
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Total number of cells, i.e. the step count of the source path.
    pub fn cell_count(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }
}

/// Same shape as a filling tableau, holding start levels; see
/// [`ranking_tableau`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankTableau {
    columns: Vec<Vec<usize>>,
}

impl RankTableau {
    pub(crate) fn from_columns_unchecked(columns: Vec<Vec<usize>>) -> Self {
        RankTableau { columns }
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Top entry of each column, left to right.
    pub fn first_row(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c[0]).collect()
    }

    /// Sum of the first-row entries.
    pub fn first_row_sum(&self) -> u64 {
        self.columns.iter().map(|c| c[0] as u64).sum()
    }
}

/// Distributes the step indices `1..=m` of a path into columns, one column
/// per up step with room for that step and its forced share of down steps.
///
/// Index `i` goes to the top of the first empty column when step `i` is an
/// up step, and immediately below the smallest active entry when it is a
/// down step. An entry is active while it sits at the bottom of a column
/// that is not yet full; a down step always finds one in a valid path.
pub fn filling_tableau(path: &KDyckPath) -> FillingTableau {
    let capacities: Vec<usize> = path
        .steps()
        .iter()
        .filter_map(|s| match s {
            Step::Up(k) => Some(k + 1),
            Step::Down => None,
        })
        .collect();
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(capacities.len());
    for (i, step) in path.steps().iter().enumerate() {
        let index = i + 1;
        match step {
            Step::Up(_) => columns.push(vec![index]),
            Step::Down => {
                let column = columns
                    .iter_mut()
                    .enumerate()
                    .filter(|(j, col)| col.len() < capacities[*j])
                    .min_by_key(|(_, col)| *col.last().expect("columns start nonempty"))
                    .map(|(_, col)| col)
                    .unwrap_or_else(|| {
                        unreachable!("down step {index} found no active entry in a valid path")
                    });
                column.push(index);
            }
        }
    }
    debug_assert!(columns
        .iter()
        .zip(&capacities)
        .all(|(col, &cap)| col.len() == cap));
    FillingTableau { columns }
}

/// Assigns every index of a filling tableau the start level of its preimage
/// step.
///
/// The first column gets `0..=k1`; the top of each later column copies the
/// level of the index numerically preceding its top index, and the rest of
/// the column counts up from there.
pub fn ranking_tableau(tableau: &FillingTableau) -> RankTableau {
    let m = tableau.cell_count();
    let mut rank_of_index = vec![usize::MAX; m + 1];
    let mut columns = Vec::with_capacity(tableau.columns().len());
    for (j, column) in tableau.columns().iter().enumerate() {
        let top_rank = if j == 0 {
            0
        } else {
            let top = column[0];
            debug_assert!(top >= 2, "a later column top always has a predecessor");
            rank_of_index[top - 1]
        };
        debug_assert_ne!(top_rank, usize::MAX, "predecessor rank already assigned");
        let ranked: Vec<usize> = (0..column.len()).map(|offset| top_rank + offset).collect();
        for (&idx, &rank) in column.iter().zip(&ranked) {
            rank_of_index[idx] = rank;
        }
        columns.push(ranked);
    }
    RankTableau { columns }
}

/// The rank assigned to each step index `1..=m`, in index order. Weakly
/// increasing for tableaux built from a path.
pub fn ranks_by_index(filling: &FillingTableau, ranking: &RankTableau) -> Vec<usize> {
    let m = filling.cell_count();
    let mut ranks = vec![0usize; m];
    for (col_f, col_r) in filling.columns().iter().zip(ranking.columns()) {
        for (&idx, &rank) in col_f.iter().zip(col_r) {
            ranks[idx - 1] = rank;
        }
    }
    ranks
}

/// Inverts the sweep map.
///
/// The filling/ranking pass recovers the start level every image step had in
/// the preimage. The preimage is then rebuilt left to right: starting at
/// level 0, repeatedly append the unused image step of the current level
/// with the largest index (at equal levels the sweep reads right to left,
/// so the largest index lies furthest left in the preimage), and move to
/// that step's end level.
pub fn inverse_sweep(image: &KDyckPath) -> KDyckPath {
    let filling = filling_tableau(image);
    let ranking = ranking_tableau(&filling);
    let ranks = ranks_by_index(&filling, &ranking);

    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); max_rank + 1];
    for (index0, &rank) in ranks.iter().enumerate() {
        by_rank[rank].push(index0);
    }

    let m = image.step_count();
    let mut steps = Vec::with_capacity(m);
    let mut level = 0usize;
    for _ in 0..m {
        let index0 = by_rank
            .get_mut(level)
            .and_then(Vec::pop)
            .unwrap_or_else(|| unreachable!("no unused step starts at level {level}"));
        let step = image.steps()[index0];
        steps.push(step);
        level = (level as i64 + step.rise()) as usize;
    }
    let preimage = KDyckPath::from_steps_unchecked(steps);
    debug_assert_eq!(sweep_map(&preimage), *image);
    preimage
}

/// The start level that step `step_index` (1-based) of `path` acquires under
/// the sweep map, computed without building the image: total up length of
/// the steps swept strictly earlier, minus the number of down steps swept
/// strictly earlier.
pub fn swept_start_rank(path: &KDyckPath, step_index: usize) -> Result<i64, Error> {
    let m = path.step_count();
    if step_index == 0 || step_index > m {
        return Err(Error::IndexOutOfRange {
            index: step_index,
            count: m,
        });
    }
    let target = step_index - 1;
    let ranks = path.rank_sequence();
    let starts = ranks.start_ranks();
    let key = SweepKey::new(starts[target], target);
    let mut value = 0i64;
    for (i, step) in path.steps().iter().enumerate() {
        if i != target && SweepKey::new(starts[i], i) < key {
            value += match step {
                Step::Up(k) => *k as i64,
                Step::Down => -1,
            };
        }
    }
    Ok(value)
}
