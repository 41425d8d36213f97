//! The three path statistics: area, dinv, and bounce.
//!
//! Area is the sum of the up-step start levels. Dinv counts, for each
//! (down, up) pair in path order, whether sliding the down step rightward
//! along a line of tiny positive slope crosses the up step, plus a
//! correction summed over nested up-step pairs. Bounce runs the bouncing
//! construction on the square-grid reading of the path (up steps become
//! north runs, down steps unit east steps) and weights the vertical moves by
//! their round number.

use serde::Serialize;

use crate::error::Error;
use crate::path::{Composition, KDyckPath, Step};
use crate::sweep::RankTableau;

/// Sum of the start levels of the up steps.
pub fn area(path: &KDyckPath) -> u64 {
    path.red_ranks().iter().map(|&r| r as u64).sum()
}

/// The two contributions to dinv and their sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DinvBreakdown {
    /// Crossing (down, up) pairs.
    pub sweep: u64,
    /// Nesting correction over up-step pairs.
    pub red: u64,
    /// `sweep + red`.
    pub total: u64,
}

/// Computes dinv.
///
/// A down step at level `r` crosses a later up step spanning `[a, b]`
/// exactly when `a <= r <= b`. An up-step pair nests when one's level span
/// contains the other's after the slope-epsilon shift; such a pair
/// contributes the difference of the end levels.
pub fn dinv(path: &KDyckPath) -> DinvBreakdown {
    let ranks = path.rank_sequence();
    let starts = ranks.start_ranks();
    let ends = ranks.end_ranks();
    let steps = path.steps();
    let mut sweep = 0u64;
    let mut red = 0u64;
    for i in 0..steps.len() {
        for j in i + 1..steps.len() {
            match (steps[i], steps[j]) {
                (Step::Down, Step::Up(_)) => {
                    if starts[j] <= starts[i] && starts[i] <= ends[j] {
                        sweep += 1;
                    }
                }
                (Step::Up(_), Step::Up(_)) => {
                    if starts[i] >= starts[j] && ends[j] > ends[i] {
                        red += (ends[j] - ends[i]) as u64;
                    } else if starts[i] < starts[j] && ends[j] < ends[i] {
                        red += (ends[i] - ends[j]) as u64;
                    }
                }
                _ => {}
            }
        }
    }
    DinvBreakdown {
        sweep,
        red,
        total: sweep + red,
    }
}

/// Full record of one bouncing run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BounceTrace {
    /// North runs consumed per round.
    pub v: Vec<u64>,
    /// East steps traveled per round.
    pub h: Vec<u64>,
    /// Final rank tableau of the construction.
    #[serde(skip)]
    pub tableau: RankTableau,
    /// `sum of i * v[i]`; also the first-row sum of the tableau.
    pub value: u64,
}

/// Runs the bouncing construction.
///
/// Round `i` starting at `(x, y)`: climb to the west end of the east step at
/// column `x`; `v[i]` is the number of whole north runs passed, consumed in
/// path order. Each consumed run of length `k` appends a tableau column
/// `i, i+1, ..., i+k`. Then `h[i]` counts the entries equal to `i + 1` in
/// the whole tableau, and the position moves east by `h[i]`. The run ends in
/// the top-right corner.
pub fn bounce(path: &KDyckPath) -> BounceTrace {
    // square-grid data: west-end height of each east step, and the cumulative
    // height at the top of each north run
    let mut east_heights = Vec::with_capacity(path.down_count());
    let mut run_tops = Vec::with_capacity(path.up_count());
    let mut height = 0usize;
    for step in path.steps() {
        match step {
            Step::Up(k) => {
                height += k;
                run_tops.push(height);
            }
            Step::Down => east_heights.push(height),
        }
    }
    let side = height;

    let mut v = Vec::new();
    let mut h = Vec::new();
    let mut columns: Vec<Vec<usize>> = Vec::new();
    let (mut x, mut y) = (0usize, 0usize);
    let mut next_run = 0usize;
    let mut round = 0usize;
    while x < side || y < side {
        assert!(x < side, "bounce path passed the corner at ({x}, {y})");
        let stop = east_heights[x];
        debug_assert!(stop >= y, "bounce path may only climb");
        let mut consumed = 0u64;
        while next_run < run_tops.len() && run_tops[next_run] <= stop {
            let base = if next_run == 0 {
                0
            } else {
                run_tops[next_run - 1]
            };
            let length = run_tops[next_run] - base;
            columns.push((round..=round + length).collect());
            next_run += 1;
            consumed += 1;
        }
        v.push(consumed);
        y = stop;
        let travel = columns
            .iter()
            .flatten()
            .filter(|&&entry| entry == round + 1)
            .count() as u64;
        h.push(travel);
        x += travel as usize;
        assert!(
            consumed > 0 || travel > 0,
            "bounce stalled at ({x}, {y}) in round {round}"
        );
        round += 1;
    }
    let value = v.iter().enumerate().map(|(i, &vi)| i as u64 * vi).sum();
    let tableau = RankTableau::from_columns_unchecked(columns);
    debug_assert_eq!(value, tableau.first_row_sum());
    BounceTrace {
        v,
        h,
        tableau,
        value,
    }
}

/// Closed form for the bounce of a three-up-step path given its composition
/// and the start levels `(0, r2, r3)` of its up steps.
///
/// Agrees with [`bounce`] of the rebuilt path on every valid input.
pub fn bounce_closed_form_n3(k: &Composition, r2: usize, r3: usize) -> Result<u64, Error> {
    if k.part_count() != 3 {
        return Err(Error::NotThreeParts {
            parts: k.part_count(),
        });
    }
    let (k1, k2) = (k.parts()[0], k.parts()[1]);
    if r2 > k1 {
        return Err(Error::BadRedRanks { index: 2 });
    }
    if r3 > r2 + k2 {
        return Err(Error::BadRedRanks { index: 3 });
    }
    let spread = r2 + k2 - r3;
    let pivot = r2.min(k2);
    let value = if spread >= 2 * pivot {
        2 * (k1 - r2) + spread - pivot
    } else {
        2 * (k1 - r2) + spread.div_ceil(2)
    };
    Ok(value as u64)
}

/// Removes one unit of area: among the up steps of maximal start level, the
/// rightmost one is swapped with the down step that necessarily follows it.
pub fn remove_top_cell(path: &KDyckPath) -> Result<KDyckPath, Error> {
    let ranks = path.rank_sequence();
    let starts = ranks.start_ranks();
    let pivot = path
        .steps()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_up())
        .max_by_key(|&(i, _)| (starts[i], i))
        .map(|(i, _)| i)
        .expect("a valid path has an up step");
    if starts[pivot] == 0 {
        return Err(Error::ZeroArea);
    }
    debug_assert!(
        matches!(path.steps().get(pivot + 1), Some(Step::Down)),
        "a maximal up step is followed by a down step"
    );
    let mut steps = path.steps().to_vec();
    steps.swap(pivot, pivot + 1);
    Ok(KDyckPath::from_steps_unchecked(steps))
}

/// All three statistics of one path, in the wire layout
/// `{"area":..,"dinv":{..},"bounce":{..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathStatistics {
    pub area: u64,
    pub dinv: DinvBreakdown,
    pub bounce: BounceTrace,
}

/// Computes area, dinv, and bounce together.
pub fn statistics(path: &KDyckPath) -> PathStatistics {
    PathStatistics {
        area: area(path),
        dinv: dinv(path),
        bounce: bounce(path),
    }
}
