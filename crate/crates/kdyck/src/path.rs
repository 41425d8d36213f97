//! Lattice paths with long up steps and unit down steps, their rank
//! sequences, and exhaustive enumeration.
//!
//! A path is a sequence of up steps `S<k>` (rising by `k >= 1`) and down
//! steps `W` (falling by 1) that starts and ends on the horizontal axis and
//! never dips below it. The up-step lengths, read left to right, form the
//! path's [`Composition`]. The text form mirrors the step names: the path of
//! composition `(3,1,4,1,1)` used throughout the tests is
//! `S3 W S1 W W W S4 W W S1 S1 W W W W`.

use std::fmt;

use crate::error::Error;

/// One step of a path: a rise of `k >= 1` or a unit fall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Up step of the given positive length.
    Up(usize),
    /// Unit down step.
    Down,
}

impl Step {
    /// Signed change of level: `+k` for `Up(k)`, `-1` for `Down`.
    pub fn rise(self) -> i64 {
        match self {
            Step::Up(k) => k as i64,
            Step::Down => -1,
        }
    }

    /// True for up steps.
    pub fn is_up(self) -> bool {
        matches!(self, Step::Up(_))
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up(k) => write!(f, "S{k}"),
            Step::Down => write!(f, "W"),
        }
    }
}

/// An ordered list of positive integers; the up-step lengths of a path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Validates that `parts` is nonempty with all entries positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::BadComposition);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of steps of any path with this composition: parts plus total.
    pub fn step_count(&self) -> usize {
        self.part_count() + self.total()
    }

    /// The parts rearranged weakly decreasing.
    pub fn partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is nonempty, positive, and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::BadPartition);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition);
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` decreasingly and validates positivity.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, Error> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts plus total; the step count of any path in the class.
    pub fn step_count(&self) -> usize {
        self.part_count() + self.total()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A validated path: prefix levels never negative, final level zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KDyckPath {
    steps: Vec<Step>,
}

fn validate(steps: &[Step]) -> Result<(), Error> {
    if steps.is_empty() {
        return Err(Error::EmptyPath);
    }
    for (i, step) in steps.iter().enumerate() {
        if let Step::Up(0) = step {
            return Err(Error::ZeroUpLength { index: i + 1 });
        }
    }
    let total: i64 = steps.iter().map(|s| s.rise()).sum();
    if total != 0 {
        return Err(Error::NonzeroTotal { final_level: total });
    }
    let mut level = 0i64;
    for (i, step) in steps.iter().enumerate() {
        level += step.rise();
        if level < 0 {
            return Err(Error::PrefixNegative { index: i + 1 });
        }
    }
    Ok(())
}

impl KDyckPath {
    /// Validates and wraps a step sequence.
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        validate(&steps)?;
        Ok(KDyckPath { steps })
    }

    /// Wraps steps already known to be valid (enumeration, forced rebuilds).
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(validate(&steps).is_ok());
        KDyckPath { steps }
    }

    /// Parses the whitespace-separated token form, e.g. `"S3 W S1 W W W"`.
    ///
    /// Tokens are `S<d>` with `d >= 1` in decimal, or `W`. Inverse of
    /// [`render`](Self::render).
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut steps = Vec::new();
        for (pos, token) in text.split_whitespace().enumerate() {
            let bad = || Error::Syntax {
                position: pos + 1,
                token: token.to_string(),
            };
            let step = if token == "W" {
                Step::Down
            } else if let Some(digits) = token.strip_prefix('S') {
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let k: usize = digits.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                Step::Up(k)
            } else {
                return Err(bad());
            };
            steps.push(step);
        }
        KDyckPath::new(steps)
    }

    /// Canonical token form, e.g. `"S3 W S1 W W W"`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Total number of steps.
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Number of up steps.
    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|s| s.is_up()).count()
    }

    /// Number of down steps; equals the total up length.
    pub fn down_count(&self) -> usize {
        self.steps.len() - self.up_count()
    }

    /// The up-step lengths in path order.
    pub fn composition(&self) -> Composition {
        let parts = self
            .steps
            .iter()
            .filter_map(|s| match s {
                Step::Up(k) => Some(*k),
                Step::Down => None,
            })
            .collect();
        Composition { parts }
    }

    /// Start and end levels of every step.
    pub fn rank_sequence(&self) -> RankSequence {
        let mut start = Vec::with_capacity(self.steps.len());
        let mut end = Vec::with_capacity(self.steps.len());
        let mut level = 0i64;
        for step in &self.steps {
            start.push(level as usize);
            level += step.rise();
            end.push(level as usize);
        }
        RankSequence { start, end }
    }

    /// Start levels of the up steps, in path order. The first entry is 0.
    pub fn red_ranks(&self) -> Vec<usize> {
        let ranks = self.rank_sequence();
        self.steps
            .iter()
            .zip(ranks.start_ranks())
            .filter(|(s, _)| s.is_up())
            .map(|(_, &r)| r)
            .collect()
    }

    /// Rebuilds the unique path with the given composition and up-step start
    /// levels. Between consecutive up steps the down run is forced, so the
    /// levels determine the path completely.
    pub fn from_red_ranks(k: &Composition, reds: &[usize]) -> Result<Self, Error> {
        let n = k.part_count();
        if reds.len() != n {
            return Err(Error::BadRedRanks { index: 0 });
        }
        if reds[0] != 0 {
            return Err(Error::BadRedRanks { index: 1 });
        }
        for i in 0..n - 1 {
            if reds[i + 1] > reds[i] + k.parts()[i] {
                return Err(Error::BadRedRanks { index: i + 2 });
            }
        }
        let mut steps = Vec::with_capacity(k.step_count());
        for i in 0..n {
            let part = k.parts()[i];
            steps.push(Step::Up(part));
            let next = if i + 1 < n { reds[i + 1] } else { 0 };
            for _ in 0..reds[i] + part - next {
                steps.push(Step::Down);
            }
        }
        Ok(KDyckPath::from_steps_unchecked(steps))
    }

    /// Greatest level the path reaches.
    pub fn max_height(&self) -> usize {
        let ranks = self.rank_sequence();
        ranks.end_ranks().iter().copied().max().unwrap_or(0)
    }

    /// Counts, per unit-height row, the up-step and down-step segments
    /// crossing it. Row `j` is the band between levels `j - 1` and `j`.
    pub fn row_segment_counts(&self) -> RowCounts {
        let ranks = self.rank_sequence();
        let rows = self.max_height();
        let mut red = vec![0usize; rows];
        let mut blue = vec![0usize; rows];
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                Step::Up(_) => {
                    for j in ranks.start_ranks()[i] + 1..=ranks.end_ranks()[i] {
                        red[j - 1] += 1;
                    }
                }
                Step::Down => {
                    blue[ranks.start_ranks()[i] - 1] += 1;
                }
            }
        }
        RowCounts { red, blue }
    }
}

impl fmt::Display for KDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Start and end levels of each step of a path.
///
/// The start levels are the partial sums of the signed step lengths, with
/// the first entry 0; the end levels are the same list shifted by one with a
/// final 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSequence {
    start: Vec<usize>,
    end: Vec<usize>,
}

impl RankSequence {
    pub fn start_ranks(&self) -> &[usize] {
        &self.start
    }

    pub fn end_ranks(&self) -> &[usize] {
        &self.end
    }
}

/// Per-row segment counts. Every row of a valid path alternates up and down
/// segments, starting with an up segment and ending with a down one, so the
/// two counts agree in every row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCounts {
    red: Vec<usize>,
    blue: Vec<usize>,
}

impl RowCounts {
    /// Number of rows, i.e. the path's maximum height.
    pub fn row_count(&self) -> usize {
        self.red.len()
    }

    /// Up-step segments in row `j` (1-based).
    pub fn red(&self, row: usize) -> usize {
        self.red[row - 1]
    }

    /// Down-step segments in row `j` (1-based).
    pub fn blue(&self, row: usize) -> usize {
        self.blue[row - 1]
    }

    /// True when every row has as many up segments as down segments.
    pub fn is_balanced(&self) -> bool {
        self.red == self.blue
    }
}

/// Size limits for enumeration and polynomial aggregation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest allowed step count `parts + total` for a single enumeration.
    pub max_steps: usize,
    /// Largest allowed number of paths aggregated into one polynomial.
    pub max_paths: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: 24,
            max_paths: 1_000_000,
        }
    }
}

/// Streams every path with the given composition exactly once, in
/// lexicographic order on step sequences with up steps ordered before down
/// steps. The first path is all up steps followed by all down steps.
pub fn enumerate_paths(k: &Composition, limits: &Limits) -> Result<PathEnumerator, Error> {
    if k.step_count() > limits.max_steps {
        return Err(Error::SizeGuard {
            detail: format!(
                "composition {k} needs {} steps, limit is {}",
                k.step_count(),
                limits.max_steps
            ),
        });
    }
    let mut steps: Vec<Step> = k.parts().iter().map(|&p| Step::Up(p)).collect();
    steps.extend(std::iter::repeat_n(Step::Down, k.total()));
    Ok(PathEnumerator {
        up_lengths: k.parts().to_vec(),
        next: Some(steps),
    })
}

/// Iterator produced by [`enumerate_paths`].
pub struct PathEnumerator {
    up_lengths: Vec<usize>,
    next: Option<Vec<Step>>,
}

impl PathEnumerator {
    /// Rewrites `steps` into its lexicographic successor in place; returns
    /// false once the last path (the forced down runs everywhere) is passed.
    ///
    /// The successor turns the rightmost up step that sits at a positive
    /// level into a down step and completes greedily: remaining up steps
    /// first, then the forced down run.
    fn advance(&self, steps: &mut Vec<Step>) -> bool {
        let m = steps.len();
        let mut level_before = Vec::with_capacity(m);
        let mut level = 0i64;
        for step in steps.iter() {
            level_before.push(level);
            level += step.rise();
        }
        let mut ups_before: usize = steps.iter().filter(|s| s.is_up()).count();
        for i in (0..m).rev() {
            if steps[i].is_up() {
                ups_before -= 1;
                if level_before[i] >= 1 {
                    steps.truncate(i);
                    steps.push(Step::Down);
                    let mut level = level_before[i] - 1;
                    for &k in &self.up_lengths[ups_before..] {
                        steps.push(Step::Up(k));
                        level += k as i64;
                    }
                    steps.extend(std::iter::repeat_n(Step::Down, level as usize));
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for PathEnumerator {
    type Item = KDyckPath;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if self.advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(KDyckPath::from_steps_unchecked(current))
    }
}

/// Streams the distinct rearrangements of a partition, lexicographically
/// decreasing, starting from the partition itself.
pub fn compositions_of(lambda: &Partition) -> CompositionsOf {
    CompositionsOf {
        next: Some(lambda.parts().to_vec()),
    }
}

/// Iterator produced by [`compositions_of`].
pub struct CompositionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for CompositionsOf {
    type Item = Composition;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if prev_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Composition { parts: current })
    }
}

/// Standard previous-permutation step over a multiset; false at the minimum.
fn prev_permutation(parts: &mut [usize]) -> bool {
    let m = parts.len();
    if m < 2 {
        return false;
    }
    let Some(i) = (0..m - 1).rev().find(|&i| parts[i] > parts[i + 1]) else {
        return false;
    };
    let j = (i + 1..m).rev().find(|&j| parts[j] < parts[i]).unwrap();
    parts.swap(i, j);
    parts[i + 1..].reverse();
    true
}

/// All compositions whose paths have at most `max_steps` steps, i.e. with
/// `parts + total <= max_steps`. Ordered by total, then by length, then
/// lexicographically.
pub fn compositions_up_to(max_steps: usize) -> impl Iterator<Item = Composition> {
    (1..max_steps).flat_map(move |total| {
        (1..=total.min(max_steps - total)).flat_map(move |len| {
            let mut out = Vec::new();
            push_compositions(total, len, &mut Vec::new(), &mut out);
            out.into_iter()
        })
    })
}

fn push_compositions(
    total: usize,
    len: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    if len == 1 {
        let mut parts = prefix.clone();
        parts.push(total);
        out.push(Composition { parts });
        return;
    }
    for first in 1..=total - len + 1 {
        prefix.push(first);
        push_compositions(total - first, len - 1, prefix, out);
        prefix.pop();
    }
}

/// All partitions whose paths have at most `max_steps` steps, i.e. with
/// `parts + total <= max_steps`. Ordered by total, then lexicographically
/// decreasing.
pub fn partitions_up_to(max_steps: usize) -> impl Iterator<Item = Partition> {
    (1..max_steps).flat_map(move |total| {
        let mut out = Vec::new();
        push_partitions(total, total, max_steps - total, &mut Vec::new(), &mut out);
        out.into_iter()
    })
}

fn push_partitions(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    if max_len == 0 {
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        push_partitions(remaining - part, part, max_len - 1, prefix, out);
        prefix.pop();
    }
}
