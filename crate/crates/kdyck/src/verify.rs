//! Exhaustive verification suites.
//!
//! Every suite sweeps all compositions whose paths have at most `max_size`
//! steps and re-checks a batch of identities on every path, reporting how
//! many cases were checked and the first counterexample if any turn up. The
//! conjecture suite is advisory: open mathematics is reported as findings,
//! never as failures.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::path::{
    compositions_of, compositions_up_to, enumerate_paths, partitions_up_to, Composition, KDyckPath,
    Limits, Partition,
};
use crate::poly::{c_lambda, n2_involution, symmetry_defect, StatisticPair};
use crate::stats::{area, bounce, bounce_closed_form_n3, dinv, remove_top_cell};
use crate::sweep::{
    filling_tableau, inverse_sweep, ranking_tableau, ranks_by_index, sweep_map, sweep_order,
    swept_start_rank, FillingTableau,
};

/// The selectable verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    /// The statistic-transport identities and supporting path invariants.
    Theorem,
    /// The two tableau constructions and their agreement.
    Tableau,
    /// Bijectivity of the sweep map and both inverses.
    Inverse,
    /// Symmetry of the family polynomials where it is known to hold.
    Symmetry,
    /// Advisory probe of the near-rectangular symmetry conjecture.
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Theorem,
        Suite::Tableau,
        Suite::Inverse,
        Suite::Symmetry,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Tableau => "tableau",
            Suite::Inverse => "inverse",
            Suite::Symmetry => "symmetry",
            Suite::Conjecture => "conjecture",
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
    /// Advisory checks report findings without failing the run.
    pub advisory: bool,
}

struct Checker {
    report: CheckReport,
}

impl Checker {
    fn new(name: &'static str) -> Self {
        Checker {
            report: CheckReport {
                name,
                checked: 0,
                failures: 0,
                first_counterexample: None,
                advisory: false,
            },
        }
    }

    fn advisory(name: &'static str) -> Self {
        let mut c = Checker::new(name);
        c.report.advisory = true;
        c
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.report.checked += 1;
        if !ok {
            self.report.failures += 1;
            if self.report.first_counterexample.is_none() {
                self.report.first_counterexample = Some(witness());
            }
        }
    }

    fn into_report(self) -> CheckReport {
        self.report
    }
}

/// All checks of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckReport>,
}

/// Combined result of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub max_size: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    /// True when no non-advisory check failed.
    pub fn passed(&self) -> bool {
        self.suites
            .iter()
            .flat_map(|s| &s.checks)
            .all(|c| c.advisory || c.failures == 0)
    }

    /// Advisory checks that produced findings.
    pub fn findings(&self) -> Vec<&CheckReport> {
        self.suites
            .iter()
            .flat_map(|s| &s.checks)
            .filter(|c| c.advisory && c.failures > 0)
            .collect()
    }

    /// Cases checked across all non-advisory checks.
    pub fn total_checked(&self) -> u64 {
        self.suites
            .iter()
            .flat_map(|s| &s.checks)
            .filter(|c| !c.advisory)
            .map(|c| c.checked)
            .sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for suite in &self.suites {
            writeln!(f, "suite {} (max size {})", suite.suite, self.max_size)?;
            for check in &suite.checks {
                let noun = if check.advisory {
                    "findings"
                } else {
                    "failures"
                };
                write!(
                    f,
                    "  {}: {} checked, {} {}",
                    check.name, check.checked, check.failures, noun
                )?;
                if let Some(cex) = &check.first_counterexample {
                    write!(f, ", first: {cex}")?;
                }
                writeln!(f)?;
            }
        }
        write!(
            f,
            "result: {} ({} cases checked)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.total_checked()
        )
    }
}

/// Runs the given suites over all paths with at most `max_size` steps.
pub fn run_suites(
    suites: &[Suite],
    max_size: usize,
    limits: &Limits,
) -> Result<VerifyReport, Error> {
    if max_size > limits.max_steps {
        return Err(Error::SizeGuard {
            detail: format!(
                "max size {max_size} exceeds the step limit {}",
                limits.max_steps
            ),
        });
    }
    let mut reports = Vec::with_capacity(suites.len());
    for &suite in suites {
        let checks = match suite {
            Suite::Theorem => theorem_suite(max_size, limits)?,
            Suite::Tableau => tableau_suite(max_size, limits)?,
            Suite::Inverse => inverse_suite(max_size, limits)?,
            Suite::Symmetry => symmetry_suite(max_size, limits)?,
            Suite::Conjecture => conjecture_suite(limits)?,
        };
        reports.push(SuiteReport {
            suite: suite.name(),
            checks,
        });
    }
    Ok(VerifyReport {
        max_size,
        suites: reports,
    })
}

fn for_each_path(
    max_size: usize,
    limits: &Limits,
    mut visit: impl FnMut(&KDyckPath),
) -> Result<(), Error> {
    for k in compositions_up_to(max_size) {
        for path in enumerate_paths(&k, limits)? {
            visit(&path);
        }
    }
    Ok(())
}

/// The statistic-transport identities plus the per-path invariants they
/// lean on, and the classical count cross-checks.
fn theorem_suite(max_size: usize, limits: &Limits) -> Result<Vec<CheckReport>, Error> {
    let mut dinv_to_area = Checker::new("dinv-to-area");
    let mut area_to_bounce = Checker::new("area-to-bounce");
    let mut cell_removal = Checker::new("cell-removal-difference");
    let mut trace = Checker::new("bounce-trace-consistency");
    let mut rows = Checker::new("row-count-balance");
    let mut area_bound = Checker::new("area-bound");
    let mut text_rt = Checker::new("text-round-trip");
    let mut red_rt = Checker::new("red-rank-round-trip");

    for_each_path(max_size, limits, |path| {
        let image = sweep_map(path);
        let d = dinv(path);
        dinv_to_area.record(d.total == area(&image), || path.render());

        let b = bounce(&image);
        area_to_bounce.record(area(path) == b.value, || path.render());

        let v_sum: u64 = b.v.iter().sum();
        let h_sum: u64 = b.h.iter().sum();
        let weighted: u64 = b.v.iter().enumerate().map(|(i, &vi)| i as u64 * vi).sum();
        let progressive = (0..b.v.len().saturating_sub(1)).all(|i| b.v[i] > 0 || b.h[i] > 0);
        let consistent = v_sum == image.up_count() as u64
            && h_sum == image.down_count() as u64
            && b.value == weighted
            && b.value == b.tableau.first_row_sum()
            && progressive;
        trace.record(consistent, || image.render());

        rows.record(path.row_segment_counts().is_balanced(), || path.render());
        area_bound.record(
            area(path) < (path.up_count() * path.down_count()) as u64,
            || path.render(),
        );
        text_rt.record(
            KDyckPath::parse(&path.render()).as_ref() == Ok(path),
            || path.render(),
        );
        red_rt.record(
            KDyckPath::from_red_ranks(&path.composition(), &path.red_ranks()).as_ref() == Ok(path),
            || path.render(),
        );

        if area(path) > 0 {
            let smaller = remove_top_cell(path).expect("positive area");
            let dinv_drop = dinv(path).total as i64 - dinv(&smaller).total as i64;
            let area_drop = area(&image) as i64 - area(&sweep_map(&smaller)) as i64;
            let ok = area(&smaller) + 1 == area(path) && dinv_drop == area_drop;
            cell_removal.record(ok, || path.render());
        }
    })?;

    let mut n3_formula = Checker::new("n3-bounce-formula");
    for k1 in 1..=5usize {
        for k2 in 1..=5usize {
            for k3 in 1..=5usize {
                let k = Composition::new(vec![k1, k2, k3]).expect("positive parts");
                for r2 in 0..=k1 {
                    for r3 in 0..=r2 + k2 {
                        let path =
                            KDyckPath::from_red_ranks(&k, &[0, r2, r3]).expect("ranks in range");
                        let direct = bounce(&path).value;
                        let formula = bounce_closed_form_n3(&k, r2, r3).expect("ranks in range");
                        n3_formula.record(direct == formula, || {
                            format!("k={k} r2={r2} r3={r3}: direct {direct}, formula {formula}")
                        });
                    }
                }
            }
        }
    }

    let mut catalan_counts = Checker::new("catalan-counts");
    for n in 1..=8usize {
        if 2 * n > limits.max_steps {
            break;
        }
        let k = Composition::new(vec![1; n]).expect("positive parts");
        let enumerated = enumerate_paths(&k, limits)?.count() as u64;
        catalan_counts.record(enumerated == catalan(n), || {
            format!("n={n}: enumerated {enumerated}, expected {}", catalan(n))
        });
    }

    let mut fuss_counts = Checker::new("fuss-catalan-counts");
    for n in 1..=19usize {
        for k in 1..=19usize {
            let steps = k * n + n;
            if steps > 20 || steps > limits.max_steps {
                continue;
            }
            let comp = Composition::new(vec![k; n]).expect("positive parts");
            let enumerated = enumerate_paths(&comp, limits)?.count() as u64;
            let expected = fuss_catalan(k, n);
            fuss_counts.record(enumerated == expected, || {
                format!("k={k} n={n}: enumerated {enumerated}, expected {expected}")
            });
        }
    }

    Ok(vec![
        dinv_to_area.into_report(),
        area_to_bounce.into_report(),
        cell_removal.into_report(),
        trace.into_report(),
        rows.into_report(),
        area_bound.into_report(),
        text_rt.into_report(),
        red_rt.into_report(),
        n3_formula.into_report(),
        catalan_counts.into_report(),
        fuss_counts.into_report(),
    ])
}

/// The bounce tableau against the filling/ranking pair, and the rank data
/// they recover.
fn tableau_suite(max_size: usize, limits: &Limits) -> Result<Vec<CheckReport>, Error> {
    let mut identity = Checker::new("bounce-equals-ranking");
    let mut well_formed = Checker::new("filling-well-formed");
    let mut monotone = Checker::new("rank-monotonicity");
    let mut multiset = Checker::new("rank-multiset-matches-preimage");
    let mut first_row = Checker::new("first-row-sum-is-preimage-area");

    for_each_path(max_size, limits, |image| {
        let filling = filling_tableau(image);
        well_formed.record(
            FillingTableau::from_columns(filling.columns().to_vec()).is_ok(),
            || image.render(),
        );

        let ranking = ranking_tableau(&filling);
        identity.record(bounce(image).tableau == ranking, || image.render());

        let ranks = ranks_by_index(&filling, &ranking);
        monotone.record(ranks.windows(2).all(|w| w[0] <= w[1]), || image.render());

        let preimage = inverse_sweep(image);
        let mut preimage_ranks = preimage.rank_sequence().start_ranks().to_vec();
        preimage_ranks.sort_unstable();
        multiset.record(ranks == preimage_ranks, || image.render());

        first_row.record(ranking.first_row_sum() == area(&preimage), || {
            image.render()
        });
    })?;

    Ok(vec![
        identity.into_report(),
        well_formed.into_report(),
        monotone.into_report(),
        multiset.into_report(),
        first_row.into_report(),
    ])
}

/// Round trips, the rank oracle, and per-class bijectivity of the sweep map.
fn inverse_suite(max_size: usize, limits: &Limits) -> Result<Vec<CheckReport>, Error> {
    let mut round_trip = Checker::new("round-trip-both-ways");
    let mut oracle = Checker::new("start-rank-oracle");
    let mut lengths = Checker::new("up-length-multiset-preserved");

    for_each_path(max_size, limits, |path| {
        let image = sweep_map(path);
        round_trip.record(
            inverse_sweep(&image) == *path && sweep_map(&inverse_sweep(path)) == *path,
            || path.render(),
        );

        let order = sweep_order(path);
        let image_ranks = image.rank_sequence().start_ranks().to_vec();
        let all_match = order.iter().enumerate().all(|(image_pos, &step0)| {
            swept_start_rank(path, step0 + 1) == Ok(image_ranks[image_pos] as i64)
        });
        oracle.record(all_match, || path.render());

        let mut before: Vec<usize> = path.composition().parts().to_vec();
        let mut after: Vec<usize> = image.composition().parts().to_vec();
        before.sort_unstable();
        after.sort_unstable();
        lengths.record(before == after, || path.render());
    })?;

    let mut bijective = Checker::new("class-bijectivity");
    for lambda in partitions_up_to(max_size) {
        let class = class_paths(&lambda, limits)?;
        let class_set: HashSet<&KDyckPath> = class.iter().collect();
        let mut seen = HashSet::with_capacity(class.len());
        for path in &class {
            let image = sweep_map(path);
            let ok = class_set.contains(&image) && seen.insert(image);
            bijective.record(ok, || format!("class {lambda}, path {path}"));
        }
    }

    let mut brute = Checker::new("brute-force-inverse");
    for lambda in partitions_up_to(max_size.min(10)) {
        let class = class_paths(&lambda, limits)?;
        for image in &class {
            let preimages: Vec<&KDyckPath> =
                class.iter().filter(|p| sweep_map(p) == *image).collect();
            let ok = preimages.len() == 1 && *preimages[0] == inverse_sweep(image);
            brute.record(ok, || format!("class {lambda}, image {image}"));
        }
    }

    Ok(vec![
        round_trip.into_report(),
        oracle.into_report(),
        lengths.into_report(),
        bijective.into_report(),
        brute.into_report(),
    ])
}

fn class_paths(lambda: &Partition, limits: &Limits) -> Result<Vec<KDyckPath>, Error> {
    let mut class = Vec::new();
    for k in compositions_of(lambda) {
        class.extend(enumerate_paths(&k, limits)?);
    }
    Ok(class)
}

/// Symmetry of the family polynomials on the ranges where it holds, and
/// agreement of the two statistic pairs.
fn symmetry_suite(max_size: usize, limits: &Limits) -> Result<Vec<CheckReport>, Error> {
    let mut pair_equality = Checker::new("pair-equality");
    let mut counting = Checker::new("count-specialization");
    for lambda in partitions_up_to(max_size) {
        let via_dinv = c_lambda(&lambda, StatisticPair::DinvArea, limits)?;
        let via_bounce = c_lambda(&lambda, StatisticPair::AreaBounce, limits)?;
        pair_equality.record(via_dinv == via_bounce, || format!("{lambda}"));

        // at q = t = 1 the polynomial counts the paths of the class
        let class_size = class_paths(&lambda, limits)?.len() as i64;
        counting.record(via_dinv.evaluate(1, 1) == class_size, || {
            format!("{lambda}")
        });
    }

    let mut two_part = Checker::new("two-part-defects");
    let mut involution = Checker::new("two-part-involution");
    for k1 in 1..=6usize {
        for k2 in 1..=k1 {
            let lambda = Partition::new(vec![k1, k2]).expect("sorted");
            let defect = symmetry_defect(&lambda, limits)?;
            two_part.record(defect.is_zero(), || format!("{lambda}: {defect}"));

            for k in compositions_of(&lambda) {
                for path in enumerate_paths(&k, limits)? {
                    let mapped = n2_involution(&path).expect("two up steps");
                    let ok = n2_involution(&mapped).expect("two up steps") == path
                        && area(&mapped) == bounce(&path).value
                        && bounce(&mapped).value == area(&path);
                    involution.record(ok, || path.render());
                }
            }
        }
    }

    let mut three_part = Checker::new("three-part-defects");
    for a in 1..=4usize {
        for b in 1..=a {
            for c in 1..=b {
                let lambda = Partition::new(vec![a, b, c]).expect("sorted");
                let defect = symmetry_defect(&lambda, limits)?;
                three_part.record(defect.is_zero(), || format!("{lambda}: {defect}"));
            }
        }
    }

    Ok(vec![
        pair_equality.into_report(),
        counting.into_report(),
        two_part.into_report(),
        involution.into_report(),
        three_part.into_report(),
    ])
}

/// Advisory probe: partitions made of `s` copies of `a + 1` over `n - s`
/// copies of `a` are expected to have zero defect.
fn conjecture_suite(limits: &Limits) -> Result<Vec<CheckReport>, Error> {
    let mut probe = Checker::advisory("near-rectangular-defects");
    let mut shapes = HashSet::new();
    for a in 0..=2usize {
        for n in 1..=4usize {
            for s in 0..=n {
                let mut parts = vec![a + 1; s];
                parts.extend(std::iter::repeat_n(a, n - s));
                parts.retain(|&p| p > 0);
                if parts.is_empty() {
                    continue;
                }
                let lambda = Partition::new(parts).expect("sorted");
                if lambda.step_count() > limits.max_steps || !shapes.insert(lambda.clone()) {
                    continue;
                }
                let defect = symmetry_defect(&lambda, limits)?;
                probe.record(defect.is_zero(), || format!("{lambda}: {defect}"));
            }
        }
    }
    Ok(vec![probe.into_report()])
}

fn binomial(n: u64, k: u64) -> u128 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut value: u128 = 1;
    for i in 0..k {
        value = value * (n - i) as u128 / (i + 1) as u128;
    }
    value
}

/// Number of paths with all up lengths 1, as a closed form.
fn catalan(n: usize) -> u64 {
    let n = n as u64;
    (binomial(2 * n, n) / (n as u128 + 1)) as u64
}

/// Number of paths with `n` up steps all of length `k`, as a closed form.
fn fuss_catalan(k: usize, n: usize) -> u64 {
    let (k, n) = (k as u64, n as u64);
    (binomial((k + 1) * n, n) / (k * n + 1) as u128) as u64
}
