//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Every check is exact-integer equality. Run with `--nocapture` to see the
//! per-criterion lines.

use std::collections::HashSet;

use kdyck::verify::{run_suites, Suite};
use kdyck::{
    area, bounce, bounce_closed_form_n3, c_lambda, compositions_of, compositions_up_to, dinv,
    enumerate_paths, filling_tableau, inverse_sweep, n2_involution, partitions_up_to,
    ranking_tableau, remove_top_cell, statistics, sweep_map, sweep_order, swept_start_rank,
    symmetry_defect, Composition, KDyckPath, Limits, Partition, QTPolynomial, StatisticPair,
};

const WORKED_PATH: &str = "S3 W S1 W W W S4 W W S1 S1 W W W W";
const WORKED_IMAGE: &str = "S4 S3 W W W S1 W S1 W S1 W W W W W";

fn limits() -> Limits {
    Limits::default()
}

fn for_each_path(max_size: usize, mut visit: impl FnMut(&KDyckPath)) -> u64 {
    let limits = limits();
    let mut count = 0;
    for k in compositions_up_to(max_size) {
        for path in enumerate_paths(&k, &limits).expect("within guard") {
            count += 1;
            visit(&path);
        }
    }
    count
}

fn class_paths(lambda: &Partition) -> Vec<KDyckPath> {
    let limits = limits();
    compositions_of(lambda)
        .flat_map(|k| enumerate_paths(&k, &limits).expect("within guard"))
        .collect()
}

#[test]
fn criterion_01_worked_example_fixture() {
    let path = KDyckPath::parse(WORKED_PATH).unwrap();
    assert_eq!(
        path.rank_sequence().start_ranks(),
        &[0, 3, 2, 3, 2, 1, 0, 4, 3, 2, 3, 4, 3, 2, 1]
    );

    let stats = statistics(&path);
    assert_eq!(stats.area, 7);
    assert_eq!(stats.dinv.sweep, 13);
    assert_eq!(stats.dinv.red, 3);
    assert_eq!(stats.dinv.total, 16);

    let image = sweep_map(&path);
    assert_eq!(image.render(), WORKED_IMAGE);

    let trace = bounce(&image);
    assert_eq!(trace.value, 7);
    assert_eq!(trace.v, vec![2, 0, 2, 1]);
    assert_eq!(trace.h, vec![2, 2, 4, 2]);

    println!("criterion 01 worked-example-fixture: PASS");
}

#[test]
fn criterion_02_main_theorem_exhaustive() {
    let checked = for_each_path(14, |path| {
        let image = sweep_map(path);
        assert_eq!(dinv(path).total, area(&image), "dinv->area failed: {path}");
        assert_eq!(
            area(path),
            bounce(&image).value,
            "area->bounce failed: {path}"
        );
    });
    assert_eq!(checked, 48_621);
    println!("criterion 02 main-theorem-exhaustive: PASS ({checked} paths)");
}

#[test]
fn criterion_03_bijection_and_inverse() {
    // both round trips on every path at size <= 14
    let checked = for_each_path(14, |path| {
        assert_eq!(inverse_sweep(&sweep_map(path)), *path, "path {path}");
        assert_eq!(sweep_map(&inverse_sweep(path)), *path, "path {path}");
    });

    // injectivity with image inside the same class, per class at size <= 14
    let mut classes = 0;
    for lambda in partitions_up_to(14) {
        classes += 1;
        let class = class_paths(&lambda);
        let class_set: HashSet<&KDyckPath> = class.iter().collect();
        let mut images = HashSet::with_capacity(class.len());
        for path in &class {
            let image = sweep_map(path);
            assert!(class_set.contains(&image), "image left class {lambda}");
            assert!(images.insert(image), "collision in class {lambda}");
        }
        assert_eq!(images.len(), class.len());
    }

    // agreement with the brute-force preimage search at size <= 10
    let mut oracle_checked = 0;
    for lambda in partitions_up_to(10) {
        let class = class_paths(&lambda);
        for image in &class {
            let preimages: Vec<&KDyckPath> =
                class.iter().filter(|p| sweep_map(p) == *image).collect();
            assert_eq!(preimages.len(), 1, "image {image} in class {lambda}");
            assert_eq!(
                *preimages[0],
                inverse_sweep(image),
                "oracle mismatch for {image}"
            );
            oracle_checked += 1;
        }
    }

    println!(
        "criterion 03 bijection-and-inverse: PASS \
         ({checked} round trips, {classes} classes, {oracle_checked} oracle searches)"
    );
}

#[test]
fn criterion_04_tableau_identity() {
    let checked = for_each_path(12, |image| {
        let ranking = ranking_tableau(&filling_tableau(image));
        assert_eq!(
            bounce(image).tableau,
            ranking,
            "tableaux disagree for {image}"
        );
    });
    println!("criterion 04 tableau-identity: PASS ({checked} paths)");
}

#[test]
fn criterion_05_exact_defect_fixtures() {
    let limits = limits();

    let expected_3111 = QTPolynomial::from_terms([
        (6, 3, 1),
        (3, 6, -1),
        (6, 2, -1),
        (5, 3, -2),
        (3, 5, 2),
        (2, 6, 1),
        (5, 2, 2),
        (4, 3, 1),
        (3, 4, -1),
        (2, 5, -2),
        (4, 2, -1),
        (2, 4, 1),
    ]);
    let defect_3111 = symmetry_defect(&Partition::new(vec![3, 1, 1, 1]).unwrap(), &limits).unwrap();
    assert_eq!(defect_3111, expected_3111);

    let expected_3221 = QTPolynomial::from_terms([
        (9, 3, 1),
        (3, 9, -1),
        (9, 2, -1),
        (8, 3, -1),
        (6, 5, 1),
        (5, 6, -1),
        (3, 8, 1),
        (2, 9, 1),
        (8, 2, 1),
        (7, 3, -1),
        (6, 4, -1),
        (4, 6, 1),
        (3, 7, 1),
        (2, 8, -1),
        (7, 2, 1),
        (6, 3, 1),
        (5, 4, 1),
        (4, 5, -1),
        (3, 6, -1),
        (2, 7, -1),
        (6, 2, -1),
        (2, 6, 1),
    ]);
    assert_eq!(expected_3221.term_count(), 22);
    let defect_3221 = symmetry_defect(&Partition::new(vec![3, 2, 2, 1]).unwrap(), &limits).unwrap();
    assert_eq!(defect_3221, expected_3221);

    println!("criterion 05 exact-defect-fixtures: PASS");
}

#[test]
fn criterion_06_pair_equality() {
    let limits = limits();
    let mut checked = 0;
    for lambda in partitions_up_to(12) {
        let via_dinv = c_lambda(&lambda, StatisticPair::DinvArea, &limits).unwrap();
        let via_bounce = c_lambda(&lambda, StatisticPair::AreaBounce, &limits).unwrap();
        assert_eq!(via_dinv, via_bounce, "pair mismatch for {lambda}");
        checked += 1;
    }
    println!("criterion 06 pair-equality: PASS ({checked} partitions)");
}

#[test]
fn criterion_07_two_part_symmetry() {
    let limits = limits();
    let mut paths_checked = 0;
    for k1 in 1..=6usize {
        for k2 in 1..=k1 {
            let lambda = Partition::new(vec![k1, k2]).unwrap();
            assert!(
                symmetry_defect(&lambda, &limits).unwrap().is_zero(),
                "defect nonzero for {lambda}"
            );
            for k in compositions_of(&lambda) {
                for path in enumerate_paths(&k, &limits).unwrap() {
                    let mapped = n2_involution(&path).unwrap();
                    assert_eq!(n2_involution(&mapped).unwrap(), path);
                    assert_eq!(area(&mapped), bounce(&path).value, "weight swap: {path}");
                    assert_eq!(bounce(&mapped).value, area(&path), "weight swap: {path}");
                    paths_checked += 1;
                }
            }
        }
    }
    println!("criterion 07 two-part-symmetry: PASS ({paths_checked} paths)");
}

#[test]
fn criterion_08_three_part_closed_form_and_symmetry() {
    let limits = limits();
    let mut formula_checked = 0;
    for k1 in 1..=5usize {
        for k2 in 1..=5usize {
            for k3 in 1..=5usize {
                let k = Composition::new(vec![k1, k2, k3]).unwrap();
                for r2 in 0..=k1 {
                    for r3 in 0..=r2 + k2 {
                        let path = KDyckPath::from_red_ranks(&k, &[0, r2, r3]).unwrap();
                        assert_eq!(
                            bounce_closed_form_n3(&k, r2, r3).unwrap(),
                            bounce(&path).value,
                            "closed form off at k={k} r2={r2} r3={r3}"
                        );
                        formula_checked += 1;
                    }
                }
            }
        }
    }

    let mut defects_checked = 0;
    for a in 1..=4usize {
        for b in 1..=a {
            for c in 1..=b {
                let lambda = Partition::new(vec![a, b, c]).unwrap();
                assert!(
                    symmetry_defect(&lambda, &limits).unwrap().is_zero(),
                    "defect nonzero for {lambda}"
                );
                defects_checked += 1;
            }
        }
    }

    println!(
        "criterion 08 three-part-closed-form-and-symmetry: PASS \
         ({formula_checked} rank pairs, {defects_checked} partitions)"
    );
}

#[test]
fn criterion_09_property_suites() {
    let limits = limits();

    // start-rank oracle against the image's rank sequence
    let oracle_checked = for_each_path(12, |path| {
        let order = sweep_order(path);
        let image_ranks = sweep_map(path).rank_sequence().start_ranks().to_vec();
        for (image_pos, &step0) in order.iter().enumerate() {
            assert_eq!(
                swept_start_rank(path, step0 + 1).unwrap(),
                image_ranks[image_pos] as i64,
                "oracle off for {path}"
            );
        }
    });

    // row balance and the one-cell-removal difference identity
    for_each_path(12, |path| {
        assert!(path.row_segment_counts().is_balanced(), "rows: {path}");
        if area(path) > 0 {
            let smaller = remove_top_cell(path).unwrap();
            assert_eq!(area(&smaller) + 1, area(path));
            let dinv_drop = dinv(path).total as i64 - dinv(&smaller).total as i64;
            let area_drop = area(&sweep_map(path)) as i64 - area(&sweep_map(&smaller)) as i64;
            assert_eq!(dinv_drop, area_drop, "cell removal: {path}");
        }
    });

    // closed-form counts against enumeration
    let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
    for (n, &expected) in catalan.iter().enumerate().skip(1) {
        let k = Composition::new(vec![1; n]).unwrap();
        assert_eq!(
            enumerate_paths(&k, &limits).unwrap().count() as u64,
            expected,
            "catalan count n={n}"
        );
    }
    let binomial = |n: u64, k: u64| -> u64 {
        let k = k.min(n - k);
        let mut value: u128 = 1;
        for i in 0..k {
            value = value * (n - i) as u128 / (i + 1) as u128;
        }
        value as u64
    };
    let mut fuss_checked = 0;
    for n in 1..=10usize {
        for k in 1..=19usize {
            if k * n + n > 20 {
                continue;
            }
            let comp = Composition::new(vec![k; n]).unwrap();
            let expected = binomial(((k + 1) * n) as u64, n as u64) / (k as u64 * n as u64 + 1);
            assert_eq!(
                enumerate_paths(&comp, &limits).unwrap().count() as u64,
                expected,
                "fuss-catalan count k={k} n={n}"
            );
            fuss_checked += 1;
        }
    }

    println!(
        "criterion 09 property-suites: PASS \
         ({oracle_checked} paths for the rank oracle, {fuss_checked} count cross-checks)"
    );
}

#[test]
fn criterion_10_conjecture_probe() {
    let limits = limits();
    let mut shapes = HashSet::new();
    let mut findings = Vec::new();
    for a in 0..=2usize {
        for n in 1..=4usize {
            for s in 0..=n {
                let mut parts = vec![a + 1; s];
                parts.extend(std::iter::repeat_n(a, n - s));
                parts.retain(|&p| p > 0);
                if parts.is_empty() {
                    continue;
                }
                let lambda = Partition::new(parts).unwrap();
                if lambda.step_count() > limits.max_steps || !shapes.insert(lambda.clone()) {
                    continue;
                }
                let defect = symmetry_defect(&lambda, &limits).unwrap();
                if !defect.is_zero() {
                    findings.push(format!("{lambda}: {defect}"));
                }
            }
        }
    }
    // findings are reported, never asserted: the underlying symmetry is open
    for finding in &findings {
        println!("criterion 10 finding: {finding}");
    }
    println!(
        "criterion 10 conjecture-probe: PASS ({} shapes probed, {} findings)",
        shapes.len(),
        findings.len()
    );
}

#[test]
fn verify_command_gate_at_default_size() {
    // the CLI's `verify --suite all` default gate, exercised at library level
    let report = run_suites(&Suite::ALL, 12, &limits()).unwrap();
    assert!(report.passed(), "{report}");
    println!(
        "verify-all gate at size 12: PASS ({} cases)",
        report.total_checked()
    );
}
