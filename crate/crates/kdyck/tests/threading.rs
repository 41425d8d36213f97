//! Values are plain immutable data: path streams can be consumed on worker
//! threads and partial results merged in any order.

use std::sync::mpsc;
use std::thread;

use kdyck::{
    area, compositions_up_to, dinv, enumerate_paths, Composition, KDyckPath, Limits, QTPolynomial,
    RankTableau, Step,
};

#[test]
fn core_types_are_shareable() {
    fn shareable<T: Send + Sync>() {}
    shareable::<Step>();
    shareable::<Composition>();
    shareable::<KDyckPath>();
    shareable::<QTPolynomial>();
    shareable::<RankTableau>();
    shareable::<Limits>();
}

#[test]
fn parallel_aggregation_matches_sequential() {
    let limits = Limits::default();
    let compositions: Vec<Composition> = compositions_up_to(10).collect();

    let weigh = |k: &Composition| {
        let mut partial = QTPolynomial::zero();
        for path in enumerate_paths(k, &Limits::default()).unwrap() {
            partial.add_monomial(dinv(&path).total as u32, area(&path) as u32, 1);
        }
        partial
    };

    let mut sequential = QTPolynomial::zero();
    for k in &compositions {
        sequential = &sequential + &weigh(k);
    }

    // merge partial sums in completion order, which varies across threads
    let (sender, receiver) = mpsc::channel();
    thread::scope(|scope| {
        for chunk in compositions.chunks(17) {
            let sender = sender.clone();
            scope.spawn(move || {
                for k in chunk {
                    sender.send(weigh(k)).unwrap();
                }
            });
        }
    });
    drop(sender);

    let mut parallel = QTPolynomial::zero();
    for partial in receiver {
        parallel = &parallel + &partial;
    }

    assert_eq!(parallel, sequential);
    assert_eq!(
        parallel.evaluate(1, 1),
        compositions
            .iter()
            .map(|k| enumerate_paths(k, &limits).unwrap().count() as i64)
            .sum::<i64>()
    );
}
