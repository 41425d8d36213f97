//! Build the q,t-polynomial of a path family under both statistic pairs.
//!
//! ```bash
//! cargo run -p kdyck --example qt_polynomials
//! ```

use kdyck::{c_lambda, Error, Limits, Partition, StatisticPair};

fn main() -> Result<(), Error> {
    let limits = Limits::default();

    for parts in [vec![1, 1], vec![1, 1, 1], vec![2, 1], vec![2, 2]] {
        let lambda = Partition::new(parts)?;
        let via_dinv = c_lambda(&lambda, StatisticPair::DinvArea, &limits)?;
        let via_bounce = c_lambda(&lambda, StatisticPair::AreaBounce, &limits)?;
        assert_eq!(via_dinv, via_bounce);
        println!("C_{{{lambda}}}(q,t) = {via_dinv}");
        println!(
            "  {} paths in total (value at q = t = 1)",
            via_dinv.evaluate(1, 1)
        );
    }

    let lambda = Partition::new(vec![1, 1, 1])?;
    let c = c_lambda(&lambda, StatisticPair::DinvArea, &limits)?;
    println!(
        "C_{{{lambda}}} as JSON: {}",
        serde_json::to_string(&c).expect("serializable")
    );
    Ok(())
}
