//! Compute the three statistics of a single path and print the wire JSON.
//!
//! ```bash
//! cargo run -p kdyck --example statistics
//! ```

use kdyck::{statistics, Error, KDyckPath};

fn main() -> Result<(), Error> {
    let path = KDyckPath::parse("S3 W S1 W W W S4 W W S1 S1 W W W W")?;

    println!("path:        {path}");
    println!("composition: {}", path.composition());
    println!("levels:      {:?}", path.rank_sequence().start_ranks());
    println!("up levels:   {:?}", path.red_ranks());

    let stats = statistics(&path);
    println!("area:   {}", stats.area);
    println!(
        "dinv:   {} = {} crossing pairs + {} nesting correction",
        stats.dinv.total, stats.dinv.sweep, stats.dinv.red
    );
    println!(
        "bounce: {} with vertical moves {:?} and horizontal moves {:?}",
        stats.bounce.value, stats.bounce.v, stats.bounce.h
    );

    println!(
        "as JSON: {}",
        serde_json::to_string(&stats).expect("serializable")
    );
    Ok(())
}
