//! Enumerate path families: list one family in its deterministic order, and
//! cross-check a few closed-form counts against the stream.
//!
//! ```bash
//! cargo run -p kdyck --example enumerate
//! ```

use kdyck::{enumerate_paths, Composition, Error, Limits};

fn main() -> Result<(), Error> {
    let limits = Limits::default();

    let k = Composition::new(vec![2, 1])?;
    println!("every path with up lengths {k}:");
    for path in enumerate_paths(&k, &limits)? {
        println!("  {path}");
    }

    // all up lengths 1 gives the Catalan family
    for n in 1..=8 {
        let k = Composition::new(vec![1; n])?;
        let count = enumerate_paths(&k, &limits)?.count();
        print!("{count} ");
    }
    println!("  <- counts for 1^n, n = 1..8");

    // constant up length k gives the generalized staircase family
    for (k, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let comp = Composition::new(vec![k; n])?;
        let count = enumerate_paths(&comp, &limits)?.count();
        println!("up length {k} repeated {n} times: {count} paths");
    }

    Ok(())
}
