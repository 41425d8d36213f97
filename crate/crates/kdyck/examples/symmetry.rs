//! Where the family polynomials are q,t-symmetric and where symmetry breaks.
//!
//! Two-part families are symmetric via an explicit involution; three-part
//! families come out symmetric on every grid checked here; with four parts
//! the defect can be nonzero, and the smallest break is printed in full.
//!
//! ```bash
//! cargo run -p kdyck --example symmetry
//! ```

use kdyck::{
    area, bounce, enumerate_paths, n2_involution, symmetry_defect, Composition, Error, Limits,
    Partition,
};

fn main() -> Result<(), Error> {
    let limits = Limits::default();

    // two parts: an involution exchanges the (area, bounce) weight
    let k = Composition::new(vec![4, 2])?;
    println!("involution on the family with up lengths {k}:");
    for path in enumerate_paths(&k, &limits)? {
        let mapped = n2_involution(&path)?;
        println!(
            "  ({}, {})  {path}   <->   {mapped}  ({}, {})",
            area(&path),
            bounce(&path).value,
            area(&mapped),
            bounce(&mapped).value,
        );
    }

    for parts in [vec![6, 3], vec![4, 4, 2], vec![3, 3, 3]] {
        let lambda = Partition::new(parts)?;
        let defect = symmetry_defect(&lambda, &limits)?;
        println!("defect for {lambda}: {defect}");
        assert!(defect.is_zero());
    }

    // the smallest asymmetric family
    let lambda = Partition::new(vec![3, 1, 1, 1])?;
    let defect = symmetry_defect(&lambda, &limits)?;
    println!("defect for {lambda} ({} terms):", defect.term_count());
    println!("  {defect}");

    // near-rectangular shapes stay symmetric as far as the eye can see
    for parts in [vec![2, 1, 1], vec![2, 2, 2, 1], vec![3, 3, 2, 2]] {
        let lambda = Partition::new(parts)?;
        let defect = symmetry_defect(&lambda, &limits)?;
        println!("defect for near-rectangular {lambda}: {defect}");
    }
    Ok(())
}
