//! The filling and ranking tableaux behind the inverse sweep map, and the
//! bouncing construction that rebuilds the same rank tableau.
//!
//! ```bash
//! cargo run -p kdyck --example tableaux
//! ```

use kdyck::{
    area, bounce, filling_tableau, inverse_sweep, ranking_tableau, ranks_by_index, Error, KDyckPath,
};

fn main() -> Result<(), Error> {
    let image = KDyckPath::parse("S4 S3 W W W S1 W S1 W S1 W W W W W")?;
    println!("image: {image}");

    let filling = filling_tableau(&image);
    println!("filling columns (step indices): {:?}", filling.columns());

    let ranking = ranking_tableau(&filling);
    println!("ranking columns (start levels): {:?}", ranking.columns());
    println!(
        "rank of each step index:        {:?}",
        ranks_by_index(&filling, &ranking)
    );

    // the first row sums to the area of the preimage
    let preimage = inverse_sweep(&image);
    println!(
        "first row {:?} sums to {} = area of preimage {preimage}",
        ranking.first_row(),
        ranking.first_row_sum()
    );
    assert_eq!(ranking.first_row_sum(), area(&preimage));

    // the bouncing construction rebuilds the same tableau cell for cell
    let trace = bounce(&image);
    assert_eq!(trace.tableau, ranking);
    println!("bounce tableau matches the ranking tableau");

    println!(
        "tableaux as JSON: {} / {}",
        serde_json::to_string(&filling).expect("serializable"),
        serde_json::to_string(&ranking).expect("serializable"),
    );
    Ok(())
}
