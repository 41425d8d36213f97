//! Apply the sweep map, watch the statistics transport, and invert it.
//!
//! ```bash
//! cargo run -p kdyck --example sweep_and_back
//! ```

use kdyck::{area, bounce, dinv, inverse_sweep, sweep_map, Error, KDyckPath};

fn main() -> Result<(), Error> {
    let path = KDyckPath::parse("S3 W S1 W W W S4 W W S1 S1 W W W W")?;
    let image = sweep_map(&path);

    println!("path:  {path}");
    println!("image: {image}");

    // dinv becomes area, area becomes bounce
    println!(
        "dinv(path) = {}  vs  area(image) = {}",
        dinv(&path).total,
        area(&image)
    );
    println!(
        "area(path) = {}  vs  bounce(image) = {}",
        area(&path),
        bounce(&image).value
    );

    let back = inverse_sweep(&image);
    println!("inverse of the image: {back}");
    assert_eq!(back, path);

    // the image generally rearranges the up lengths
    println!(
        "up lengths {} swept into {}",
        path.composition(),
        image.composition()
    );
    Ok(())
}
