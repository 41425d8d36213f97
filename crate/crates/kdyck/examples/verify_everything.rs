//! Run every exhaustive verification suite and print the report.
//!
//! ```bash
//! cargo run -p kdyck --example verify_everything
//! ```

use kdyck::verify::{run_suites, Suite};
use kdyck::{Error, Limits};

fn main() -> Result<(), Error> {
    let limits = Limits::default();
    let report = run_suites(&Suite::ALL, 10, &limits)?;
    println!("{report}");
    for finding in report.findings() {
        println!("finding: {} ({} cases)", finding.name, finding.failures);
    }
    assert!(report.passed());
    Ok(())
}
