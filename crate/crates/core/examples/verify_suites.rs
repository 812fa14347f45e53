//! Running the bounded instance suites.
//!
//!     cargo run --release --example verify_suites -- 6

use ocvar::verify::{run_suite, Suite};
use ocvar::Result;

fn main() -> Result<()> {
    let bound = std::env::args().nth(1).map_or(5, |b| b.parse().expect("bound is a number"));
    for suite in Suite::ALL {
        let report = run_suite(suite, bound)?;
        let failed = report.cases.iter().filter(|c| !c.passed).count();
        println!("{:<20} {:>4} cases, {failed} failed", suite.name(), report.cases.len());
    }
    Ok(())
}
