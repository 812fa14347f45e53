//! The families `X_n`, `X_{n,m}` and `X_{n,m,λ}`, cut off at a length bound.
//!
//!     cargo run --example legacy_families

use ocvar::varieties::{greedy_report, legacy_variety, LegacyFamily};
use ocvar::{Partition, Result};

fn main() -> Result<()> {
    let bound = 5;
    for spec in ["Xn:4", "Xnm:3:2", "Xnml:3,1"] {
        let family: LegacyFamily = spec.parse()?;
        let v = legacy_variety(&family, bound)?;
        let collapsed: Vec<String> = v.declared_collapses().iter().rev().map(Partition::to_string).collect();
        let greedy = greedy_report(&v, bound)?.greedy_up_to_bound;
        println!("{family}: {} identities, greedy up to {bound}: {greedy}", v.system().len());
        println!("  collapses {}", collapsed.join(" "));
    }
    Ok(())
}
