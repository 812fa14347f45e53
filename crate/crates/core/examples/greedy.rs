//! Greedy varieties collapse every transversal they reduce. `S_λ` is greedy;
//! `W_{(2,1)}` is not.
//!
//!     cargo run --example greedy

use ocvar::varieties::{greedy_report, s_variety, w_variety};
use ocvar::{Partition, Result, VarietyPresentation};

fn show(p: &VarietyPresentation, bound: u32) -> Result<()> {
    let report = greedy_report(p, bound)?;
    let witnesses: Vec<String> = report.witnesses().map(Partition::to_string).collect();
    println!(
        "{:<12} greedy up to {bound}: {:<5}  reduced but not collapsed: {}",
        p.label(),
        report.greedy_up_to_bound,
        if witnesses.is_empty() { "-".to_string() } else { witnesses.join(" ") }
    );
    Ok(())
}

fn main() -> Result<()> {
    let lambda = Partition::new(vec![2, 1])?;
    show(&VarietyPresentation::all_semigroups(), 5)?;
    show(&w_variety(&lambda)?, 5)?;
    show(&s_variety(&lambda)?, 5)?;
    show(&s_variety(&Partition::new(vec![2, 2])?)?, 7)?;
    Ok(())
}
