//! Partition statistics, extensions, unions and the two orders on Λ.
//!
//!     cargo run --example partition_order

use ocvar::partitions::{down_set, enumerate_lambda, minimal_elements};
use ocvar::{Partition, Result};

fn main() -> Result<()> {
    for text in ["2,1", "1,1,1", "2,2", "3,1,1"] {
        let lambda: Partition = text.parse()?;
        let st = lambda.stats()?;
        println!("{lambda}: q={} r={} δ={} s={}  λ^2 = {}", st.q, st.r, st.delta, st.s, lambda.extend(2));
    }

    let lambda: Partition = "2,1".parse()?;
    let merged = lambda.extend(1).union_components(2, 3)?;
    println!("\nU_2,3((2,1)^1) = {merged}, so (2,1) ⪯ {merged}: {}", lambda.preceq(&merged)?);
    let (a, b): (Partition, Partition) = ("3,1".parse()?, "2,2".parse()?);
    println!("(3,1) ⊴ (2,2): {}   (3,1) ⪯ (2,2): {}   (2,2) ⪯ (3,1): {}", a.unlhd(&b)?, a.preceq(&b)?, b.preceq(&a)?);

    let below: Vec<String> = down_set(&"2,1,1".parse()?)?.iter().rev().map(Partition::to_string).collect();
    println!("\ndown-set of (2,1,1): {}", below.join(" "));

    let five: Vec<Partition> = (2..=5).flat_map(|m| enumerate_lambda(5, m).unwrap()).collect();
    let shown: Vec<String> = five.iter().map(Partition::to_string).collect();
    println!("Λ at total 5: {}", shown.join(" "));
    let minimal: Vec<String> = minimal_elements(&five)?.iter().map(Partition::to_string).collect();
    println!("minimal under ⪯: {}", minimal.join(" "));
    Ok(())
}
