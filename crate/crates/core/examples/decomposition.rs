//! Recovering a greedy variety as a meet of varieties `S_λ`.
//!
//!     cargo run --release --example decomposition

use ocvar::varieties::{decompose, meet, s_variety};
use ocvar::{Partition, Result};

fn list<'a>(set: impl IntoIterator<Item = &'a Partition>) -> String {
    let items: Vec<String> = set.into_iter().map(Partition::to_string).collect();
    if items.is_empty() { "-".into() } else { items.join(" ") }
}

fn main() -> Result<()> {
    let v = meet(&[s_variety(&Partition::new(vec![2, 2])?)?, s_variety(&Partition::new(vec![3, 1])?)?])?;
    let result = decompose(&v, 8)?;
    println!("V = {}", v.label());
    println!("Γ (certified up to 8): {}", list(&result.gamma));
    println!("Γ' (minimal):          {}", list(&result.gamma_prime));
    println!("tails past the bound:  {}", list(&result.indeterminate));
    println!("rebuilt as {}: same classes = {}", result.reconstruction()?.label(), result.reconstruction_ok);
    Ok(())
}
