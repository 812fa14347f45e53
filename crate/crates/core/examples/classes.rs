//! Splitting a transversal into classes of mutually derivable words.
//!
//!     cargo run --example classes

use ocvar::rewrite::component_classes;
use ocvar::varieties::w_variety;
use ocvar::{Partition, Result, Word};

fn main() -> Result<()> {
    let w21 = w_variety(&Partition::new(vec![2, 1])?)?;
    print!("{}\n", w21.system().to_text());
    for text in ["2,1", "2,1,1", "2,2"] {
        let lambda: Partition = text.parse()?;
        let classes = component_classes(&lambda, w21.system())?;
        println!("W{lambda}: {} class{}", classes.len(), if classes.len() == 1 { "" } else { "es" });
        for class in &classes {
            let words: Vec<String> = class.iter().map(Word::to_text).collect();
            println!("  {}", words.join(" "));
        }
    }
    Ok(())
}
