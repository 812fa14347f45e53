//! Transversals `W_λ`: every arrangement of `x1^ℓ1 ⋯ xm^ℓm`.
//!
//!     cargo run --example transversals

use ocvar::words::{canonical_word, enumerate_transversal, in_transversal, transversal_size};
use ocvar::{Partition, Result, Word};

fn main() -> Result<()> {
    for text in ["2,1", "1,1,1", "2,2"] {
        let lambda: Partition = text.parse()?;
        let words: Vec<String> = enumerate_transversal(&lambda)?.iter().map(Word::to_text).collect();
        println!("W{lambda} ({} words, least {}): {}", words.len(), canonical_word(&lambda)?, words.join(" "));
    }

    for text in ["2,1,1", "2,2,1,1,1", "3,3,2"] {
        let lambda: Partition = text.parse()?;
        println!("|W{lambda}| = {}", transversal_size(&lambda).expect("small"));
    }

    let u = Word::parse("x2 x1 x1 x3")?;
    println!("\n{u} (compact {}) has partition {}", u.to_text(), u.partition());
    println!("in W(2,1,1): {}", in_transversal(&u, &"2,1,1".parse()?));
    Ok(())
}
