//! Deriving one word from another by rewriting with an identity system, and
//! replaying the recorded deduction.
//!
//!     cargo run --example deduction

use ocvar::rewrite::{collapse_system, derivable, one_step_rewrites};
use ocvar::{DeductionTrace, IdentitySystem, Partition, Result, Word};

fn main() -> Result<()> {
    let system = IdentitySystem::parse("# both identities of W(2,1) that start at aab\naab = aba\naba = baa\n")?;
    let (u, v) = (Word::parse("aab")?, Word::parse("baa")?);

    println!("one step from aabc:");
    for (target, step) in one_step_rewrites(&Word::parse("aabc")?, &system) {
        println!("  {} via identity {} {}", target.to_text(), step.identity, step.direction.as_str());
    }

    let trace = derivable(&u, &v, &system)?.expect("aab and baa are in one class");
    println!("\n{} = {} in {} steps:", u.to_text(), v.to_text(), trace.len());
    print!("{}", trace.to_records());

    // records carry enough to rebuild every step without searching again
    let reread = DeductionTrace::parse_records(&trace.to_records())?;
    reread.replay(&system)?;
    println!("replayed OK");

    // the pair that keeps W(2,1) from being greedy
    let w21 = collapse_system(&Partition::new(vec![2, 1])?)?;
    let (x, y) = (Word::parse("x1 x1 x2 x3")?, Word::parse("x1 x1 x3 x2")?);
    println!("\n{x} = {y} under W(2,1): {}", if derivable(&x, &y, &w21)?.is_some() { "derivable" } else { "not derivable" });

    match derivable(&Word::parse("ab")?, &Word::parse("aab")?, &system) {
        Err(e) => println!("ab = aab: {e}"),
        Ok(_) => unreachable!("unbalanced pairs are rejected"),
    }
    Ok(())
}
