//! Saving a presentation to text and loading it back. Loading re-checks
//! every collapse the header declares.
//!
//!     cargo run --example presentation_files

use ocvar::varieties::s_variety;
use ocvar::{Partition, Result, VarietyPresentation};

fn main() -> Result<()> {
    let s21 = s_variety(&Partition::new(vec![2, 1])?)?;
    let text = s21.to_text();
    print!("{text}");
    assert_eq!(VarietyPresentation::parse(&text)?, s21);

    let path = std::env::temp_dir().join("ocvar-s21.txt");
    std::fs::write(&path, &text).expect("temp dir is writable");
    let loaded = VarietyPresentation::parse(&std::fs::read_to_string(&path).expect("just written"))?;
    println!("\nreloaded {loaded} from {}", path.display());

    let false_claim = "#! bound=3 collapses=2,1,1 label=claims-too-much\naab = aba\n";
    match VarietyPresentation::parse(false_claim) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("the declared collapse does not hold"),
    }
    Ok(())
}
