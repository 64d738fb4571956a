//! Writes `catalog.txt` and `corrections.md` to a directory (default: current).

use std::path::PathBuf;

use clifford_factor::catalog::{catalog_text, corrections};
use clifford_factor::Result;

fn main() -> Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    let text = catalog_text()?;
    let ledger = corrections::ledger()?;
    std::fs::write(dir.join("catalog.txt"), &text).expect("write catalog.txt");
    std::fs::write(dir.join("corrections.md"), corrections::render(&ledger)).expect("write corrections.md");
    print!("{text}");
    println!("{} ledger entries, {} amended", ledger.len(), ledger.iter().filter(|c| !c.passed).count());
    Ok(())
}
