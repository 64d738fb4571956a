//! Prints the corrections ledger: every printed formula that failed its check.

use clifford_factor::catalog::corrections;

fn main() -> clifford_factor::Result<()> {
    let ledger = corrections::ledger()?;
    print!("{}", corrections::render(&ledger));
    Ok(())
}
