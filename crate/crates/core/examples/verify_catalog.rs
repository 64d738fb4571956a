//! Runs the full property suite over every catalog entry.
//!
//! Usage: `cargo run --example verify_catalog -- [seed] [trials]`

use clifford_factor::verify::check_catalog;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let reports = check_catalog(seed, trials, false);
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in &reports {
        println!("{}", r.text());
    }
    println!("{} checks, {failed} failed", reports.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
