//! The property suite for one signature and route.
//!
//! Usage: `cargo run --example verify_suite -- 3,1 [route] [seed] [trials]`

use clifford_factor::catalog::default_route;
use clifford_factor::verify::check_suite;
use clifford_factor::{Route, Signature};

fn main() {
    let mut args = std::env::args().skip(1);
    let sig: Signature = args.next().as_deref().unwrap_or("3,1").parse().expect("signature p,q");
    let route: Route = match args.next() {
        Some(r) => r.parse().expect("route name"),
        None => default_route(sig).expect("covered signature"),
    };
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    for r in check_suite(sig, route, seed, trials) {
        println!("{}", r.text());
        if let Some(c) = &r.counterexample {
            println!("    {c}");
        }
    }
}
