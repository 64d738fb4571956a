//! Explicit and diagonal-family routes to the same signature.

use clifford_factor::catalog::{routes, spec};
use clifford_factor::{Multivector, Rational, Result, Route, Signature};

fn main() -> Result<()> {
    for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 3), (4, 1), (5, 1)] {
        let sig = Signature::of(p, q);
        let rs: Vec<String> = routes(sig).iter().map(|r| r.to_string()).collect();
        let ex = spec(sig, Route::Explicit)?;
        let di = spec(sig, Route::Diagonal)?;
        let same = (0..sig.dim() as u32).all(|m| {
            let b = Multivector::blade(sig, m, Rational::one());
            ex.represent(&b).ok() == di.represent(&b).ok()
        });
        println!("{sig}: routes [{}], explicit and diagonal images identical on every blade: {same}", rs.join(", "));
    }
    Ok(())
}
