//! `φ(a)` along the default route and the named alternates.

use clifford_factor::catalog::routes;
use clifford_factor::clifford::parse_multivector;
use clifford_factor::repmap::represent;
use clifford_factor::{Result, Signature};

fn main() -> Result<()> {
    let cases = [((0, 1), "1+2*eps1"), ((2, 0), "e1"), ((1, 1), "3 + e1 - 2*eps1 + e1*eps1"), ((0, 2), "1 + 2*eps1 - eps12"), ((3, 1), "e1 + eps1")];
    for ((p, q), src) in cases {
        let sig = Signature::of(p, q);
        let a = parse_multivector(sig, src)?;
        for r in routes(sig) {
            let img = represent(&a, Some(r))?;
            println!("{sig} `{r}`  a = {a}\n{}\n", img.value);
        }
    }
    Ok(())
}
