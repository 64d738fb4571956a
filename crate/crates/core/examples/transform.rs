//! The similarity pair `P`, `P^-1` with its scale, and the `P (scale P^-1) = I` check.

use clifford_factor::catalog::spec;
use clifford_factor::verify::check_transform;
use clifford_factor::{Result, Route, Signature};

fn main() -> Result<()> {
    for (p, q, r) in [(1, 0, Route::Explicit), (0, 1, Route::Real2), (2, 0, Route::Explicit), (1, 1, Route::Explicit), (0, 2, Route::Real4)] {
        let sig = Signature::of(p, q);
        let s = spec(sig, r)?;
        let t = s.transform()?;
        println!("{sig} `{r}`: {}({}), D_a = {}", s.ring, s.size, s.replication.describe());
        println!("P =\n{}P^-1 (scale {}) =\n{}", t.p, t.scale, t.pinv);
        println!("{}\n", check_transform(sig, r).text());
    }
    let big = spec(Signature::of(3, 3), Route::Explicit)?;
    println!("(3,3): order {} transform, {}", big.transform_size(), check_transform(big.sig, big.route).text());
    Ok(())
}
