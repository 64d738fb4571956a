//! Inverses computed through the matrix image and pulled back.

use clifford_factor::clifford::parse_multivector;
use clifford_factor::repmap::element_inverse;
use clifford_factor::{Result, Signature};

fn main() -> Result<()> {
    let cases = [((0, 2), "1+eps1"), ((0, 1), "eps1"), ((1, 0), "1+e1"), ((1, 0), "2+e1"), ((2, 2), "1 + e1*eps2 + eps12"), ((3, 0), "1 + e123")];
    for ((p, q), src) in cases {
        let sig = Signature::of(p, q);
        let a = parse_multivector(sig, src)?;
        match element_inverse(&a, None)? {
            Some(b) => {
                println!("{sig}  ({a})^-1 = {b}");
                assert!((&a * &b).is_scalar() && (&a * &b).scalar_part().is_one());
            }
            None => println!("{sig}  {a} is a zero divisor"),
        }
    }
    Ok(())
}
