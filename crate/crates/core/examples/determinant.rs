//! Determinants, characteristic polynomials and Cayley–Hamilton inside the algebra.

use clifford_factor::clifford::parse_multivector;
use clifford_factor::repmap::{element_charpoly, element_det, eval_poly_mv};
use clifford_factor::{Result, Signature};

fn main() -> Result<()> {
    let a = parse_multivector(Signature::of(1, 0), "3 + 2*e1")?;
    println!("(1,0) det phi({a}) = {}   (a0^2 - a1^2 = 5)", element_det(&a, None)?);
    let b = parse_multivector(Signature::of(2, 0), "1 + 2*e1 + 3*e2 + 4*e12")?;
    println!("(2,0) det phi({b}) = {}   (1 - 4 - 9 + 16 = 4)", element_det(&b, None)?);
    let c = parse_multivector(Signature::of(0, 1), "1 + 2*eps1")?;
    println!("(0,1) det phi({c}) = {}", element_det(&c, None)?);

    for (p, q, src) in [(1, 1, "2 - e1 + eps1 + 3*e1*eps1"), (3, 1, "1 + e1 - e23 + eps1"), (2, 2, "e1 + e2*eps1 - 2*eps12")] {
        let sig = Signature::of(p, q);
        let x = parse_multivector(sig, src)?;
        let poly = element_charpoly(&x, None)?;
        let coeffs: Vec<String> = poly.iter().map(|c| c.to_string()).collect();
        println!("{sig} x = {x}\n  charpoly (ascending) [{}]\n  p(x) = {}", coeffs.join(", "), eval_poly_mv(&poly, &x));
    }
    Ok(())
}
