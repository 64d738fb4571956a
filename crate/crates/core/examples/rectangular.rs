//! Rectangular lifts of matrices over `R_{1,0}` and `R_{0,1}`.

use clifford_factor::clifford::parse_multivector;
use clifford_factor::repmap::{matrix_represent, real_block_mul, RealBlock};
use clifford_factor::{Multivector, Result, Signature};

fn show(name: &str, m: &RealBlock) {
    println!("{name}:");
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
}

fn grid(sig: Signature, rows: &[&[&str]]) -> Result<Vec<Vec<Multivector>>> {
    rows.iter().map(|r| r.iter().map(|t| parse_multivector(sig, t)).collect()).collect()
}

fn main() -> Result<()> {
    let c = Signature::of(0, 1);
    let a = grid(c, &[&["eps1", "1"]])?;
    show("(0,1) [eps1, 1]", &matrix_represent(&a)?);

    let h = Signature::of(1, 0);
    let a = grid(h, &[&["1+e1", "2"], &["e1", "3-e1"], &["0", "1"]])?;
    let b = grid(h, &[&["1", "e1", "2"], &["-1*e1", "1", "0"]])?;
    let ab: Vec<Vec<Multivector>> = a
        .iter()
        .map(|row| (0..b[0].len()).map(|j| row.iter().zip(&b).fold(Multivector::zero(h), |acc, (x, brow)| &acc + &(x * &brow[j]))).collect())
        .collect();
    let lhs = matrix_represent(&ab)?;
    let rhs = real_block_mul(&matrix_represent(&a)?, &matrix_represent(&b)?)?;
    show("(1,0) lift of A B", &lhs);
    println!("lift(AB) = lift(A) lift(B): {}", lhs == rhs);
    Ok(())
}
