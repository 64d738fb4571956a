//! The symbolic oracle: conjugating `D_a` inside the algebra and reading the ring entries.

use clifford_factor::catalog::spec;
use clifford_factor::clifford::parse_multivector;
use clifford_factor::verify::{check_similarity, oracle_represent};
use clifford_factor::{Result, Route, Signature};

fn main() -> Result<()> {
    let s = spec(Signature::of(0, 1), Route::Real2)?;
    let i = parse_multivector(s.sig, "eps1")?;
    println!("(0,1) oracle(eps1) = {}", oracle_represent(&i, &s)?);

    let s = spec(Signature::of(2, 0), Route::Explicit)?;
    let e1 = parse_multivector(s.sig, "e1")?;
    println!("(2,0) oracle(e1) = {}", oracle_represent(&e1, &s)?);

    let s = spec(Signature::of(2, 1), Route::Explicit)?;
    let a = parse_multivector(s.sig, "1 + e1 - 2*e2*eps1 + e12*eps1")?;
    let o = oracle_represent(&a, &s)?;
    assert_eq!(o, s.represent(&a)?);
    println!("(2,1) oracle agrees with the structural map:\n{o}");

    for (p, q, r) in [(1, 1, Route::Explicit), (3, 0, Route::Explicit), (0, 9, Route::Periodic)] {
        println!("{}", check_similarity(Signature::of(p, q), r, 10, 7).text());
    }
    Ok(())
}
