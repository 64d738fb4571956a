//! Pulling a matrix back to the algebra through the basis-image table.

use clifford_factor::catalog::default_spec;
use clifford_factor::clifford::parse_multivector;
use clifford_factor::repmap::{basis_table, reconstruct, represent, RepImage};
use clifford_factor::rings::{Mat, RingMatrix};
use clifford_factor::{Error, Result, Signature};

fn main() -> Result<()> {
    let sig = Signature::of(2, 1);
    let s = default_spec(sig)?;
    let table = basis_table(&s)?;
    println!("{sig} -> {}({}), {} basis images of length {}", table.ring, table.size, table.images.len(), table.images[0].len());

    let a = parse_multivector(sig, "1/2 - e2 + 3*e12*eps1")?;
    let img = represent(&a, None)?;
    println!("a = {a}\nphi(a) = {}", img.value);
    println!("back: {}", reconstruct(&img)?);

    // (1,1) is R(2): every 2x2 real matrix has a preimage
    let s11 = Signature::of(1, 1);
    let m = RingMatrix::single(Mat::from_ints(&[&[1, 2], &[3, 4]]));
    let route = default_spec(s11)?.route;
    println!("{s11} preimage of [[1,2],[3,4]]: {}", reconstruct(&RepImage { sig: s11, route, value: m })?);

    // (1,0) lands in ²R(1); a single block matrix has the wrong shape
    let bad = RingMatrix::single(Mat::from_ints(&[&[1]]));
    match reconstruct(&RepImage { sig: Signature::of(1, 0), route: default_spec(Signature::of(1, 0))?.route, value: bad }) {
        Err(Error::RingMismatch(m)) => println!("(1,0): {m}"),
        other => println!("(1,0): unexpected {other:?}"),
    }
    Ok(())
}
