//! Mod-8 lifts: `R_{p+8,q}` through `R_{8,0}` and composite generators `e_[8] α_j`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use clifford_factor::catalog::spec;
use clifford_factor::rings::mat_mul;
use clifford_factor::verify::random_multivector;
use clifford_factor::{Result, Route, Signature};

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (p, q) in [(9, 0), (0, 9), (8, 1), (10, 0)] {
        let s = spec(Signature::of(p, q), Route::Periodic)?;
        let a = random_multivector(s.sig, &mut rng);
        let b = random_multivector(s.sig, &mut rng);
        let (_, comps, inner) = s.periodic_stage(&a)?.expect("periodic route");
        let gens: Vec<String> = comps.gens().iter().map(|g| g.to_string()).collect();
        let ok = s.represent(&(&a * &b))? == mat_mul(&s.represent(&a)?, &s.represent(&b)?)?;
        println!(
            "{} -> {}({}) over inner {} -> {}({}); composite generators [{}]; multiplicative on a sample pair: {ok}",
            s.sig, s.ring, s.size, inner.sig, inner.ring, inner.size, gens.join(", ")
        );
    }
    Ok(())
}
