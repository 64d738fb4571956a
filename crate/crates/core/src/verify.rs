//! Symbolic oracle and property harness.
//!
//! The oracle never splits `a`: it conjugates the diagonal argument by the
//! stored transform inside the algebra and reads the ring entries off the
//! result by matching against the route's unit blades.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::{catalog, spec, MvMatrix, RepSpec, Route, TransformPair};
use crate::clifford::{conjugate_along, Multivector, Signature};
use crate::error::{Error, Result};
use crate::repmap::{basis_table, eval_poly_mv, reconstruct, RepImage};
use crate::rings::{char_poly, mat_add, mat_inverse, mat_mul, Base, Mat, Ring, RingMatrix, RingScalar};
use crate::Rational;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub sig: Signature,
    pub route: Route,
    pub name: String,
    pub passed: bool,
    pub seed: u64,
    pub trials: usize,
    /// Failing input, reproducible from `seed`.
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn new(sig: Signature, route: Route, name: &str, seed: u64, trials: usize, res: std::result::Result<(), String>) -> Self {
        CheckReport { sig, route, name: name.into(), passed: res.is_ok(), seed, trials, counterexample: res.err() }
    }

    pub fn text(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {} {} {} [seed {}, {} trials]", self.sig, self.route, self.name, self.seed, self.trials);
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("\n    {c}"));
        }
        s
    }

    /// Tab-separated `sig route name status seed`.
    pub fn record(&self) -> String {
        let status = if self.passed { "pass" } else { "fail" };
        format!("{}\t{}\t{}\t{status}\t{}", self.sig, self.route, self.name, self.seed)
    }
}

/// Sorts by signature, route and name.
pub fn sort_reports(r: &mut [CheckReport]) {
    r.sort_by(|a, b| (a.sig, a.route, &a.name).cmp(&(b.sig, b.route, &b.name)));
}

/// `n / d` with `n ∈ [-9, 9]`, `d ∈ [1, 4]`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

/// Dense over all blades for `n <= 6`, otherwise 64 random blades.
pub fn random_multivector(sig: Signature, rng: &mut impl Rng) -> Multivector {
    let terms: Vec<(u32, Rational)> = if sig.n() <= 6 {
        (0..sig.dim() as u32).map(|m| (m, random_rational(rng))).collect()
    } else {
        (0..64).map(|_| (rng.gen_range(0..=sig.full_mask()), random_rational(rng))).collect()
    };
    Multivector::from_terms(sig, terms).expect("masks fit")
}

/// Reads `x = r0 + Σ r_t unit_t` over `base`.
fn entry(x: &Multivector, base: Base, units: &[Multivector]) -> Result<RingScalar> {
    let mut parts = vec![x.scalar_part()];
    let mut rest = x - &Multivector::scalar(x.signature(), x.scalar_part());
    for u in units.iter().take(base.dim() - 1) {
        let (mask, sign) = u.as_blade().ok_or_else(|| Error::Structure(format!("unit {u} is not a signed blade")))?;
        let c = &x.coeff(mask) / sign;
        rest = &rest - &u.scale(&c);
        parts.push(c);
    }
    if !rest.is_zero() {
        return Err(Error::EqualityViolation(format!("entry {x} leaves residue {rest} outside the ring units")));
    }
    Ok(RingScalar::from_parts(base, &parts))
}

/// The ring matrix carried by a conjugated multivector matrix.
pub fn extract(s: &RepSpec, m: &MvMatrix) -> Result<RingMatrix> {
    let layout = s.layout();
    if m.size() != layout.len() {
        return Err(Error::Shape(format!("expected {} rows, got {}", layout.len(), m.size())));
    }
    let base = s.ring.base();
    let mut blocks = vec![Mat::zero(base, s.size); s.ring.blocks()];
    for (r, &(br, i)) in layout.iter().enumerate() {
        for (c, &(bc, j)) in layout.iter().enumerate() {
            let x = m.get(r, c);
            if br != bc {
                if !x.is_zero() {
                    return Err(Error::EqualityViolation(format!("off-block entry ({}, {}) = {x}", r + 1, c + 1)));
                }
                continue;
            }
            blocks[br].set(i, j, entry(x, base, &s.units)?);
        }
    }
    RingMatrix::new(s.ring, blocks)
}

/// `P · D_a · (scale · Pinv)` with `D_a` from the replication pattern.
pub fn oracle_flat(a: &Multivector, s: &RepSpec) -> Result<RingMatrix> {
    let t = s.transform()?;
    let abar = match &s.replication.axis {
        Some((u, sub)) => Some(conjugate_along(a, u, sub)?),
        None => None,
    };
    let d: Vec<Multivector> =
        s.replication.flags.iter().map(|&f| if f { abar.clone().expect("axis for conjugate slots") } else { a.clone() }).collect();
    let n = t.size();
    let mut pd = t.p.clone();
    for i in 0..n {
        for j in 0..n {
            pd.set(i, j, t.p.get(i, j) * &d[j]);
        }
    }
    let m = pd.mul(&t.pinv)?.scale(&t.scale);
    extract(s, &m)
}

/// Step-by-step conjugation; periodic lifts conjugate by the outer stage,
/// pull entries back to the inner signature and recurse.
pub fn oracle_factored(a: &Multivector, s: &RepSpec) -> Result<RingMatrix> {
    match s.periodic_stage(a)? {
        None => extract(s, &s.psi(a)?),
        Some((outer, comp, inner)) => {
            let n = outer.size();
            let k = inner.size;
            let base = s.ring.base();
            let mut blocks = vec![Mat::zero(base, s.size); s.ring.blocks()];
            for i in 0..n {
                for j in 0..n {
                    let x = outer.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    let b = comp.pullback(x).map_err(|e| Error::EqualityViolation(format!("outer entry ({}, {}): {e}", i + 1, j + 1)))?;
                    let img = oracle_represent(&b, &inner)?;
                    for (blk, m) in blocks.iter_mut().zip(img.blocks()) {
                        for r in 0..k {
                            for c in 0..k {
                                blk.set(i * k + r, j * k + c, m.get(r, c).clone());
                            }
                        }
                    }
                }
            }
            RingMatrix::new(s.ring, blocks)
        }
    }
}

/// Flat oracle for transforms up to order 8, factored beyond.
pub fn oracle_represent(a: &Multivector, s: &RepSpec) -> Result<RingMatrix> {
    if a.signature() != s.sig {
        return Err(Error::SignatureMismatch(a.signature(), s.sig));
    }
    if s.is_periodic() || s.transform_size() > 8 {
        oracle_factored(a, s)
    } else {
        oracle_flat(a, s)
    }
}

fn run(f: impl FnOnce() -> Result<std::result::Result<(), String>>) -> std::result::Result<(), String> {
    match f() {
        Ok(r) => r,
        Err(e) => Err(e.to_string()),
    }
}

/// `P · (scale · Pinv) = I` for a given pair.
pub fn check_pair(sig: Signature, route: Route, t: &TransformPair) -> CheckReport {
    let res = run(|| {
        Ok(match t.defect()? {
            None => Ok(()),
            Some((i, j, x)) => Err(format!("P scale Pinv has entry ({}, {}) = {x}", i + 1, j + 1)),
        })
    });
    CheckReport::new(sig, route, "transform", 0, 1, res)
}

pub fn check_transform(sig: Signature, route: Route) -> CheckReport {
    match spec(sig, route).and_then(|s| s.transform().cloned()) {
        Ok(t) => check_pair(sig, route, &t),
        Err(e) => CheckReport::new(sig, route, "transform", 0, 1, Err(e.to_string())),
    }
}

/// `oracle_represent(a) = represent(a)` on random `a`.
pub fn check_similarity(sig: Signature, route: Route, trials: usize, seed: u64) -> CheckReport {
    let res = run(|| {
        let s = spec(sig, route)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for t in 0..trials {
            let a = random_multivector(sig, &mut rng);
            let fast = s.represent(&a)?;
            match oracle_represent(&a, &s) {
                Ok(o) if o == fast => {}
                Ok(o) => return Ok(Err(format!("trial {t}: a = {a}\n    oracle {o}\n    fast {fast}"))),
                Err(e) => return Ok(Err(format!("trial {t}: a = {a}: {e}"))),
            }
        }
        Ok(Ok(()))
    });
    CheckReport::new(sig, route, "similarity", seed, trials, res)
}

pub fn check_unit(s: &RepSpec) -> CheckReport {
    let res = run(|| {
        let one = s.represent(&Multivector::one(s.sig))?;
        Ok(if one.is_identity() { Ok(()) } else { Err(format!("phi(1) = {one}")) })
    });
    CheckReport::new(s.sig, s.route, "unit", 0, 1, res)
}

pub fn check_homomorphism(s: &RepSpec, trials: usize, seed: u64) -> CheckReport {
    let res = run(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for t in 0..trials {
            let a = random_multivector(s.sig, &mut rng);
            let b = random_multivector(s.sig, &mut rng);
            let l = random_rational(&mut rng);
            let (pa, pb) = (s.represent(&a)?, s.represent(&b)?);
            if s.represent(&(&a * &b))? != mat_mul(&pa, &pb)? {
                return Ok(Err(format!("trial {t}: phi(ab) != phi(a) phi(b) for a = {a}, b = {b}")));
            }
            if s.represent(&(&a + &b))? != mat_add(&pa, &pb)? {
                return Ok(Err(format!("trial {t}: phi(a+b) != phi(a) + phi(b) for a = {a}, b = {b}")));
            }
            if s.represent(&a.scale(&l))? != pa.scale(&l) {
                return Ok(Err(format!("trial {t}: phi({l} a) != {l} phi(a) for a = {a}")));
            }
        }
        Ok(Ok(()))
    });
    CheckReport::new(s.sig, s.route, "homomorphism", seed, trials, res)
}

pub fn check_faithful(s: &RepSpec) -> CheckReport {
    let res = run(|| basis_table(s).map(|_| Ok(())));
    CheckReport::new(s.sig, s.route, "faithfulness", 0, s.sig.dim(), res)
}

pub fn check_round_trip(s: &RepSpec, trials: usize, seed: u64) -> CheckReport {
    let res = run(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blades = (0..s.sig.dim() as u32).map(|m| Multivector::blade(s.sig, m, Rational::one()));
        let randoms: Vec<Multivector> = (0..trials).map(|_| random_multivector(s.sig, &mut rng)).collect();
        for a in blades.chain(randoms) {
            let img = RepImage { sig: s.sig, route: s.route, value: s.represent(&a)? };
            let back = reconstruct(&img)?;
            if back != a {
                return Ok(Err(format!("a = {a} reconstructs to {back}")));
            }
        }
        Ok(Ok(()))
    });
    CheckReport::new(s.sig, s.route, "round-trip", seed, trials, res)
}

pub fn check_inverse(s: &RepSpec, trials: usize, seed: u64) -> CheckReport {
    let res = run(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let one = Multivector::one(s.sig);
        let mut found = 0;
        let mut attempts = 0;
        while found < trials && attempts < 20 * trials {
            attempts += 1;
            let a = random_multivector(s.sig, &mut rng);
            let img = s.represent(&a)?;
            let Some(inv) = mat_inverse(&img) else { continue };
            let b = reconstruct(&RepImage { sig: s.sig, route: s.route, value: inv })?;
            if &a * &b != one || &b * &a != one {
                return Ok(Err(format!("a = {a}: pulled-back inverse {b} fails a b = b a = 1")));
            }
            found += 1;
        }
        Ok(if found == trials { Ok(()) } else { Err(format!("only {found} invertible samples in {attempts} draws")) })
    });
    CheckReport::new(s.sig, s.route, "inverse", seed, trials, res)
}

pub fn check_cayley_hamilton(s: &RepSpec, trials: usize, seed: u64) -> CheckReport {
    let res = run(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let a = random_multivector(s.sig, &mut rng);
            let p = char_poly(&s.represent(&a)?)?;
            let v = eval_poly_mv(&p, &a);
            if !v.is_zero() {
                return Ok(Err(format!("a = {a}: p_a(a) = {v}")));
            }
        }
        Ok(Ok(()))
    });
    CheckReport::new(s.sig, s.route, "cayley-hamilton", seed, trials, res)
}

/// Every applicable check for one spec. Homomorphism trials drop to 3 above
/// `n = 6`; faithfulness, round trip, inverse and Cayley–Hamilton are limited
/// to the signatures where they are cheap and typed.
pub fn check_suite(sig: Signature, route: Route, seed: u64, trials: usize) -> Vec<CheckReport> {
    let s = match spec(sig, route) {
        Ok(s) => s,
        Err(e) => return vec![CheckReport::new(sig, route, "build", seed, 0, Err(e.to_string()))],
    };
    let n = sig.n();
    let mut out = vec![check_transform(sig, route), check_unit(&s), check_similarity(sig, route, trials, seed)];
    out.push(check_homomorphism(&s, trials.min(if n <= 6 { trials } else { 3 }), seed));
    if n <= 6 {
        out.push(check_faithful(&s));
        out.push(check_round_trip(&s, trials.min(20), seed));
    }
    if n <= 4 {
        out.push(check_inverse(&s, trials.min(50), seed));
    }
    if matches!(s.ring, Ring::R | Ring::R2) && n <= 6 {
        out.push(check_cayley_hamilton(&s, trials.min(50), seed));
    }
    sort_reports(&mut out);
    out
}

/// Runs [`check_suite`] over every catalog entry (or only defaults).
pub fn check_catalog(seed: u64, trials: usize, defaults_only: bool) -> Vec<CheckReport> {
    let entries: Vec<_> = catalog().into_iter().filter(|e| !defaults_only || e.is_default).collect();
    let mut out: Vec<CheckReport> = entries
        .par_iter()
        .flat_map_iter(|e| {
            let t = if e.sig.n() <= 6 { trials } else { trials.min(10) };
            check_suite(e.sig, e.route, seed, t)
        })
        .collect();
    sort_reports(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::parse_multivector;

    #[test]
    fn complex_unit_via_oracle() {
        let s = spec(Signature::of(0, 1), Route::Real2).unwrap();
        let a = parse_multivector(s.sig, "eps1").unwrap();
        assert_eq!(oracle_represent(&a, &s).unwrap().block(0).clone(), Mat::from_ints(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn corrupted_transform_fails() {
        let s = spec(Signature::of(2, 0), Route::Explicit).unwrap();
        let mut t = s.transform().unwrap().clone();
        t.p.set(0, 1, Multivector::zero(s.sig));
        let r = check_pair(s.sig, s.route, &t);
        assert!(!r.passed && r.counterexample.is_some());
    }

    #[test]
    fn deterministic_reports() {
        let a = check_similarity(Signature::of(1, 1), Route::Explicit, 5, 3);
        let b = check_similarity(Signature::of(1, 1), Route::Explicit, 5, 3);
        assert_eq!(a, b);
        assert!(a.passed, "{}", a.text());
    }
}
