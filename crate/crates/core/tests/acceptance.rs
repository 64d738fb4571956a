//! Acceptance criteria 1–11. Each criterion prints one PASS/FAIL line.

use std::io::Write;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use clifford_factor::catalog::{catalog, corrections, routes, spec, CatalogEntry};
use clifford_factor::clifford::parse_multivector;
use clifford_factor::repmap::{element_charpoly, element_det, element_inverse, eval_poly_mv, represent};
use clifford_factor::rings::mat_mul;
use clifford_factor::verify::{
    check_cayley_hamilton, check_faithful, check_homomorphism, check_inverse, check_round_trip, check_similarity,
    check_transform, check_unit, random_multivector, random_rational, CheckReport,
};
use clifford_factor::{classify, Multivector, Rational, Ring, RingScalar, Route, Signature};

const SEED: u64 = 7;

fn report(k: u32, title: &str, start: Instant, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "{status} criterion {k:>2}: {title} ({:.1}s)", start.elapsed().as_secs_f64()).unwrap();
    for f in failures.iter().take(5) {
        writeln!(out, "    {f}").unwrap();
    }
    out.flush().unwrap();
    assert!(failures.is_empty(), "criterion {k} failed: {}", failures.join("\n"));
}

fn failures(reports: impl IntoIterator<Item = CheckReport>) -> Vec<String> {
    reports.into_iter().filter(|r| !r.passed).map(|r| r.text()).collect()
}

fn sig(p: u32, q: u32) -> Signature {
    Signature::of(p, q)
}

fn entries_up_to(n: u32) -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| e.sig.n() <= n).collect()
}

/// Signatures the transform criterion must cover.
fn required_signatures() -> Vec<Signature> {
    let mut out = Vec::new();
    for n in 1..=6u32 {
        for p in 0..=n {
            out.push(sig(p, n - p));
        }
    }
    out.extend([sig(7, 0), sig(0, 7), sig(8, 0), sig(0, 8), sig(9, 0), sig(0, 9)]);
    for k in 0..=6u32 {
        for n in 1..=10u32 {
            if 2 * n + k <= 10 {
                out.push(sig(n + k, n));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn criterion_01_transform_validity() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let entries = catalog();
    for s in required_signatures() {
        if !entries.iter().any(|e| e.sig == s) {
            fails.push(format!("{s} is missing from the catalog"));
        }
    }
    fails.extend(failures(entries.iter().map(|e| check_transform(e.sig, e.route))));
    report(1, &format!("P (scale Pinv) = I for {} catalog entries", entries.len()), start, &fails);
}

#[test]
fn criterion_02_similarity() {
    let start = Instant::now();
    let entries = catalog();
    let fails = failures(entries.iter().map(|e| {
        let trials = if e.sig.n() <= 6 { 100 } else { 10 };
        check_similarity(e.sig, e.route, trials, SEED)
    }));
    report(2, "oracle agrees with the fast path (100 trials n <= 6, 10 trials n >= 7)", start, &fails);
}

#[test]
fn criterion_03_classification() {
    let start = Instant::now();
    let mut fails = Vec::new();
    for e in catalog() {
        let s = spec(e.sig, e.route).unwrap();
        if e.route.is_alternate() {
            continue;
        }
        if (s.ring, s.size) != classify(e.sig) {
            fails.push(format!("{} {}: built {}({}), classify gives {:?}", e.sig, e.route, s.ring, s.size, classify(e.sig)));
        }
    }
    let spots = [(sig(3, 1), Ring::R, 4), (sig(2, 2), Ring::R, 4), (sig(0, 2), Ring::H, 1), (sig(2, 1), Ring::R2, 2)];
    for (g, ring, size) in spots {
        if classify(g) != (ring, size) {
            fails.push(format!("{g}: expected {ring}({size}), classify gives {:?}", classify(g)));
        }
    }
    let ledger = corrections::ledger().unwrap();
    if !ledger.iter().any(|c| c.location == "isomorphism list, R_{2,2}" && !c.passed) {
        fails.push("the printed C^{4x4} for R_{2,2} is not in the ledger".into());
    }
    report(3, "every catalog entry's ring and size match classify; spot values", start, &fails);
}

#[test]
fn criterion_04_homomorphism_faithfulness_unit() {
    let start = Instant::now();
    let mut reports = Vec::new();
    for e in entries_up_to(6) {
        let s = spec(e.sig, e.route).unwrap();
        reports.push(check_homomorphism(&s, 100, SEED));
        reports.push(check_faithful(&s));
        reports.push(check_unit(&s));
    }
    report(4, "homomorphism on 100 pairs, faithfulness and unit for p+q <= 6", start, &failures(reports));
}

#[test]
fn criterion_05_determinants() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..50 {
        let c: Vec<Rational> = (0..4).map(|_| random_rational(&mut rng)).collect();
        let sq = |x: &Rational| x * x;
        let a = Multivector::from_terms(sig(1, 0), [(0, c[0].clone()), (1, c[1].clone())]).unwrap();
        let want = RingScalar::Real(&sq(&c[0]) - &sq(&c[1]));
        let got = element_det(&a, None).unwrap();
        if got != want {
            fails.push(format!("(1,0) a = {a}: det = {got}, expected {want}"));
        }
        let b = Multivector::from_terms(sig(2, 0), (0..4u32).map(|m| (m, c[m as usize].clone()))).unwrap();
        let want = RingScalar::Real(&(&(&sq(&c[0]) - &sq(&c[1])) - &sq(&c[2])) + &sq(&c[3]));
        let got = element_det(&b, None).unwrap();
        if got != want {
            fails.push(format!("(2,0) a = {b}: det = {got}, expected {want}"));
        }
    }
    report(5, "det phi_{1,0} = a0^2 - a1^2, det phi_{2,0} = a0^2 - a1^2 - a2^2 + a3^2 on 50 points", start, &fails);
}

#[test]
fn criterion_06_cayley_hamilton() {
    let start = Instant::now();
    let mut fails = Vec::new();
    for g in [sig(1, 0), sig(2, 0), sig(1, 1), sig(3, 1), sig(2, 2)] {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..50 {
            let a = random_multivector(g, &mut rng);
            let p = element_charpoly(&a, None).unwrap();
            let v = eval_poly_mv(&p, &a);
            if !v.is_zero() {
                fails.push(format!("{g} a = {a}: p_a(a) = {v}"));
            }
        }
        fails.extend(failures([check_cayley_hamilton(&spec(g, routes(g)[0]).unwrap(), 50, SEED)]));
    }
    report(6, "p_a(a) = 0 for 50 random a in (1,0), (2,0), (1,1), (3,1), (2,2)", start, &fails);
}

#[test]
fn criterion_07_round_trip() {
    let start = Instant::now();
    let reports = entries_up_to(6).into_iter().map(|e| check_round_trip(&spec(e.sig, e.route).unwrap(), 20, SEED));
    report(7, "reconstruct(represent(a)) = a on all blades plus 20 random elements, p+q <= 6", start, &failures(reports));
}

#[test]
fn criterion_08_inverse() {
    let start = Instant::now();
    let mut fails = failures(entries_up_to(4).into_iter().map(|e| check_inverse(&spec(e.sig, e.route).unwrap(), 50, SEED)));
    let s = parse_multivector(sig(1, 0), "1+e1").unwrap();
    match element_inverse(&s, None) {
        Ok(None) => {}
        other => fails.push(format!("(1,0) 1+e1: expected non-invertible, got {other:?}")),
    }
    report(8, "50 random invertible a per signature with p+q <= 4; 1+e1 in (1,0) is a zero divisor", start, &fails);
}

#[test]
fn criterion_09_route_agreement() {
    let start = Instant::now();
    let mut fails = Vec::new();
    for g in [sig(1, 1), sig(2, 2), sig(3, 3), sig(2, 1)] {
        let ex = spec(g, Route::Explicit).unwrap();
        let di = spec(g, Route::Diagonal).unwrap();
        for m in 0..g.dim() as u32 {
            let a = Multivector::blade(g, m, Rational::one());
            let (x, y) = (ex.represent(&a).unwrap(), di.represent(&a).unwrap());
            if x != y {
                fails.push(format!("{g} at {a}: explicit {x} vs diagonal {y}"));
                break;
            }
        }
    }
    report(9, "diagonal and explicit builds agree on every basis blade of (1,1), (2,2), (3,3), (2,1)", start, &fails);
}

#[test]
fn criterion_10_periodicity() {
    let start = Instant::now();
    let mut fails = Vec::new();
    for (big, small) in [(sig(9, 0), sig(1, 0)), (sig(0, 9), sig(0, 1))] {
        let (rb, sb) = classify(big);
        let (rs, ss) = classify(small);
        let s = spec(big, routes(big)[0]).unwrap();
        if rb != rs || sb != 16 * ss || (s.ring, s.size) != (rb, sb) {
            fails.push(format!("{big}: {}({}) is not 16 x {rs}({ss})", s.ring, s.size));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for t in 0..5 {
            let a = random_multivector(big, &mut rng);
            let b = random_multivector(big, &mut rng);
            let ab = represent(&(&a * &b), None).unwrap().value;
            let prod = mat_mul(&represent(&a, None).unwrap().value, &represent(&b, None).unwrap().value).unwrap();
            if ab != prod {
                fails.push(format!("{big} pair {t}: phi(ab) != phi(a) phi(b)"));
            }
        }
    }
    report(10, "(9,0) and (0,9) multiplicative on 5 random pairs with x16 sizes", start, &fails);
}

#[test]
fn criterion_11_corrections() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let ledger = corrections::ledger().unwrap();
    let rendered = corrections::render(&ledger);
    let amended: Vec<_> = ledger.iter().filter(|c| !c.passed).collect();
    for c in &amended {
        let fixed = c.corrected.as_deref().unwrap_or("");
        if fixed.is_empty() || c.check.is_empty() {
            fails.push(format!("{}: amendment lacks a corrected form or a failing check", c.location));
        }
        for needle in [c.location.as_str(), c.literal.as_str(), fixed, c.check.as_str()] {
            if !rendered.contains(needle) {
                fails.push(format!("{}: `{needle}` missing from corrections.md", c.location));
            }
        }
    }
    if rendered.matches("\n## ").count() != amended.len() {
        fails.push(format!("corrections.md has {} sections for {} amendments", rendered.matches("\n## ").count(), amended.len()));
    }
    for e in catalog() {
        for c in spec(e.sig, e.route).unwrap().literal_checks() {
            if !ledger.iter().any(|l| l.location == c.location && l.literal == c.literal && l.passed == c.passed) {
                fails.push(format!("{} {}: check `{}` is not in the ledger", e.sig, e.route, c.location));
            }
            if !c.passed && c.corrected.is_none() {
                fails.push(format!("{} {}: silent amendment at `{}`", e.sig, e.route, c.location));
            }
        }
    }
    report(11, &format!("{} amended formulas, each with its failing literal check", amended.len()), start, &fails);
}
