//! Ledger of printed formulas checked against the constructions.

use super::{catalog, classify, spec, LiteralCheck, Route};
use crate::clifford::{parse_multivector, Multivector, Signature};
use crate::error::Result;
use crate::rings::{Ring, RingScalar};
use crate::Rational;

fn check(location: &str, literal: &str, corrected: Option<String>, check: String) -> LiteralCheck {
    LiteralCheck { location: location.into(), literal: literal.into(), passed: corrected.is_none(), corrected, check }
}

/// `²R(2^((n-3)/2))` against the real dimension `2^n` for every `q - p ≡ 7` signature up to `n = 12`.
fn doubled_real_exponent() -> LiteralCheck {
    let mut bad = None;
    for n in 1..=12u32 {
        for p in 0..=n {
            let sig = Signature::of(p, n - p);
            if classify(sig).0 != Ring::R2 || bad.is_some() {
                continue;
            }
            let printed = if n >= 3 { Some(1usize << ((n - 3) / 2)) } else { None };
            let ok = printed.is_some_and(|s| n % 2 == 1 && Ring::R2.real_dim(s) == sig.dim());
            if !ok {
                let got = printed.map_or("a non-integral size".to_string(), |s| format!("real dimension {}", Ring::R2.real_dim(s)));
                bad = Some(format!("{sig}: printed size gives {got}, algebra has dimension {}", sig.dim()));
            }
        }
    }
    let corrected = bad.as_ref().map(|_| "2R(2^((n-1)/2)) if q - p = 7 (mod 8)".to_string());
    check(
        "classification table, doubled-real branch",
        "2R(2^((n-3)/2)) if q - p = 7 (mod 8)",
        corrected,
        bad.unwrap_or_else(|| "sizes match".into()),
    )
}

/// The low-dimensional isomorphism list puts `R_{2,2}` in `C^{4x4}`.
fn r22_ring() -> Result<LiteralCheck> {
    let s = spec(Signature::of(2, 2), Route::Explicit)?;
    let printed = Ring::C.real_dim(4);
    let ok = s.ring == Ring::C && printed == 16;
    Ok(check(
        "isomorphism list, R_{2,2}",
        "R_{2,2} = C^{4x4}",
        (!ok).then(|| format!("R_{{2,2}} = {}^{{{}x{}}}", s.ring, s.size, s.size)),
        format!("C^(4x4) has real dimension {printed}, R_{{2,2}} has 16; the construction lands in {}({})", s.ring, s.size),
    ))
}

/// `φ_{1,5}` block (2,1) uses `φ_{0,6}(a_3)` where the other blocks use `φ_{0,4}`.
fn phi15_block() -> LiteralCheck {
    let (r4, s4) = classify(Signature::of(0, 4));
    let (r6, s6) = classify(Signature::of(0, 6));
    let ok = (r4, s4) == (r6, s6);
    check(
        "phi_{1,5}, block (2,1)",
        "phi_{0,4}(a_2) - phi_{0,6}(a_3)",
        (!ok).then(|| "phi_{0,4}(a_2) - phi_{0,4}(a_3)".to_string()),
        format!("a_3 lies in R_{{0,4}}; phi_{{0,6}} is {r6}({s6}) while the block is {r4}({s4})"),
    )
}

/// `(e_[8] α)_∅ ≡ e_[8]`: the lift of `a = 1` must be `1`.
fn empty_product(sig: Signature, name: &str, literal: &str, fixed: &str, vol: &str) -> Result<LiteralCheck> {
    let v = parse_multivector(sig, vol)?;
    let one = Multivector::one(sig);
    let ok = v == one;
    Ok(check(
        &format!("{name} lift, empty composite product"),
        literal,
        (!ok).then(|| fixed.to_string()),
        format!("for a = 1 the sum reduces to a_empty times the empty product = {v}, not 1"),
    ))
}

/// The product over `A = (j_1..j_k)` is printed with last factor index `j_p`.
fn product_index() -> Result<LiteralCheck> {
    let sig = Signature::of(10, 0);
    let vol = parse_multivector(sig, "e1*e2*e3*e4*e5*e6*e7*e8")?;
    let a1 = &vol * &parse_multivector(sig, "e9")?;
    let a2 = &vol * &parse_multivector(sig, "e10")?;
    let for_k = a1.clone();
    let for_p = &a1 * &a2;
    let ok = for_k == for_p;
    Ok(check(
        "(p+8,0) lift, composite product over A",
        "(e_[8] alpha_{j_1}) ... (e_[8] alpha_{j_p})",
        (!ok).then(|| "(e_[8] alpha_{j_1}) ... (e_[8] alpha_{j_k})".to_string()),
        format!("in (10,0) with A = (1): k = 1 factor gives {for_k}, p = 2 factors give {for_p}"),
    ))
}

/// `φ_{n+3,n}(a) = φ_{n+2,n}(a_0) + φ_{n+2,n}(a_1)` drops the unit on `a_1`.
fn k3_unit() -> Result<Vec<LiteralCheck>> {
    let sub = spec(Signature::of(3, 1), Route::Explicit)?;
    let lit = sub.represent(&Multivector::one(sub.sig))?;
    let sq = crate::rings::mat_mul(&lit, &lit)?;
    let want = lit.neg();
    let ok = sq == want;
    let (_, s) = classify(Signature::of(3, 1));
    let size_ok = s == 2;
    Ok(vec![
        check(
            "phi_{n+3,n} in terms of phi_{n+2,n}",
            "phi_{n+3,n}(a) = phi_{n+2,n}(a_0) + phi_{n+2,n}(a_1)",
            (!ok).then(|| "phi_{n+3,n}(a) = phi_{n+2,n}(a_0) + i phi_{n+2,n}(a_1)".to_string()),
            "at n = 1, u = e_[4] eps_1 has a_0 = 0, a_1 = 1: the literal image I squares to I, not to phi(u^2) = -I".into(),
        ),
        check(
            "phi_{n+2,n} target size in the phi_{n+3,n} statement",
            "phi_{n+2,n}(a_t) in R^(2^n x 2^n)",
            (!size_ok).then(|| "phi_{n+2,n}(a_t) in R^(2^(n+1) x 2^(n+1))".to_string()),
            format!("at n = 1, (3,1) classifies to R({s})"),
        ),
    ])
}

fn real(x: &RingScalar) -> Rational {
    x.parts()[0].clone()
}

/// `a = ¼ row φ(a) col` on every basis blade.
fn recover(sig: Signature, row: &[&str], col: &[&str]) -> Result<Option<String>> {
    let s = spec(sig, Route::Explicit)?;
    let row = row.iter().map(|t| parse_multivector(sig, t)).collect::<Result<Vec<_>>>()?;
    let col = col.iter().map(|t| parse_multivector(sig, t)).collect::<Result<Vec<_>>>()?;
    let quarter = Rational::new(1, 4);
    for mask in 0..sig.dim() as u32 {
        let a = Multivector::blade(sig, mask, Rational::one());
        let m = s.represent(&a)?;
        let k = m.size();
        let entry = |i: usize, j: usize| -> Rational {
            let (bi, bj) = (i / k, j / k);
            if bi != bj {
                return Rational::zero();
            }
            real(m.block(bi).get(i % k, j % k))
        };
        let mut acc = Multivector::zero(sig);
        for (i, r) in row.iter().enumerate() {
            for (j, c) in col.iter().enumerate() {
                acc = &acc + &(r * c).scale(&entry(i, j));
            }
        }
        let acc = acc.scale(&quarter);
        if acc != a {
            return Ok(Some(format!("at a = {a} the formula gives {acc}")));
        }
    }
    Ok(None)
}

fn property_d() -> Result<Vec<LiteralCheck>> {
    let s10 = Signature::of(1, 0);
    let s20 = Signature::of(2, 0);
    let lit10 = recover(s10, &["1+e1", "1-e1"], &["1+e1", "1-e1"])?;
    let lit20 = recover(s20, &["1+e1", "e2-e12"], &["1+e1", "e2-e12"])?;
    let fix20 = recover(s20, &["1+e1", "e2-e12"], &["1+e1", "e2+e12"])?;
    Ok(vec![
        check(
            "phi_{1,0} recovery formula",
            "a = 1/4 [1+e1, 1-e1] phi_{1,0}(a) [1+e1, 1-e1]^T",
            lit10.as_ref().map(|_| "unresolved".to_string()),
            lit10.unwrap_or_else(|| "holds on every basis blade".into()),
        ),
        check(
            "phi_{2,0} recovery formula",
            "a = 1/4 [1+e1, e2-e12] phi_{2,0}(a) [1+e1, e2-e12]^T",
            lit20.as_ref().map(|_| match &fix20 {
                None => "a = 1/4 [1+e1, e2-e12] phi_{2,0}(a) [1+e1, e2+e12]^T".to_string(),
                Some(_) => "unresolved".to_string(),
            }),
            lit20.unwrap_or_else(|| "holds on every basis blade".into()),
        ),
    ])
}

/// Checks of printed statements that are not transform factors.
pub fn formula_checks() -> Result<Vec<LiteralCheck>> {
    let mut out = vec![doubled_real_exponent(), r22_ring()?, phi15_block()];
    out.push(empty_product(
        Signature::of(9, 0),
        "(p+8,0)",
        "(e_[8] alpha)_empty = e_[8]",
        "(e_[8] alpha)_empty = 1",
        "e1*e2*e3*e4*e5*e6*e7*e8",
    )?);
    out.push(empty_product(
        Signature::of(0, 9),
        "(0,q+8)",
        "(tau_[8] eps)_empty = tau_[8]",
        "(tau_[8] eps)_empty = 1",
        "eps1*eps2*eps3*eps4*eps5*eps6*eps7*eps8",
    )?);
    out.push(product_index()?);
    out.extend(k3_unit()?);
    out.extend(property_d()?);
    Ok(out)
}

/// Every literal check from every catalog spec plus [`formula_checks`], deduplicated.
pub fn ledger() -> Result<Vec<LiteralCheck>> {
    let mut out: Vec<LiteralCheck> = Vec::new();
    let mut entries = catalog();
    entries.sort_by_key(|e| (e.sig.n(), e.sig, e.route));
    for e in entries {
        for c in spec(e.sig, e.route)?.literal_checks() {
            if !out.iter().any(|o| o.location == c.location && o.literal == c.literal) {
                out.push(c.clone());
            }
        }
    }
    out.extend(formula_checks()?);
    Ok(out)
}

/// Entries whose printed form failed.
pub fn amendments() -> Result<Vec<LiteralCheck>> {
    Ok(ledger()?.into_iter().filter(|c| !c.passed).collect())
}

/// `corrections.md`: one section per amended formula.
pub fn render(checks: &[LiteralCheck]) -> String {
    let mut out = String::from("# Corrections\n\n");
    for c in checks.iter().filter(|c| !c.passed) {
        out.push_str(&format!("## {}\n\n", c.location));
        out.push_str(&format!("- literal: `{}`\n", c.literal));
        out.push_str(&format!("- corrected: `{}`\n", c.corrected.as_deref().unwrap_or("none")));
        out.push_str(&format!("- failing check: {}\n\n", c.check));
    }
    let held: Vec<&LiteralCheck> = checks.iter().filter(|c| c.passed).collect();
    if !held.is_empty() {
        out.push_str("# Printed forms confirmed\n\n");
        for c in held {
            out.push_str(&format!("- {}: `{}`\n", c.location, c.literal));
        }
    }
    out
}
