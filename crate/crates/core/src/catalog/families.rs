//! Recursive presentations of `R_{n+k,n}`, `0 <= k <= 6`, reducing `n` by one per step.

use super::node::{Candidate, Local, Node, Pres};
use super::{explicit, LiteralCheck, Route};
use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::Rational;

/// `(n, k)` with `sig = (n + k, n)`.
pub(crate) fn family(sig: Signature) -> Option<(u32, u32)> {
    (sig.p >= sig.q && sig.p - sig.q <= 6).then(|| (sig.q, sig.p - sig.q))
}

fn r(m: u32) -> std::ops::RangeInclusive<u32> {
    1..=m
}

fn sub_pres(pres: &Pres, e: u32, eps: u32) -> Result<Pres> {
    let mut gens: Vec<Multivector> = r(e).map(|i| pres.word([i], [])).collect();
    gens.extend(r(eps).map(|j| pres.word([], [j])));
    pres.sub_of(gens)
}

fn two(host: Signature, a: Multivector, b: Multivector, c: Multivector, d: Multivector) -> super::MvMatrix {
    super::MvMatrix::from_rows(host, vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// The printed step `½[[1+f, g-μ], [-(g+μ), 1-f]]` with a printed inverse.
fn printed_step(pres: &Pres, n: u32, k: u32, f: &Multivector, g: &Multivector) -> Candidate {
    let host = pres.host();
    let half = Rational::new(1, 2);
    let one = pres.one();
    let mu = f * g;
    let x = two(host, &one + f, g - &mu, -(g + &mu), &one - f).scale(&half);
    let (y, label, literal) = match k {
        2 => (
            two(host, &one + &pres.word(r(n), r(n)), &pres.word(r(n - 1), r(n - 1)) - &mu, -(g + &mu), &one - f)
                .scale(&half),
            format!("P_{{n+2,n}}^{{-1}} at n = {n}"),
            "P^-1 = 1/2 [[1 + e_[n] eps_[n], e_[n-1] eps_[n-1] - mu], [-(e_[n+2] eps_[n-1] + mu), 1 - e_[n+1] eps_[n]]]",
        ),
        4 => (
            two(host, &one + f, g - &mu, -(&pres.word(r(n + 4), r(n)) + &mu), &one - f).scale(&half),
            format!("P_{{n+4,n}}^{{-1}} at n = {n}"),
            "P^-1 = 1/2 [[1 + e_[n+4] eps_[n-1], e_[n+3] eps_[n] - mu], [-(e_[n+4] eps_[n] + mu), 1 - e_[n+4] eps_[n-1]]]",
        ),
        0 => (x.clone(), format!("P_{{n,n}} and P_{{n,n}}^{{-1}} at n = {n}"), "P = P^-1 = 1/2 [[1 + f, g - mu], [-(g + mu), 1 - f]]"),
        _ => (
            x.clone(),
            format!("P_{{n+6,n}} and P_{{n+6,n}}^{{-1}} at n = {n}"),
            "P = P^-1 = 1/2 [[1 + f, g - mu], [-(g + mu), 1 - f]]",
        ),
    };
    Candidate { location: label, literal: literal.to_string(), built: Ok(Local { x, y, scale: Rational::one() }) }
}

fn mu_claim(pres: &Pres, checks: &mut Vec<LiteralCheck>, n: u32, k: u32, f: &Multivector, g: &Multivector) {
    let (sign_exp, e_idx) = match k {
        0 => (n as i64 - 1, n),
        2 => (n as i64 + 2, n + 2),
        4 => (n as i64 + 3, n + 4),
        _ => (n as i64 + 5, n + 6),
    };
    let sign = if sign_exp.rem_euclid(2) == 0 { 1 } else { -1 };
    let claimed = pres.word([e_idx], [n]).scale(&Rational::from_int(sign));
    let actual = f * g;
    let passed = claimed == actual;
    let lbl = match k {
        0 => "n,n".to_string(),
        _ => format!("n+{k},n"),
    };
    checks.push(LiteralCheck {
        location: format!("mu_{{{lbl}}} at n = {n}"),
        literal: format!("fg = (-1)^({sign_exp}) e_{e_idx} eps_{n} = {claimed}"),
        corrected: (!passed).then(|| format!("fg = {actual}")),
        check: if passed { "holds".into() } else { format!("fg is {actual}") },
        passed,
    });
}

/// Builds `R_{n+k,n}` along the recursive family, bottoming out in the closed forms at `n = 0`.
pub(crate) fn build(pres: &Pres) -> Result<Node> {
    let sig = pres.abs();
    let (n, k) = family(sig).ok_or_else(|| Error::CatalogMiss {
        sig,
        route: Route::Diagonal.to_string(),
        hint: "recursive families cover (n+k, n) with 0 <= k <= 6".into(),
    })?;
    if n == 0 {
        return explicit::build(pres, Route::Explicit);
    }
    let half = Rational::new(1, 2);
    match k {
        0 | 2 | 4 | 6 => {
            let (f, g, se, sq) = match k {
                0 => (pres.word(r(n), r(n - 1)), pres.word(r(n - 1), r(n)), n - 1, n - 1),
                2 => (pres.word(r(n + 1), r(n)), pres.word(r(n + 2), r(n - 1)), n + 1, n - 1),
                4 => (pres.word(r(n + 4), r(n - 1)), pres.word(r(n + 3), r(n)), n + 3, n - 1),
                _ => (pres.word(r(n + 5), r(n)), pres.word(r(n + 6), r(n - 1)), n + 5, n - 1),
            };
            let sp = sub_pres(pres, se, sq)?;
            let sub = build(&sp)?;
            let cand = printed_step(pres, n, k, &f, &g);
            let mut node = Node::quad(pres.clone(), f.clone(), g.clone(), -1, sub, vec![cand])?;
            mu_claim(pres, &mut node.checks, n, k, &f, &g);
            Ok(node)
        }
        1 | 5 => {
            let e = pres.word(r(n + k), r(n));
            let sp = sub_pres(pres, n + k - 1, n)?;
            let sub = build(&sp)?;
            let one = pres.one();
            let (p, m) = ((&one + &e).scale(&half), (&one - &e).scale(&half));
            let host = pres.host();
            let cand = Candidate {
                location: format!("P_{{n+{k},n}} and P_{{n+{k},n}}^{{-1}} at n = {n}"),
                literal: "P = 1/2 [[1+e, -(1-e)], [1-e, 1+e]], P^-1 = 1/2 [[1+e, 1-e], [-(1-e), 1+e]]".into(),
                built: Ok(Local {
                    x: two(host, p.clone(), -&m, m.clone(), p.clone()),
                    y: two(host, p.clone(), m.clone(), -&m, p),
                    scale: Rational::one(),
                }),
            };
            Node::double(pres.clone(), e, sub, vec![cand])
        }
        _ => {
            let u = pres.word(r(n + 3), r(n));
            let sp = sub_pres(pres, n + 2, n)?;
            Node::unit1(pres.clone(), u, build(&sp)?)
        }
    }
}
