//! Closed-form presentations for `p + q <= 6` and the four extremal `p + q in {7, 8}` cases.

use super::node::{Candidate, Local, Node, Pres};
use super::{LiteralCheck, Route};
use crate::error::{Error, Result};
use crate::Rational;

type Rows = &'static [&'static [&'static str]];

struct Lit {
    location: &'static str,
    x: Rows,
    y: Option<Rows>,
    factor: (i64, i64),
    scale: (i64, i64),
}

fn render(rows: Rows) -> String {
    let r: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", r.join(", "))
}

fn candidate(pres: &Pres, lit: &Lit) -> Candidate {
    let f = Rational::new(lit.factor.0, lit.factor.1);
    let scale = Rational::new(lit.scale.0, lit.scale.1);
    let pre = if f.is_one() { String::new() } else { format!("{f} ") };
    let literal = match lit.y {
        None => format!("P = P^-1 = {pre}{}, scale {scale}", render(lit.x)),
        Some(y) => format!("P = {pre}{}, P^-1 = {pre}{}, scale {scale}", render(lit.x), render(y)),
    };
    let built = (|| {
        let x = pres.mat(lit.x, &f)?;
        let y = match lit.y {
            Some(y) => pres.mat(y, &f)?,
            None => x.clone(),
        };
        Ok(Local { x, y, scale })
    })();
    Candidate { location: lit.location.to_string(), literal, built }
}

fn cands(pres: &Pres, lits: &[Lit]) -> Vec<Candidate> {
    lits.iter().map(|l| candidate(pres, l)).collect()
}

/// Literal `½[[1+e, -(1-e)], [1-e, 1+e]]` / `½[[1+e, 1-e], [-(1-e), 1+e]]` with `e` spelled out.
macro_rules! double_lit {
    ($loc:expr, $e:literal) => {
        Lit {
            location: $loc,
            x: &[&[concat!("1+", $e), concat!("-1+", $e)], &[concat!("1-", $e), concat!("1+", $e)]],
            y: Some(&[&[concat!("1+", $e), concat!("1-", $e)], &[concat!("-1+", $e), concat!("1+", $e)]]),
            factor: (1, 2),
            scale: (1, 1),
        }
    };
}

/// Records whether a printed identity `lhs = rhs` holds.
fn claim(pres: &Pres, checks: &mut Vec<LiteralCheck>, location: &str, lhs: &str, rhs: &crate::Multivector, rhs_text: &str) {
    let literal = format!("{lhs} = {rhs_text}");
    let (passed, check, corrected) = match pres.el(lhs) {
        Err(e) => (false, e.to_string(), Some(format!("use {rhs_text} = {rhs}"))),
        Ok(l) if &l == rhs => (true, "holds".to_string(), None),
        Ok(l) => (false, format!("{lhs} is {l} but {rhs_text} is {rhs}"), Some(format!("{rhs_text} = {rhs}"))),
    };
    checks.push(LiteralCheck { location: location.to_string(), literal, corrected, check, passed });
}

fn quad(
    pres: &Pres,
    f: &str,
    g: &str,
    sigma: i8,
    sub: &[&str],
    printed_h: Option<(&str, &str)>,
    lits: &[Lit],
) -> Result<Node> {
    let sp = pres.sub(sub)?;
    let subnode = build(&sp, Route::Explicit)?;
    let (fm, gm) = (pres.el(f)?, pres.el(g)?);
    let mut node = Node::quad(pres.clone(), fm.clone(), gm.clone(), sigma, subnode, cands(pres, lits))?;
    if let Some((loc, h)) = printed_h {
        claim(pres, &mut node.checks, loc, h, &(&fm * &gm), &format!("({f})({g})"));
    }
    Ok(node)
}

fn double(pres: &Pres, e: &str, sub: &[&str], lits: &[Lit]) -> Result<Node> {
    let sp = pres.sub(sub)?;
    let subnode = build(&sp, Route::Explicit)?;
    Node::double(pres.clone(), pres.el(e)?, subnode, cands(pres, lits))
}

fn unit1(pres: &Pres, u: &str, sub: &[&str]) -> Result<Node> {
    let sp = pres.sub(sub)?;
    let subnode = build(&sp, Route::Explicit)?;
    Node::unit1(pres.clone(), pres.el(u)?, subnode)
}

const E4: &[&str] = &["e1", "e2", "e3", "e4"];

/// Builds the node for `pres.abs()` along `route` (explicit family of routes only).
pub(crate) fn build(pres: &Pres, route: Route) -> Result<Node> {
    let sig = pres.abs();
    let miss = |hint: &str| Error::CatalogMiss { sig, route: route.to_string(), hint: hint.to_string() };
    match route {
        Route::Explicit => {}
        Route::Real2 if (sig.p, sig.q) == (0, 1) => {
            let lit = Lit {
                location: "P_{0,1} = P_{0,1}^{-1}",
                x: &[&["1", "eps1"], &["-1*eps1", "-1"]],
                y: None,
                factor: (1, 1),
                scale: (1, 2),
            };
            return Node::complex_to_real(pres.clone(), cands(pres, &[lit]));
        }
        Route::Complex if (sig.p, sig.q) == (0, 2) => {
            let lit = Lit {
                location: "P_{0,2} = P_{0,2}^{-1} (complex 2x2 route)",
                x: &[&["1", "-1*eps1"], &["-1*eps2", "eps12"]],
                y: None,
                factor: (1, 1),
                scale: (1, 2),
            };
            return Node::quat_to_complex(pres.clone(), cands(pres, &[lit]));
        }
        Route::Real4 if (sig.p, sig.q) == (0, 2) => {
            let lit = Lit {
                location: "Q_{0,2} = Q_{0,2}^{-1} (real 4x4 route)",
                x: &[
                    &["1", "eps1", "eps2", "eps12"],
                    &["-1*eps1", "1", "eps12", "-1*eps2"],
                    &["-1*eps2", "-1*eps12", "1", "eps1"],
                    &["-1*eps12", "eps2", "-1*eps1", "1"],
                ],
                y: None,
                factor: (1, 2),
                scale: (1, 1),
            };
            return Node::quat_to_real4(pres.clone(), cands(pres, &[lit]));
        }
        _ => return Err(miss("see `catalog` for the routes of this signature")),
    }
    match (sig.p, sig.q) {
        (0, 0) => Ok(Node::scalar(pres.clone())),
        (1, 0) => double(
            pres,
            "e1",
            &[],
            &[double_lit!("P_{1,0} and P_{1,0}^{-1}", "e1")],
        ),
        (0, 1) => Node::unit1(pres.clone(), pres.el("eps1")?, Node::scalar(pres.sub(&[])?)),
        (2, 0) => quad(
            pres,
            "e1",
            "e2",
            1,
            &[],
            Some(("R_{2,0} basis word e_{12}", "e12")),
            &[Lit {
                location: "P_{2,0} = P_{2,0}^{-1}",
                x: &[&["1+e1", "e2-e12"], &["e2+e12", "1-e1"]],
                y: None,
                factor: (1, 2),
                scale: (1, 1),
            }],
        ),
        (1, 1) => quad(
            pres,
            "e1",
            "eps1",
            -1,
            &[],
            Some(("R_{1,1} basis word e_1 eps_1", "e1*eps1")),
            &[Lit {
                location: "P_{1,1} = P_{1,1}^{-1}",
                x: &[&["1+e1", "eps1-e1*eps1"], &["-1*eps1-e1*eps1", "1-e1"]],
                y: None,
                factor: (1, 2),
                scale: (1, 1),
            }],
        ),
        (0, 2) => Node::unit2(pres.clone(), pres.el("eps1")?, pres.el("eps2")?, Node::scalar(pres.sub(&[])?)),
        (3, 0) => unit1(pres, "e123", &["e1", "e2"]),
        (2, 1) => double(pres, "e12*eps1", &["e1", "eps1"], &[double_lit!("P_{2,1} and P_{2,1}^{-1}, outer factor", "e12*eps1")]),
        (1, 2) => unit1(pres, "e1*eps12", &["e1", "eps1"]),
        (0, 3) => double(pres, "eps123", &["eps1", "eps2"], &[double_lit!("P_{0,3} and P_{0,3}^{-1}", "eps123")]),
        (4, 0) => {
            let sp = pres.sub(&["e1", "e2"])?;
            let (u, v) = (pres.el("e123")?, pres.el("e124")?);
            let mut node = Node::unit2(pres.clone(), u.clone(), v.clone(), build(&sp, Route::Explicit)?)?;
            claim(pres, &mut node.checks, "R_{4,0} word e_{34}", "e34", &-(&u * &v), "-(e123)(e124)");
            Ok(node)
        }
        (3, 1) => quad(
            pres,
            "e12*eps1",
            "e123",
            -1,
            &["e1", "e2"],
            Some(("R_{3,1} word e_3 eps_1", "e3*eps1")),
            &[
                Lit {
                    location: "P_{3,1} = P_{3,1}^{-1}, outer factor as printed",
                    x: &[&["1+e12*eps1", "e123-e3*eps2"], &["-1*e123+e3*eps1", "1+e12*eps1"]],
                    y: None,
                    factor: (1, 2),
                    scale: (1, 1),
                },
                Lit {
                    location: "P_{3,1} = P_{3,1}^{-1}, outer factor with eps_1 in block (1,2)",
                    x: &[&["1+e12*eps1", "e123-e3*eps1"], &["-1*e123+e3*eps1", "1+e12*eps1"]],
                    y: None,
                    factor: (1, 2),
                    scale: (1, 1),
                },
            ],
        ),
        (2, 2) => quad(
            pres,
            "e12*eps1",
            "e1*eps12",
            -1,
            &["e1", "eps1"],
            Some(("R_{2,2} word eps_2 e_2", "eps2*e2")),
            &[Lit {
                location: "P_{2,2} = P_{2,2}^{-1}, outer factor",
                x: &[&["1+e12*eps1", "e1*eps12-e2*eps2"], &["-1*e1*eps12+e2*eps2", "1+e12*eps1"]],
                y: None,
                factor: (1, 2),
                scale: (1, 1),
            }],
        ),
        (1, 3) => quad(
            pres,
            "eps123",
            "e1*eps12",
            -1,
            &["eps1", "eps2"],
            Some(("R_{1,3} word e_1 eps_3", "e1*eps3")),
            &[Lit {
                location: "P_{1,3} = P_{1,3}^{-1}",
                x: &[&["1+eps123", "e1*eps12-e1*eps3"], &["-1*e1*eps12+e1*eps3", "1-eps123"]],
                y: None,
                factor: (1, 2),
                scale: (1, 1),
            }],
        ),
        (0, 4) => quad(
            pres,
            "eps123",
            "eps124",
            1,
            &["eps1", "eps2"],
            Some(("R_{0,4} word eps_{43}", "eps43")),
            &[Lit {
                location: "P_{0,4} = P_{0,4}^{-1}",
                x: &[&["1+eps123", "eps124-eps43"], &["eps124-eps34", "1-eps123"]],
                y: None,
                factor: (1, 2),
                scale: (1, 1),
            }],
        ),
        (5, 0) => double(
            pres,
            "e12345",
            E4,
            &[
                double_lit!("P_{5,0} and P_{5,0}^{-1}, outer factor", "e12345"),
                Lit {
                    location: "V and V^{-1} built for P_{5,0} from the R_{1,0} case",
                    x: &[&["1+e12345", "-1+e12345"], &["1-e12345", "1+e12345"]],
                    y: Some(&[&["1+e12345", "1-e12345"], &["-1+e12345", "-1-e12345"]]),
                    factor: (1, 2),
                    scale: (1, 1),
                },
            ],
        ),
        (4, 1) => unit1(pres, "e1234*eps1", &["e1", "e2", "e3", "eps1"]),
        (3, 2) => double(
            pres,
            "e123*eps12",
            &["e1", "e2", "eps1", "eps2"],
            &[double_lit!("P_{3,2} and P_{3,2}^{-1}, outer factor", "e123*eps12")],
        ),
        (2, 3) => unit1(pres, "e12*eps123", &["e1", "e2", "eps1", "eps2"]),
        (1, 4) => double(
            pres,
            "e1*eps1234",
            &["e1", "eps1", "eps2", "eps3"],
            &[double_lit!("P_{1,4} and P_{1,4}^{-1}, outer factor", "e1*eps1234")],
        ),
        (0, 5) => unit1(pres, "eps12345", &["eps1234", "eps1235", "eps1", "eps2"]),
        (6, 0) => quad(pres, "e12345", "e12346", 1, E4, Some(("R_{6,0} word e_{56}", "e56")), &[]),
        (5, 1) => quad(pres, "e12345", "e1234*eps1", -1, E4, Some(("R_{5,1} word e_5 eps_1", "e5*eps1")), &[]),
        (4, 2) => quad(
            pres,
            "e123*eps12",
            "e1234*eps1",
            -1,
            &["e1", "e2", "e3", "eps1"],
            Some(("R_{4,2} word e_4 eps_2", "e4*eps2")),
            &[],
        ),
        (3, 3) => quad(
            pres,
            "e123*eps12",
            "e12*eps123",
            -1,
            &["e1", "e2", "eps1", "eps2"],
            Some(("R_{3,3} word e_3 eps_3", "e3*eps3")),
            &[],
        ),
        (2, 4) => quad(
            pres,
            "e1*eps1234",
            "e12*eps123",
            -1,
            &["e1", "eps1", "eps2", "eps3"],
            Some(("R_{2,4} fourth word, printed e_4 eps_2", "e4*eps2")),
            &[],
        ),
        (1, 5) => quad(
            pres,
            "e1*eps1234",
            "eps12345",
            -1,
            &["eps1", "eps2", "eps3", "eps4"],
            Some(("R_{1,5} word e_1 eps_5", "e1*eps5")),
            &[],
        ),
        (0, 6) => quad(
            pres,
            "eps1236",
            "eps1235",
            1,
            &["eps124", "eps134", "eps234", "eps12356"],
            Some(("R_{0,6} word eps_{56}", "eps56")),
            &[],
        ),
        (7, 0) => unit1(pres, "e1234567", &["e1", "e2", "e3", "e4", "e123456", "e123457"]),
        (0, 7) => double(pres, "eps1234567", &["eps1", "eps2", "eps3", "eps4", "eps5", "eps6"], &[]),
        (8, 0) => quad(
            pres,
            "e4567",
            "e4568",
            1,
            &["e1", "e2", "e3", "e123478", "e123578", "e123678"],
            Some(("R_{8,0} word e_{78}", "e78")),
            &[],
        ),
        (0, 8) => quad(
            pres,
            "eps1234568",
            "eps1234567",
            1,
            &["eps1", "eps2", "eps3", "eps4", "eps5", "eps6"],
            Some(("R_{0,8} word eps_{78}", "eps78")),
            &[],
        ),
        _ => Err(miss("closed forms cover p+q <= 6 and (7,0), (0,7), (8,0), (0,8); try route `diagonal` or `periodic`")),
    }
}
