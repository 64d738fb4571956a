//! Per-signature recipes: target ring, transform pair, replication pattern and ring units.
//!
//! Every [`RepSpec`] is built from a tree of similarity steps. Closed forms cover
//! `p + q <= 6` and the four extremal signatures of dimension 7 and 8, the recursive
//! families cover `(n+k, n)` with `k <= 6`, and the mod-8 lifts cover `(p+8, q)` and
//! `(0, q+8)` for small reduced signatures.

pub mod corrections;
mod explicit;
mod families;
pub mod mvmatrix;
mod node;
mod periodic;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

pub use mvmatrix::{MvMatrix, TransformPair};

use crate::clifford::{GeneratorList, Multivector, Signature};
use crate::error::{Error, Result};
use crate::rings::{Ring, RingMatrix};
use crate::Rational;
use node::{Node, Pres};

/// Target ring and matrix size from the mod-8 table on `q - p`.
pub fn classify(sig: Signature) -> (Ring, usize) {
    let n = sig.n();
    let r = (sig.q as i64 - sig.p as i64).rem_euclid(8);
    let pow = |e: u32| 1usize << e;
    match r {
        0 | 6 => (Ring::R, pow(n / 2)),
        1 | 5 => (Ring::C, pow((n - 1) / 2)),
        2 | 4 => (Ring::H, pow((n - 2) / 2)),
        3 => (Ring::H2, pow((n - 3) / 2)),
        _ => (Ring::R2, pow((n - 1) / 2)),
    }
}

/// Which construction produced a spec.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// Closed-form transform for one signature.
    Explicit,
    /// Recursive `(n+k, n)` family.
    Diagonal,
    /// Mod-8 lift over `(8,0)` or `(0,8)`.
    Periodic,
    /// `(0,1)` as 2×2 real matrices.
    Real2,
    /// `(0,2)` as 2×2 complex matrices.
    Complex,
    /// `(0,2)` as 4×4 real matrices.
    Real4,
}

impl Route {
    pub const ALL: [Route; 6] = [Route::Explicit, Route::Diagonal, Route::Periodic, Route::Real2, Route::Complex, Route::Real4];

    /// Alternate routes land in a ring other than the classification ring.
    pub fn is_alternate(self) -> bool {
        matches!(self, Route::Real2 | Route::Complex | Route::Real4)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Explicit => "explicit",
            Route::Diagonal => "diagonal",
            Route::Periodic => "periodic",
            Route::Real2 => "real2",
            Route::Complex => "complex",
            Route::Real4 => "real4",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.to_string() == s.trim())
            .ok_or_else(|| Error::Parse { pos: 1, msg: format!("unknown route `{s}`") })
    }
}

/// Shape of the diagonal argument `D_a`: one flag per slot, `true` where `ā` sits.
#[derive(Clone, Debug)]
pub struct Replication {
    pub flags: Vec<bool>,
    /// `(u, sub)` for `ā = a0 - a1 u` with `a0, a1` generated by `sub`.
    pub axis: Option<(Multivector, GeneratorList)>,
}

impl Replication {
    pub fn copies(&self) -> usize {
        self.flags.len()
    }

    pub fn is_plain(&self) -> bool {
        self.axis.is_none()
    }

    pub fn describe(&self) -> String {
        match &self.axis {
            None => format!("plain x{}", self.copies()),
            Some((u, _)) => format!("conjugate-pairs x{} along {u}", self.copies()),
        }
    }
}

/// One printed formula evaluated against its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralCheck {
    pub location: String,
    pub literal: String,
    pub corrected: Option<String>,
    pub check: String,
    pub passed: bool,
}

/// Matrix-unit construction: from `τ_ij` with `τ_ij τ_st = δ_js τ_it` and `Σ τ_ii = 1`,
/// `P[i][j] = τ_ji` satisfies `P = P^-1`.
pub fn build_lemma11(host: Signature, tau: &[Vec<Multivector>]) -> Result<TransformPair> {
    let m = tau.len();
    if m == 0 || tau.iter().any(|r| r.len() != m) {
        return Err(Error::BasisChange("tau must be a nonempty square family".into()));
    }
    if tau.iter().flatten().any(|t| t.signature() != host) {
        return Err(Error::BasisChange("tau entries must lie in the host algebra".into()));
    }
    let zero = Multivector::zero(host);
    for i in 0..m {
        for j in 0..m {
            for s in 0..m {
                for t in 0..m {
                    let got = &tau[i][j] * &tau[s][t];
                    let want = if j == s { &tau[i][t] } else { &zero };
                    if &got != want {
                        return Err(Error::BasisChange(format!(
                            "tau_{}{} tau_{}{} = {got}, expected {want}",
                            i + 1,
                            j + 1,
                            s + 1,
                            t + 1
                        )));
                    }
                }
            }
        }
    }
    let sum = (0..m).fold(zero.clone(), |acc, i| &acc + &tau[i][i]);
    if sum != Multivector::one(host) {
        return Err(Error::BasisChange(format!("sum of tau_ii is {sum}, not 1")));
    }
    let rows = (0..m).map(|i| (0..m).map(|j| tau[j][i].clone()).collect()).collect();
    let p = MvMatrix::from_rows(host, rows)?;
    Ok(TransformPair { pinv: p.clone(), p, scale: Rational::one() })
}

/// A constructed representation of one signature along one route.
#[derive(Debug)]
pub struct RepSpec {
    pub sig: Signature,
    pub route: Route,
    pub ring: Ring,
    pub size: usize,
    pub replication: Replication,
    /// Realisations of `i` (C) or `i, j, k` (H) inside the algebra.
    pub units: Vec<Multivector>,
    pub(crate) root: Node,
    transform: OnceLock<Result<Option<TransformPair>>>,
}

impl RepSpec {
    fn from_node(sig: Signature, route: Route, root: Node) -> Result<Self> {
        let units = root.units()?;
        let replication = root.replication()?;
        let one = Multivector::one(sig);
        let neg = -&one;
        for u in &units {
            if &(u * u) != &neg {
                return Err(Error::Structure(format!("unit {u} does not square to -1")));
            }
        }
        if units.len() == 3 {
            let (i, j, k) = (&units[0], &units[1], &units[2]);
            if &(i * j) + &(j * i) != Multivector::zero(sig) || &(i * j) != k {
                return Err(Error::Structure("quaternion units do not anticommute".into()));
            }
        }
        if !route.is_alternate() && (root.ring, root.size) != classify(sig) {
            let (r, s) = classify(sig);
            return Err(Error::Structure(format!("{sig} built {}({}), classification gives {r}({s})", root.ring, root.size)));
        }
        if replication.copies() != root.tsize {
            return Err(Error::Structure("replication does not match the transform size".into()));
        }
        Ok(RepSpec { sig, route, ring: root.ring, size: root.size, replication, units, root, transform: OnceLock::new() })
    }

    /// Order of the transform matrix `P`.
    pub fn transform_size(&self) -> usize {
        self.root.tsize
    }

    /// The flat transform pair, computed once.
    pub fn transform(&self) -> Result<&TransformPair> {
        match self.transform.get_or_init(|| self.root.transform()) {
            Ok(Some(t)) => Ok(t),
            Ok(None) => Err(Error::Structure(format!("{} has no flat transform", self.sig))),
            Err(e) => Err(e.clone()),
        }
    }

    /// Structural evaluation of `φ(a)`.
    pub fn represent(&self, a: &Multivector) -> Result<RingMatrix> {
        if a.signature() != self.sig {
            return Err(Error::SignatureMismatch(a.signature(), self.sig));
        }
        self.root.represent(a)
    }

    /// Symbolic `P (a I) P^-1` step by step, without replication flattening.
    pub fn psi(&self, a: &Multivector) -> Result<MvMatrix> {
        self.root.psi(a)
    }

    pub fn is_periodic(&self) -> bool {
        self.root.is_periodic()
    }

    /// `(block, index)` in the ring matrix of each row of the flat transform.
    pub fn layout(&self) -> Vec<(usize, usize)> {
        self.root.layout()
    }

    /// Outer `(8,0)`/`(0,8)` psi, composite generators and inner spec of a periodic lift.
    pub fn periodic_stage(&self, a: &Multivector) -> Result<Option<(MvMatrix, GeneratorList, Arc<RepSpec>)>> {
        match self.root.periodic_parts() {
            Some((outer, comp, inner)) => Ok(Some((outer.psi(a)?, comp.clone(), inner.clone()))),
            None => Ok(None),
        }
    }

    /// Every printed formula consulted while building this spec.
    pub fn literal_checks(&self) -> &[LiteralCheck] {
        &self.root.checks
    }

    /// `(copies, pattern)` line for listings.
    pub fn summary(&self) -> String {
        format!("{} {} {}({}) {}", self.sig, self.route, self.ring, self.size, self.replication.describe())
    }
}

fn is_explicit(sig: Signature) -> bool {
    (sig.n() >= 1 && sig.n() <= 6) || matches!((sig.p, sig.q), (7, 0) | (0, 7) | (8, 0) | (0, 8))
}

fn is_diagonal(sig: Signature) -> bool {
    families::family(sig).is_some_and(|(n, _)| n >= 1) && sig.n() <= 10
}

/// Routes available for `sig`, default first.
pub fn routes(sig: Signature) -> Vec<Route> {
    let mut out = Vec::new();
    if is_explicit(sig) {
        out.push(Route::Explicit);
    }
    if is_diagonal(sig) {
        out.push(Route::Diagonal);
    }
    if periodic::reduced(sig).is_some() {
        out.push(Route::Periodic);
    }
    match (sig.p, sig.q) {
        (0, 1) => out.push(Route::Real2),
        (0, 2) => out.extend([Route::Complex, Route::Real4]),
        _ => {}
    }
    if (sig.p, sig.q) == (8, 2) {
        out.sort_by_key(|r| *r != Route::Diagonal);
    }
    out
}

fn nearest(sig: Signature) -> String {
    let covered = catalog_signatures();
    let best = covered
        .iter()
        .min_by_key(|s| ((s.p as i64 - sig.p as i64).abs() + (s.q as i64 - sig.q as i64).abs(), s.p, s.q))
        .copied()
        .unwrap_or(Signature::of(1, 0));
    let r = routes(best);
    format!("nearest covered signature is {best} via `{}`", r[0])
}

pub fn default_route(sig: Signature) -> Result<Route> {
    routes(sig).first().copied().ok_or_else(|| Error::CatalogMiss { sig, route: "default".into(), hint: nearest(sig) })
}

type Memo = RwLock<HashMap<(Signature, Route), Arc<RepSpec>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Builds a spec without consulting the memo table.
pub fn build(sig: Signature, route: Route) -> Result<RepSpec> {
    if !routes(sig).contains(&route) {
        let hint = match routes(sig).first() {
            Some(r) => format!("{sig} is available via `{r}`"),
            None => nearest(sig),
        };
        return Err(Error::CatalogMiss { sig, route: route.to_string(), hint });
    }
    let pres = Pres::standard(sig);
    let root = match route {
        Route::Explicit | Route::Real2 | Route::Complex | Route::Real4 => explicit::build(&pres, route)?,
        Route::Diagonal => families::build(&pres)?,
        Route::Periodic => periodic::build(sig)?,
    };
    RepSpec::from_node(sig, route, root)
}

/// Memoised [`build`]; concurrent callers may build the same spec twice, only one is kept.
pub fn spec(sig: Signature, route: Route) -> Result<Arc<RepSpec>> {
    if let Some(s) = memo().read().expect("memo lock").get(&(sig, route)) {
        return Ok(s.clone());
    }
    let built = Arc::new(build(sig, route)?);
    let mut w = memo().write().expect("memo lock");
    Ok(w.entry((sig, route)).or_insert(built).clone())
}

/// The default-route spec.
pub fn default_spec(sig: Signature) -> Result<Arc<RepSpec>> {
    spec(sig, default_route(sig)?)
}

/// Every signature with at least one route, in lexicographic order.
pub fn catalog_signatures() -> Vec<Signature> {
    let mut out: Vec<Signature> = (0..=10u32)
        .flat_map(|p| (0..=10 - p).map(move |q| Signature::of(p, q)))
        .filter(|s| is_explicit(*s) || is_diagonal(*s) || periodic::reduced(*s).is_some())
        .collect();
    out.sort();
    out
}

/// One listing row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub sig: Signature,
    pub route: Route,
    pub is_default: bool,
}

pub fn catalog() -> Vec<CatalogEntry> {
    catalog_signatures()
        .into_iter()
        .flat_map(|sig| {
            routes(sig).into_iter().enumerate().map(move |(i, route)| CatalogEntry { sig, route, is_default: i == 0 })
        })
        .collect()
}

/// `catalog.txt`: one line per signature and route.
pub fn catalog_text() -> Result<String> {
    let mut out = String::new();
    for e in catalog() {
        let s = spec(e.sig, e.route)?;
        let tag = if e.is_default { " (default)" } else { "" };
        out.push_str(&format!("{}{tag}\n", s.summary()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_spots() {
        assert_eq!(classify(Signature::of(3, 1)), (Ring::R, 4));
        assert_eq!(classify(Signature::of(2, 2)), (Ring::R, 4));
        assert_eq!(classify(Signature::of(0, 2)), (Ring::H, 1));
        assert_eq!(classify(Signature::of(2, 1)), (Ring::R2, 2));
        assert_eq!(classify(Signature::of(9, 0)), (Ring::R2, 16));
        assert_eq!(classify(Signature::of(0, 3)), (Ring::H2, 1));
    }

    #[test]
    fn classification_dimension() {
        for p in 0..12u32 {
            for q in 0..12 - p {
                let s = Signature::of(p, q);
                let (r, k) = classify(s);
                assert_eq!(r.blocks() * r.base().dim() * k * k, s.dim(), "{s}");
            }
        }
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.to_string().parse::<Route>().unwrap(), r);
        }
    }

    #[test]
    fn lemma_rejects_bad_tau() {
        let s = Signature::of(1, 0);
        let one = Multivector::one(s);
        let bad = vec![vec![one.clone(), one.clone()], vec![one.clone(), one]];
        assert!(matches!(build_lemma11(s, &bad), Err(Error::BasisChange(_))));
    }
}
