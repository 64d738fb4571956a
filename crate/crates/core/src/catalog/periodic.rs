//! Mod-8 lifts: `R_{p+8,q}` over `R_{8,0}` and `R_{0,q+8}` over `R_{0,8}`.

use super::node::{square_sign, Node, Pres};
use super::{default_route, explicit, spec, Route};
use crate::clifford::{GeneratorList, Multivector, Signature};
use crate::error::{Error, Result};

/// `(outer, inner)` signatures of a periodic lift, for reduced `p + q <= 2`.
pub(crate) fn reduced(sig: Signature) -> Option<(Signature, Signature)> {
    if sig.p >= 8 && sig.p - 8 + sig.q <= 2 && sig.n() > 8 {
        Some((Signature::of(8, 0), Signature::of(sig.p - 8, sig.q)))
    } else if sig.p == 0 && sig.q > 8 && sig.q - 8 <= 2 {
        Some((Signature::of(0, 8), Signature::of(0, sig.q - 8)))
    } else {
        None
    }
}

pub(crate) fn build(sig: Signature) -> Result<Node> {
    let (outer_sig, inner_sig) = reduced(sig).ok_or_else(|| Error::CatalogMiss {
        sig,
        route: Route::Periodic.to_string(),
        hint: "periodic lifts cover (p+8, q) and (0, q+8) with p + q <= 2".into(),
    })?;
    let pres = Pres::standard(sig);
    let outer_idx: Vec<u32> = if outer_sig.p == 8 { (1..=8).collect() } else { (1..=8).map(|j| j).collect() };
    let outer_gens: Vec<Multivector> = if outer_sig.p == 8 {
        outer_idx.iter().map(|&i| pres.word([i], [])).collect()
    } else {
        outer_idx.iter().map(|&j| pres.word([], [j])).collect()
    };
    let vol = outer_gens.iter().fold(pres.one(), |acc, g| &acc * g);
    let rest: Vec<Multivector> = if outer_sig.p == 8 {
        (9..=sig.p).map(|i| pres.word([i], [])).chain((1..=sig.q).map(|j| pres.word([], [j]))).collect()
    } else {
        (9..=sig.q).map(|j| pres.word([], [j])).collect()
    };
    let comps: Vec<Multivector> = rest.iter().map(|a| &vol * a).collect();
    let squares = comps.iter().map(square_sign).collect::<Result<Vec<_>>>()?;
    let composite = GeneratorList::new(sig, comps, squares)?;
    let outer_pres = pres.sub_of(outer_gens)?;
    let outer = explicit::build(&outer_pres, Route::Explicit)?;
    let inner = spec(inner_sig, default_route(inner_sig)?)?;
    Node::periodic(pres, outer, composite, inner)
}
