//! Composite generators, subalgebra splittings and re-indexing.

use super::{blade_sign_negative, Multivector, Signature};
use crate::error::{Error, Result};
use crate::Rational;

/// Row-echelon basis over GF(2) with combination tracking.
#[derive(Clone, Debug, Default)]
struct Gf2Basis {
    // (vector, combination of inserted indices); descending pivot order
    rows: Vec<(u32, u64)>,
}

fn pivot(v: u32) -> u32 {
    31 - v.leading_zeros()
}

impl Gf2Basis {
    fn reduce(&self, mut v: u32) -> (u32, u64) {
        let mut combo = 0u64;
        for &(r, c) in &self.rows {
            if v >> pivot(r) & 1 == 1 {
                v ^= r;
                combo ^= c;
            }
        }
        (v, combo)
    }

    fn insert(&mut self, v: u32, index: usize) -> bool {
        let (r, c) = self.reduce(v);
        if r == 0 {
            return false;
        }
        let row = (r, c ^ (1u64 << index));
        let at = self.rows.iter().position(|x| pivot(x.0) < pivot(r)).unwrap_or(self.rows.len());
        self.rows.insert(at, row);
        true
    }
}

/// `(mask, negative)` for a multivector that is `±e_mask`.
fn signed_blade(a: &Multivector) -> Option<(u32, bool)> {
    let (m, c) = a.as_blade()?;
    if c.is_one() {
        Some((m, false))
    } else if (-c).is_one() {
        Some((m, true))
    } else {
        None
    }
}

/// Pairwise anticommuting signed blades of a host algebra with declared squares.
#[derive(Clone, Debug)]
pub struct GeneratorList {
    host: Signature,
    gens: Vec<Multivector>,
    blades: Vec<(u32, bool)>,
    squares: Vec<i8>,
    basis: Gf2Basis,
}

impl GeneratorList {
    pub fn new(host: Signature, gens: Vec<Multivector>, squares: Vec<i8>) -> Result<Self> {
        if gens.len() != squares.len() {
            return Err(Error::Structure("one declared square per generator is required".into()));
        }
        if gens.len() > 32 {
            return Err(Error::Structure("at most 32 generators".into()));
        }
        let mut blades = Vec::with_capacity(gens.len());
        let mut basis = Gf2Basis::default();
        for (k, g) in gens.iter().enumerate() {
            if g.signature() != host {
                return Err(Error::SignatureMismatch(g.signature(), host));
            }
            let sb = signed_blade(g)
                .ok_or_else(|| Error::Structure(format!("generator {} is not a signed blade: {g}", k + 1)))?;
            let sq = g * g;
            let want = Multivector::scalar(host, Rational::from_int(squares[k] as i64));
            if squares[k].abs() != 1 || sq != want {
                return Err(Error::Structure(format!(
                    "generator {} = {g} squares to {sq}, declared {}",
                    k + 1,
                    squares[k]
                )));
            }
            if !basis.insert(sb.0, k) {
                return Err(Error::Structure(format!("generator {} = {g} is a product of earlier ones", k + 1)));
            }
            blades.push(sb);
        }
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !gens[i].anticommutes_with(&gens[j]) {
                    return Err(Error::Structure(format!(
                        "generators {} = {} and {} = {} do not anticommute",
                        i + 1,
                        gens[i],
                        j + 1,
                        gens[j]
                    )));
                }
            }
        }
        Ok(GeneratorList { host, gens, blades, squares, basis })
    }

    /// The standard generators `e_1..e_n` of `sig` (or the first `count`).
    pub fn standard(sig: Signature) -> Self {
        let gens = (1..=sig.n()).map(|i| Multivector::generator(sig, i)).collect();
        let squares = (1..=sig.n()).map(|i| sig.generator_square(i)).collect();
        GeneratorList::new(sig, gens, squares).expect("standard generators are valid")
    }

    pub fn empty(host: Signature) -> Self {
        GeneratorList::new(host, vec![], vec![]).expect("empty list is valid")
    }

    /// Extends the list by one generator, re-running all checks.
    pub fn with(&self, g: Multivector, square: i8) -> Result<Self> {
        let mut gens = self.gens.clone();
        let mut squares = self.squares.clone();
        gens.push(g);
        squares.push(square);
        GeneratorList::new(self.host, gens, squares)
    }

    pub fn host(&self) -> Signature {
        self.host
    }

    pub fn gens(&self) -> &[Multivector] {
        &self.gens
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The abstract signature presented by the list: `p` leading `+1`
    /// squares followed by `q` trailing `-1` squares.
    pub fn abstract_signature(&self) -> Result<Signature> {
        let p = self.squares.iter().take_while(|&&s| s == 1).count();
        if self.squares[p..].iter().any(|&s| s == 1) {
            return Err(Error::Structure("squares must list +1 generators before -1 generators".into()));
        }
        Signature::new(p as u32, (self.squares.len() - p) as u32)
    }

    /// Whether host blade `mask` lies in the generated subalgebra.
    pub fn spans(&self, mask: u32) -> bool {
        self.basis.reduce(mask).0 == 0
    }

    /// Residue of `mask` modulo the span of the generator masks.
    pub fn residue(&self, mask: u32) -> u32 {
        self.basis.reduce(mask).0
    }

    /// Product of the generators in `subset` (ascending), as `(mask, negative)`.
    fn product_blade(&self, subset: u64) -> (u32, bool) {
        let neg_bits = self.host.neg_mask();
        let (mut m, mut neg) = (0u32, false);
        for k in 0..self.blades.len() {
            if subset >> k & 1 == 1 {
                let (gm, gn) = self.blades[k];
                neg ^= gn ^ blade_sign_negative(neg_bits, m, gm);
                m ^= gm;
            }
        }
        (m, neg)
    }

    /// Product of the generators in `subset`, as a host multivector.
    pub fn product(&self, subset: u64) -> Multivector {
        let (m, neg) = self.product_blade(subset);
        Multivector::blade(self.host, m, if neg { -Rational::one() } else { Rational::one() })
    }

    /// Every product of the generators, indexed by subset.
    pub fn basis_elements(&self) -> Vec<Multivector> {
        (0..1u64 << self.len()).map(|s| self.product(s)).collect()
    }

    /// Whether `a` commutes with every generator.
    pub fn centralizes(&self, a: &Multivector) -> bool {
        self.gens.iter().all(|g| a.commutes_with(g))
    }

    /// Inverse of [`reindex`]: expresses a host element over the abstract generators.
    pub fn pullback(&self, a: &Multivector) -> Result<Multivector> {
        let abs = self.abstract_signature()?;
        let mut terms = Vec::with_capacity(a.len());
        for (m, c) in a.terms() {
            let (r, combo) = self.basis.reduce(*m);
            if r != 0 {
                return Err(Error::Decomposition(format!(
                    "blade {} is outside the generated subalgebra",
                    super::blade_name(self.host, *m)
                )));
            }
            let (_, neg) = self.product_blade(combo);
            terms.push((combo as u32, if neg { -c } else { c.clone() }));
        }
        Multivector::from_terms(abs, terms)
    }
}

/// Maps an element written over abstract generators into the host algebra.
pub fn reindex(a: &Multivector, gens: &GeneratorList) -> Result<Multivector> {
    let abs = gens.abstract_signature()?;
    if a.signature() != abs {
        return Err(Error::SignatureMismatch(a.signature(), abs));
    }
    let terms = a.terms().iter().map(|(m, c)| {
        let (hm, neg) = gens.product_blade(*m as u64);
        (hm, if neg { -c } else { c.clone() })
    });
    Multivector::from_terms(gens.host(), terms)
}

/// Splits host elements as `a = sum_t a_t * w_t` with each `a_t` in the
/// subalgebra generated by `sub` and `w_t` drawn from a fixed word list.
#[derive(Clone, Debug)]
pub struct Splitter {
    sub: GeneratorList,
    words: Vec<(u32, bool)>,
    residues: Vec<u32>,
}

impl Splitter {
    pub fn new(sub: &GeneratorList, words: &[Multivector]) -> Result<Self> {
        let mut ws = Vec::with_capacity(words.len());
        let mut residues = Vec::with_capacity(words.len());
        for w in words {
            let sb = signed_blade(w).ok_or_else(|| Error::Structure(format!("word {w} is not a signed blade")))?;
            let r = sub.residue(sb.0);
            if residues.contains(&r) {
                return Err(Error::Structure(format!("word {w} is not independent of the others over the subalgebra")));
            }
            residues.push(r);
            ws.push(sb);
        }
        Ok(Splitter { sub: sub.clone(), words: ws, residues })
    }

    pub fn sub(&self) -> &GeneratorList {
        &self.sub
    }

    pub fn split(&self, a: &Multivector) -> Result<Vec<Multivector>> {
        let host = self.sub.host();
        if a.signature() != host {
            return Err(Error::SignatureMismatch(a.signature(), host));
        }
        let neg_bits = host.neg_mask();
        let mut parts: Vec<Vec<(u32, Rational)>> = vec![Vec::new(); self.words.len()];
        for (m, c) in a.terms() {
            let r = self.sub.residue(*m);
            let t = self.residues.iter().position(|&x| x == r).ok_or_else(|| {
                Error::Decomposition(format!("blade {} is not reachable", super::blade_name(host, *m)))
            })?;
            let (wm, wneg) = self.words[t];
            let base = m ^ wm;
            let neg = wneg ^ blade_sign_negative(neg_bits, base, wm);
            parts[t].push((base, if neg { -c } else { c.clone() }));
        }
        parts.into_iter().map(|p| Multivector::from_terms(host, p)).collect()
    }

    /// `sum_t parts[t] * w_t`
    pub fn join(&self, parts: &[Multivector]) -> Multivector {
        let host = self.sub.host();
        let mut acc = Multivector::zero(host);
        for (p, &(wm, wneg)) in parts.iter().zip(&self.words) {
            let w = Multivector::blade(host, wm, if wneg { -Rational::one() } else { Rational::one() });
            acc = &acc + &(p * &w);
        }
        acc
    }
}

fn check_unit(u: &Multivector, sub: &GeneratorList) -> Result<()> {
    let sb = signed_blade(u).ok_or_else(|| Error::Structure(format!("{u} is not a signed blade")))?;
    let _ = sb;
    let sq = u * u;
    if !sq.is_scalar() || !(sq.scalar_part().is_one() || (-sq.scalar_part()).is_one()) {
        return Err(Error::Structure(format!("{u} does not square to +-1")));
    }
    if !sub.centralizes(u) {
        return Err(Error::Structure(format!("{u} does not commute with the subalgebra")));
    }
    Ok(())
}

/// `a = a0 + a1*u` with `a0, a1` in the subalgebra generated by `sub`.
pub fn split_along(a: &Multivector, u: &Multivector, sub: &GeneratorList) -> Result<(Multivector, Multivector)> {
    check_unit(u, sub)?;
    let one = Multivector::one(sub.host());
    let parts = Splitter::new(sub, &[one, u.clone()])?.split(a)?;
    let mut it = parts.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

/// `a0 - a1*u` for the splitting of [`split_along`].
pub fn conjugate_along(a: &Multivector, u: &Multivector, sub: &GeneratorList) -> Result<Multivector> {
    let (a0, a1) = split_along(a, u, sub)?;
    Ok(&a0 - &(&a1 * u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{parse_multivector, pseudoscalar};

    fn mv(s: Signature, t: &str) -> Multivector {
        parse_multivector(s, t).unwrap()
    }

    #[test]
    fn split_three_dimensional() {
        let s = Signature::of(3, 0);
        let sub = GeneratorList::new(s, vec![mv(s, "e1"), mv(s, "e2")], vec![1, 1]).unwrap();
        let u = pseudoscalar(s);
        let (a0, a1) = split_along(&mv(s, "1 + e3"), &u, &sub).unwrap();
        assert_eq!(a0, mv(s, "1"));
        assert_eq!(a1, mv(s, "-1*e12"));
        assert_eq!(&a0 + &(&a1 * &u), mv(s, "1 + e3"));
    }

    #[test]
    fn conjugation_is_involutive() {
        let s = Signature::of(3, 0);
        let sub = GeneratorList::new(s, vec![mv(s, "e1"), mv(s, "e2")], vec![1, 1]).unwrap();
        let u = pseudoscalar(s);
        let a = mv(s, "1 + 2*e1 - e3 + 5*e123");
        let c = conjugate_along(&a, &u, &sub).unwrap();
        assert_eq!(conjugate_along(&c, &u, &sub).unwrap(), a);
    }

    #[test]
    fn rejects_non_anticommuting() {
        let s = Signature::of(3, 0);
        let r = GeneratorList::new(s, vec![mv(s, "e1"), mv(s, "e23")], vec![1, -1]);
        assert!(matches!(r, Err(Error::Structure(_))));
    }

    #[test]
    fn reindex_and_pullback() {
        let host = Signature::of(0, 3);
        let gens = GeneratorList::new(host, vec![mv(host, "eps123")], vec![1]).unwrap();
        let e1 = Multivector::generator(Signature::of(1, 0), 1);
        assert_eq!(reindex(&e1, &gens).unwrap(), mv(host, "eps123"));
        assert_eq!(gens.pullback(&mv(host, "2 - eps123")).unwrap().to_string(), "2 - 1*e1");
    }
}
