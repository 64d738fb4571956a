use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{blade_sign_negative, Signature};
use crate::error::{Error, Result};
use crate::Rational;

/// Sparse element of `R_{p,q}`: terms sorted by blade mask, no zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    terms: Vec<(u32, Rational)>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: Vec::new() }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn scalar(sig: Signature, c: Rational) -> Self {
        Self::blade(sig, 0, c)
    }

    /// `c * e_mask`. Panics if the mask does not fit.
    pub fn blade(sig: Signature, mask: u32, c: Rational) -> Self {
        assert!(sig.fits(mask), "blade {mask:#b} outside {sig}");
        if c.is_zero() {
            return Self::zero(sig);
        }
        Multivector { sig, terms: vec![(mask, c)] }
    }

    /// Generator `i` (1-based).
    pub fn generator(sig: Signature, i: u32) -> Self {
        assert!(i >= 1 && i <= sig.n(), "generator {i} outside {sig}");
        Self::blade(sig, 1 << (i - 1), Rational::one())
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (u32, Rational)>) -> Result<Self> {
        let mut v: Vec<(u32, Rational)> = terms.into_iter().collect();
        for (m, _) in &v {
            if !sig.fits(*m) {
                return Err(Error::Width { mask: *m, sig });
            }
        }
        v.sort_by_key(|t| t.0);
        Ok(Multivector { sig, terms: merge_sorted(v) })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> Rational {
        match self.terms.binary_search_by_key(&mask, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scalar_part(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 0)
    }

    /// `Some((mask, c))` when this is a single nonzero term.
    pub fn as_blade(&self) -> Option<(u32, &Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector { sig: self.sig, terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self*other - other*self`
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.commutator(other).is_zero()
    }

    pub fn anticommutes_with(&self, other: &Self) -> bool {
        (&(self * other) + &(other * self)).is_zero()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Multivector::one(self.sig);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig, other.sig));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &Rational| if negate { -c } else { c.clone() };
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, rhs(&b[j].1)));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Multivector { sig: self.sig, terms: out }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let neg = self.sig.neg_mask();
        if self.terms.is_empty() || other.terms.is_empty() {
            return Self::zero(self.sig);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                let c = if blade_sign_negative(neg, *ma, *mb) { -c } else { c };
                prods.push((ma ^ mb, c));
            }
        }
        prods.sort_unstable_by_key(|t| t.0);
        Multivector { sig: self.sig, terms: merge_sorted(prods) }
    }

    /// `acc += self * other` on a dense coefficient array of length `2^n`.
    pub(crate) fn mul_into(&self, other: &Self, acc: &mut [Rational]) {
        let neg = self.sig.neg_mask();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                let slot = &mut acc[(ma ^ mb) as usize];
                if blade_sign_negative(neg, *ma, *mb) {
                    *slot -= &c;
                } else {
                    *slot += &c;
                }
            }
        }
    }

    /// Collects a dense coefficient array, dropping zeros.
    pub(crate) fn from_dense(sig: Signature, acc: Vec<Rational>) -> Self {
        let terms = acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m as u32, c)).collect();
        Multivector { sig, terms }
    }
}

fn merge_sorted(v: Vec<(u32, Rational)>) -> Vec<(u32, Rational)> {
    let mut out: Vec<(u32, Rational)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc += &c,
            _ => out.push((m, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

/// Sum of two multivectors over the same signature.
pub fn mv_add(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_add(b)
}

/// Geometric product; fails on a signature mismatch.
pub fn mv_mul(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_mul(b)
}

pub fn scalar_mul(c: &Rational, a: &Multivector) -> Multivector {
    a.scale(c)
}

// Operator forms panic on signature mismatch; use the `try_` methods to branch.
impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("signature mismatch in +")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("signature mismatch in -")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.try_mul(rhs).expect("signature mismatch in *")
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector { sig: self.sig, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{}", super::blade_name(self.sig, *m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::of(p, q)
    }

    #[test]
    fn hyperbolic_idempotent() {
        let s = sig(1, 0);
        let one = Multivector::one(s);
        let e1 = Multivector::generator(s, 1);
        let a = &one + &e1;
        let b = &one - &e1;
        assert_eq!(&a * &a, a.scale(&2.into()));
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn add_and_scale() {
        let s = sig(2, 0);
        let e1 = Multivector::generator(s, 1);
        assert!((&e1 + &(-&e1)).is_zero());
        let x = &Multivector::scalar(s, 3.into()) + &Multivector::blade(s, 3, 1.into());
        assert_eq!(x.scale(&2.into()).to_string(), "6 + 2*e12");
    }

    #[test]
    fn mismatch_is_error() {
        let a = Multivector::one(sig(1, 0));
        let b = Multivector::one(sig(0, 1));
        assert!(matches!(mv_mul(&a, &b), Err(Error::SignatureMismatch(..))));
    }

    #[test]
    fn display_forms() {
        let s = sig(0, 1);
        let x = Multivector::from_terms(s, [(0, Rational::new(1, 2)), (1, Rational::new(-1, 2))]).unwrap();
        assert_eq!(x.to_string(), "1/2 - 1/2*eps1");
        assert_eq!((-Multivector::generator(s, 1)).to_string(), "-1*eps1");
        assert_eq!(Multivector::zero(s).to_string(), "0");
    }
}
