//! Real Clifford algebras `R_{p,q}` over exact rationals.
//!
//! Generator `i` (1-based) is bit `i-1` of a blade mask. The first `p`
//! generators square to `+1`, the remaining `q` to `-1`.

mod generators;
mod multivector;
mod parse;

pub use generators::{conjugate_along, reindex, split_along, GeneratorList, Splitter};
pub use multivector::{mv_add, mv_mul, scalar_mul, Multivector};
pub use parse::{blade_name, parse_multivector};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_GENERATORS: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub p: u32,
    pub q: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        let sig = Signature { p, q };
        if p + q > MAX_GENERATORS {
            return Err(Error::SignatureTooLarge(sig));
        }
        Ok(sig)
    }

    /// Panicking constructor for literals known to be in range.
    pub const fn of(p: u32, q: u32) -> Self {
        assert!(p + q <= MAX_GENERATORS);
        Signature { p, q }
    }

    pub const fn n(&self) -> u32 {
        self.p + self.q
    }

    pub const fn dim(&self) -> usize {
        1usize << self.n()
    }

    /// Mask with every generator bit set.
    pub const fn full_mask(&self) -> u32 {
        ((1u64 << self.n()) - 1) as u32
    }

    /// Bits of the generators squaring to `-1`.
    pub const fn neg_mask(&self) -> u32 {
        self.full_mask() & !(((1u64 << self.p) - 1) as u32)
    }

    pub fn fits(&self, mask: u32) -> bool {
        mask & !self.full_mask() == 0
    }

    /// Square of generator `i` (1-based).
    pub fn generator_square(&self, i: u32) -> i8 {
        if i <= self.p {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl std::str::FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { pos: 1, msg: format!("signature must look like `p,q`, got `{s}`") };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (p, q) = t.split_once(',').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let q: u32 = q.trim().parse().map_err(|_| bad())?;
        Signature::new(p, q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }
}

/// `true` when `e_a * e_b = -e_{a^b}` in signature with negative bits `neg`.
#[inline]
pub fn blade_sign_negative(neg: u32, a: u32, b: u32) -> bool {
    let mut x = a >> 1;
    let mut swaps = 0u32;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    swaps += (a & b & neg).count_ones();
    swaps & 1 == 1
}

/// Product of two basis blades: `e_a e_b = sign * e_out`.
pub fn blade_product(sig: Signature, a: Blade, b: Blade) -> Result<(i8, Blade)> {
    for m in [a.0, b.0] {
        if !sig.fits(m) {
            return Err(Error::Width { mask: m, sig });
        }
    }
    let sign = if blade_sign_negative(sig.neg_mask(), a.0, b.0) { -1 } else { 1 };
    Ok((sign, Blade(a.0 ^ b.0)))
}

/// Square of the pseudoscalar `e_{[n]}`.
pub fn pseudoscalar_square(sig: Signature) -> Result<i8> {
    let n = sig.n();
    if n == 0 {
        return Err(Error::DegenerateSignature);
    }
    let reorder = (n * (n - 1) / 2) % 2;
    let negs = sig.q % 2;
    Ok(if (reorder + negs) % 2 == 0 { 1 } else { -1 })
}

pub fn pseudoscalar(sig: Signature) -> Multivector {
    Multivector::blade(sig, sig.full_mask(), crate::Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_products() {
        let s = Signature::of(2, 0);
        assert_eq!(blade_product(s, Blade(1), Blade(2)).unwrap(), (1, Blade(3)));
        assert_eq!(blade_product(s, Blade(2), Blade(1)).unwrap(), (-1, Blade(3)));
        let s = Signature::of(1, 1);
        assert_eq!(blade_product(s, Blade(2), Blade(2)).unwrap(), (-1, Blade(0)));
        assert!(matches!(blade_product(s, Blade(4), Blade(1)), Err(Error::Width { .. })));
    }

    #[test]
    fn pseudoscalar_squares() {
        assert_eq!(pseudoscalar_square(Signature::of(3, 0)).unwrap(), -1);
        assert_eq!(pseudoscalar_square(Signature::of(0, 3)).unwrap(), 1);
        assert_eq!(pseudoscalar_square(Signature::of(0, 1)).unwrap(), -1);
        assert_eq!(pseudoscalar_square(Signature::of(0, 0)), Err(Error::DegenerateSignature));
    }

    #[test]
    fn pseudoscalar_square_matches_product() {
        for p in 0..6 {
            for q in 0..6 - p {
                let s = Signature::of(p, q);
                if s.n() == 0 {
                    continue;
                }
                let e = pseudoscalar(s);
                let sq = &e * &e;
                let want = pseudoscalar_square(s).unwrap() as i64;
                assert_eq!(sq, Multivector::scalar(s, want.into()), "{s}");
            }
        }
    }

    #[test]
    fn signature_parse() {
        assert_eq!("3,1".parse::<Signature>().unwrap(), Signature::of(3, 1));
        assert!("3".parse::<Signature>().is_err());
        assert!("20,20".parse::<Signature>().is_err());
    }
}
