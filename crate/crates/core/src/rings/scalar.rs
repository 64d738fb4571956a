use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::Rational;

/// Base division ring of a matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Real,
    Complex,
    Quaternion,
}

impl Base {
    /// Real dimension.
    pub fn dim(self) -> usize {
        match self {
            Base::Real => 1,
            Base::Complex => 2,
            Base::Quaternion => 4,
        }
    }
}

/// Entry of a ring matrix. Quaternion units follow `i² = j² = -1`, `ij = k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingScalar {
    Real(Rational),
    Complex(Rational, Rational),
    Quaternion(Rational, Rational, Rational, Rational),
}

use RingScalar::{Complex, Quaternion, Real};

impl RingScalar {
    pub fn zero(base: Base) -> Self {
        Self::from_parts(base, &[])
    }

    pub fn one(base: Base) -> Self {
        Self::from_parts(base, &[Rational::one()])
    }

    /// Builds from real components, missing ones zero.
    pub fn from_parts(base: Base, parts: &[Rational]) -> Self {
        let c = |k: usize| parts.get(k).cloned().unwrap_or_default();
        assert!(parts.len() <= base.dim(), "too many components for {base:?}");
        match base {
            Base::Real => Real(c(0)),
            Base::Complex => Complex(c(0), c(1)),
            Base::Quaternion => Quaternion(c(0), c(1), c(2), c(3)),
        }
    }

    pub fn base(&self) -> Base {
        match self {
            Real(_) => Base::Real,
            Complex(..) => Base::Complex,
            Quaternion(..) => Base::Quaternion,
        }
    }

    pub fn parts(&self) -> Vec<Rational> {
        match self {
            Real(a) => vec![a.clone()],
            Complex(a, b) => vec![a.clone(), b.clone()],
            Quaternion(a, b, c, d) => vec![a.clone(), b.clone(), c.clone(), d.clone()],
        }
    }

    /// Re-expresses in a wider base. Panics when narrowing would drop data.
    pub fn promote(&self, base: Base) -> Self {
        if self.base() == base {
            return self.clone();
        }
        let p = self.parts();
        assert!(
            base.dim() >= p.len() || p[base.dim()..].iter().all(|x| x.is_zero()),
            "cannot narrow {self} to {base:?}"
        );
        let keep = p.len().min(base.dim());
        Self::from_parts(base, &p[..keep])
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real(a) => a.is_zero(),
            Complex(a, b) => a.is_zero() && b.is_zero(),
            Quaternion(a, b, c, d) => a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        let p = self.parts();
        p[0].is_one() && p[1..].iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let p: Vec<Rational> = self.parts().iter().map(|x| x * r).collect();
        Self::from_parts(self.base(), &p)
    }

    pub fn conj(&self) -> Self {
        match self {
            Real(a) => Real(a.clone()),
            Complex(a, b) => Complex(a.clone(), -b),
            Quaternion(a, b, c, d) => Quaternion(a.clone(), -b, -c, -d),
        }
    }

    pub fn norm_sq(&self) -> Rational {
        self.parts().iter().fold(Rational::zero(), |acc, x| &acc + &(x * x))
    }

    /// Two-sided inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq().recip()?;
        Some(self.conj().scale(&n))
    }

    fn widest(a: &Self, b: &Self) -> Base {
        a.base().max(b.base())
    }
}

impl Add for &RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: &RingScalar) -> RingScalar {
        match (self, rhs) {
            (Real(a), Real(b)) => Real(a + b),
            _ => {
                let base = RingScalar::widest(self, rhs);
                let (x, y) = (self.promote(base).parts(), rhs.promote(base).parts());
                let s: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
                RingScalar::from_parts(base, &s)
            }
        }
    }
}

impl Sub for &RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: &RingScalar) -> RingScalar {
        self + &(-rhs)
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        match self {
            Real(a) => Real(-a),
            Complex(a, b) => Complex(-a, -b),
            Quaternion(a, b, c, d) => Quaternion(-a, -b, -c, -d),
        }
    }
}

impl Mul for &RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: &RingScalar) -> RingScalar {
        match (self, rhs) {
            (Real(a), Real(b)) => Real(a * b),
            (Real(r), x) | (x, Real(r)) => x.scale(r),
            (Complex(a, b), Complex(c, d)) => Complex(&(a * c) - &(b * d), &(a * d) + &(b * c)),
            _ => {
                let (x, y) = (self.promote(Base::Quaternion), rhs.promote(Base::Quaternion));
                let (Quaternion(a0, a1, a2, a3), Quaternion(b0, b1, b2, b3)) = (&x, &y) else { unreachable!() };
                Quaternion(
                    &(&(a0 * b0) - &(a1 * b1)) - &(&(a2 * b2) + &(a3 * b3)),
                    &(&(a0 * b1) + &(a1 * b0)) + &(&(a2 * b3) - &(a3 * b2)),
                    &(&(a0 * b2) - &(a1 * b3)) + &(&(a2 * b0) + &(a3 * b1)),
                    &(&(a0 * b3) + &(a1 * b2)) - &(&(a2 * b1) - &(a3 * b0)),
                )
            }
        }
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.parts();
        write!(f, "{}", p[0])?;
        for (x, unit) in p[1..].iter().zip(["i", "j", "k"]) {
            if x.is_negative() {
                write!(f, "-{}{unit}", x.abs())?;
            } else {
                write!(f, "+{x}{unit}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> RingScalar {
        Quaternion(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn quaternion_units() {
        let (i, j, k) = (q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1));
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&k * &k, q(-1, 0, 0, 0));
        assert_eq!(&j * &k, i);
    }

    #[test]
    fn inverse_and_print() {
        let x = q(1, 1, 1, 1);
        assert_eq!(&x * &x.inverse().unwrap(), q(1, 0, 0, 0));
        assert_eq!(Complex(1.into(), (-2).into()).to_string(), "1-2i");
        assert_eq!(x.to_string(), "1+1i+1j+1k");
        assert!(Real(0.into()).inverse().is_none());
    }
}
