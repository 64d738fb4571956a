use std::fmt;

use super::scalar::{Base, RingScalar};
use crate::error::{Error, Result};
use crate::Rational;

/// Target ring of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    R,
    C,
    H,
    /// `²R`: pairs of real matrices
    R2,
    /// `²H`: pairs of quaternion matrices
    H2,
}

impl Ring {
    pub fn base(self) -> Base {
        match self {
            Ring::R | Ring::R2 => Base::Real,
            Ring::C => Base::Complex,
            Ring::H | Ring::H2 => Base::Quaternion,
        }
    }

    pub fn is_doubled(self) -> bool {
        matches!(self, Ring::R2 | Ring::H2)
    }

    pub fn blocks(self) -> usize {
        if self.is_doubled() {
            2
        } else {
            1
        }
    }

    pub fn doubled(base: Base) -> Option<Ring> {
        match base {
            Base::Real => Some(Ring::R2),
            Base::Quaternion => Some(Ring::H2),
            Base::Complex => None,
        }
    }

    pub fn single(base: Base) -> Ring {
        match base {
            Base::Real => Ring::R,
            Base::Complex => Ring::C,
            Base::Quaternion => Ring::H,
        }
    }

    /// Real dimension of the `s × s` matrix algebra over this ring.
    pub fn real_dim(self, s: usize) -> usize {
        self.blocks() * self.base().dim() * s * s
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::R => "R",
            Ring::C => "C",
            Ring::H => "H",
            Ring::R2 => "²R",
            Ring::H2 => "²H",
        })
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "R" => Ring::R,
            "C" => Ring::C,
            "H" => Ring::H,
            "²R" | "2R" => Ring::R2,
            "²H" | "2H" => Ring::H2,
            _ => return Err(Error::RingMismatch(format!("unknown ring `{s}`"))),
        })
    }
}

/// Dense square matrix over one base ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    base: Base,
    n: usize,
    e: Vec<RingScalar>,
}

impl Mat {
    pub fn zero(base: Base, n: usize) -> Self {
        Mat { base, n, e: vec![RingScalar::zero(base); n * n] }
    }

    pub fn identity(base: Base, n: usize) -> Self {
        let mut m = Self::zero(base, n);
        for i in 0..n {
            m.e[i * n + i] = RingScalar::one(base);
        }
        m
    }

    /// From row-major entries, promoting each to `base`.
    pub fn from_rows(base: Base, rows: Vec<Vec<RingScalar>>) -> Result<Self> {
        let n = rows.len();
        let mut e = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::Shape("rows must form a square matrix".into()));
            }
            for x in r {
                if x.base() > base {
                    return Err(Error::RingMismatch(format!("entry {x} does not fit {base:?}")));
                }
                e.push(x.promote(base));
            }
        }
        Ok(Mat { base, n, e })
    }

    pub fn from_rationals(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_rows(Base::Real, rows.into_iter().map(|r| r.into_iter().map(RingScalar::Real).collect()).collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rationals(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect())
            .expect("square integer matrix")
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RingScalar {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RingScalar) {
        self.e[i * self.n + j] = x.promote(self.base);
    }

    pub fn entries(&self) -> &[RingScalar] {
        &self.e
    }

    pub fn rows(&self) -> Vec<Vec<RingScalar>> {
        self.e.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.base, self.n)
    }

    pub fn promote(&self, base: Base) -> Self {
        Mat { base, n: self.n, e: self.e.iter().map(|x| x.promote(base)).collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.base != other.base || self.n != other.n {
            return Err(Error::RingMismatch(format!(
                "{:?}({}) vs {:?}({})",
                self.base, self.n, other.base, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Mat { base: self.base, n: self.n, e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Mat { base: self.base, n: self.n, e: self.e.iter().zip(&other.e).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> Self {
        Mat { base: self.base, n: self.n, e: self.e.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Mat { base: self.base, n: self.n, e: self.e.iter().map(|a| a.scale(r)).collect() }
    }

    /// `x * self` entrywise (left scalar multiplication).
    pub fn left_mul_scalar(&self, x: &RingScalar) -> Self {
        let base = self.base.max(x.base());
        Mat { base, n: self.n, e: self.e.iter().map(|a| x * a).collect() }
    }

    /// Row-by-column product, entries multiplied left to right.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.n;
        let mut out = Self::zero(self.base, n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.e[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.e[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let t = &out.e[i * n + j] + &(a * b);
                    out.e[i * n + j] = t;
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> RingScalar {
        (0..self.n).fold(RingScalar::zero(self.base), |acc, i| &acc + self.get(i, i))
    }

    /// Assembles `[[a, b], [c, d]]` from equal-size blocks.
    pub fn from_blocks(blocks: [[&Mat; 2]; 2]) -> Result<Self> {
        let a = blocks[0][0];
        for b in blocks.iter().flatten() {
            a.check(b)?;
        }
        let n = a.n;
        let mut out = Self::zero(a.base, 2 * n);
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, blk) in row.iter().enumerate() {
                for i in 0..n {
                    for j in 0..n {
                        out.e[(bi * n + i) * 2 * n + bj * n + j] = blk.e[i * n + j].clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// `r ⊗ self` for a real matrix `r`.
    pub fn kron_real_left(r: &Mat, m: &Mat) -> Self {
        assert_eq!(r.base, Base::Real, "left factor must be real");
        let (a, b) = (r.n, m.n);
        let mut out = Self::zero(m.base, a * b);
        for i in 0..a {
            for j in 0..a {
                let x = &r.e[i * a + j];
                if x.is_zero() {
                    continue;
                }
                let RingScalar::Real(x) = x else { unreachable!() };
                for k in 0..b {
                    for l in 0..b {
                        out.e[(i * b + k) * a * b + j * b + l] = m.e[k * b + l].scale(x);
                    }
                }
            }
        }
        out
    }

    /// `Σ_t parts[t] · unit_t` over `base`, with real `parts` and units `1, i, j, k`.
    pub fn from_real_parts(base: Base, parts: &[&Mat]) -> Result<Self> {
        let n = parts[0].n;
        if parts.len() != base.dim() || parts.iter().any(|p| p.base != Base::Real || p.n != n) {
            return Err(Error::RingMismatch("real parts do not match the base".into()));
        }
        let mut out = Self::zero(base, n);
        for idx in 0..n * n {
            let comps: Vec<Rational> = parts
                .iter()
                .map(|p| match &p.e[idx] {
                    RingScalar::Real(x) => x.clone(),
                    _ => unreachable!(),
                })
                .collect();
            out.e[idx] = RingScalar::from_parts(base, &comps);
        }
        Ok(out)
    }

    /// Replaces each entry by its real left-multiplication block.
    pub fn embed_real(&self) -> Self {
        let d = self.base.dim();
        let n = self.n;
        let mut out = Self::zero(Base::Real, n * d);
        for i in 0..n {
            for j in 0..n {
                let blk = real_block(&self.e[i * n + j]);
                for k in 0..d {
                    for l in 0..d {
                        out.e[(i * d + k) * n * d + j * d + l] = RingScalar::Real(blk[k][l].clone());
                    }
                }
            }
        }
        out
    }

    /// Exact real components, row-major, each entry contributing `base.dim()` values.
    pub fn real_vector(&self) -> Vec<Rational> {
        self.e.iter().flat_map(|x| x.parts()).collect()
    }
}

/// Left-multiplication matrix of a scalar over the basis `1, i, j, k`.
pub fn real_block(x: &RingScalar) -> Vec<Vec<Rational>> {
    match x {
        RingScalar::Real(a) => vec![vec![a.clone()]],
        RingScalar::Complex(a, b) => vec![vec![a.clone(), -b], vec![b.clone(), a.clone()]],
        RingScalar::Quaternion(a0, a1, a2, a3) => vec![
            vec![a0.clone(), -a1, -a2, -a3],
            vec![a1.clone(), a0.clone(), -a3, a2.clone()],
            vec![a2.clone(), a3.clone(), a0.clone(), -a1],
            vec![a3.clone(), -a2, a1.clone(), a0.clone()],
        ],
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.e.chunks(self.n.max(1)).enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Square matrix over `R`, `C`, `H`, or a block pair over `²R`, `²H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    ring: Ring,
    blocks: Vec<Mat>,
}

impl RingMatrix {
    pub fn new(ring: Ring, blocks: Vec<Mat>) -> Result<Self> {
        if blocks.len() != ring.blocks() {
            return Err(Error::RingMismatch(format!("{ring} needs {} block(s)", ring.blocks())));
        }
        let n = blocks[0].size();
        let blocks: Vec<Mat> = blocks
            .into_iter()
            .map(|b| {
                if b.size() != n || b.base() > ring.base() {
                    Err(Error::RingMismatch(format!("block does not fit {ring}({n})")))
                } else {
                    Ok(b.promote(ring.base()))
                }
            })
            .collect::<Result<_>>()?;
        Ok(RingMatrix { ring, blocks })
    }

    pub fn single(m: Mat) -> Self {
        RingMatrix { ring: Ring::single(m.base()), blocks: vec![m] }
    }

    pub fn pair(plus: Mat, minus: Mat) -> Result<Self> {
        let ring = Ring::doubled(plus.base().max(minus.base()))
            .ok_or_else(|| Error::RingMismatch("no doubled complex ring".into()))?;
        RingMatrix::new(ring, vec![plus, minus])
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        RingMatrix { ring, blocks: vec![Mat::identity(ring.base(), n); ring.blocks()] }
    }

    pub fn zero(ring: Ring, n: usize) -> Self {
        RingMatrix { ring, blocks: vec![Mat::zero(ring.base(), n); ring.blocks()] }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn size(&self) -> usize {
        self.blocks[0].size()
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &Mat {
        &self.blocks[k]
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.is_identity())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring || self.size() != other.size() {
            return Err(Error::RingMismatch(format!(
                "{}({}) vs {}({})",
                self.ring,
                self.size(),
                other.ring,
                other.size()
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &Self, f: impl Fn(&Mat, &Mat) -> Result<Mat>) -> Result<Self> {
        self.check(other)?;
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(RingMatrix { ring: self.ring, blocks })
    }

    pub fn map(&self, f: impl Fn(&Mat) -> Mat) -> Self {
        RingMatrix { ring: self.ring, blocks: self.blocks.iter().map(f).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|b| b.scale(r))
    }

    pub fn neg(&self) -> Self {
        self.map(|b| b.neg())
    }

    /// Exact real components of all blocks.
    pub fn real_vector(&self) -> Vec<Rational> {
        self.blocks.iter().flat_map(|b| b.real_vector()).collect()
    }

    /// Inverse of [`RingMatrix::real_vector`].
    pub fn from_real_vector(ring: Ring, n: usize, v: &[Rational]) -> Result<Self> {
        let d = ring.base().dim();
        if v.len() != ring.real_dim(n) {
            return Err(Error::Shape("real vector length does not match ring and size".into()));
        }
        let per = n * n * d;
        let blocks = (0..ring.blocks())
            .map(|b| {
                let chunk = &v[b * per..(b + 1) * per];
                let rows = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| RingScalar::from_parts(ring.base(), &chunk[(i * n + j) * d..(i * n + j + 1) * d]))
                            .collect()
                    })
                    .collect();
                Mat::from_rows(ring.base(), rows)
            })
            .collect::<Result<_>>()?;
        RingMatrix::new(ring, blocks)
    }
}

pub fn mat_mul(a: &RingMatrix, b: &RingMatrix) -> Result<RingMatrix> {
    a.zip(b, |x, y| x.mul(y))
}

pub fn mat_add(a: &RingMatrix, b: &RingMatrix) -> Result<RingMatrix> {
    a.zip(b, |x, y| x.add(y))
}

pub fn mat_sub(a: &RingMatrix, b: &RingMatrix) -> Result<RingMatrix> {
    a.zip(b, |x, y| x.sub(y))
}

/// Replaces complex and quaternion entries by their real blocks.
pub fn ring_embed_real(a: &RingMatrix) -> RingMatrix {
    let ring = if a.ring.is_doubled() { Ring::R2 } else { Ring::R };
    RingMatrix { ring, blocks: a.blocks.iter().map(|b| b.embed_real()).collect() }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}({})", self.ring, self.size())?;
        if self.ring.is_doubled() {
            write!(f, "plus:\n{}\nminus:\n{}", self.blocks[0], self.blocks[1])
        } else {
            write!(f, "{}", self.blocks[0])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: i64, b: i64) -> RingScalar {
        RingScalar::Complex(a.into(), b.into())
    }

    #[test]
    fn quaternion_matrix_order() {
        let h = |a: i64, b: i64, c: i64, d: i64| RingScalar::Quaternion(Rational::from_int(a), b.into(), c.into(), d.into());
        let one = h(1, 0, 0, 0);
        let zero = h(0, 0, 0, 0);
        let a = Mat::from_rows(Base::Quaternion, vec![vec![h(0, 1, 0, 0), zero.clone()], vec![zero.clone(), one.clone()]]).unwrap();
        let b = Mat::from_rows(Base::Quaternion, vec![vec![h(0, 0, 1, 0), zero.clone()], vec![zero, one]]).unwrap();
        assert_eq!(*a.mul(&b).unwrap().get(0, 0), h(0, 0, 0, 1));
        assert_eq!(*b.mul(&a).unwrap().get(0, 0), h(0, 0, 0, -1));
    }

    #[test]
    fn complex_product_matches_real_embedding() {
        let a = Mat::from_rows(Base::Complex, vec![vec![c(1, 2), c(0, -1)], vec![c(3, 0), c(-2, 5)]]).unwrap();
        let b = Mat::from_rows(Base::Complex, vec![vec![c(2, -1), c(1, 1)], vec![c(0, 4), c(7, 0)]]).unwrap();
        let lhs = a.mul(&b).unwrap().embed_real();
        let rhs = a.embed_real().mul(&b.embed_real()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn embed_examples() {
        let i = Mat::from_rows(Base::Complex, vec![vec![c(0, 1)]]).unwrap();
        assert_eq!(i.embed_real(), Mat::from_ints(&[&[0, -1], &[1, 0]]));
        assert!(Mat::identity(Base::Quaternion, 2).embed_real().is_identity());
    }

    #[test]
    fn real_vector_round_trip() {
        let m = RingMatrix::pair(Mat::from_ints(&[&[1, 2], &[3, 4]]), Mat::from_ints(&[&[5, 6], &[7, 8]])).unwrap();
        let v = m.real_vector();
        assert_eq!(RingMatrix::from_real_vector(Ring::R2, 2, &v).unwrap(), m);
    }

    #[test]
    fn mismatch_is_error() {
        let a = RingMatrix::identity(Ring::R, 2);
        let b = RingMatrix::identity(Ring::C, 2);
        assert!(mat_mul(&a, &b).is_err());
    }
}
