use std::fmt;

use rayon::prelude::*;

use crate::clifford::{parse_multivector, Multivector, Signature};
use crate::error::{Error, Result};
use crate::Rational;

/// Square matrix whose entries are multivectors of one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvMatrix {
    sig: Signature,
    n: usize,
    e: Vec<Multivector>,
}

impl MvMatrix {
    pub fn zero(sig: Signature, n: usize) -> Self {
        MvMatrix { sig, n, e: vec![Multivector::zero(sig); n * n] }
    }

    pub fn identity(sig: Signature, n: usize) -> Self {
        Self::scalar(sig, n, Rational::one())
    }

    /// `c * I_n`
    pub fn scalar(sig: Signature, n: usize, c: Rational) -> Self {
        let mut m = Self::zero(sig, n);
        for i in 0..n {
            m.e[i * n + i] = Multivector::scalar(sig, c.clone());
        }
        m
    }

    pub fn diag(sig: Signature, d: Vec<Multivector>) -> Result<Self> {
        let n = d.len();
        let mut m = Self::zero(sig, n);
        for (i, x) in d.into_iter().enumerate() {
            if x.signature() != sig {
                return Err(Error::SignatureMismatch(x.signature(), sig));
            }
            m.e[i * n + i] = x;
        }
        Ok(m)
    }

    pub fn from_rows(sig: Signature, rows: Vec<Vec<Multivector>>) -> Result<Self> {
        let n = rows.len();
        let mut e = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::Shape(format!("expected a row of length {n}, found {}", r.len())));
            }
            for x in r {
                if x.signature() != sig {
                    return Err(Error::SignatureMismatch(x.signature(), sig));
                }
                e.push(x);
            }
        }
        Ok(MvMatrix { sig, n, e })
    }

    /// Parses a matrix written row by row in the multivector grammar.
    pub fn parse(sig: Signature, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_multivector(sig, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(sig, rows)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Multivector {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Multivector) {
        assert_eq!(x.signature(), self.sig);
        self.e[i * self.n + j] = x;
    }

    pub fn entries(&self) -> &[Multivector] {
        &self.e
    }

    pub fn map(&self, f: impl Fn(&Multivector) -> Multivector) -> Self {
        MvMatrix { sig: self.sig, n: self.n, e: self.e.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig, other.sig));
        }
        if self.n != other.n {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.n, self.n, other.n, other.n)));
        }
        if let Some(m) = self.mul_integral(other) {
            return Ok(m);
        }
        let n = self.n;
        let e: Vec<Multivector> = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / n, k % n);
                let mut acc = vec![Rational::zero(); self.sig.dim()];
                for t in 0..n {
                    self.get(i, t).mul_into(other.get(t, j), &mut acc);
                }
                Multivector::from_dense(self.sig, acc)
            })
            .collect();
        Ok(MvMatrix { sig: self.sig, n, e })
    }

    /// Entries as integer terms over one common denominator, with the largest
    /// numerator and term count, when everything fits in `i64`.
    fn integral(&self) -> Option<(i64, Vec<Vec<(u32, i64)>>, i128, usize)> {
        let mut den: i64 = 1;
        for x in &self.e {
            for (_, c) in x.terms() {
                let (_, d) = c.as_i64_pair()?;
                den = num_integer::lcm(den, d);
                if den > 1 << 40 {
                    return None;
                }
            }
        }
        let mut top: i128 = 0;
        let mut len = 0;
        let rows = self
            .e
            .iter()
            .map(|x| {
                len = len.max(x.len());
                x.terms()
                    .iter()
                    .map(|(m, c)| {
                        let (a, d) = c.as_i64_pair()?;
                        let v = a.checked_mul(den / d)?;
                        top = top.max((v as i128).abs());
                        Some((*m, v))
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some((den, rows, top, len))
    }

    /// Exact product in `i128` when the coefficients are small enough.
    fn mul_integral(&self, other: &Self) -> Option<Self> {
        let (da, a, ta, la) = self.integral()?;
        let (db, b, tb, lb) = other.integral()?;
        let n = self.n;
        let bound = ta.checked_mul(tb)?.checked_mul((la * lb * n) as i128)?;
        if bound > i128::MAX / 4 {
            return None;
        }
        let den = da as i128 * db as i128;
        let neg = self.sig.neg_mask();
        let dim = self.sig.dim();
        // bit (a * dim + b) set when e_a e_b carries a minus sign
        let signs: Vec<u64> = if dim <= 1024 {
            let mut t = vec![0u64; (dim * dim).div_ceil(64)];
            for x in 0..dim {
                for y in 0..dim {
                    if crate::clifford::blade_sign_negative(neg, x as u32, y as u32) {
                        let k = x * dim + y;
                        t[k / 64] |= 1 << (k % 64);
                    }
                }
            }
            t
        } else {
            Vec::new()
        };
        let negative = |x: u32, y: u32| -> bool {
            if signs.is_empty() {
                crate::clifford::blade_sign_negative(neg, x, y)
            } else {
                let k = x as usize * dim + y as usize;
                signs[k / 64] >> (k % 64) & 1 == 1
            }
        };
        let e = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / n, k % n);
                let mut acc = vec![0i128; dim];
                for t in 0..n {
                    for (ma, ca) in &a[i * n + t] {
                        for (mb, cb) in &b[t * n + j] {
                            let v = *ca as i128 * *cb as i128;
                            let slot = &mut acc[(ma ^ mb) as usize];
                            if negative(*ma, *mb) {
                                *slot -= v;
                            } else {
                                *slot += v;
                            }
                        }
                    }
                }
                let terms = acc.into_iter().enumerate().filter(|(_, v)| *v != 0).map(|(m, v)| (m as u32, Rational::from_i128_pair(v, den)));
                Multivector::from_terms(self.sig, terms).expect("masks within signature")
            })
            .collect();
        Some(MvMatrix { sig: self.sig, n, e })
    }

    /// Block matrix with block `(i, j) = x_ij * m` when `left`, else `m * x_ij`.
    pub fn blockwise(x: &MvMatrix, m: &MvMatrix, left: bool) -> Result<Self> {
        if x.sig != m.sig {
            return Err(Error::SignatureMismatch(x.sig, m.sig));
        }
        let (k, s) = (x.n, m.n);
        let n = k * s;
        let e: Vec<Multivector> = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (r, c) = (idx / n, idx % n);
                let xe = x.get(r / s, c / s);
                let me = m.get(r % s, c % s);
                if left {
                    xe * me
                } else {
                    me * xe
                }
            })
            .collect();
        Ok(MvMatrix { sig: x.sig, n, e })
    }

    /// First entry where `self` differs from `c * I`, if any.
    pub fn scalar_mismatch(&self, c: &Rational) -> Option<(usize, usize, Multivector)> {
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { Multivector::scalar(self.sig, c.clone()) } else { Multivector::zero(self.sig) };
                let got = self.get(i, j);
                if *got != want {
                    return Some((i, j, got.clone()));
                }
            }
        }
        None
    }
}

impl fmt::Display for MvMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// An invertible multivector matrix with its inverse up to a rational factor:
/// `p * (scale * pinv) = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformPair {
    pub p: MvMatrix,
    pub pinv: MvMatrix,
    pub scale: Rational,
}

impl TransformPair {
    pub fn size(&self) -> usize {
        self.p.size()
    }

    /// Tensor product with outer-major indexing, for commuting entry families.
    pub fn kron(outer: &TransformPair, inner: &TransformPair) -> Result<TransformPair> {
        let k = |a: &MvMatrix, b: &MvMatrix| -> Result<MvMatrix> {
            let (m, n) = (a.size(), b.size());
            let rows = (0..m * n)
                .map(|r| (0..m * n).map(|c| a.get(r / n, c / n) * b.get(r % n, c % n)).collect())
                .collect();
            MvMatrix::from_rows(a.signature(), rows)
        };
        Ok(TransformPair {
            p: k(&outer.p, &inner.p)?,
            pinv: k(&outer.pinv, &inner.pinv)?,
            scale: &outer.scale * &inner.scale,
        })
    }

    /// `None` when `p * scale * pinv = I`, else the first offending entry.
    pub fn defect(&self) -> Result<Option<(usize, usize, Multivector)>> {
        let prod = self.p.mul(&self.pinv)?;
        let c = self.scale.recip().ok_or_else(|| Error::BasisChange("zero scale".into()))?;
        Ok(prod.scalar_mismatch(&c))
    }

    /// `(x ⊗ 1) * (I_k ⊗ p)` and `(I_k ⊗ pinv) * (y ⊗ 1)`.
    pub fn nest(x: &MvMatrix, y: &MvMatrix, scale: &Rational, inner: &TransformPair) -> Result<TransformPair> {
        Ok(TransformPair {
            p: MvMatrix::blockwise(x, &inner.p, true)?,
            pinv: MvMatrix::blockwise(y, &inner.pinv, false)?,
            scale: scale * &inner.scale,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_pair() {
        let s = Signature::of(1, 0);
        let p = MvMatrix::parse(s, &[&["1/2 + 1/2*e1", "-1/2 + 1/2*e1"], &["1/2 - 1/2*e1", "1/2 + 1/2*e1"]]).unwrap();
        let pinv = MvMatrix::parse(s, &[&["1/2 + 1/2*e1", "1/2 - 1/2*e1"], &["-1/2 + 1/2*e1", "1/2 + 1/2*e1"]]).unwrap();
        let t = TransformPair { p, pinv, scale: Rational::one() };
        assert_eq!(t.defect().unwrap(), None);
    }

    #[test]
    fn complex_pair_needs_half() {
        let s = Signature::of(0, 1);
        let p = MvMatrix::parse(s, &[&["1", "eps1"], &["-1*eps1", "-1"]]).unwrap();
        let t = TransformPair { p: p.clone(), pinv: p.clone(), scale: Rational::new(1, 2) };
        assert_eq!(t.defect().unwrap(), None);
        let bad = TransformPair { p: p.clone(), pinv: p, scale: Rational::one() };
        assert!(bad.defect().unwrap().is_some());
    }
}
