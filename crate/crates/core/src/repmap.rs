//! Evaluating, inverting and pulling back through the representations.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::catalog::{default_route, spec, RepSpec, Route};
use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::rings::{char_poly, mat_det, mat_inverse, Ring, RingMatrix, RingScalar};
use crate::Rational;

/// `φ(a)` together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepImage {
    pub sig: Signature,
    pub route: Route,
    pub value: RingMatrix,
}

fn resolve(sig: Signature, route: Option<Route>) -> Result<Arc<RepSpec>> {
    let route = match route {
        Some(r) => r,
        None => default_route(sig)?,
    };
    spec(sig, route)
}

/// `φ(a)` along `route`, or the default route.
pub fn represent(a: &Multivector, route: Option<Route>) -> Result<RepImage> {
    let s = resolve(a.signature(), route)?;
    Ok(RepImage { sig: s.sig, route: s.route, value: s.represent(a)? })
}

/// Images of all basis blades with a left inverse of the image matrix.
#[derive(Debug)]
pub struct BasisImageTable {
    pub sig: Signature,
    pub route: Route,
    pub ring: Ring,
    pub size: usize,
    /// `images[mask]` is the real vector of `φ(e_mask)`.
    pub images: Vec<Vec<Rational>>,
    /// `E` with `E B = [I; 0]`, `B` the matrix whose columns are `images`.
    elim: Vec<Vec<Rational>>,
}

impl BasisImageTable {
    pub fn build(s: &RepSpec) -> Result<Self> {
        let sig = s.sig;
        let d = sig.dim();
        let images = (0..d as u32)
            .map(|m| Ok(s.represent(&Multivector::blade(sig, m, Rational::one()))?.real_vector()))
            .collect::<Result<Vec<_>>>()?;
        let m = images[0].len();
        if m < d {
            return Err(Error::Structure(format!("{sig}: image space of dimension {m} cannot hold {d} blades")));
        }
        // rows of [B | I]
        let mut a: Vec<Vec<Rational>> = (0..m)
            .map(|r| {
                let mut row: Vec<Rational> = images.iter().map(|col| col[r].clone()).collect();
                row.extend((0..m).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for c in 0..d {
            let piv = (c..m).find(|&r| !a[r][c].is_zero()).ok_or_else(|| {
                Error::Structure(format!("{sig} route {}: basis images are linearly dependent", s.route))
            })?;
            a.swap(c, piv);
            let inv = a[c][c].recip().expect("nonzero pivot");
            a[c] = a[c].iter().map(|x| x * &inv).collect();
            let pivot_row = a[c].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &(&f * p);
                    }
                }
            }
        }
        let elim = a.into_iter().map(|row| row[d..].to_vec()).collect();
        Ok(BasisImageTable { sig, route: s.route, ring: s.ring, size: s.size, images, elim })
    }

    /// Coefficients of the unique preimage, or `NotInImage`.
    pub fn solve(&self, v: &[Rational]) -> Result<Multivector> {
        if v.len() != self.elim.len() {
            return Err(Error::Shape("vector length does not match the image space".into()));
        }
        let d = self.sig.dim();
        let y: Vec<Rational> = self
            .elim
            .iter()
            .map(|row| row.iter().zip(v).filter(|(e, x)| !e.is_zero() && !x.is_zero()).fold(Rational::zero(), |acc, (e, x)| acc + e * x))
            .collect();
        if y[d..].iter().any(|x| !x.is_zero()) {
            return Err(Error::NotInImage);
        }
        Multivector::from_terms(self.sig, y.into_iter().take(d).enumerate().map(|(m, c)| (m as u32, c)))
    }
}

type TableMemo = RwLock<HashMap<(Signature, Route), Arc<BasisImageTable>>>;

/// Cached [`BasisImageTable`] for a spec.
pub fn basis_table(s: &RepSpec) -> Result<Arc<BasisImageTable>> {
    static MEMO: OnceLock<TableMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = memo.read().expect("table lock").get(&(s.sig, s.route)) {
        return Ok(t.clone());
    }
    let t = Arc::new(BasisImageTable::build(s)?);
    Ok(memo.write().expect("table lock").entry((s.sig, s.route)).or_insert(t).clone())
}

/// The element whose image is `m`.
pub fn reconstruct(m: &RepImage) -> Result<Multivector> {
    let s = spec(m.sig, m.route)?;
    if m.value.ring() != s.ring || m.value.size() != s.size {
        return Err(Error::RingMismatch(format!("{}({}) is not the target of {} `{}`", m.value.ring(), m.value.size(), s.sig, s.route)));
    }
    basis_table(&s)?.solve(&m.value.real_vector())
}

/// `a^-1`, or `None` when `a` is a zero divisor.
pub fn element_inverse(a: &Multivector, route: Option<Route>) -> Result<Option<Multivector>> {
    let img = represent(a, route)?;
    let Some(inv) = mat_inverse(&img.value) else { return Ok(None) };
    let b = reconstruct(&RepImage { value: inv, ..img })?;
    debug_assert!((a * &b) == Multivector::one(a.signature()));
    Ok(Some(b))
}

/// `det φ(a)` over `R`, `C`, or `²R` (product of the two block determinants).
pub fn element_det(a: &Multivector, route: Option<Route>) -> Result<RingScalar> {
    mat_det(&represent(a, route)?.value)
}

/// Ascending coefficients of `det(λI - φ(a))` over `R` or `²R`.
pub fn element_charpoly(a: &Multivector, route: Option<Route>) -> Result<Vec<Rational>> {
    char_poly(&represent(a, route)?.value)
}

/// `Σ c_k a^k` inside the algebra.
pub fn eval_poly_mv(coeffs: &[Rational], a: &Multivector) -> Multivector {
    let sig = a.signature();
    coeffs.iter().rev().fold(Multivector::zero(sig), |acc, c| &(&acc * a) + &Multivector::scalar(sig, c.clone()))
}

/// A real block matrix, rows of rationals.
pub type RealBlock = Vec<Vec<Rational>>;

/// Rectangular lift over `R_{1,0}` (pair `A0 ± A1`) or `R_{0,1}` (`[[A0, -A1], [A1, A0]]`).
///
/// The `(1,0)` result is the block-diagonal `2m x 2n` matrix `diag(A0 + A1, A0 - A1)`.
pub fn matrix_represent(a: &[Vec<Multivector>]) -> Result<RealBlock> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    if m == 0 || n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("expected a nonempty rectangular array".into()));
    }
    let sig = a[0][0].signature();
    if a.iter().flatten().any(|x| x.signature() != sig) {
        return Err(Error::SignatureMismatch(sig, a.iter().flatten().find(|x| x.signature() != sig).unwrap().signature()));
    }
    let part = |x: &Multivector, mask: u32| x.coeff(mask);
    let mut out = vec![vec![Rational::zero(); 2 * n]; 2 * m];
    match (sig.p, sig.q) {
        (1, 0) => {
            for i in 0..m {
                for j in 0..n {
                    let (a0, a1) = (part(&a[i][j], 0), part(&a[i][j], 1));
                    out[i][j] = &a0 + &a1;
                    out[m + i][n + j] = &a0 - &a1;
                }
            }
        }
        (0, 1) => {
            for i in 0..m {
                for j in 0..n {
                    let (a0, a1) = (part(&a[i][j], 0), part(&a[i][j], 1));
                    out[i][j] = a0.clone();
                    out[i][n + j] = -&a1;
                    out[m + i][j] = a1;
                    out[m + i][n + j] = a0;
                }
            }
        }
        _ => return Err(Error::CatalogMiss { sig, route: "rectangular".into(), hint: "rectangular lifts exist for (1,0) and (0,1)".into() }),
    }
    Ok(out)
}

/// Product of real block matrices.
pub fn real_block_mul(a: &RealBlock, b: &RealBlock) -> Result<RealBlock> {
    let k = b.len();
    if a.iter().any(|r| r.len() != k) {
        return Err(Error::Shape("inner dimensions differ".into()));
    }
    let n = b.first().map_or(0, |r| r.len());
    Ok(a.iter()
        .map(|row| (0..n).map(|j| (0..k).fold(Rational::zero(), |acc, t| acc + &row[t] * &b[t][j])).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::parse_multivector;

    fn mv(p: u32, q: u32, s: &str) -> Multivector {
        parse_multivector(Signature::of(p, q), s).unwrap()
    }

    #[test]
    fn complex_image() {
        let img = represent(&mv(0, 1, "1+2*eps1"), Some(Route::Real2)).unwrap();
        assert_eq!(img.value.block(0).to_string(), crate::rings::Mat::from_ints(&[&[1, -2], &[2, 1]]).to_string());
    }

    #[test]
    fn zero_divisor() {
        assert_eq!(element_inverse(&mv(1, 0, "1+e1"), None).unwrap(), None);
        assert_eq!(element_inverse(&mv(0, 1, "eps1"), None).unwrap(), Some(mv(0, 1, "-1*eps1")));
    }

    #[test]
    fn quaternion_inverse() {
        let got = element_inverse(&mv(0, 2, "1+eps1+eps2+eps12"), None).unwrap().unwrap();
        assert_eq!(got, mv(0, 2, "1/4 - 1/4*eps1 - 1/4*eps2 - 1/4*eps12"));
    }

    #[test]
    fn rectangular_complex_block() {
        let a = vec![vec![mv(0, 1, "eps1"), mv(0, 1, "1")]];
        let got = matrix_represent(&a).unwrap();
        let want: RealBlock = [[0, 1, -1, 0], [1, 0, 0, 1]].iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        assert_eq!(got, want);
    }
}
