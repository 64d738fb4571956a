use super::matrix::{Mat, Ring, RingMatrix};
use super::scalar::{Base, RingScalar};
use crate::error::{Error, Result};
use crate::Rational;

/// Gauss–Jordan inverse by left row operations; `None` when singular.
///
/// Valid over any division ring: the row operations build a left inverse,
/// which for square matrices is two-sided.
pub fn mat_inverse_block(a: &Mat) -> Option<Mat> {
    let n = a.size();
    let base = a.base();
    let mut m: Vec<Vec<RingScalar>> = a.rows();
    let mut inv: Vec<Vec<RingScalar>> = Mat::identity(base, n).rows();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].inverse().expect("nonzero pivot");
        for x in m[col].iter_mut().chain(inv[col].iter_mut()) {
            *x = &p * x;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let t = &m[r][j] - &(&f * &m[col][j]);
                m[r][j] = t;
                let t = &inv[r][j] - &(&f * &inv[col][j]);
                inv[r][j] = t;
            }
        }
    }
    Some(Mat::from_rows(base, inv).expect("square"))
}

/// Inverse over `R`, `C`, `H` and blockwise over `²R`, `²H`.
pub fn mat_inverse(a: &RingMatrix) -> Option<RingMatrix> {
    let blocks: Option<Vec<Mat>> = a.blocks().iter().map(mat_inverse_block).collect();
    Some(RingMatrix::new(a.ring(), blocks?).expect("same shape"))
}

fn commutative(base: Base) -> Result<()> {
    if base == Base::Quaternion {
        return Err(Error::UnsupportedRing("determinants over H are not supported".into()));
    }
    Ok(())
}

/// Fraction-free (Bareiss) determinant over a commutative base.
pub fn det_block(a: &Mat) -> Result<RingScalar> {
    commutative(a.base())?;
    let n = a.size();
    let base = a.base();
    if n == 0 {
        return Ok(RingScalar::one(base));
    }
    let mut m = a.rows();
    let mut prev = RingScalar::one(base);
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(RingScalar::zero(base)),
            }
        }
        let prev_inv = prev.inverse().expect("nonzero previous pivot");
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = &num * &prev_inv;
            }
            m[i][k] = RingScalar::zero(base);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// Determinant over `R` or `C`; over `²R` the block-diagonal determinant.
pub fn mat_det(a: &RingMatrix) -> Result<RingScalar> {
    match a.ring() {
        Ring::R | Ring::C => det_block(a.block(0)),
        Ring::R2 => Ok(&det_block(a.block(0))? * &det_block(a.block(1))?),
        r => Err(Error::UnsupportedRing(format!("no determinant over {r}"))),
    }
}

/// Characteristic polynomial `det(λI - A)` by Faddeev–LeVerrier,
/// ascending coefficients, monic of degree `size`.
pub fn charpoly_block(a: &Mat) -> Result<Vec<RingScalar>> {
    commutative(a.base())?;
    let n = a.size();
    let base = a.base();
    let mut coeffs = vec![RingScalar::zero(base); n + 1];
    coeffs[n] = RingScalar::one(base);
    let ident = Mat::identity(base, n);
    let mut mk = Mat::zero(base, n);
    for k in 1..=n {
        let shifted = ident.left_mul_scalar(&coeffs[n - k + 1]);
        mk = a.mul(&mk)?.add(&shifted)?;
        let tr = a.mul(&mk)?.trace();
        coeffs[n - k] = tr.scale(&Rational::new(-1, k as i64));
    }
    Ok(coeffs)
}

fn poly_mul(a: &[RingScalar], b: &[RingScalar]) -> Vec<RingScalar> {
    let base = a[0].base();
    let mut out = vec![RingScalar::zero(base); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Characteristic polynomial over `R`; over `²R` of the block-diagonal matrix.
pub fn char_poly(a: &RingMatrix) -> Result<Vec<Rational>> {
    let coeffs = match a.ring() {
        Ring::R => charpoly_block(a.block(0))?,
        Ring::R2 => poly_mul(&charpoly_block(a.block(0))?, &charpoly_block(a.block(1))?),
        r => return Err(Error::UnsupportedRing(format!("characteristic polynomial over {r} is not supported"))),
    };
    Ok(coeffs
        .into_iter()
        .map(|c| match c {
            RingScalar::Real(x) => x,
            _ => unreachable!(),
        })
        .collect())
}

/// `Σ c_k A^k` for a real matrix polynomial.
pub fn eval_poly_at(coeffs: &[Rational], a: &Mat) -> Result<Mat> {
    let n = a.size();
    let mut acc = Mat::zero(a.base(), n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(a)?.add(&Mat::identity(a.base(), n).scale(c))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_inverse() {
        let a = Mat::from_ints(&[&[0, -1], &[1, 0]]);
        assert_eq!(mat_inverse_block(&a).unwrap(), Mat::from_ints(&[&[0, 1], &[-1, 0]]));
        assert!(mat_inverse_block(&Mat::from_ints(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn quaternion_diagonal_inverse() {
        let h = |a: i64, b: i64, c: i64, d: i64| RingScalar::Quaternion(a.into(), b.into(), c.into(), d.into());
        let z = h(0, 0, 0, 0);
        let a = Mat::from_rows(Base::Quaternion, vec![vec![h(0, 1, 0, 0), z.clone()], vec![z.clone(), h(0, 0, 1, 0)]]).unwrap();
        let want = Mat::from_rows(Base::Quaternion, vec![vec![h(0, -1, 0, 0), z.clone()], vec![z, h(0, 0, -1, 0)]]).unwrap();
        assert_eq!(mat_inverse_block(&a).unwrap(), want);
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = Mat::from_ints(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3·-2 - 4·5) - (-1)(1·-2 - 0) + 0 = -52 - 2
        assert_eq!(det_block(&a).unwrap(), RingScalar::Real((-54).into()));
        let z = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_block(&z).unwrap(), RingScalar::Real((-1).into()));
    }

    #[test]
    fn cayley_hamilton_small() {
        let a = Mat::from_ints(&[&[1, 2, 0, 1], &[3, -1, 2, 0], &[0, 0, 4, 1], &[2, 1, 1, 1]]);
        let p = char_poly(&RingMatrix::single(a.clone())).unwrap();
        assert!(p[4].is_one());
        let det = mat_det(&RingMatrix::single(a.clone())).unwrap();
        assert_eq!(RingScalar::Real(p[0].clone()), det);
        let z = eval_poly_at(&p, &a).unwrap();
        assert_eq!(z, Mat::zero(Base::Real, 4));
    }

    #[test]
    fn quaternion_det_is_unsupported() {
        let a = RingMatrix::identity(Ring::H, 2);
        assert!(matches!(mat_det(&a), Err(Error::UnsupportedRing(_))));
    }
}
