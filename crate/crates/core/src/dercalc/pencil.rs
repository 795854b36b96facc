use crate::error::{Error, Result};
use crate::exactmat::{EchelonBuilder, Mat, Poly, Rat};

/// Does the span of one or two matrices contain a nonzero nilpotent element?
///
/// A combination is at issue whenever its coefficient vector is nonzero, so
/// linearly dependent inputs always answer `true`. For two independent
/// matrices `A, B`: either `A` is nilpotent, or some `aA + B` is, which
/// happens exactly when the trace polynomials `tr((aA + B)^k)`, `k = 1..n`,
/// have a common root.
pub fn pencil_has_nilpotent(mats: &[Mat]) -> Result<bool> {
    if mats.is_empty() {
        return Err(Error::InvalidArgument("pencil needs at least one matrix".into()));
    }
    if mats.len() > 2 {
        return Err(Error::OutOfScope("pencils of more than two matrices".into()));
    }
    let n = mats[0].rows();
    for m in mats {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: m.rows() });
        }
    }
    let mut eb = EchelonBuilder::new(n * n);
    let independent = mats.iter().all(|m| eb.insert(&m.vectorize()));
    if !independent {
        return Ok(true);
    }
    if mats.len() == 1 {
        return mats[0].is_nilpotent();
    }
    let (a, b) = (&mats[0], &mats[1]);
    if a.is_nilpotent()? {
        return Ok(true);
    }
    let mut g = Poly::zero();
    for p in trace_polys(a, b)? {
        g = g.gcd(&p);
    }
    Ok(g.is_zero() || g.degree().is_some_and(|d| d > 0))
}

/// `tr((aA + B)^k)` as polynomials in `a`, for `k = 1..n`.
fn trace_polys(a: &Mat, b: &Mat) -> Result<Vec<Poly>> {
    let n = a.rows();
    // powers[i] is the coefficient matrix of a^i in (aA + B)^k
    let mut powers = vec![Mat::identity(n)];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut next = Vec::with_capacity(powers.len() + 1);
        for i in 0..=powers.len() {
            let mut m = Mat::zeros(n, n);
            if i > 0 {
                m = m.try_add(&a.try_mul(&powers[i - 1])?)?;
            }
            if i < powers.len() {
                m = m.try_add(&b.try_mul(&powers[i])?)?;
            }
            next.push(m);
        }
        powers = next;
        let coeffs: Vec<Rat> = powers.iter().map(Mat::trace).collect::<Result<_>>()?;
        out.push(Poly::new(coeffs));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ivec;

    #[test]
    fn diagonal_pencils() {
        let i = Mat::identity(2);
        let h = Mat::diag(&ivec(&[1, -1]));
        assert!(!pencil_has_nilpotent(&[i.clone(), h.clone()]).unwrap());
        // diag(1,0) and diag(0,1): combination (a, b) = (0, 0) only
        let p = Mat::diag(&ivec(&[1, 0]));
        let q = Mat::diag(&ivec(&[0, 1]));
        assert!(!pencil_has_nilpotent(&[p, q]).unwrap());
        // diag(1,1,0) and diag(0,0,1) never nilpotent; diag(1,2) with E21 is
        let e21 = Mat::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(pencil_has_nilpotent(&[Mat::diag(&ivec(&[1, 2])), e21]).unwrap());
    }

    #[test]
    fn hidden_nilpotent_combination() {
        // A - B = E12 is nilpotent, neither A nor B is
        let a = Mat::from_i64(&[&[1, 1], &[0, 1]]);
        let b = Mat::identity(2);
        assert!(pencil_has_nilpotent(&[a, b]).unwrap());
    }

    #[test]
    fn input_validation() {
        assert!(pencil_has_nilpotent(&[]).is_err());
        let i = Mat::identity(2);
        assert!(matches!(
            pencil_has_nilpotent(&[i.clone(), i.clone(), i.clone()]),
            Err(Error::OutOfScope(_))
        ));
        assert!(pencil_has_nilpotent(&[i.clone(), i.scale(&Rat::from(3))]).unwrap());
        assert!(!pencil_has_nilpotent(&[i]).unwrap());
    }
}
