use std::fmt;

use super::{Mat, Rat};
use crate::error::{Error, Result};

/// Linear subspace of `Q^n`, stored as the reduced row-echelon form of a
/// spanning set.
///
/// The RREF basis is unique, so derived equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: v.len() });
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = Mat::from_rows(vectors.to_vec())?;
        Ok(Self::from_row_matrix(&m))
    }

    /// Span of the rows of `m`.
    pub fn from_row_matrix(m: &Mat) -> Self {
        let (red, pivots) = m.rref();
        let rank = pivots.len();
        let basis = Mat::from_fn(rank, m.cols(), |i, j| red[(i, j)].clone());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// Span of standard basis vectors `e_i` for the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Rat>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            })
            .collect();
        Subspace::span(ambient, &vs).expect("coordinate vectors")
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// RREF basis matrix (one row per basis vector).
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the matching standard vectors complement the subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    ///
    /// Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(v.len())?;
        let mut r = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    r[j] -= &f * b;
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Rat::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient)?;
        for v in other.basis_vectors() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &[Rat]) -> Result<Vec<Rat>> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: coeffs.len() });
        }
        let mut out = vec![Rat::zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(self.basis_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(&row) {
                *o += c * b;
            }
        }
        Ok(out)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // sum_i s_i u_i - sum_j t_j w_j = 0, columns are the basis vectors
        let m = Mat::from_fn(self.ambient, a + b, |i, j| {
            if j < a {
                self.basis[(j, i)].clone()
            } else {
                -&other.basis[(j - a, i)]
            }
        });
        let vs: Vec<Vec<Rat>> = m
            .kernel()
            .basis_vectors()
            .into_iter()
            .map(|k| self.combine(&k[..a]).expect("coefficient count"))
            .collect();
        Subspace::span(self.ambient, &vs)
    }

    /// Matrix of `m` restricted to this (invariant) subspace, in RREF-basis coordinates.
    ///
    /// Column `k` holds the coordinates of `m * b_k`.
    pub fn restrict(&self, m: &Mat) -> Result<Mat> {
        let mut cols = Vec::with_capacity(self.dim());
        for b in self.basis_vectors() {
            let img = m.mul_vec(&b)?;
            cols.push(self.coords(&img)?.ok_or(Error::NotInvariant)?);
        }
        Mat::from_columns(self.dim(), &cols)
    }

    pub fn is_invariant(&self, m: &Mat) -> Result<bool> {
        for b in self.basis_vectors() {
            if !self.contains(&m.mul_vec(&b)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient, got: n })
        }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: {:?})", self.dim(), self.ambient, self.basis)
    }
}

/// Incremental echelon basis for growing a span one vector at a time.
///
/// Not canonical until converted with [`EchelonBuilder::finish`].
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    ambient: usize,
    rows: Vec<(usize, Vec<Rat>)>,
}

impl EchelonBuilder {
    pub fn new(ambient: usize) -> Self {
        EchelonBuilder { ambient, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the current span; returns whether it was added.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut r = v.to_vec();
        for (p, row) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (j, b) in row.iter().enumerate() {
                if !b.is_zero() {
                    r[j] -= &f * b;
                }
            }
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn finish(self) -> Subspace {
        let vs: Vec<Vec<Rat>> = self.rows.into_iter().map(|(_, r)| r).collect();
        Subspace::span(self.ambient, &vs).expect("lengths checked on insert")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from(x)).collect()
    }

    #[test]
    fn equality_is_span_equality() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, &[v(&[1, 0, -1]), v(&[2, 3, 1])]).unwrap();
        assert_eq!(a, b);
        let c = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 1])]).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::coordinate(4, &[0, 1]);
        let b = Subspace::span(4, &[v(&[1, 0, 1, 0]), v(&[0, 1, 0, 0])]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::coordinate(4, &[1]));
        assert_eq!(a.sum(&b).unwrap().dim(), 3);
        assert!(a.intersect(&Subspace::zero(4)).unwrap().is_zero());
    }

    #[test]
    fn coords_and_restrict() {
        let s = Subspace::span(3, &[v(&[1, 0, 2]), v(&[0, 1, 0])]).unwrap();
        let w = v(&[3, -1, 6]);
        assert_eq!(s.coords(&w).unwrap(), Some(v(&[3, -1])));
        assert_eq!(s.coords(&v(&[0, 0, 1])).unwrap(), None);
        let m = Mat::diag(&v(&[2, 5, 2]));
        assert_eq!(s.restrict(&m).unwrap(), Mat::diag(&v(&[2, 5])));
        let swap = Mat::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(s.restrict(&swap), Err(Error::NotInvariant));
    }

    #[test]
    fn builder_matches_span() {
        let vs = [v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1]), v(&[1, 3, 4])];
        let mut b = EchelonBuilder::new(3);
        let added: Vec<bool> = vs.iter().map(|x| b.insert(x)).collect();
        assert_eq!(added, vec![true, false, true, false]);
        assert_eq!(b.finish(), Subspace::span(3, &vs).unwrap());
    }
}
