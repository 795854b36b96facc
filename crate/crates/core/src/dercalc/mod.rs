//! Derivations and automorphisms: derivation spaces as kernels of the
//! Leibniz system, inner derivations, Leibniz extension from generators,
//! graded components, conjugation, centralizers and the nilpotent-pencil test.

mod graded;
mod pencil;

pub use graded::{extend_from_generators, graded_components, sl2_derivations, GradedDer};
pub use pencil::pencil_has_nilpotent;

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat, SparseEchelon, SparseRow, Subspace};
use crate::liecore::LieAlg;

/// Subspace of `n x n` matrices, stored as row-major vectorizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerSpace {
    pub alg_dim: usize,
    pub space: Subspace,
    pub graded_components: Option<Vec<Subspace>>,
}

impl DerSpace {
    pub fn new(alg_dim: usize, space: Subspace) -> Self {
        DerSpace { alg_dim, space, graded_components: None }
    }

    pub fn from_matrices(alg_dim: usize, mats: &[Mat]) -> Result<Self> {
        let vs: Vec<Vec<Rat>> = mats.iter().map(Mat::vectorize).collect();
        Ok(DerSpace::new(alg_dim, Subspace::span(alg_dim * alg_dim, &vs)?))
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<Mat> {
        let n = self.alg_dim;
        self.space
            .basis_vectors()
            .iter()
            .map(|v| Mat::from_vector(n, n, v).expect("n*n entries"))
            .collect()
    }

    pub fn contains(&self, m: &Mat) -> Result<bool> {
        self.space.contains(&m.vectorize())
    }
}

/// All derivations of `a`, as the kernel of the linear Leibniz system.
pub fn derivation_space(a: &LieAlg) -> DerSpace {
    let n = a.dim();
    let var = |r: usize, c: usize| r * n + c;
    let mut se = SparseEchelon::new(n * n);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                // D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j], component k
                let mut row = SparseRow::new();
                let mut add = |v: usize, c: Rat| {
                    let e = row.entry(v).or_insert_with(Rat::zero);
                    *e += c;
                };
                for (l, c) in a.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        add(var(k, l), c.clone());
                    }
                }
                for m in 0..n {
                    let c = &a.bracket_basis(m, j)[k];
                    if !c.is_zero() {
                        add(var(m, i), -c);
                    }
                    let c = &a.bracket_basis(i, m)[k];
                    if !c.is_zero() {
                        add(var(m, j), -c);
                    }
                }
                se.insert(row);
            }
        }
    }
    DerSpace::new(n, se.kernel())
}

/// Span of `ad b_i`.
pub fn inner_derivations(a: &LieAlg) -> DerSpace {
    let n = a.dim();
    let mats: Vec<Mat> = (0..n).map(|i| a.ad_basis(i)).collect();
    DerSpace::from_matrices(n, &mats).expect("square matrices")
}

pub fn is_automorphism(a: &LieAlg, phi: &Mat) -> bool {
    let n = a.dim();
    if phi.rows() != n || phi.cols() != n || phi.inverse().is_err() {
        return false;
    }
    let images: Vec<Vec<Rat>> = (0..n).map(|j| phi.col(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.mul_vec(a.bracket_basis(i, j)).expect("length");
            if lhs != a.bracket(&images[i], &images[j]).expect("length") {
                return false;
            }
        }
    }
    true
}

/// `phi^{-1} d phi`, after checking that `phi` is an automorphism of `a`.
pub fn conjugate(a: &LieAlg, phi: &Mat, d: &Mat) -> Result<Mat> {
    let inv = phi.inverse()?;
    if !is_automorphism(a, phi) {
        return Err(Error::NotAnAutomorphism);
    }
    inv.try_mul(d)?.try_mul(phi)
}

/// Elements of `space` commuting with every matrix in `of`.
pub fn centralizer_in(space: &DerSpace, of: &[Mat]) -> Result<Subspace> {
    let n = space.alg_dim;
    let basis = space.basis();
    if of.is_empty() || basis.is_empty() {
        return Ok(space.space.clone());
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for y in of {
        let brs: Vec<Vec<Rat>> =
            basis.iter().map(|b| b.commutator(y).map(|m| m.vectorize())).collect::<Result<_>>()?;
        for e in 0..n * n {
            rows.push(brs.iter().map(|v| v[e].clone()).collect());
        }
    }
    let coeffs = Mat::from_rows(rows)?.kernel();
    let vs: Vec<Vec<Rat>> =
        coeffs.basis_vectors().iter().map(|c| space.space.combine(c)).collect::<Result<_>>()?;
    Subspace::span(n * n, &vs)
}
