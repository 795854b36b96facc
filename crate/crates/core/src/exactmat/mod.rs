//! Exact rational arithmetic: scalars, dense matrices, subspaces and
//! univariate polynomials.
//!
//! Everything here is a pure value type; no floating point is involved
//! anywhere in the crate.

mod mat;
mod poly;
mod rat;
mod sparse;
mod subspace;

pub use mat::Mat;
pub use poly::{Poly, RootSet};
pub use rat::Rat;
pub use sparse::{SparseEchelon, SparseRow};
pub use subspace::{EchelonBuilder, Subspace};

use crate::error::Result;

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    m.rref()
}

pub fn kernel(m: &Mat) -> Subspace {
    m.kernel()
}

pub fn char_poly(m: &Mat) -> Result<Poly> {
    m.char_poly()
}

pub fn rational_roots(p: &Poly) -> Result<RootSet> {
    p.rational_roots()
}

/// Integer vector helper for tables written in source.
pub fn ivec(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| Rat::from(x)).collect()
}

/// Standard basis vector `e_i` of `Q^n`.
pub fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}
