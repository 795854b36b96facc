use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat, Subspace};
use crate::freenilp::{GradedFreeNilp, Recipe};

use super::{derivation_space, DerSpace};

/// Extends `delta` (column `k` is the image of generator `k`) to a derivation
/// by propagating the Leibniz rule along the basis recipes.
pub fn extend_from_generators(g: &GradedFreeNilp, delta: &Mat) -> Result<Mat> {
    let n = g.dim();
    if delta.rows() != n || delta.cols() != 2 {
        return Err(Error::DimensionMismatch { expected: n, got: delta.rows() });
    }
    let mut images: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for r in &g.recipes {
        let img = match r {
            Recipe::Generator(k) => delta.col(*k),
            Recipe::Bracket { scale, left, right } => {
                let a = g.alg.bracket(&images[*left], &g.alg.basis_vector(*right))?;
                let b = g.alg.bracket(&g.alg.basis_vector(*left), &images[*right])?;
                a.iter().zip(&b).map(|(x, y)| scale * (x + y)).collect()
            }
        };
        images.push(img);
    }
    let d = Mat::from_columns(n, &images)?;
    if let Some((i, j)) = g.alg.derivation_defect(&d)? {
        return Err(Error::NotADerivation(format!(
            "extension fails on ({}, {})",
            g.alg.label(i),
            g.alg.label(j)
        )));
    }
    Ok(d)
}

/// Matrix sending generator `k` to `v` and the other generator to zero.
fn generator_map(n: usize, k: usize, v: &[Rat]) -> Mat {
    let zero = vec![Rat::zero(); n];
    let cols = if k == 0 { [v.to_vec(), zero] } else { [zero, v.to_vec()] };
    Mat::from_columns(n, &cols).expect("n rows")
}

/// `e: v1 -> v0`, `f: v0 -> v1`, `h = diag(1, -1)` on the generators, extended.
pub fn sl2_derivations(g: &GradedFreeNilp) -> Result<[Mat; 3]> {
    let n = g.dim();
    let [x1, x2] = g.generators();
    let neg: Vec<Rat> = x2.iter().map(|c| -c).collect();
    let e = extend_from_generators(g, &generator_map(n, 1, &x1))?;
    let f = extend_from_generators(g, &generator_map(n, 0, &x2))?;
    let h = extend_from_generators(g, &Mat::from_columns(n, &[x1.clone(), neg])?)?;
    Ok([e, f, h])
}

/// Graded pieces of `Der n_{2,t}`.
#[derive(Clone, Debug)]
pub struct GradedDer {
    /// Full derivation space with `graded_components` filled in.
    pub space: DerSpace,
    /// `components[j-1]` is `Der_j`, extensions of `Hom(m, m^j)`.
    pub components: Vec<Subspace>,
    /// Basis of each `Der_j`, parallel to `components`.
    pub component_bases: Vec<Vec<Mat>>,
    /// `sum_{j >= 2} Der_j`.
    pub nilradical: Subspace,
    /// Traceless part of `Der_1`, spanned by `e, f, h`.
    pub levi: Subspace,
    /// Extension of the identity on the generators.
    pub identity: Mat,
    pub sl2: [Mat; 3],
}

pub fn graded_components(g: &GradedFreeNilp) -> Result<GradedDer> {
    let n = g.dim();
    let nn = n * n;
    let mut components = Vec::new();
    let mut component_bases = Vec::new();
    for comp in &g.components {
        let mut mats = Vec::new();
        for b in comp.basis_vectors() {
            for k in 0..2 {
                mats.push(extend_from_generators(g, &generator_map(n, k, &b))?);
            }
        }
        let vs: Vec<Vec<Rat>> = mats.iter().map(Mat::vectorize).collect();
        components.push(Subspace::span(nn, &vs)?);
        component_bases.push(mats);
    }
    let mut nil = Subspace::zero(nn);
    for c in components.iter().skip(1) {
        nil = nil.sum(c)?;
    }
    let [x1, x2] = g.generators();
    let identity = extend_from_generators(g, &Mat::from_columns(n, &[x1, x2])?)?;
    let sl2 = sl2_derivations(g)?;
    let levi_vs: Vec<Vec<Rat>> = sl2.iter().map(Mat::vectorize).collect();
    let levi = Subspace::span(nn, &levi_vs)?;
    let mut space = derivation_space(&g.alg);
    space.graded_components = Some(components.clone());
    Ok(GradedDer { space, components, component_bases, nilradical: nil, levi, identity, sl2 })
}

impl GradedDer {
    /// `[I, d] = (k - 1) d` for every basis derivation `d` of `Der_k`.
    pub fn weight_law_holds(&self) -> bool {
        self.component_bases.iter().enumerate().all(|(j, mats)| {
            let w = Rat::from(j as i64);
            mats.iter().all(|d| self.identity.commutator(d).expect("square") == d.scale(&w))
        })
    }

    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }
}
