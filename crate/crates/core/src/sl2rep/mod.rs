//! Weight theory for split `sl2` actions: weight multisets, string
//! stripping into highest weights, Clebsch-Gordan products and the
//! tensor containment check.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat, Subspace};
use crate::liecore::LieAlg;

/// Matrices `e, f, h` acting on a common space with the `sl2` relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Mat,
    pub f: Mat,
    pub h: Mat,
}

impl Sl2Triple {
    /// Checks `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
    pub fn new(e: Mat, f: Mat, h: Mat) -> Result<Self> {
        let two = Rat::from(2);
        if e.commutator(&f)? != h {
            return Err(Error::InvalidTriple("[e,f] != h".into()));
        }
        if h.commutator(&e)? != e.scale(&two) {
            return Err(Error::InvalidTriple("[h,e] != 2e".into()));
        }
        if h.commutator(&f)? != f.scale(&-two) {
            return Err(Error::InvalidTriple("[h,f] != -2f".into()));
        }
        Ok(Sl2Triple { e, f, h })
    }

    /// Adjoint actions of elements `e, f, h` of `a`.
    pub fn from_algebra(a: &LieAlg, e: &[Rat], f: &[Rat], h: &[Rat]) -> Result<Self> {
        Sl2Triple::new(a.ad(e)?, a.ad(f)?, a.ad(h)?)
    }

    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    fn check_invariant(&self, s: &Subspace) -> Result<()> {
        for m in [&self.e, &self.f, &self.h] {
            if !s.is_invariant(m)? {
                return Err(Error::NotInvariant);
            }
        }
        Ok(())
    }

    /// `h` restricted to an invariant subspace.
    pub fn h_on(&self, s: &Subspace) -> Result<Mat> {
        self.check_invariant(s)?;
        s.restrict(&self.h)
    }
}

/// Weights and highest weights of an `sl2`-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleDecomposition {
    /// Ascending.
    pub weights: Vec<i64>,
    /// Descending.
    pub highest_weights: Vec<i64>,
}

impl ModuleDecomposition {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `V(1) + V(0)`-style rendering.
    pub fn summary(&self) -> String {
        if self.highest_weights.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.highest_weights.iter().map(|m| format!("V({m})")).collect();
        parts.join(" + ")
    }
}

/// Outcome of greedy string stripping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stripping {
    /// Highest weights removed, in removal order.
    pub highest: Vec<i64>,
    /// Weights left when stripping stopped, ascending; empty on success.
    pub leftover: Vec<Rat>,
}

impl Stripping {
    pub fn is_complete(&self) -> bool {
        self.leftover.is_empty()
    }
}

/// Eigenvalues of `h` with multiplicity, ascending.
pub fn weight_multiset(h: &Mat) -> Result<Vec<Rat>> {
    let rs = h.char_poly()?.rational_roots()?;
    if !rs.splits {
        return Err(Error::NonRationalEigenvalues);
    }
    Ok(rs.roots)
}

/// Repeatedly removes `{m, m-2, ..., -m}` for the largest remaining `m`.
pub fn strip_strings(weights: &[Rat]) -> Stripping {
    let mut left: BTreeMap<i64, usize> = BTreeMap::new();
    if weights.iter().any(|w| !w.is_integer()) {
        let mut leftover = weights.to_vec();
        leftover.sort();
        return Stripping { highest: Vec::new(), leftover };
    }
    for w in weights {
        *left.entry(w.to_i64().expect("small integer weight")).or_insert(0) += 1;
    }
    let mut highest = Vec::new();
    while let Some((&m, _)) = left.iter().next_back() {
        if m < 0 {
            break;
        }
        let string: Vec<i64> = (0..=m).map(|k| m - 2 * k).collect();
        if !string.iter().all(|w| left.contains_key(w)) {
            break;
        }
        for w in string {
            let c = left.get_mut(&w).expect("present");
            *c -= 1;
            if *c == 0 {
                left.remove(&w);
            }
        }
        highest.push(m);
    }
    let leftover = left
        .into_iter()
        .flat_map(|(w, c)| std::iter::repeat(Rat::from(w)).take(c))
        .collect();
    Stripping { highest, leftover }
}

/// Whether `weights` is the weight multiset of a finite-dimensional module.
pub fn sl2_consistency(weights: &[Rat]) -> bool {
    strip_strings(weights).is_complete()
}

pub fn decompose_weights(weights: &[Rat]) -> Result<ModuleDecomposition> {
    let s = strip_strings(weights);
    if !s.is_complete() {
        let left: Vec<String> = s.leftover.iter().map(Rat::to_string).collect();
        return Err(Error::InconsistentWeights(format!("leftover {{{}}}", left.join(", "))));
    }
    let mut ws: Vec<i64> = weights.iter().map(|w| w.to_i64().expect("integer")).collect();
    ws.sort();
    Ok(ModuleDecomposition { weights: ws, highest_weights: s.highest })
}

/// Decomposition of the invariant subspace `module` under the triple.
pub fn highest_weight_decomposition(t: &Sl2Triple, module: &Subspace) -> Result<ModuleDecomposition> {
    let h = t.h_on(module)?;
    decompose_weights(&weight_multiset(&h)?)
}

/// Highest weights of `V(m) (x) V(n)`, descending.
pub fn clebsch_gordan(m: i64, n: i64) -> Result<Vec<i64>> {
    if m < 0 || n < 0 {
        return Err(Error::InvalidArgument("highest weights must be nonnegative".into()));
    }
    Ok((0..=m.min(n)).map(|k| m + n - 2 * k).collect())
}

/// Result of comparing `target` against the tensor product of `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorCheck {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    /// Highest weights of `u (x) v`, descending.
    pub product: Vec<i64>,
    pub target: Vec<i64>,
    pub contained: bool,
}

pub fn tensor_weight_check(
    t: &Sl2Triple,
    u: &Subspace,
    v: &Subspace,
    target: &Subspace,
) -> Result<TensorCheck> {
    let du = highest_weight_decomposition(t, u)?;
    let dv = highest_weight_decomposition(t, v)?;
    let dt = highest_weight_decomposition(t, target)?;
    let mut product = Vec::new();
    for &a in &du.highest_weights {
        for &b in &dv.highest_weights {
            product.extend(clebsch_gordan(a, b)?);
        }
    }
    product.sort_by(|a, b| b.cmp(a));
    let mut pool: BTreeMap<i64, usize> = BTreeMap::new();
    for m in &product {
        *pool.entry(*m).or_insert(0) += 1;
    }
    let contained = dt.highest_weights.iter().all(|m| match pool.get_mut(m) {
        Some(c) if *c > 0 => {
            *c -= 1;
            true
        }
        _ => false,
    });
    Ok(TensorCheck {
        u: du.highest_weights,
        v: dv.highest_weights,
        product,
        target: dt.highest_weights,
        contained,
    })
}

/// Eigenspace of `h` for the weight `w`.
pub fn weight_space(h: &Mat, w: &Rat) -> Result<Subspace> {
    let n = h.rows();
    Ok(h.try_sub(&Mat::identity(n).scale(w))?.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ivec;

    fn rats(xs: &[i64]) -> Vec<Rat> {
        ivec(xs)
    }

    #[test]
    fn stripping() {
        let s = strip_strings(&rats(&[1, -2, -1, 0, -3]));
        assert_eq!(s.highest, vec![1, 0]);
        assert_eq!(s.leftover, rats(&[-3, -2]));
        assert!(sl2_consistency(&[]));
        assert!(sl2_consistency(&rats(&[1, -1, 0, 1, -1, 2, 0, -2])));
        assert_eq!(
            decompose_weights(&rats(&[1, -1, 0, 1, -1, 2, 0, -2])).unwrap().highest_weights,
            vec![2, 1, 1, 0]
        );
        assert!(!sl2_consistency(&[Rat::new(1, 2), Rat::new(-1, 2)]));
        assert!(!sl2_consistency(&rats(&[2, 0])));
    }

    #[test]
    fn clebsch_gordan_values() {
        assert_eq!(clebsch_gordan(1, 1).unwrap(), vec![2, 0]);
        assert_eq!(clebsch_gordan(4, 0).unwrap(), vec![4]);
        assert_eq!(clebsch_gordan(1, 2).unwrap(), vec![3, 1]);
        assert!(clebsch_gordan(-1, 2).is_err());
    }

    #[test]
    fn defining_triple() {
        let e = Mat::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Mat::from_i64(&[&[0, 0], &[1, 0]]);
        let h = Mat::diag(&rats(&[1, -1]));
        let t = Sl2Triple::new(e.clone(), f.clone(), h.clone()).unwrap();
        let d = highest_weight_decomposition(&t, &Subspace::full(2)).unwrap();
        assert_eq!(d.highest_weights, vec![1]);
        assert_eq!(d.summary(), "V(1)");
        assert!(Sl2Triple::new(f, e, h).is_err());
        assert_eq!(weight_multiset(&Mat::zeros(3, 3)).unwrap(), rats(&[0, 0, 0]));
        let rot = Mat::from_i64(&[&[0, -1], &[1, 0]]);
        assert_eq!(weight_multiset(&rot), Err(Error::NonRationalEigenvalues));
    }
}
