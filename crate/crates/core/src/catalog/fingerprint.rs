use serde::Serialize;

use crate::dercalc::derivation_space;
use crate::exactmat::{Rat, Subspace};
use crate::liecore::LieAlg;

/// Isomorphism invariants of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub center: usize,
    pub derivations: usize,
    pub type_of: usize,
    pub nilradical: usize,
    pub nilradical_nilindex: usize,
    /// Eigenvalues of `ad x` for `x` outside a codimension-one nilradical,
    /// up to rescaling `x`; `None` when the codimension differs or the
    /// spectrum is not rational.
    pub outer_spectrum: Option<Vec<Rat>>,
}

pub fn invariant_fingerprint(a: &LieAlg) -> Fingerprint {
    let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
    let nil = a.nilradical();
    let nilindex = a.restrict(&nil).ok().and_then(|n| n.nilindex()).unwrap_or(0);
    Fingerprint {
        dim: a.dim(),
        derived_series: dims(a.derived_series()),
        lower_central_series: dims(a.lower_central_series()),
        center: a.center().dim(),
        derivations: derivation_space(a).dim(),
        type_of: a.type_of(),
        nilradical: nil.dim(),
        nilradical_nilindex: nilindex,
        outer_spectrum: outer_spectrum(a, &nil),
    }
}

// ad(x + n) has the spectrum of ad x for n in the nilradical, so only the
// scale of x is free; the lexicographically least rescaling is canonical.
fn outer_spectrum(a: &LieAlg, nil: &Subspace) -> Option<Vec<Rat>> {
    if a.dim() != nil.dim() + 1 {
        return None;
    }
    let x = *nil.non_pivots().first()?;
    let roots = a.ad_basis(x).char_poly().ok()?.rational_roots().ok()?;
    if !roots.splits {
        return None;
    }
    let scaled = |r: &Rat| {
        let mut v: Vec<Rat> = roots.roots.iter().map(|q| q / r).collect();
        v.sort();
        v
    };
    roots.roots.iter().filter(|r| !r.is_zero()).map(scaled).min().or(Some(roots.roots.clone()))
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "dim {}, derived {:?}, lower central {:?}, center {}, der {}, type {}, nilradical {} (nilindex {}), outer spectrum {}",
            self.dim,
            self.derived_series,
            self.lower_central_series,
            self.center,
            self.derivations,
            self.type_of,
            self.nilradical,
            self.nilradical_nilindex,
            self.outer_spectrum.as_ref().map_or("-".to_string(), |v| {
                v.iter().map(Rat::to_string).collect::<Vec<_>>().join(" ")
            })
        )
    }
}
