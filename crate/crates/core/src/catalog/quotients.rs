//! Type-2 nilpotent quotients of `n_{2,3}` and `n_{2,4}`.

use crate::error::Result;
use crate::exactmat::{Rat, Subspace};
use crate::freenilp::build_free_nilpotent;
use crate::liecore::LieAlg;

use super::families::Params;

#[derive(Clone, Debug)]
pub struct QuotientCase {
    /// Family label, e.g. `n_{2,4}/<x1+alpha x2>`.
    pub family: &'static str,
    pub params: Params,
    pub t: usize,
    /// Ideal generators as label combinations.
    pub ideal: Vec<Vec<(&'static str, Rat)>>,
    pub dim: usize,
    pub nilindex: usize,
}

impl QuotientCase {
    pub fn base(&self) -> Result<LieAlg> {
        Ok(build_free_nilpotent(self.t)?.alg)
    }

    pub fn ideal_in(&self, a: &LieAlg) -> Result<Subspace> {
        let vs: Vec<Vec<Rat>> = self.ideal.iter().map(|terms| a.vector(terms)).collect::<Result<_>>()?;
        Subspace::span(a.dim(), &vs)
    }

    pub fn build(&self) -> Result<LieAlg> {
        let a = self.base()?;
        a.quotient(&self.ideal_in(&a)?)
    }
}

/// `{0, 1, -2}`.
pub fn quotient_samples() -> Vec<Rat> {
    vec![Rat::zero(), Rat::one(), Rat::from(-2)]
}

type Generators = Vec<Vec<(&'static str, Rat)>>;
type Family = (&'static str, usize, bool, fn(&Rat, &Rat) -> Generators);

fn one() -> Rat {
    Rat::one()
}

fn families() -> Vec<Family> {
    vec![
        ("n_{2,3}/<z0+alpha z1>", 3, false, |a, _| vec![vec![("z0", one()), ("z1", a.clone())]]),
        ("n_{2,3}/<z1>", 3, false, |_, _| vec![vec![("z1", one())]]),
        ("n_{2,4}/<x0+alpha x1+beta x2>", 4, true, |a, b| {
            vec![vec![("x0", one()), ("x1", a.clone()), ("x2", b.clone())]]
        }),
        ("n_{2,4}/<x1+alpha x2>", 4, false, |a, _| vec![vec![("x1", one()), ("x2", a.clone())]]),
        ("n_{2,4}/<x2>", 4, false, |_, _| vec![vec![("x2", one())]]),
        ("n_{2,4}/<x0+alpha x2, x1+beta x2>", 4, true, |a, b| {
            vec![vec![("x0", one()), ("x2", a.clone())], vec![("x1", one()), ("x2", b.clone())]]
        }),
        ("n_{2,4}/<x0+alpha x1, x2>", 4, false, |a, _| {
            vec![vec![("x0", one()), ("x1", a.clone())], vec![("x2", one())]]
        }),
        ("n_{2,4}/<x1, x2>", 4, false, |_, _| vec![vec![("x1", one())], vec![("x2", one())]]),
        ("n_{2,4}/<z1+alpha x0, x1, x2>", 4, false, |a, _| {
            vec![vec![("z1", one()), ("x0", a.clone())], vec![("x1", one())], vec![("x2", one())]]
        }),
        ("n_{2,4}/<z0+alpha z1+beta x2, 2x0+alpha x1, x1+2alpha x2>", 4, true, |a, b| {
            vec![
                vec![("z0", one()), ("z1", a.clone()), ("x2", b.clone())],
                vec![("x0", Rat::from(2)), ("x1", a.clone())],
                vec![("x1", one()), ("x2", a * Rat::from(2))],
            ]
        }),
    ]
}

/// Every quotient family at every sample.
pub fn quotient_cases() -> Vec<QuotientCase> {
    let mut out = Vec::new();
    for (family, t, two_params, gens) in families() {
        let uses_alpha = family.contains("alpha");
        let alphas = if uses_alpha { quotient_samples() } else { vec![Rat::zero()] };
        let betas = if two_params { quotient_samples() } else { vec![Rat::zero()] };
        for a in &alphas {
            for b in &betas {
                let ideal = gens(a, b);
                let base_dim = [0, 2, 3, 5, 8][t];
                let mut params = Params::new();
                if uses_alpha {
                    params.insert("alpha".into(), a.clone());
                }
                if two_params {
                    params.insert("beta".into(), b.clone());
                }
                out.push(QuotientCase {
                    family,
                    params,
                    t,
                    dim: base_dim - ideal.len(),
                    nilindex: t,
                    ideal,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_quotients_have_type_two() {
        let cases = quotient_cases();
        assert_eq!(cases.len(), 3 + 1 + 9 + 3 + 1 + 9 + 3 + 1 + 3 + 9);
        for c in cases {
            let q = c.build().unwrap_or_else(|e| panic!("{} {:?}: {e}", c.family, c.params));
            assert_eq!(q.type_of(), 2);
            assert_eq!(q.dim(), c.dim);
            assert_eq!(q.nilindex(), Some(c.nilindex));
        }
    }
}
