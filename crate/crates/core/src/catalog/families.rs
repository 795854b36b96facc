//! Catalog entries and their constructions from `n_{2,t}`.

use std::collections::BTreeMap;

use crate::dercalc::sl2_derivations;
use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};
use crate::freenilp::build_free_nilpotent;
use crate::liecore::{sl2, LieAlg};

use super::matrices::der_matrix;

/// Parameter assignment such as `alpha = 1/2`.
pub type Params = BTreeMap<String, Rat>;

/// Shape of an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `n_{2,t}` itself.
    Nilpotent,
    /// Extension of `n_{2,t}` by one or two outer derivations.
    Solvable,
    /// `sl2` acting on `n_{2,t}`, possibly with one more outer derivation.
    Levi,
    /// `sl2` added as a direct summand to another entry.
    SemisimpleSum,
}

/// Checkable claims about an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claims {
    pub dim: usize,
    /// Labels spanning the nilradical.
    pub nilradical: Vec<String>,
    /// Nilindex of the nilradical.
    pub nilindex: usize,
    pub solvable: bool,
    /// Highest weights of the nilradical under the `sl2` spanned by `e, f, h`.
    pub sl2: Option<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub kind: Kind,
    /// Nilindex of the free nilpotent nilradical.
    pub t: usize,
    pub claims: Claims,
}

impl CatalogEntry {
    /// Parameter assignments the audit runs on.
    pub fn samples(&self) -> Vec<Params> {
        if self.params.is_empty() {
            return vec![Params::new()];
        }
        alpha_samples()
            .into_iter()
            .map(|a| Params::from([(self.params[0].to_string(), a)]))
            .collect()
    }

    pub fn build(&self, params: &Params) -> Result<LieAlg> {
        for p in self.params {
            if !params.contains_key(*p) {
                return Err(Error::MissingParameter { entry: self.name.into(), param: p.to_string() });
            }
        }
        build_named(self.name, params)
    }
}

/// `{-1, 0, 1/2, 1, 2, 3}`.
pub fn alpha_samples() -> Vec<Rat> {
    vec![Rat::from(-1), Rat::zero(), Rat::new(1, 2), Rat::one(), Rat::from(2), Rat::from(3)]
}

const NIL_LABELS: [&str; 5] = ["v0", "v1", "w0", "z0", "z1"];

fn nil_dim(t: usize) -> usize {
    [2, 3, 5][t - 1]
}

fn claims(t: usize, extra: usize, solvable: bool, sl2: Option<&[i64]>) -> Claims {
    let n = nil_dim(t);
    let levi = if sl2.is_some() { 3 } else { 0 };
    Claims {
        dim: n + extra + levi,
        nilradical: NIL_LABELS[..n].iter().map(|s| s.to_string()).collect(),
        nilindex: t,
        solvable,
        sl2: sl2.map(<[i64]>::to_vec),
    }
}

fn decomposition(t: usize) -> &'static [i64] {
    match t {
        1 => &[1],
        2 => &[1, 0],
        _ => &[1, 1, 0],
    }
}

/// Every entry, in catalog order.
pub fn entries() -> Vec<CatalogEntry> {
    use Kind::*;
    let mut out = Vec::new();
    let names: [[&'static str; 6]; 3] = [
        ["n_{2,1}", "r_{2,1}^{1}", "r_{2,1}^{1,alpha}", "r_{2,1}^{2}", "g_{2,1}", "g_{2,1}^{1}"],
        ["n_{2,2}", "r_{2,2}^{1}", "r_{2,2}^{1,alpha}", "r_{2,2}^{2}", "g_{2,2}", "g_{2,2}^{1}"],
        ["n_{2,3}", "r_{2,3}^{1}", "r_{2,3}^{1,alpha}", "r_{2,3}^{4}", "g_{2,3}", "g_{2,3}^{1}"],
    ];
    for (i, row) in names.iter().enumerate() {
        let t = i + 1;
        let sl = Some(decomposition(t));
        let mut push = |name, params: &'static [&'static str], kind, claims| {
            out.push(CatalogEntry { name, params, kind, t, claims });
        };
        push(row[0], &[], Nilpotent, claims(t, 0, true, None));
        push(row[1], &[], Solvable, claims(t, 1, true, None));
        push(row[2], &["alpha"], Solvable, claims(t, 1, true, None));
        if t == 3 {
            push("r_{2,3}^{2}", &[], Solvable, claims(t, 1, true, None));
            push("r_{2,3}^{3}", &[], Solvable, claims(t, 1, true, None));
        }
        push(row[3], &[], Solvable, claims(t, 2, true, None));
        push(row[4], &[], Levi, claims(t, 0, false, sl));
        push(row[5], &[], Levi, claims(t, 1, false, sl));
    }
    out.push(CatalogEntry {
        name: "g_{2,4}",
        params: &[],
        kind: Kind::Levi,
        t: 4,
        claims: Claims {
            dim: 11,
            nilradical: ["v0", "v1", "w0", "z0", "z1", "x0", "x1", "x2"].map(String::from).to_vec(),
            nilindex: 4,
            solvable: false,
            sl2: Some(vec![2, 1, 1, 0]),
        },
    });
    for (name, base_extra) in [("sl2+n_{2,3}", 0), ("sl2+r_{2,3}^{1}", 1), ("sl2+g_{2,3}", 3)] {
        let c = claims(3, base_extra, false, Some(&[0, 0, 0, 0, 0]));
        out.push(CatalogEntry { name, params: &[], kind: Kind::SemisimpleSum, t: 3, claims: c });
    }
    out
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.into()))
}

/// Assembled table of a catalog entry.
pub fn algebra_by_name(name: &str, params: &Params) -> Result<LieAlg> {
    entry(name)?.build(params)
}

fn alpha(params: &Params) -> Result<Rat> {
    params.get("alpha").cloned().ok_or_else(|| Error::InvalidArgument("alpha".into()))
}

fn u_len(t: usize) -> usize {
    [3, 5, 9][t - 1]
}

/// `u` with the given 1-based entries set.
fn u_vec(t: usize, set: &[(usize, Rat)]) -> Vec<Rat> {
    let mut u = vec![Rat::zero(); u_len(t)];
    for (k, x) in set {
        u[k - 1] = x.clone();
    }
    u
}

fn free(t: usize) -> Result<LieAlg> {
    Ok(build_free_nilpotent(t)?.alg)
}

/// Jordan block derivation `D_{(0,0,1,...)}^1`.
pub fn jordan_derivation(t: usize) -> Result<Mat> {
    der_matrix(t, &u_vec(t, &[(3, Rat::one())]), &Rat::one())
}

/// `D_{((1-alpha)/2, 0, ...)}^{(1+alpha)/2}`, diagonal `1, alpha, 1+alpha, ...`.
pub fn diagonal_derivation(t: usize, alpha: &Rat) -> Result<Mat> {
    let half = Rat::new(1, 2);
    let u = u_vec(t, &[(1, (Rat::one() - alpha) * &half)]);
    der_matrix(t, &u, &((Rat::one() + alpha) * half))
}

/// The identity extended to `n_{2,t}`.
pub fn identity_derivation(t: usize) -> Result<Mat> {
    der_matrix(t, &u_vec(t, &[]), &Rat::one())
}

/// `D_{(1,0,...)}^0`, the extension of `diag(1, -1)`.
pub fn h_derivation(t: usize) -> Result<Mat> {
    der_matrix(t, &u_vec(t, &[(1, Rat::one())]), &Rat::zero())
}

/// `D_{u5}^{1/2}` with `u5 = (1/2,0,0,0,0,0,0,1,0)`.
pub fn u5_derivation() -> Result<Mat> {
    der_matrix(3, &u_vec(3, &[(1, Rat::new(1, 2)), (8, Rat::one())]), &Rat::new(1, 2))
}

/// `D_{u3}^0` with `u3 = (1,0,0,0,0,1,0,0,0)`.
pub fn u3_derivation() -> Result<Mat> {
    der_matrix(3, &u_vec(3, &[(1, Rat::one()), (6, Rat::one())]), &Rat::zero())
}

fn one_extension(t: usize, d: Mat) -> Result<LieAlg> {
    free(t)?.extend(&[("x", d)], &[])
}

fn two_extension(t: usize) -> Result<LieAlg> {
    free(t)?.extend(&[("x", identity_derivation(t)?), ("y", h_derivation(t)?)], &[])
}

/// `m` padded with `extra` zero rows and columns.
fn pad_mat(m: &Mat, extra: usize) -> Mat {
    let n = m.rows();
    Mat::from_fn(n + extra, n + extra, |i, j| {
        if i < n && j < n {
            m[(i, j)].clone()
        } else {
            Rat::zero()
        }
    })
}

/// `sl2 ⋉ a`, where `a` contains `n_{2,t}` as its first basis block.
fn levi_extension(t: usize, a: &LieAlg) -> Result<LieAlg> {
    let g = build_free_nilpotent(t)?;
    let extra = a.dim() - g.dim();
    let action: Vec<Mat> = sl2_derivations(&g)?.iter().map(|m| pad_mat(m, extra)).collect();
    LieAlg::semidirect(&sl2(), a, &action)
}

fn build_named(name: &str, params: &Params) -> Result<LieAlg> {
    let parse_t = |s: &str| -> Option<usize> {
        let i = s.find("_{2,")? + 4;
        s[i..].chars().next()?.to_digit(10).map(|d| d as usize)
    };
    if let Some(rest) = name.strip_prefix("sl2+") {
        let inner = build_named(rest, params)?;
        return LieAlg::direct_sum(&sl2(), &inner);
    }
    let t = parse_t(name).ok_or_else(|| Error::UnknownEntry(name.into()))?;
    let suffix = &name[name.find('}').map_or(name.len(), |i| i + 1)..];
    let head = &name[..1];
    match (head, suffix) {
        ("n", "") => free(t),
        ("r", "^{1}") => one_extension(t, jordan_derivation(t)?),
        ("r", "^{1,alpha}") => one_extension(t, diagonal_derivation(t, &alpha(params)?)?),
        ("r", "^{2}") if t < 3 => two_extension(t),
        ("r", "^{2}") => one_extension(3, u5_derivation()?),
        ("r", "^{3}") if t == 3 => one_extension(3, u3_derivation()?),
        ("r", "^{4}") if t == 3 => two_extension(3),
        ("g", "") => levi_extension(t, &free(t)?),
        ("g", "^{1}") => levi_extension(t, &one_extension(t, identity_derivation(t)?)?),
        _ => Err(Error::UnknownEntry(name.into())),
    }
}
