//! Multiplication tables as printed, transcribed term by term.

use crate::error::Result;
use crate::exactmat::Rat;
use crate::liecore::LieAlg;

use super::families::Params;

/// `[a, b] = sum c_k label_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub a: String,
    pub b: String,
    pub value: Vec<(String, Rat)>,
}

fn pr(a: &str, b: &str, terms: &[(&str, Rat)]) -> Product {
    Product {
        a: a.into(),
        b: b.into(),
        value: terms.iter().map(|(l, c)| (l.to_string(), c.clone())).collect(),
    }
}

fn one() -> Rat {
    Rat::one()
}

fn int(n: i64) -> Rat {
    Rat::from(n)
}

fn sl2_m() -> Vec<Product> {
    vec![
        pr("e", "f", &[("h", one())]),
        pr("h", "e", &[("e", int(2))]),
        pr("h", "f", &[("f", int(-2))]),
        pr("h", "v0", &[("v0", one())]),
        pr("h", "v1", &[("v1", int(-1))]),
        pr("e", "v1", &[("v0", one())]),
        pr("f", "v0", &[("v1", one())]),
    ]
}

fn sl2_n23() -> Vec<Product> {
    let mut v = sl2_m();
    v.extend([
        pr("h", "z0", &[("z0", one())]),
        pr("h", "z1", &[("z1", int(-1))]),
        pr("e", "z1", &[("z0", one())]),
        pr("f", "z0", &[("z1", one())]),
        pr("v0", "v1", &[("w0", one())]),
        pr("v0", "w0", &[("z0", one())]),
        pr("v1", "w0", &[("z1", one())]),
    ]);
    v
}

/// Printed products of a classified entry, or `None` when the entry has no printed table.
pub fn printed_table(name: &str, params: &Params) -> Option<Vec<Product>> {
    let alpha = params.get("alpha").cloned().unwrap_or_else(Rat::zero);
    let a1 = &alpha + one();
    let table = match name {
        "n_{2,1}" => vec![],
        "r_{2,1}^{1}" => vec![pr("x", "v0", &[("v0", one()), ("v1", one())]), pr("x", "v1", &[("v1", one())])],
        "r_{2,1}^{1,alpha}" => vec![pr("x", "v0", &[("v0", one())]), pr("x", "v1", &[("v1", alpha)])],
        "r_{2,1}^{2}" => vec![
            pr("x", "v0", &[("v0", one())]),
            pr("y", "v0", &[("v0", one())]),
            pr("x", "v1", &[("v1", one())]),
            pr("y", "v1", &[("v1", int(-1))]),
        ],
        "g_{2,1}" => sl2_m(),
        "g_{2,1}^{1}" => {
            let mut v = sl2_m();
            v.extend([pr("x", "v0", &[("v0", one())]), pr("x", "v1", &[("v1", one())])]);
            v
        }
        "n_{2,2}" => vec![pr("v0", "v1", &[("w0", one())])],
        "r_{2,2}^{1}" => vec![
            pr("x", "v0", &[("v0", one()), ("v1", one())]),
            pr("x", "v1", &[("v1", one())]),
            pr("x", "w0", &[("w0", int(2))]),
        ],
        "r_{2,2}^{1,alpha}" => vec![
            pr("x", "v0", &[("v0", one())]),
            pr("x", "v1", &[("v1", alpha)]),
            pr("x", "w0", &[("w0", a1)]),
        ],
        "r_{2,2}^{2}" => vec![
            pr("x", "v0", &[("v0", one())]),
            pr("y", "v0", &[("v0", one())]),
            pr("x", "v1", &[("v1", one())]),
            pr("y", "v1", &[("v1", int(-1))]),
            pr("x", "w0", &[("w0", int(2))]),
        ],
        "g_{2,2}" => sl2_m(),
        "g_{2,2}^{1}" => {
            let mut v = sl2_m();
            v.extend([
                pr("x", "v0", &[("v0", one())]),
                pr("x", "v1", &[("v1", one())]),
                pr("x", "w0", &[("w0", int(2))]),
            ]);
            v
        }
        "n_{2,3}" => vec![
            pr("v0", "v1", &[("w0", one())]),
            pr("v0", "w0", &[("z0", one())]),
            pr("v1", "w0", &[("z1", one())]),
        ],
        "r_{2,3}^{1}" => vec![
            pr("x", "v0", &[("v0", one()), ("v1", one())]),
            pr("x", "v1", &[("v1", one())]),
            pr("x", "w0", &[("w0", int(2))]),
            pr("x", "z0", &[("z0", int(3)), ("z1", one())]),
            pr("x", "z1", &[("z1", int(3))]),
        ],
        "r_{2,3}^{1,alpha}" => vec![
            pr("x", "v0", &[("v0", one())]),
            pr("x", "v1", &[("v1", alpha.clone())]),
            pr("x", "w0", &[("w0", a1)]),
            pr("x", "z0", &[("z0", &alpha + int(2))]),
            pr("x", "z1", &[("z1", &alpha * int(2) + one())]),
        ],
        "r_{2,3}^{2}" => vec![
            pr("x", "v0", &[("v0", one()), ("z1", one())]),
            pr("x", "w0", &[("w0", one())]),
            pr("x", "z0", &[("z0", int(2))]),
            pr("x", "z1", &[("z1", one())]),
        ],
        "r_{2,3}^{3}" => vec![
            pr("x", "v0", &[("v0", one()), ("z0", one())]),
            pr("x", "v1", &[("v1", int(-1))]),
            pr("x", "z0", &[("z0", one())]),
            pr("x", "z1", &[("z1", int(-1))]),
        ],
        "r_{2,3}^{4}" => vec![
            pr("x", "v0", &[("v0", one())]),
            pr("y", "v0", &[("v0", one())]),
            pr("x", "v1", &[("v1", one())]),
            pr("y", "v1", &[("v1", int(-1))]),
            pr("x", "w0", &[("w0", int(2))]),
            pr("x", "z0", &[("z0", int(3))]),
            pr("x", "z1", &[("z1", int(3))]),
            pr("y", "z0", &[("z0", one())]),
            pr("y", "z1", &[("z1", int(-1))]),
        ],
        "g_{2,3}" => sl2_n23(),
        "g_{2,3}^{1}" => {
            let mut v = sl2_n23();
            v.extend([
                pr("x", "v0", &[("v0", one())]),
                pr("x", "v1", &[("v1", one())]),
                pr("x", "w0", &[("w0", int(2))]),
                pr("x", "z0", &[("z0", int(3))]),
                pr("x", "z1", &[("z1", int(3))]),
            ]);
            v
        }
        _ => return None,
    };
    Some(table)
}

/// Levi tables for `t = 3, 4` exactly as printed, duplicate left-hand sides included.
pub fn printed_levi_tables() -> Vec<(&'static str, Vec<Product>)> {
    let mut g3 = sl2_m();
    g3.extend([
        pr("h", "z0", &[("z1", one())]),
        pr("h", "z0", &[("z0", int(-1))]),
        pr("e", "z1", &[("z0", one())]),
        pr("f", "z0", &[("z1", one())]),
        pr("v0", "v1", &[("w0", one())]),
        pr("v0", "w0", &[("z0", one())]),
        pr("v1", "w0", &[("z1", one())]),
    ]);
    let mut g4 = sl2_m();
    g4.extend([
        pr("h", "z0", &[("z1", one())]),
        pr("h", "z0", &[("z1", int(-1))]),
        pr("e", "z1", &[("z0", one())]),
        pr("f", "z0", &[("z1", one())]),
        pr("h", "x0", &[("x0", int(2))]),
        pr("h", "x2", &[("x2", int(-2))]),
        pr("e", "x1", &[("x0", int(2))]),
        pr("e", "x2", &[("x1", one())]),
        pr("f", "x0", &[("x1", one())]),
        pr("f", "x1", &[("x2", int(2))]),
        pr("v0", "v1", &[("w0", one())]),
        pr("v0", "w0", &[("z0", one())]),
        pr("v1", "w0", &[("z1", one())]),
        pr("v0", "z0", &[("x0", one())]),
        pr("v0", "z1", &[("x1", Rat::new(1, 2))]),
        pr("v1", "z0", &[("x1", Rat::new(1, 2))]),
        pr("v1", "z1", &[("x2", one())]),
    ]);
    vec![("g_{2,3}", g3), ("g_{2,4}", g4)]
}

/// One disagreement between a built table and a printed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub a: String,
    pub b: String,
    /// Printed value, `None` for a product the table leaves out.
    pub printed: Option<String>,
    pub computed: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.printed {
            Some(p) => write!(f, "[{}, {}]: printed {p}, computed {}", self.a, self.b, self.computed),
            None => write!(f, "[{}, {}]: not printed, computed {}", self.a, self.b, self.computed),
        }
    }
}

/// Compares `alg` with a printed table.
///
/// Printed products must agree. Products involving a basis element outside
/// `nilradical` that the table leaves out must vanish.
pub fn compare_printed(alg: &LieAlg, table: &[Product], nilradical: &[String]) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    let mut printed_pairs = Vec::new();
    for p in table {
        let (i, j) = (alg.idx(&p.a)?, alg.idx(&p.b)?);
        let terms: Vec<(&str, Rat)> = p.value.iter().map(|(l, c)| (l.as_str(), c.clone())).collect();
        let want = alg.vector(&terms)?;
        let got = alg.bracket_basis(i, j);
        if got != want.as_slice() {
            out.push(Mismatch {
                a: p.a.clone(),
                b: p.b.clone(),
                printed: Some(alg.format_vector(&want)),
                computed: alg.format_vector(got),
            });
        }
        printed_pairs.push((i.min(j), i.max(j)));
    }
    let n = alg.dim();
    for i in 0..n {
        for j in i + 1..n {
            let outer = !nilradical.iter().any(|l| l == alg.label(i)) || !nilradical.iter().any(|l| l == alg.label(j));
            let got = alg.bracket_basis(i, j);
            if outer && !printed_pairs.contains(&(i, j)) && got.iter().any(|c| !c.is_zero()) {
                out.push(Mismatch {
                    a: alg.label(i).into(),
                    b: alg.label(j).into(),
                    printed: None,
                    computed: alg.format_vector(got),
                });
            }
        }
    }
    Ok(out)
}
