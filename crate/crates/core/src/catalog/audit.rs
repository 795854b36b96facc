//! The classification audit and its negative controls.

use std::collections::BTreeMap;

use crate::dercalc::{
    centralizer_in, derivation_space, graded_components, inner_derivations, is_automorphism,
    pencil_has_nilpotent, DerSpace,
};
use crate::error::Result;
use crate::exactmat::{Mat, Rat, Subspace};
use crate::freenilp::{build_free_nilpotent, witt_dimension, witt_dimension_as_printed};
use crate::liecore::LieAlg;
use crate::sl2rep::{highest_weight_decomposition, strip_strings, Sl2Triple};

use super::conjugation::{conjugation_outcomes, ConjugationOutcome};
use super::families::{diagonal_derivation, entries, jordan_derivation, u3_derivation, u5_derivation};
use super::fingerprint::invariant_fingerprint;
use super::matrices::{aut_matrix_n22, der_matrix};
use super::printed::{compare_printed, printed_levi_tables, printed_table};
use super::quotients::quotient_cases;
use super::report::{AuditReport, Section, Status};
use super::{algebra_by_name, CatalogEntry, Kind, Params};

fn fmt_params(p: &Params) -> BTreeMap<String, String> {
    p.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

fn coordinate_span(a: &LieAlg, labels: &[String]) -> Result<Subspace> {
    let idx: Vec<usize> = labels.iter().map(|l| a.idx(l)).collect::<Result<_>>()?;
    Ok(Subspace::coordinate(a.dim(), &idx))
}

fn is_levi_label(l: &str) -> bool {
    matches!(l.trim_end_matches('\''), "e" | "f" | "h")
}

fn same_table(a: &LieAlg, b: &LieAlg) -> bool {
    a.labels() == b.labels()
        && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
}

fn fmt_defects(a: &LieAlg) -> String {
    let d = a.jacobi_defect();
    if d.is_empty() {
        return "no defect".into();
    }
    let parts: Vec<String> = d
        .triples
        .iter()
        .map(|t| {
            format!("({}, {}, {}) -> {}", a.label(t.i), a.label(t.j), a.label(t.k), a.format_vector(&t.residual))
        })
        .collect();
    parts.join("; ")
}

/// All checks for one entry at one parameter assignment.
pub fn audit_entry(e: &CatalogEntry, params: &Params) -> Section {
    let mut s = Section::new(e.name);
    s.params = fmt_params(params);
    if let Err(err) = audit_entry_into(e, params, &mut s) {
        s.expect("build", false, err.to_string());
    }
    s
}

fn audit_entry_into(e: &CatalogEntry, params: &Params, s: &mut Section) -> Result<()> {
    let a = e.build(params)?;
    s.expect("jacobi", a.is_lie(), fmt_defects(&a));

    if let Some(table) = printed_table(e.name, params) {
        let mism = compare_printed(&a, &table, &e.claims.nilradical)?;
        let witness = if mism.is_empty() {
            format!("{} printed products agree, all other outer products vanish", table.len())
        } else {
            mism.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
        };
        s.expect("printed-table", mism.is_empty(), witness);
    }

    let nil = coordinate_span(&a, &e.claims.nilradical)?;
    let ideal = a.is_ideal(&nil)?;
    let restricted = if ideal { Some(a.restrict(&nil)?) } else { None };
    let nilindex = restricted.as_ref().and_then(LieAlg::nilindex);
    let computed = a.nilradical();
    s.expect(
        "nilradical",
        ideal && nilindex == Some(e.claims.nilindex) && computed == nil,
        format!(
            "claimed span({}) ideal={ideal}, nilindex {}, computed nilradical dim {}{}",
            e.claims.nilradical.join(","),
            nilindex.map_or("-".into(), |k| k.to_string()),
            computed.dim(),
            if computed == nil { " (equal)" } else { " (different)" }
        ),
    );
    if let Some(r) = &restricted {
        s.expect("nilradical-type", r.type_of() == 2, format!("type {}", r.type_of()));
    }

    let outer: Vec<usize> = (0..a.dim())
        .filter(|&i| !e.claims.nilradical.iter().any(|l| l == a.label(i)) && !is_levi_label(a.label(i)))
        .collect();
    if outer.is_empty() {
        s.push("pencil", Status::Pass, "no outer derivations");
    } else {
        let mats: Vec<Mat> = outer.iter().map(|&i| nil.restrict(&a.ad_basis(i))).collect::<Result<_>>()?;
        let names: Vec<&str> = outer.iter().map(|&i| a.label(i)).collect();
        let has = pencil_has_nilpotent(&mats)?;
        s.expect(
            "pencil",
            !has,
            format!(
                "span of ad {} on the nilradical {} a nonzero nilpotent",
                names.join(", ad "),
                if has { "contains" } else { "has no" }
            ),
        );
    }

    s.expect("dim", a.dim() == e.claims.dim, format!("dim {} (claimed {})", a.dim(), e.claims.dim));
    let solvable = a.is_solvable();
    s.expect("solvable", solvable == e.claims.solvable, format!("solvable={solvable}"));
    let nilpotent = a.is_nilpotent();
    s.expect("nilpotent", nilpotent == (e.kind == Kind::Nilpotent), format!("nilpotent={nilpotent}"));

    if let Some(hw) = &e.claims.sl2 {
        let v = |l: &str| a.idx(l).map(|i| a.basis_vector(i));
        let triple = Sl2Triple::from_algebra(&a, &v("e")?, &v("f")?, &v("h")?);
        match triple {
            Ok(t) => {
                let d = highest_weight_decomposition(&t, &nil)?;
                s.expect(
                    "sl2",
                    &d.highest_weights == hw,
                    format!("nilradical = {} (weights {:?})", d.summary(), d.weights),
                );
            }
            Err(err) => s.expect("sl2", false, err.to_string()),
        }
    }

    if e.kind == Kind::SemisimpleSum {
        let cross = (0..3).all(|i| (3..a.dim()).all(|j| a.bracket_basis(i, j).iter().all(Rat::is_zero)));
        s.expect("direct-sum", cross, "brackets between the sl2 summand and the rest vanish");
    }
    Ok(())
}

pub fn audit_entries() -> Vec<Section> {
    let mut out = Vec::new();
    for e in entries() {
        for p in e.samples() {
            out.push(audit_entry(&e, &p));
        }
    }
    out
}

pub fn audit_quotients() -> Vec<Section> {
    quotient_cases()
        .into_iter()
        .map(|c| {
            let mut s = Section::new(c.family);
            s.params = fmt_params(&c.params);
            let mut run = || -> Result<()> {
                let base = c.base()?;
                let ideal = c.ideal_in(&base)?;
                s.expect("ideal", base.is_ideal(&ideal)?, format!("dim {}", ideal.dim()));
                let q = base.quotient(&ideal)?;
                s.expect("jacobi", q.is_lie(), fmt_defects(&q));
                s.expect("dim", q.dim() == c.dim, format!("dim {}", q.dim()));
                s.expect("type", q.type_of() == 2, format!("type {}", q.type_of()));
                let k = q.nilindex();
                s.expect("nilindex", k == Some(c.nilindex), format!("nilindex {k:?}"));
                Ok(())
            };
            if let Err(err) = run() {
                s.expect("build", false, err.to_string());
            }
            s
        })
        .collect()
}

/// Free nilpotent dimensions, derivation algebra dimensions and the weight law.
pub fn audit_free_nilpotent() -> Result<Vec<Section>> {
    let mut out = Vec::new();
    for t in 1..=6 {
        let g = build_free_nilpotent(t)?;
        let mut s = Section::new(format!("n_{{2,{t}}}"));
        let witt: Vec<usize> = (1..=t).map(witt_dimension).collect::<Result<_>>()?;
        s.expect(
            "graded-dims",
            g.component_dims() == witt,
            format!("components {:?}, Witt {:?}", g.component_dims(), witt),
        );
        s.expect("jacobi", g.alg.is_lie(), fmt_defects(&g.alg));
        s.expect("dim", g.dim() == witt.iter().sum::<usize>(), format!("dim {}", g.dim()));
        if t <= 4 {
            let gd = graded_components(&g)?;
            let mut sum = Subspace::zero(g.dim() * g.dim());
            for c in &gd.components {
                sum = sum.sum(c)?;
            }
            s.expect(
                "derivations",
                sum == gd.space.space,
                format!("dim Der {}, graded {:?}", gd.space.dim(), gd.component_dims()),
            );
            s.expect("weight-law", gd.weight_law_holds(), "[I, d] = (k-1) d on every graded basis derivation");
            let inner = inner_derivations(&g.alg);
            s.expect(
                "inner",
                inner.dim() == g.dim() - g.alg.center().dim(),
                format!("dim Inner {}, center {}", inner.dim(), g.alg.center().dim()),
            );
        }
        out.push(s);
    }
    Ok(out)
}

/// Centralizer of the Levi part of `Der n_{2,t}`.
pub fn levi_centralizer(t: usize) -> Result<(Subspace, Subspace)> {
    let g = build_free_nilpotent(t)?;
    let gd = graded_components(&g)?;
    let c = centralizer_in(&gd.space, &gd.sl2)?;
    let mut expected = vec![gd.identity.vectorize()];
    if t >= 3 {
        let w0 = g.alg.basis_vector(g.alg.idx("w0")?);
        expected.push(g.alg.ad(&w0)?.vectorize());
    }
    Ok((c, Subspace::span(g.dim() * g.dim(), &expected)?))
}

pub fn audit_levi_centralizers() -> Result<Section> {
    let mut s = Section::new("levi-centralizer");
    for t in 1..=4 {
        let (c, want) = levi_centralizer(t)?;
        let basis = if t >= 3 { "I, ad w0" } else { "I" };
        s.expect(&format!("t={t}"), c == want, format!("dim {}, equals span({basis}): {}", c.dim(), c == want));
    }
    Ok(s)
}

/// The four normal forms of one outer derivation of `n_{2,3}`.
pub fn audit_canonical_derivations() -> Result<Section> {
    let mut s = Section::new("n_{2,3} outer derivations");
    let g = build_free_nilpotent(3)?;
    let a = &g.alg;
    let alpha = |x: Rat| Params::from([("alpha".to_string(), x)]);
    let mut cases = vec![
        ("D_u1^1", jordan_derivation(3)?, "r_{2,3}^{1}", Params::new()),
        ("D_u3^0", u3_derivation()?, "r_{2,3}^{3}", Params::new()),
        ("D_u5^(1/2)", u5_derivation()?, "r_{2,3}^{2}", Params::new()),
    ];
    for x in super::families::alpha_samples() {
        cases.push(("D_u6", diagonal_derivation(3, &x)?, "r_{2,3}^{1,alpha}", alpha(x)));
    }
    for (label, d, name, p) in cases {
        let check = format!("{label} {}", fmt_params(&p).values().cloned().collect::<Vec<_>>().join(","));
        let ext = a.extend(&[("x", d.clone())], &[])?;
        let ok = a.is_derivation(&d)? && !d.is_nilpotent()? && same_table(&ext, &algebra_by_name(name, &p)?);
        s.expect(check.trim_end(), ok, format!("non-nilpotent derivation giving {name}"));
    }
    let gd = graded_components(&g)?;
    let der1 = DerSpace::new(5, gd.components[0].clone());
    for x in [Rat::zero(), Rat::from(2), Rat::from(-1)] {
        let d = diagonal_derivation(3, &x)?;
        let c = centralizer_in(&der1, std::slice::from_ref(&d))?;
        let want = Subspace::span(25, &[gd.identity.vectorize(), d.vectorize()])?;
        s.expect(
            &format!("centralizer alpha={x}"),
            c == want,
            format!("centralizer of D_u6 in Der_1 has dim {}, spanned by I and D: {}", c.dim(), c == want),
        );
    }
    Ok(s)
}

fn describe(o: &ConjugationOutcome) -> &'static str {
    match (o.printed_inverse_first, o.printed_inverse_last) {
        (true, _) => "printed parameters give phi^{-1} D phi = normal form",
        (false, true) => "printed parameters give phi D phi^{-1} = normal form, not phi^{-1} D phi",
        (false, false) => "printed parameters reach the normal form in neither order",
    }
}

pub fn audit_conjugations() -> Result<Vec<Section>> {
    let mut by_family: BTreeMap<&str, Section> = BTreeMap::new();
    for o in conjugation_outcomes()? {
        let s = by_family.entry(o.family).or_insert_with(|| Section::new(format!("conjugation {}", o.family)));
        let ok = o.automorphisms && o.corrected;
        if o.family.starts_with("two-extension") {
            s.expect(&o.sample, ok && o.printed_holds(), describe(&o));
        } else {
            s.expect(&o.sample, ok, "automorphism reaching the normal form as phi^{-1} D phi");
            s.push(&format!("{} printed", o.sample), Status::Note, describe(&o));
        }
    }
    Ok(by_family.into_values().collect())
}

pub fn audit_fingerprints() -> Result<Section> {
    let mut s = Section::new("fingerprints");
    let none = Params::new();
    let names = ["r_{2,3}^{1}", "r_{2,3}^{2}", "r_{2,3}^{3}"];
    let fps: Vec<_> = names.iter().map(|n| algebra_by_name(n, &none).map(|a| invariant_fingerprint(&a))).collect::<Result<_>>()?;
    for i in 0..3 {
        for j in i + 1..3 {
            s.expect(
                &format!("{} vs {}", names[i], names[j]),
                fps[i] != fps[j],
                format!("{} | {}", fps[i], fps[j]),
            );
        }
    }
    let alpha = |x: i64| Params::from([("alpha".to_string(), Rat::from(x))]);
    let f0 = invariant_fingerprint(&algebra_by_name("r_{2,3}^{1,alpha}", &alpha(0))?);
    let f2 = invariant_fingerprint(&algebra_by_name("r_{2,3}^{1,alpha}", &alpha(2))?);
    if f0 != f2 {
        s.push("alpha=0 vs alpha=2", Status::Pass, format!("{f0} | {f2}"));
    } else {
        s.push("alpha=0 vs alpha=2", Status::Note, format!("indistinguishable by fingerprint: {f0}"));
    }
    // reversed basis order
    let a = algebra_by_name("r_{2,3}^{4}", &none)?;
    let n = a.dim();
    let basis: Vec<Vec<Rat>> = (0..n).rev().map(|i| a.basis_vector(i)).collect();
    let labels = (0..n).rev().map(|i| a.label(i).to_string()).collect();
    let b = a.change_basis(&basis, labels)?;
    s.expect("relabeled copy", invariant_fingerprint(&a) == invariant_fingerprint(&b), "reversed basis gives the same fingerprint");
    Ok(s)
}

/// Readings of the printed text that needed resolving, reported as notes.
pub fn annotations() -> Result<Section> {
    let mut s = Section::new("printed-text");
    let none = Params::new();
    for (name, table) in printed_levi_tables() {
        let a = algebra_by_name(name, &none)?;
        let nil: Vec<String> = a.labels().iter().filter(|l| !is_levi_label(l)).cloned().collect();
        let mism = compare_printed(&a, &table, &nil)?;
        let text: Vec<String> = mism.iter().map(ToString::to_string).collect();
        s.push(&format!("{name} levi table"), Status::Note, format!("h-action forced by extension: {}", text.join("; ")));
    }

    let n23 = build_free_nilpotent(3)?.alg;
    for (name, unknown) in [("r_{2,3}^{2}", "v1"), ("r_{2,3}^{3}", "w0")] {
        let a = algebra_by_name(name, &none)?;
        let table = printed_table(name, &none).expect("printed");
        let j = n23.idx(unknown)?;
        let mut known = Vec::new();
        for l in ["v0", "v1", "w0", "z0", "z1"] {
            if l == unknown {
                continue;
            }
            let col = table
                .iter()
                .find(|p| p.a == "x" && p.b == l)
                .map(|p| n23.vector(&p.value.iter().map(|(k, c)| (k.as_str(), c.clone())).collect::<Vec<_>>()))
                .transpose()?
                .unwrap_or_else(|| vec![Rat::zero(); 5]);
            known.push((n23.idx(l)?, col));
        }
        let (freedom, zero_ok) = column_freedom(&n23, &known, j)?;
        let x = a.basis_vector(a.idx("x")?);
        let built = a.bracket(&x, &a.basis_vector(a.idx(unknown)?))?;
        s.push(
            &format!("{name} omitted [x,{unknown}]"),
            Status::Note,
            format!(
                "derivation law leaves a {freedom}-dimensional family for [x,{unknown}], zero allowed: {zero_ok}; table uses {}",
                a.format_vector(&built)
            ),
        );
    }

    let (mut inner_ok, mut stray_inner) = (true, false);
    let inner = inner_derivations(&n23);
    for (a4, a5, a6) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -1, 3)] {
        let u = |last: i64| [0, 0, 0, a4, a5, a6, 0, 0, last].map(Rat::from).to_vec();
        inner_ok &= inner.contains(&der_matrix(3, &u(a6), &Rat::zero())?)?;
        if a6 != 0 {
            stray_inner |= inner.contains(&der_matrix(3, &u(0), &Rat::zero())?)?;
        }
    }
    s.push(
        "inner n_{2,3} index set",
        Status::Note,
        format!(
            "the inner matrix equals D_u^0 with u=(0,0,0,a4,a5,a6,0,0,a6): {inner_ok}; with last entry 0 and a6 != 0 it is inner: {stray_inner}"
        ),
    );

    let n22 = build_free_nilpotent(2)?.alg;
    let samples = [[1, 0, 0, 1, 5, 7], [2, 1, 1, 1, -3, 4], [0, 1, -1, 0, 0, 2]];
    let all = samples.iter().try_fold(true, |acc, v| {
        aut_matrix_n22(&v.map(Rat::from)).map(|m| acc && is_automorphism(&n22, &m))
    })?;
    s.push(
        "aut n_{2,2} parameters",
        Status::Note,
        format!("the automorphism matrix needs six free entries a1..a6; sampled instances are automorphisms: {all}"),
    );
    Ok(s)
}

/// Dimension of the set of admissible values of column `j` among derivations
/// whose other columns are `known`, and whether zero is admissible.
fn column_freedom(a: &LieAlg, known: &[(usize, Vec<Rat>)], j: usize) -> Result<(usize, bool)> {
    let n = a.dim();
    let basis = derivation_space(a).basis();
    let m = basis.len();
    let solve = |extra: Option<&[Rat]>| -> Result<Option<(Subspace, Subspace)>> {
        let mut rows = Vec::new();
        let mut cons: Vec<(usize, &[Rat])> = known.iter().map(|(k, v)| (*k, v.as_slice())).collect();
        if let Some(v) = extra {
            cons.push((j, v));
        }
        for (k, col) in cons {
            for r in 0..n {
                let mut row: Vec<Rat> = basis.iter().map(|b| b[(r, k)].clone()).collect();
                row.push(-&col[r]);
                rows.push(row);
            }
        }
        let ker = Mat::from_rows(rows)?.kernel();
        if !ker.basis_vectors().iter().any(|v| !v[m].is_zero()) {
            return Ok(None);
        }
        let homog: Vec<Vec<Rat>> = ker.basis_vectors().into_iter().filter(|v| v[m].is_zero()).collect();
        let values: Vec<Vec<Rat>> = homog
            .iter()
            .map(|c| (0..n).map(|r| (0..m).map(|i| &c[i] * &basis[i][(r, j)]).sum()).collect())
            .collect();
        Ok(Some((ker, Subspace::span(n, &values)?)))
    };
    let freedom = solve(None)?.map_or(0, |(_, v)| v.dim());
    let zero_ok = solve(Some(&vec![Rat::zero(); n]))?.is_some();
    Ok((freedom, zero_ok))
}

/// Every positive check, plus notes on the printed text.
pub fn audit_all() -> Result<AuditReport> {
    let mut r = AuditReport::new("classification audit");
    r.sections.extend(audit_free_nilpotent()?);
    r.sections.extend(audit_entries());
    r.sections.extend(audit_quotients());
    r.sections.push(audit_canonical_derivations()?);
    r.sections.extend(audit_conjugations()?);
    r.sections.push(audit_levi_centralizers()?);
    r.sections.push(audit_fingerprints()?);
    r.sections.push(annotations()?);
    Ok(r)
}

/// [`audit_all`] plus a check of the stored tables under `dir`.
pub fn audit_all_with_data(dir: &std::path::Path) -> Result<AuditReport> {
    let mut r = audit_all()?;
    r.sections.push(super::data::verify(dir)?);
    Ok(r)
}

/// `r_{2,3}^{1}` with `[x,z1] = 4 z1` instead of `3 z1`.
pub fn altered_r1() -> Result<LieAlg> {
    let n23 = build_free_nilpotent(3)?.alg;
    let mut d = jordan_derivation(3)?.entries().to_vec();
    d[4 * 5 + 4] = Rat::from(4);
    n23.extend_unchecked(&[("x", Mat::from_vector(5, 5, &d)?)], &[])
}

/// Weights of the Cartan element of the erroneous nonsolvable extension on its radical.
pub fn erroneous_weights() -> Vec<Rat> {
    [1, -2, -1, 0, -3].map(Rat::from).to_vec()
}

/// Three negative controls, each passing when the expected failure shows.
pub fn misprint_witnesses() -> Result<AuditReport> {
    let mut r = AuditReport::new("negative controls");

    let a = altered_r1()?;
    let d = a.jacobi_defect();
    let mut s = Section::new("r_{2,3}^{1} with [x,z1]=4z1");
    let hit = d.len() == 1 && {
        let t = &d.triples[0];
        let mut got = [a.label(t.i), a.label(t.j), a.label(t.k)];
        got.sort();
        got == ["v1", "w0", "x"]
    };
    s.expect("jacobi-defect", hit, format!("{} defect triple(s): {}", d.len(), fmt_defects(&a)));
    r.sections.push(s);

    let w = erroneous_weights();
    let st = strip_strings(&w);
    let mut s = Section::new("weights {1,-2,-1,0,-3}");
    let left: Vec<String> = st.leftover.iter().map(Rat::to_string).collect();
    s.expect(
        "sl2-consistency",
        !st.is_complete(),
        format!("stripped {:?}, stopped with leftover {{{}}}", st.highest, left.join(", ")),
    );
    r.sections.push(s);

    let g = build_free_nilpotent(6)?;
    let dims = g.component_dims();
    let printed: Vec<usize> = (1..=6).map(witt_dimension_as_printed).collect::<Result<_>>()?;
    let normal: Vec<usize> = (1..=6).map(witt_dimension).collect::<Result<_>>()?;
    let mut s = Section::new("graded dimension formula without 1/s");
    s.expect(
        "dimension-mismatch",
        printed[1] != dims[1],
        format!("at s=2 printed formula gives {}, basis gives {}", printed[1], dims[1]),
    );
    s.push(
        "normalized",
        Status::Note,
        format!("with 1/s: {normal:?}, basis: {dims:?}, printed: {printed:?}"),
    );
    r.sections.push(s);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_audit_passes() {
        let r = audit_all().unwrap();
        let failing: Vec<String> = r
            .sections
            .iter()
            .flat_map(|s| s.checks.iter().filter(|c| c.status == Status::Fail).map(move |c| format!("{} {:?} {}: {}", s.subject, s.params, c.check, c.witness)))
            .collect();
        assert!(failing.is_empty(), "{}", failing.join("\n"));
    }

    #[test]
    fn negative_controls_show_their_defects() {
        let r = misprint_witnesses().unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn column_freedom_of_omitted_products() {
        let n23 = build_free_nilpotent(3).unwrap().alg;
        let s = annotations().unwrap();
        let text: Vec<&str> = s.checks.iter().map(|c| c.witness.as_str()).collect();
        assert!(text.iter().any(|t| t.contains("[x,v1]") && t.contains("2-dimensional")), "{text:?}");
        assert!(text.iter().any(|t| t.contains("[x,w0]") && t.contains("0-dimensional")), "{text:?}");
        assert_eq!(n23.dim(), 5);
    }
}
