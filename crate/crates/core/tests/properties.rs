mod common;

use liebra::catalog::{algebra_by_name, families, invariant_fingerprint, Params};
use liebra::dercalc::{derivation_space, inner_derivations};
use liebra::exactmat::{Mat, Poly, Rat, Subspace};
use liebra::freenilp::build_free_nilpotent;
use liebra::liecore::LieAlg;
use liebra::sl2rep::{clebsch_gordan, decompose_weights};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(rat(), rows * cols).prop_map(move |v| Mat::from_vector(rows, cols, &v).unwrap())
}

/// Invertible: unit upper-triangular times a nonzero diagonal, small entries.
fn invertible(n: usize) -> impl Strategy<Value = Mat> {
    let entry = (-1i64..=1).prop_map(Rat::from);
    let scale = prop::sample::select(vec![Rat::one(), Rat::from(-1), Rat::from(2), Rat::new(1, 2)]);
    (prop::collection::vec(entry, n * n), prop::collection::vec(scale, n)).prop_map(move |(u, d)| {
        let upper = Mat::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => u[i * n + j].clone(),
            std::cmp::Ordering::Equal => Rat::one(),
            std::cmp::Ordering::Greater => Rat::zero(),
        });
        upper.try_mul(&Mat::diag(&d)).unwrap()
    })
}

fn sample_algebra(k: usize) -> LieAlg {
    let names = ["r_{2,3}^{1}", "r_{2,3}^{2}", "r_{2,3}^{4}", "g_{2,3}", "r_{2,2}^{1}"];
    algebra_by_name(names[k % names.len()], &Params::new()).unwrap()
}

fn rebase(a: &LieAlg, p: &Mat) -> LieAlg {
    let basis: Vec<Vec<Rat>> = (0..a.dim()).map(|j| p.col(j)).collect();
    let labels = (0..a.dim()).map(|i| format!("b{i}")).collect();
    a.change_basis(&basis, labels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn change_of_basis_preserves_lie_structure(k in 0usize..5, seed in invertible(9)) {
        let a = sample_algebra(k);
        let n = a.dim();
        let p = Mat::from_fn(n, n, |i, j| seed[(i, j)].clone());
        let b = rebase(&a, &p);
        prop_assert!(b.is_lie());
        for i in 0..n {
            for j in 0..n {
                let s: Vec<Rat> = b.bracket_basis(i, j).iter().zip(b.bracket_basis(j, i)).map(|(x, y)| x + y).collect();
                prop_assert!(s.iter().all(Rat::is_zero));
            }
        }
        prop_assert_eq!(invariant_fingerprint(&a), invariant_fingerprint(&b));
    }

    #[test]
    fn derivations_close_under_commutator(i in 0usize..16, j in 0usize..16, c in rat()) {
        let g = build_free_nilpotent(4).unwrap().alg;
        let basis = derivation_space(&g).basis();
        let d = basis[i].try_add(&basis[j].scale(&c)).unwrap();
        prop_assert!(g.is_derivation(&d).unwrap());
        let br = basis[i].commutator(&basis[j]).unwrap();
        prop_assert!(g.is_derivation(&br).unwrap());
        prop_assert!(derivation_space(&g).contains(&br).unwrap());
    }

    #[test]
    fn inner_derivations_are_an_ideal(i in 0usize..10, k in 0usize..5) {
        let g = build_free_nilpotent(3).unwrap().alg;
        let d = derivation_space(&g).basis()[i].clone();
        let ad = g.ad_basis(k);
        prop_assert!(inner_derivations(&g).contains(&d.commutator(&ad).unwrap()).unwrap());
    }

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), 6);
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(3, 5), b in matrix(2, 5)) {
        let (u, w) = (Subspace::from_row_matrix(&a), Subspace::from_row_matrix(&b));
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(u.contains_subspace(&i).unwrap() && w.contains_subspace(&i).unwrap());
    }

    #[test]
    fn cayley_hamilton(m in matrix(4, 4)) {
        let p = m.char_poly().unwrap();
        let mut acc = Mat::zeros(4, 4);
        for c in p.coeffs().iter().rev() {
            acc = acc.try_mul(&m).unwrap().try_add(&Mat::identity(4).scale(c)).unwrap();
        }
        prop_assert!(acc.is_zero());
        prop_assert_eq!(p.leading(), Some(&Rat::one()));
    }

    #[test]
    fn rational_roots_of_products(roots in prop::collection::vec(rat(), 1..5), s in nonzero_rat()) {
        let p = Poly::from_roots(&roots).scale(&s);
        let mut want = roots.clone();
        want.sort();
        let got = p.rational_roots().unwrap();
        prop_assert!(got.splits);
        prop_assert_eq!(got.roots, want);
    }

    #[test]
    fn weight_strings_recover_highest_weights(mut hw in prop::collection::vec(0i64..5, 1..5)) {
        let weights: Vec<Rat> = hw.iter().flat_map(|&m| (0..=m).map(move |k| Rat::from(m - 2 * k))).collect();
        let d = decompose_weights(&weights).unwrap();
        hw.sort_by(|a, b| b.cmp(a));
        prop_assert_eq!(&d.highest_weights, &hw);
        let mut neg: Vec<i64> = d.weights.iter().map(|w| -w).collect();
        neg.sort();
        prop_assert_eq!(&neg, &d.weights);
        prop_assert_eq!(hw.iter().map(|m| m + 1).sum::<i64>() as usize, d.dim());
    }

    #[test]
    fn clebsch_gordan_dimensions(m in 0i64..8, n in 0i64..8) {
        let parts = clebsch_gordan(m, n).unwrap();
        prop_assert_eq!(parts.iter().map(|k| k + 1).sum::<i64>(), (m + 1) * (n + 1));
    }

    #[test]
    fn diagonal_extensions_are_lie(a in rat(), b in rat()) {
        let g = build_free_nilpotent(3).unwrap();
        let delta = Mat::from_fn(5, 2, |r, c| match (r, c) {
            (0, 0) => a.clone(),
            (1, 1) => b.clone(),
            _ => Rat::zero(),
        });
        let d = liebra::dercalc::extend_from_generators(&g, &delta).unwrap();
        let ext = g.alg.extend(&[("x", d)], &[]).unwrap();
        prop_assert!(ext.is_lie());
        prop_assert_eq!(ext.dim(), 6);
    }

    #[test]
    fn central_quotients_keep_type_two(a in rat(), b in rat()) {
        let g = build_free_nilpotent(3).unwrap().alg;
        let v = g.vector(&[("z0", a.clone()), ("z1", b.clone())]).unwrap();
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let q = g.quotient(&Subspace::span(5, &[v]).unwrap()).unwrap();
        prop_assert!(q.is_lie());
        prop_assert_eq!(q.type_of(), 2);
        prop_assert_eq!(q.nilindex(), Some(3));
    }

    #[test]
    fn vectors_round_trip_through_text(v in prop::collection::vec(rat(), 8)) {
        let g = build_free_nilpotent(4).unwrap().alg;
        prop_assert_eq!(g.parse_vector(&g.format_vector(&v)).unwrap(), v);
    }

    #[test]
    fn grading_is_multiplicative(i in 0usize..8, j in 0usize..8) {
        let g = build_free_nilpotent(4).unwrap();
        let (di, dj) = (g.degrees[i], g.degrees[j]);
        let br = g.alg.bracket_basis(i, j);
        match g.component(di + dj) {
            Some(c) => prop_assert!(c.contains(br).unwrap()),
            None => prop_assert!(br.iter().all(Rat::is_zero)),
        }
    }
}

#[test]
fn json_round_trip_every_algebra() {
    for (name, a) in common::all_algebras() {
        assert_eq!(LieAlg::from_json(&a.to_json()).unwrap(), a, "{name}");
    }
}

#[test]
fn catalog_derivations_are_not_nilpotent() {
    for d in [
        families::jordan_derivation(3).unwrap(),
        families::u3_derivation().unwrap(),
        families::u5_derivation().unwrap(),
    ] {
        assert!(!d.is_nilpotent().unwrap());
    }
}
