mod common;

use liebra::catalog::{algebra_by_name, Params};
use liebra::exactmat::{ivec, Mat, Rat, Subspace};
use liebra::sl2rep::{highest_weight_decomposition, weight_multiset, weight_space, Sl2Triple};

/// `V(m)` in the basis `f^k v`, `k = 0..m`.
fn irreducible(m: usize) -> Sl2Triple {
    let n = m + 1;
    let e = Mat::from_fn(n, n, |i, j| if j == i + 1 { Rat::from((j * (m + 1 - j)) as i64) } else { Rat::zero() });
    let f = Mat::from_fn(n, n, |i, j| if i == j + 1 { Rat::one() } else { Rat::zero() });
    let h = Mat::diag(&(0..n).map(|k| Rat::from(m as i64 - 2 * k as i64)).collect::<Vec<_>>());
    Sl2Triple::new(e, f, h).unwrap()
}

fn sum(parts: &[usize]) -> Sl2Triple {
    let mut it = parts.iter().map(|&m| irreducible(m));
    let first = it.next().unwrap();
    it.fold(first, |acc, t| Sl2Triple::new(acc.e.direct_sum(&t.e), acc.f.direct_sum(&t.f), acc.h.direct_sum(&t.h)).unwrap())
}

fn partitions(dim: usize, max: usize) -> Vec<Vec<usize>> {
    if dim == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in (0..=max.min(dim - 1)).rev() {
        for mut rest in partitions(dim - m - 1, m) {
            rest.insert(0, m);
            out.push(rest);
        }
    }
    out
}

fn weights_of(parts: &[usize]) -> Vec<Rat> {
    let mut w: Vec<Rat> = parts.iter().flat_map(|&m| (0..=m).map(move |k| Rat::from(m as i64 - 2 * k as i64))).collect();
    w.sort();
    w
}

// Among all multisets of highest weights of the right total dimension,
// exactly one matches the computed weights, and it is the one reported.
#[test]
fn decomposition_is_unique_by_brute_force() {
    for parts in [vec![0], vec![3], vec![2, 1, 1, 0], vec![4, 2, 2], vec![1, 1, 1, 0, 0], vec![5, 3, 1]] {
        let t = sum(&parts);
        let d = highest_weight_decomposition(&t, &Subspace::full(t.dim())).unwrap();
        let hw: Vec<usize> = d.highest_weights.iter().map(|&m| m as usize).collect();
        assert_eq!(hw, parts);
        let w = weight_multiset(&t.h).unwrap();
        let matches: Vec<Vec<usize>> =
            partitions(t.dim(), t.dim()).into_iter().filter(|p| weights_of(p) == w).collect();
        assert_eq!(matches, vec![parts.clone()]);
    }
}

#[test]
fn e_raises_weights_by_two() {
    for name in ["g_{2,3}", "g_{2,3}^{1}", "g_{2,4}"] {
        let a = algebra_by_name(name, &Params::new()).unwrap();
        let v = |l: &str| a.basis_vector(a.idx(l).unwrap());
        let t = Sl2Triple::from_algebra(&a, &v("e"), &v("f"), &v("h")).unwrap();
        let mut ws = weight_multiset(&t.h).unwrap();
        ws.dedup();
        for w in &ws {
            let space = weight_space(&t.h, w).unwrap();
            let up = weight_space(&t.h, &(w + Rat::from(2))).unwrap();
            let down = weight_space(&t.h, &(w - Rat::from(2))).unwrap();
            for b in space.basis_vectors() {
                assert!(up.contains(&t.e.mul_vec(&b).unwrap()).unwrap(), "{name}: e on weight {w}");
                assert!(down.contains(&t.f.mul_vec(&b).unwrap()).unwrap(), "{name}: f on weight {w}");
            }
        }
    }
}

#[test]
fn levi_nilradicals() {
    let a = algebra_by_name("g_{2,4}", &Params::new()).unwrap();
    let v = |l: &str| a.basis_vector(a.idx(l).unwrap());
    let t = Sl2Triple::from_algebra(&a, &v("e"), &v("f"), &v("h")).unwrap();
    let nil = a.nilradical();
    let h = t.h_on(&nil).unwrap();
    let mut w = weight_multiset(&h).unwrap();
    let mut want = ivec(&[1, -1, 0, 1, -1, 2, 0, -2]);
    w.sort();
    want.sort();
    assert_eq!(w, want);
    assert_eq!(highest_weight_decomposition(&t, &nil).unwrap().highest_weights, vec![2, 1, 1, 0]);
}
