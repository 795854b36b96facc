//! Parametrized derivation and automorphism matrices of `n_{2,t}`, `t <= 3`,
//! in the basis `v0, v1, w0, z0, z1` (columns are images).

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};

/// `D_u^beta`; `u` has 3, 5 or 9 entries for `t = 1, 2, 3`.
pub fn der_matrix(t: usize, u: &[Rat], beta: &Rat) -> Result<Mat> {
    let want = match t {
        1 => 3,
        2 => 5,
        3 => 9,
        _ => return Err(Error::OutOfScope(format!("derivation table for t = {t}"))),
    };
    if u.len() != want {
        return Err(Error::DimensionMismatch { expected: want, got: u.len() });
    }
    let a = |k: usize| u[k - 1].clone();
    let n = [2, 3, 5][t - 1];
    let mut m = Mat::zeros(n, n).entries().to_vec();
    let mut put = |r: usize, c: usize, x: Rat| m[r * n + c] = x;
    put(0, 0, a(1) + beta);
    put(0, 1, a(2));
    put(1, 0, a(3));
    put(1, 1, -a(1) + beta);
    if t >= 2 {
        put(2, 0, a(4));
        put(2, 1, a(5));
        put(2, 2, beta * Rat::from(2));
    }
    if t == 3 {
        let b3 = beta * Rat::from(3);
        put(3, 0, a(6));
        put(3, 1, a(7));
        put(3, 2, a(5));
        put(3, 3, a(1) + &b3);
        put(3, 4, a(2));
        put(4, 0, a(8));
        put(4, 1, a(9));
        put(4, 2, -a(4));
        put(4, 3, a(3));
        put(4, 4, -a(1) + &b3);
    }
    Mat::from_vector(n, n, &m)
}

/// `Phi_v` for `n_{2,3}`, `v = (a1, ..., a10)`, with `eps = a1 a4 - a2 a3`.
pub fn aut_matrix_n23(v: &[Rat]) -> Result<Mat> {
    if v.len() != 10 {
        return Err(Error::DimensionMismatch { expected: 10, got: v.len() });
    }
    let a = |k: usize| v[k - 1].clone();
    let eps = a(1) * a(4) - a(2) * a(3);
    let z = Rat::zero;
    Mat::from_rows(vec![
        vec![a(1), a(2), z(), z(), z()],
        vec![a(3), a(4), z(), z(), z()],
        vec![a(5), a(6), eps.clone(), z(), z()],
        vec![a(7), a(8), a(1) * a(6) - a(2) * a(5), &eps * a(1), &eps * a(2)],
        vec![a(9), a(10), a(3) * a(6) - a(4) * a(5), &eps * a(3), &eps * a(4)],
    ])
}

/// `Phi_v` for `n_{2,2}`, entries `(a1, ..., a6)` with `eps = a1 a4 - a2 a3`.
pub fn aut_matrix_n22(v: &[Rat]) -> Result<Mat> {
    if v.len() != 6 {
        return Err(Error::DimensionMismatch { expected: 6, got: v.len() });
    }
    let a = |k: usize| v[k - 1].clone();
    let eps = a(1) * a(4) - a(2) * a(3);
    Mat::from_rows(vec![
        vec![a(1), a(2), Rat::zero()],
        vec![a(3), a(4), Rat::zero()],
        vec![a(5), a(6), eps],
    ])
}

/// Parameter vector from integers and fractions written as `(p, q)`.
pub fn params(xs: &[(i64, i64)]) -> Vec<Rat> {
    xs.iter().map(|&(p, q)| Rat::new(p, q)).collect()
}
