//! Free nilpotent Lie algebras on two generators, built on a Hall basis.
//!
//! For nilindex at most 4 the algebra is presented on the named basis
//! `v0, v1, w0, z0, z1, x0, x1, x2` with
//! `w0 = [v0,v1]`, `z_i = [v_i,w0]`, `x0 = [v0,z0]`, `x1 = 2[v1,z0]`, `x2 = [v1,z1]`.
//! Beyond that the Hall words themselves label the basis.

mod hall;

use std::collections::HashMap;

pub use hall::{HallBasis, HallWord};

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat, Subspace};
use crate::liecore::{LieAlg, LieAlgBuilder};

/// How a basis element arises from the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// Generator `x_{i+1}`.
    Generator(usize),
    /// `scale * [b_left, b_right]`.
    Bracket { scale: Rat, left: usize, right: usize },
}

/// `n_{2,t}` with its grading `m ⊕ m^2 ⊕ ... ⊕ m^t`.
#[derive(Clone, Debug)]
pub struct GradedFreeNilp {
    pub t: usize,
    pub alg: LieAlg,
    /// `components[s-1]` is `m^s`.
    pub components: Vec<Subspace>,
    pub recipes: Vec<Recipe>,
    pub degrees: Vec<usize>,
    words: Vec<HallWord>,
    hall_index: HashMap<HallWord, usize>,
    /// Hall coordinates to `alg` coordinates.
    to_alg: Mat,
}

const NAMED: [(&str, usize, i64, usize, usize); 8] = [
    ("v0", 1, 0, 0, 0),
    ("v1", 1, 0, 1, 0),
    ("w0", 2, 1, 0, 1),
    ("z0", 3, 1, 0, 2),
    ("z1", 3, 1, 1, 2),
    ("x0", 4, 1, 0, 3),
    ("x1", 4, 2, 1, 3),
    ("x2", 4, 1, 1, 4),
];

fn mobius(n: u64) -> i64 {
    let (mut n, mut p, mut sign) = (n, 2u64, 1i64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn mobius_sum(s: usize) -> i128 {
    (1..=s as u64)
        .filter(|d| s as u64 % d == 0)
        .map(|d| mobius(d) as i128 * (1i128 << (s as u64 / d)))
        .sum()
}

/// Dimension of the degree-`s` component of the free Lie algebra on two generators.
pub fn witt_dimension(s: usize) -> Result<usize> {
    if s == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if s > 120 {
        return Err(Error::InvalidArgument("degree too large".into()));
    }
    let total = mobius_sum(s);
    debug_assert_eq!(total % s as i128, 0);
    Ok((total / s as i128) as usize)
}

/// The Moebius sum without the `1/s` factor.
pub fn witt_dimension_as_printed(s: usize) -> Result<usize> {
    if s == 0 || s > 120 {
        return Err(Error::InvalidArgument("degree must be in 1..=120".into()));
    }
    Ok(mobius_sum(s) as usize)
}

pub fn build_free_nilpotent(t: usize) -> Result<GradedFreeNilp> {
    if t == 0 {
        return Err(Error::InvalidArgument("nilindex must be at least 1".into()));
    }
    let mut hb = HallBasis::new(t);
    let n = hb.len();
    let mut hall = LieAlgBuilder::new(hb.words().iter().map(|w| w.to_string()));
    for i in 0..n {
        for j in i + 1..n {
            let terms: Vec<(usize, Rat)> = hb.bracket(i, j).into_iter().collect();
            hall.set_sparse(i, j, &terms)?;
        }
    }
    let hall = hall.build()?;
    let words = hb.words().to_vec();
    let hall_index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

    let (alg, recipes, degrees, to_alg) = if t <= 4 {
        let named: Vec<&(&str, usize, i64, usize, usize)> = NAMED.iter().filter(|e| e.1 <= t).collect();
        let mut coords: Vec<Vec<Rat>> = Vec::new();
        let mut recipes = Vec::new();
        for (k, &&(_, deg, scale, l, r)) in named.iter().enumerate() {
            if deg == 1 {
                coords.push(hall.basis_vector(k));
                recipes.push(Recipe::Generator(k));
            } else {
                let s = Rat::from(scale);
                let v: Vec<Rat> =
                    hall.bracket(&coords[l], &coords[r])?.iter().map(|c| c * &s).collect();
                coords.push(v);
                recipes.push(Recipe::Bracket { scale: s, left: l, right: r });
            }
        }
        let labels = named.iter().map(|e| e.0.to_string()).collect();
        let alg = hall.change_basis(&coords, labels)?;
        let to_alg = Mat::from_columns(n, &coords)?.inverse()?;
        (alg, recipes, named.iter().map(|e| e.1).collect(), to_alg)
    } else {
        let recipes = (0..n)
            .map(|i| match hb.parts(i) {
                None => Recipe::Generator(i),
                Some((l, r)) => Recipe::Bracket { scale: Rat::one(), left: l, right: r },
            })
            .collect();
        let degrees: Vec<usize> = (0..n).map(|i| hb.degree(i)).collect();
        (hall, recipes, degrees, Mat::identity(n))
    };

    let blocks: Vec<Vec<usize>> =
        (1..=t).map(|s| (0..n).filter(|&i| degrees[i] == s).collect()).collect();
    let components = blocks.iter().map(|b| Subspace::coordinate(n, b)).collect();
    let alg = alg.with_grading(Some(blocks))?;
    Ok(GradedFreeNilp { t, alg, components, recipes, degrees, words, hall_index, to_alg })
}

impl GradedFreeNilp {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn component(&self, s: usize) -> Option<&Subspace> {
        s.checked_sub(1).and_then(|i| self.components.get(i))
    }

    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    /// Hall basis words, in Hall-basis order.
    pub fn hall_words(&self) -> &[HallWord] {
        &self.words
    }

    /// Position of a basic word in the Hall basis.
    pub fn hall_index(&self, w: &HallWord) -> Option<usize> {
        self.hall_index.get(w).copied()
    }

    /// Coordinates, in the basis of `alg`, of an arbitrary bracketed word.
    pub fn eval_word(&self, w: &HallWord) -> Vec<Rat> {
        match w {
            HallWord::Gen(g) => self.to_alg.col(*g as usize - 1),
            HallWord::Br(a, b) => {
                self.alg.bracket(&self.eval_word(a), &self.eval_word(b)).expect("lengths")
            }
        }
    }

    /// Coordinates of the `m^1` generators `x1, x2`.
    pub fn generators(&self) -> [Vec<Rat>; 2] {
        [self.to_alg.col(0), self.to_alg.col(1)]
    }
}

/// `[w1, w2]` expanded in the basis of `g.alg`.
pub fn hall_bracket(g: &GradedFreeNilp, w1: &HallWord, w2: &HallWord) -> Vec<Rat> {
    let (a, b) = (g.eval_word(w1), g.eval_word(w2));
    g.alg.bracket(&a, &b).expect("lengths")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ivec;

    #[test]
    fn witt_values() {
        let w: Vec<usize> = (1..=8).map(|s| witt_dimension(s).unwrap()).collect();
        assert_eq!(w, vec![2, 1, 2, 3, 6, 9, 18, 30]);
        assert_eq!(witt_dimension_as_printed(2).unwrap(), 2);
        assert!(witt_dimension(0).is_err());
    }

    #[test]
    fn named_tables() {
        let g = build_free_nilpotent(4).unwrap();
        let a = &g.alg;
        let e = |l: &str| a.basis_vector(a.index_of(l).unwrap());
        let br = |x: &str, y: &str| a.bracket(&e(x), &e(y)).unwrap();
        assert_eq!(br("v0", "v1"), e("w0"));
        assert_eq!(br("v0", "w0"), e("z0"));
        assert_eq!(br("v1", "w0"), e("z1"));
        assert_eq!(br("v0", "z0"), e("x0"));
        let half_x1: Vec<Rat> = e("x1").iter().map(|c| c * Rat::new(1, 2)).collect();
        assert_eq!(br("v0", "z1"), half_x1);
        assert_eq!(br("v1", "z0"), half_x1);
        assert_eq!(br("v1", "z1"), e("x2"));
        assert_eq!(br("w0", "z0"), ivec(&[0; 8]));
        assert!(a.is_lie());
    }

    #[test]
    fn word_evaluation() {
        let g = build_free_nilpotent(3).unwrap();
        let x1 = HallWord::gen(1);
        let x2 = HallWord::gen(2);
        let w0 = HallWord::br(x1.clone(), x2.clone());
        assert_eq!(g.eval_word(&w0), ivec(&[0, 0, 1, 0, 0]));
        assert_eq!(hall_bracket(&g, &w0, &x1), ivec(&[0, 0, 0, -1, 0]));
        assert_eq!(hall_bracket(&g, &x1, &x1), ivec(&[0; 5]));
        assert_eq!(g.hall_index(&HallWord::br(x2.clone(), x1.clone())), Some(2));
        assert_eq!(g.hall_index(&w0), None);
    }
}
