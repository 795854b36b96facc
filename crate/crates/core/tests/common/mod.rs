//! Oracles shared by the integration tests and the acceptance target.
#![allow(dead_code)]

use std::collections::BTreeMap;

use liebra::catalog::{entries, quotients::quotient_cases};
use liebra::exactmat::{Rat, Subspace};
use liebra::freenilp::{build_free_nilpotent, HallWord};
use liebra::liecore::{sl2, LieAlg};

/// Element of the free associative algebra on letters 1, 2.
pub type Assoc = BTreeMap<Vec<u8>, Rat>;

pub fn assoc_mul(a: &Assoc, b: &Assoc) -> Assoc {
    let mut out = Assoc::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend(v);
            *out.entry(w).or_insert_with(Rat::zero) += x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn assoc_commutator(a: &Assoc, b: &Assoc) -> Assoc {
    let mut out = assoc_mul(a, b);
    for (w, c) in assoc_mul(b, a) {
        *out.entry(w).or_insert_with(Rat::zero) -= c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn letter(i: u8) -> Assoc {
    Assoc::from([(vec![i], Rat::one())])
}

/// Image of a bracketed word under the embedding into the free associative algebra.
pub fn assoc_image(w: &HallWord) -> Assoc {
    match w {
        HallWord::Gen(i) => letter(*i),
        HallWord::Br(a, b) => assoc_commutator(&assoc_image(a), &assoc_image(b)),
    }
}

fn words(s: usize) -> Vec<Vec<u8>> {
    (0..1usize << s).map(|m| (0..s).map(|k| if m >> k & 1 == 0 { 1 } else { 2 }).collect()).collect()
}

fn coords(a: &Assoc, s: usize) -> Vec<Rat> {
    words(s).iter().map(|w| a.get(w).cloned().unwrap_or_else(Rat::zero)).collect()
}

/// Dimension of the degree-`s` part of the free Lie algebra on two letters,
/// as the rank of all left-normed commutators inside the free associative algebra.
pub fn lie_component_dim(s: usize) -> usize {
    let mut elems: Vec<Assoc> = vec![letter(1), letter(2)];
    for _ in 1..s {
        elems = elems.iter().flat_map(|e| [assoc_commutator(&letter(1), e), assoc_commutator(&letter(2), e)]).collect();
    }
    let vs: Vec<Vec<Rat>> = elems.iter().map(|e| coords(e, s)).collect();
    Subspace::span(1 << s, &vs).unwrap().dim()
}

/// Ranks of the Hall words of each degree in the associative algebra.
pub fn hall_word_ranks(t: usize) -> Vec<usize> {
    let g = build_free_nilpotent(t).unwrap();
    (1..=t)
        .map(|s| {
            let vs: Vec<Vec<Rat>> =
                g.hall_words().iter().filter(|w| w.degree() == s).map(|w| coords(&assoc_image(w), s)).collect();
            Subspace::span(1 << s, &vs).unwrap().dim()
        })
        .collect()
}

/// Every algebra the library constructs, labelled.
pub fn all_algebras() -> Vec<(String, LieAlg)> {
    let mut out = vec![("sl2".to_string(), sl2())];
    for t in 1..=5 {
        out.push((format!("n_{{2,{t}}}"), build_free_nilpotent(t).unwrap().alg));
    }
    for e in entries() {
        for p in e.samples() {
            out.push((format!("{} {p:?}", e.name), e.build(&p).unwrap()));
        }
    }
    for c in quotient_cases() {
        out.push((format!("{} {:?}", c.family, c.params), c.build().unwrap()));
    }
    out
}
