//! Lie algebras given by structure constants, with the usual structural
//! operations: brackets, Jacobi checking, series, centers, ideals, quotients
//! and semidirect extensions.

mod algebra;
mod io;
mod structure;

pub use algebra::{DefectTriple, JacobiDefect, LieAlg, LieAlgBuilder};
pub use io::{matrix_from_json, matrix_to_json, AlgebraFile, BracketEntry, MatrixFile};

/// Standard `sl2` on the basis `e, f, h` with `[e,f]=h, [h,e]=2e, [h,f]=-2f`.
pub fn sl2() -> LieAlg {
    use crate::exactmat::Rat;
    let mut b = LieAlgBuilder::new(["e", "f", "h"]);
    b.set_labels("e", "f", &[("h", Rat::one())]).expect("labels");
    b.set_labels("h", "e", &[("e", Rat::from(2))]).expect("labels");
    b.set_labels("h", "f", &[("f", Rat::from(-2))]).expect("labels");
    b.build().expect("sl2 table")
}
