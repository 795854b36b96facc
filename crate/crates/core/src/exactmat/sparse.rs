use std::collections::BTreeMap;

use super::{Rat, Subspace};

/// Sparse row for [`SparseEchelon`].
pub type SparseRow = BTreeMap<usize, Rat>;

/// Gaussian elimination over sparse rows, for large homogeneous systems with
/// few terms per equation.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    cols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon { cols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds an equation; returns whether the rank grew.
    pub fn insert(&mut self, mut r: SparseRow) -> bool {
        r.retain(|_, c| !c.is_zero());
        while let Some((&p, _)) = r.iter().next() {
            assert!(p < self.cols, "column out of range");
            let Some(row) = self.rows.get(&p) else {
                let inv = r[&p].recip().expect("nonzero");
                for c in r.values_mut() {
                    *c *= &inv;
                }
                self.rows.insert(p, r);
                return true;
            };
            let f = r[&p].clone();
            for (k, c) in row {
                let e = r.entry(*k).or_insert_with(Rat::zero);
                *e -= &f * c;
                if e.is_zero() {
                    r.remove(k);
                }
            }
        }
        false
    }

    /// Null space of the accumulated system.
    pub fn kernel(mut self) -> Subspace {
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        // back-substitute so each pivot column appears in one row only
        for &p in &pivots {
            let row = self.rows[&p].clone();
            for (_, other) in self.rows.range_mut(..p) {
                let Some(f) = other.get(&p).cloned() else { continue };
                for (k, c) in &row {
                    let e = other.entry(*k).or_insert_with(Rat::zero);
                    *e -= &f * c;
                    if e.is_zero() {
                        other.remove(k);
                    }
                }
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.rows.contains_key(c)).collect();
        let vs: Vec<Vec<Rat>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (&p, row) in &self.rows {
                    if let Some(c) = row.get(&f) {
                        v[p] = -c;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.cols, &vs).expect("lengths")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::Mat;

    #[test]
    fn agrees_with_dense_kernel() {
        let m = Mat::from_i64(&[&[1, 2, 0, -1, 0], &[0, 0, 1, 3, 0], &[1, 2, 1, 2, 0], &[2, 4, 0, -2, 0]]);
        let mut se = SparseEchelon::new(5);
        for r in m.row_vectors() {
            se.insert(r.into_iter().enumerate().collect());
        }
        assert_eq!(se.rank(), 2);
        assert_eq!(se.kernel(), m.kernel());
    }
}
