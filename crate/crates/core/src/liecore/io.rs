use serde::{Deserialize, Serialize};

use super::{LieAlg, LieAlgBuilder};
use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};

/// On-disk algebra table; only pairs `i < j` with a nonzero bracket are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<(usize, Rat)>,
}

/// Square matrix file, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub size: usize,
    pub entries: Vec<Vec<Rat>>,
}

impl AlgebraFile {
    pub fn from_alg(a: &LieAlg) -> AlgebraFile {
        let n = a.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let value: Vec<(usize, Rat)> = a
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !value.is_empty() {
                    brackets.push(BracketEntry { i, j, value });
                }
            }
        }
        AlgebraFile {
            dim: n,
            basis: a.labels().to_vec(),
            brackets,
            grading: a.grading().map(<[Vec<usize>]>::to_vec),
        }
    }

    pub fn to_alg(&self) -> Result<LieAlg> {
        if self.basis.len() != self.dim {
            return Err(Error::Format(format!(
                "basis has {} labels but dim is {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut b = LieAlgBuilder::new(self.basis.clone());
        for e in &self.brackets {
            if e.i >= e.j {
                return Err(Error::Format(format!("bracket entry ({}, {}) needs i < j", e.i, e.j)));
            }
            b.set_sparse(e.i, e.j, &e.value)?;
        }
        if let Some(g) = &self.grading {
            b.grading(g.clone());
        }
        b.build()
    }
}

impl LieAlg {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraFile::from_alg(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<LieAlg> {
        let f: AlgebraFile = serde_json::from_str(s)?;
        f.to_alg()
    }
}

impl MatrixFile {
    pub fn from_mat(m: &Mat) -> MatrixFile {
        MatrixFile { size: m.rows(), entries: m.row_vectors() }
    }

    pub fn to_mat(&self) -> Result<Mat> {
        if self.entries.len() != self.size || self.entries.iter().any(|r| r.len() != self.size) {
            return Err(Error::Format(format!("matrix is not {0}x{0}", self.size)));
        }
        if self.size == 0 {
            return Ok(Mat::zeros(0, 0));
        }
        Mat::from_rows(self.entries.clone())
    }
}

pub fn matrix_to_json(m: &Mat) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_mat(m)).expect("serializable")
}

pub fn matrix_from_json(s: &str) -> Result<Mat> {
    let f: MatrixFile = serde_json::from_str(s)?;
    f.to_mat()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip() {
        let js = r#"{"dim":3,"basis":["v0","v1","w0"],
            "brackets":[{"i":0,"j":1,"value":[[2,"1/2"]]}],"grading":[[0,1],[2]]}"#;
        let a = LieAlg::from_json(js).unwrap();
        assert_eq!(a.bracket_basis(1, 0)[2], Rat::new(-1, 2));
        let back = LieAlg::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn rejects_malformed_files() {
        let bad_order = r#"{"dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":0,"value":[]}]}"#;
        assert!(LieAlg::from_json(bad_order).is_err());
        let bad_dim = r#"{"dim":3,"basis":["a","b"],"brackets":[]}"#;
        assert!(LieAlg::from_json(bad_dim).is_err());
        let bad_rat = r#"{"dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"value":[[0,"1/0"]]}]}"#;
        assert!(LieAlg::from_json(bad_rat).is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let m = Mat::from_rows(vec![vec![Rat::new(1, 2), Rat::zero()], vec![Rat::one(), Rat::from(-3)]])
            .unwrap();
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
        assert!(matrix_from_json(r#"{"size":2,"entries":[["1"]]}"#).is_err());
    }
}
