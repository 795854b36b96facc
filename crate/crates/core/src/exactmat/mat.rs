use std::fmt;
use std::ops::{Index, IndexMut};

use super::{Poly, Rat, Subspace};
use crate::error::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let mut m = Mat::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Build from row vectors; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Mat { rows: r, cols: c, data })
    }

    /// Integer-entry constructor for tables written in source; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| Rat::from(x)).collect()).collect();
        Mat::from_rows(v).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n_rows: usize, cols: &[Vec<Rat>]) -> Result<Self> {
        for c in cols {
            if c.len() != n_rows {
                return Err(Error::DimensionMismatch { expected: n_rows, got: c.len() });
            }
        }
        Ok(Mat::from_fn(n_rows, cols.len(), |i, j| cols[j][i].clone()))
    }

    /// Inverse of [`Mat::vectorize`].
    pub fn from_vector(rows: usize, cols: usize, v: &[Rat]) -> Result<Self> {
        if v.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: v.len() });
        }
        Ok(Mat { rows, cols, data: v.to_vec() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major flattening.
    pub fn vectorize(&self) -> Vec<Rat> {
        self.data.clone()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Mat) -> Result<Mat> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn trace(&self) -> Result<Rat> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    pub fn pow(&self, exp: u32) -> Result<Mat> {
        self.require_square()?;
        let mut acc = Mat::identity(self.rows);
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// `self^n == 0` where `n` is the size.
    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.pow(self.rows as u32)?.is_zero())
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].recip().expect("nonzero pivot");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Rat)> = (c..m.cols)
                .filter(|&j| !m[(r, j)].is_zero())
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let d = &factor * v;
                    m[(i, *j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<Rat>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rat::zero(); self.cols];
                v[free] = Rat::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&red[(row, free)];
                }
                v
            })
            .collect();
        Subspace::span(self.cols, &basis).expect("kernel vectors have ambient length")
    }

    /// Column space as a subspace of `Q^rows`.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, &self.transpose().row_vectors()).expect("column length")
    }

    pub fn inverse(&self) -> Result<Mat> {
        self.require_square()?;
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.iter().take_while(|&&p| p < n).count() < n {
            return Err(Error::Singular);
        }
        Ok(Mat::from_fn(n, n, |i, j| red[(i, n + j)].clone()))
    }

    /// Monic `det(x I - self)` by the Faddeev-LeVerrier recurrence.
    pub fn char_poly(&self) -> Result<Poly> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = Mat::zeros(n, n);
        for k in 1..=n {
            let mut next = self.try_mul(&m)?;
            let c = &coeffs[n - k + 1];
            for i in 0..n {
                next[(i, i)] += c;
            }
            let am = self.try_mul(&next)?;
            coeffs[n - k] = -(am.trace()? / Rat::from(k as i64));
            m = next;
        }
        Ok(Poly::new(coeffs))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        Mat::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self[(i, j)].clone(),
                (false, false) => other[(i - self.rows, j - self.cols)].clone(),
                _ => Rat::zero(),
            }
        })
    }

    pub fn vstack(blocks: &[Mat]) -> Result<Mat> {
        let cols = blocks.first().map_or(0, Mat::cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: b.cols });
            }
            rows += b.rows;
            data.extend_from_slice(&b.data);
        }
        Ok(Mat { rows, cols, data })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn same_shape(&self, other: &Mat) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: other.rows });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(Rat::to_string).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let (r, p) = Mat::identity(2).rref();
        assert_eq!(r, Mat::identity(2));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = Mat::from_i64(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Mat::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_of_nondiagonal_derivation_is_identity() {
        // [x, .] of the Jordan-type 1-extension of n_{2,3}
        let d = Mat::from_i64(&[
            &[1, 0, 0, 0, 0],
            &[1, 1, 0, 0, 0],
            &[0, 0, 2, 0, 0],
            &[0, 0, 0, 3, 0],
            &[0, 0, 0, 1, 3],
        ]);
        let (r, p) = d.rref();
        assert_eq!(r, Mat::identity(5));
        assert_eq!(p, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(Mat::zeros(3, 3).kernel().dim(), 3);
        assert_eq!(Mat::identity(4).kernel().dim(), 0);
        let m = Mat::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        for v in k.basis_vectors() {
            assert!(m.mul_vec(&v).unwrap().iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn inverse_and_singular() {
        let m = Mat::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.try_mul(&inv).unwrap(), Mat::identity(2));
        assert_eq!(Mat::from_i64(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        assert_eq!(Mat::zeros(0, 0).inverse().unwrap(), Mat::zeros(0, 0));
    }

    #[test]
    fn char_poly_examples() {
        let p = Mat::identity(2).char_poly().unwrap();
        assert_eq!(p, Poly::from_roots(&[Rat::one(), Rat::one()]));

        let d = Mat::diag(&[1, 2, 3, 4, 5].map(Rat::from));
        let expect = Poly::from_roots(&[1, 2, 3, 4, 5].map(Rat::from));
        assert_eq!(d.char_poly().unwrap(), expect);

        assert!(Mat::zeros(2, 3).char_poly().is_err());
        let half = Mat::from_rows(vec![vec![q(1, 2), q(0, 1)], vec![q(3, 1), q(-1, 3)]]).unwrap();
        // (x - 1/2)(x + 1/3)
        assert_eq!(half.char_poly().unwrap(), Poly::from_roots(&[q(1, 2), q(-1, 3)]));
    }

    #[test]
    fn vectorize_round_trip() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(Mat::from_vector(2, 3, &m.vectorize()).unwrap(), m);
    }
}
