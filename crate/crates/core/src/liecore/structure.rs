use super::{LieAlg, LieAlgBuilder};
use crate::error::{Error, Result};
use crate::exactmat::{EchelonBuilder, Mat, Rat, Subspace};

impl LieAlg {
    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), got: s.ambient_dim() })
        }
    }

    /// Span of `[u, v]` over basis pairs of `u` and `v`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        let mut eb = EchelonBuilder::new(self.dim());
        let vb = v.basis_vectors();
        for x in u.basis_vectors() {
            for y in &vb {
                eb.insert(&self.bracket(&x, y)?);
            }
        }
        Ok(eb.finish())
    }

    pub fn derived_algebra(&self) -> Subspace {
        self.product_space(&self.whole(), &self.whole()).expect("ambient matches")
    }

    /// `g = g^1 ⊇ g^2 = [g, g^1] ⊇ ...`, strictly descending, stopping at zero or
    /// at the first term that no longer shrinks.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = self.whole();
        let mut out = vec![g.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.product_space(&g, last).expect("ambient");
            if next == *last {
                return out;
            }
            let zero = next.is_zero();
            out.push(next);
            if zero {
                return out;
            }
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.whole()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.product_space(last, last).expect("ambient");
            if next == *last {
                return out;
            }
            let zero = next.is_zero();
            out.push(next);
            if zero {
                return out;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    /// Largest `t` with `g^t != 0`; `None` if not nilpotent, `Some(0)` for the zero algebra.
    pub fn nilindex(&self) -> Option<usize> {
        let s = self.lower_central_series();
        if !s.last().is_some_and(Subspace::is_zero) {
            return None;
        }
        Some(s.iter().filter(|x| !x.is_zero()).count())
    }

    /// `dim g - dim [g, g]`.
    pub fn type_of(&self) -> usize {
        self.dim() - self.derived_algebra().dim()
    }

    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let n = self.dim();
        let gens = s.basis_vectors();
        if gens.is_empty() {
            return Ok(self.whole());
        }
        // rows of the stacked ad(y) for y in s: [x, y] = -ad(y) x
        let mut rows = Vec::with_capacity(n * gens.len());
        for y in &gens {
            rows.extend(self.ad(y)?.row_vectors());
        }
        Ok(Mat::from_rows(rows)?.kernel())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.whole()).expect("ambient matches")
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        let p = self.product_space(&self.whole(), s)?;
        s.contains_subspace(&p)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        let p = self.product_space(s, s)?;
        s.contains_subspace(&p)
    }

    /// Subalgebra on the RREF basis of `s`, labels `s0, s1, ...`.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlg> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotASubalgebra);
        }
        let basis = s.basis_vectors();
        let labels: Vec<String> = (0..basis.len()).map(|i| format!("s{i}")).collect();
        let mut b = LieAlgBuilder::new(labels);
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let v = self.bracket(&basis[i], &basis[j])?;
                b.set(i, j, s.coords(&v)?.expect("closed under bracket"))?;
            }
        }
        b.build()
    }

    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> Result<bool> {
        match self.restrict(s) {
            Ok(a) => Ok(a.is_nilpotent()),
            Err(Error::NotASubalgebra) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Quotient by an ideal, on the standard basis vectors at the ideal's
    /// non-pivot columns; labels `q0, q1, ...`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlg> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let keep = ideal.non_pivots();
        let labels: Vec<String> = (0..keep.len()).map(|i| format!("q{i}")).collect();
        let mut b = LieAlgBuilder::new(labels);
        for (a, &i) in keep.iter().enumerate() {
            for (c, &j) in keep.iter().enumerate().skip(a + 1) {
                let r = ideal.reduce(self.bracket_basis(i, j))?;
                b.set(a, c, keep.iter().map(|&k| r[k].clone()).collect())?;
            }
        }
        let q = b.build()?;
        q.validate()?;
        Ok(q)
    }

    /// Does `d` satisfy `d[x,y] = [dx,y] + [x,dy]` on every basis pair?
    pub fn is_derivation(&self, d: &Mat) -> Result<bool> {
        Ok(self.derivation_defect(d)?.is_none())
    }

    /// First basis pair violating the derivation law, if any.
    pub fn derivation_defect(&self, d: &Mat) -> Result<Option<(usize, usize)>> {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: d.rows() });
        }
        let images: Vec<Vec<Rat>> = (0..n).map(|j| d.col(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(self.bracket_basis(i, j))?;
                let a = self.bracket(&images[i], &self.basis_vector(j))?;
                let b = self.bracket(&self.basis_vector(i), &images[j])?;
                if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| *l != x + y) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Same algebra on a new basis given by coordinate vectors in the old one.
    pub fn change_basis(&self, basis: &[Vec<Rat>], labels: Vec<String>) -> Result<LieAlg> {
        let n = self.dim();
        if basis.len() != n || labels.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: basis.len() });
        }
        let p = Mat::from_columns(n, basis)?;
        let pinv = p.inverse()?;
        let mut b = LieAlgBuilder::new(labels);
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket(&basis[i], &basis[j])?;
                b.set(i, j, pinv.mul_vec(&v)?)?;
            }
        }
        b.build()
    }

    /// Killing form `tr(ad x ad y)` on the basis.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim();
        let ads: Vec<Mat> = (0..n).map(|i| self.ad_basis(i)).collect();
        Mat::from_fn(n, n, |i, j| {
            ads[i].try_mul(&ads[j]).and_then(|m| m.trace()).expect("square")
        })
    }

    /// Solvable radical, the Killing-orthogonal of `[g, g]`.
    pub fn radical(&self) -> Subspace {
        let k = self.killing_form();
        let rows: Vec<Vec<Rat>> = self
            .derived_algebra()
            .basis_vectors()
            .iter()
            .map(|d| k.mul_vec(d).expect("length"))
            .collect();
        if rows.is_empty() {
            return self.whole();
        }
        Mat::from_rows(rows).expect("uniform rows").kernel()
    }

    /// Largest nilpotent ideal.
    ///
    /// Elements of the radical whose adjoint lies in the Jacobson radical of the
    /// associative algebra generated by `ad` of the radical; membership is the
    /// linear condition `tr(ad x * w) = 0` over a spanning set of that algebra.
    pub fn nilradical(&self) -> Subspace {
        let n = self.dim();
        let r = self.radical();
        let gens: Vec<Mat> =
            r.basis_vectors().iter().map(|x| self.ad(x).expect("length")).collect();
        let span = associative_span(n, &gens);
        let mut rows = Vec::new();
        for w in &span {
            let t = gens.iter().map(|g| g.try_mul(w).and_then(|m| m.trace()).expect("square"));
            rows.push(t.collect::<Vec<Rat>>());
        }
        if gens.is_empty() {
            return Subspace::zero(n);
        }
        let coeffs = Mat::from_rows(rows).expect("uniform rows").kernel();
        let vs: Vec<Vec<Rat>> = coeffs
            .basis_vectors()
            .iter()
            .map(|c| r.combine(c).expect("coefficient count"))
            .collect();
        Subspace::span(n, &vs).expect("lengths")
    }
}

/// Spanning set of the unital associative algebra generated by `gens`.
fn associative_span(n: usize, gens: &[Mat]) -> Vec<Mat> {
    let mut eb = EchelonBuilder::new(n * n);
    let mut basis = vec![Mat::identity(n)];
    eb.insert(&basis[0].vectorize());
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let p = g.try_mul(w).expect("square");
                if eb.insert(&p.vectorize()) {
                    next.push(p);
                }
            }
        }
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    basis
}

/// Semidirect and extension constructions.
impl LieAlg {
    /// `a ⊕ span(x_1..x_m)` with `[x_i, v] = D_i v` and `[x_i, x_j] = tau(i, j) ∈ a`.
    ///
    /// Every `D_i` must be a derivation, and the assembled table must satisfy Jacobi.
    pub fn extend(&self, ders: &[(&str, Mat)], tau: &[(usize, usize, Vec<Rat>)]) -> Result<LieAlg> {
        for (label, d) in ders {
            if let Some((i, j)) = self.derivation_defect(d)? {
                return Err(Error::NotADerivation(format!(
                    "ad {label} fails on ({}, {})",
                    self.label(i),
                    self.label(j)
                )));
            }
        }
        let out = self.extend_unchecked(ders, tau)?;
        out.validate()?;
        Ok(out)
    }

    /// Assembles the table of [`LieAlg::extend`] without any validation.
    pub fn extend_unchecked(
        &self,
        ders: &[(&str, Mat)],
        tau: &[(usize, usize, Vec<Rat>)],
    ) -> Result<LieAlg> {
        let n = self.dim();
        let m = ders.len();
        let mut labels = self.labels().to_vec();
        labels.extend(ders.iter().map(|(l, _)| l.to_string()));
        let mut b = self.padded_builder(labels, 0)?;
        for (k, (_, d)) in ders.iter().enumerate() {
            if d.rows() != n || d.cols() != n {
                return Err(Error::DimensionMismatch { expected: n, got: d.rows() });
            }
            for j in 0..n {
                b.set(n + k, j, pad(&d.col(j), 0, m))?;
            }
        }
        for (i, j, v) in tau {
            if *i >= m || *j >= m || v.len() != n {
                return Err(Error::InvalidArgument("tau entry out of range".into()));
            }
            b.set(n + i, n + j, pad(v, 0, m))?;
        }
        b.build()
    }

    /// `s ⋉ a` with basis `s` first; `action[i]` is the derivation of `a` by `s_i`.
    pub fn semidirect(s: &LieAlg, a: &LieAlg, action: &[Mat]) -> Result<LieAlg> {
        if action.len() != s.dim() {
            return Err(Error::DimensionMismatch { expected: s.dim(), got: action.len() });
        }
        for (i, d) in action.iter().enumerate() {
            if let Some((p, q)) = a.derivation_defect(d)? {
                return Err(Error::NotADerivation(format!(
                    "action of {} fails on ({}, {})",
                    s.label(i),
                    a.label(p),
                    a.label(q)
                )));
            }
        }
        let (ns, na) = (s.dim(), a.dim());
        let mut labels = s.labels().to_vec();
        labels.extend(a.labels().iter().cloned());
        let mut b = LieAlgBuilder::new(labels);
        for i in 0..ns {
            for j in i + 1..ns {
                b.set(i, j, pad(s.bracket_basis(i, j), 0, na))?;
            }
            for j in 0..na {
                b.set(i, ns + j, pad(&action[i].col(j), ns, 0))?;
            }
        }
        for i in 0..na {
            for j in i + 1..na {
                b.set(ns + i, ns + j, pad(a.bracket_basis(i, j), ns, 0))?;
            }
        }
        let out = b.build()?;
        out.validate()?;
        Ok(out)
    }

    /// `a ⊕ b` as ideals; labels of `b` are kept unless they collide.
    pub fn direct_sum(a: &LieAlg, b: &LieAlg) -> Result<LieAlg> {
        let mut labels = a.labels().to_vec();
        for l in b.labels() {
            if labels.contains(l) {
                labels.push(format!("{l}'"));
            } else {
                labels.push(l.clone());
            }
        }
        let action = vec![Mat::zeros(b.dim(), b.dim()); a.dim()];
        LieAlg::semidirect(a, b, &action)?.with_labels(labels)
    }

    /// Builder over `labels` holding this table shifted by `offset`, padded with zeros.
    fn padded_builder(&self, labels: Vec<String>, offset: usize) -> Result<LieAlgBuilder> {
        let n = self.dim();
        let extra = labels.len() - n - offset;
        let mut b = LieAlgBuilder::new(labels);
        for i in 0..n {
            for j in i + 1..n {
                b.set(offset + i, offset + j, pad(self.bracket_basis(i, j), offset, extra))?;
            }
        }
        Ok(b)
    }
}

fn pad(v: &[Rat], before: usize, after: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); before];
    out.extend(v.iter().cloned());
    out.extend(std::iter::repeat(Rat::zero()).take(after));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ivec;

    fn n23() -> LieAlg {
        let mut b = LieAlgBuilder::new(["v0", "v1", "w0", "z0", "z1"]);
        b.set_labels("v0", "v1", &[("w0", Rat::one())]).unwrap();
        b.set_labels("v0", "w0", &[("z0", Rat::one())]).unwrap();
        b.set_labels("v1", "w0", &[("z1", Rat::one())]).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn series_and_center() {
        let a = n23();
        let dims: Vec<usize> = a.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![5, 3, 2, 0]);
        assert_eq!(a.nilindex(), Some(3));
        assert_eq!(a.type_of(), 2);
        assert_eq!(a.center(), Subspace::coordinate(5, &[3, 4]));
        assert!(a.is_solvable());
        let ab = LieAlg::abelian(4);
        assert_eq!(ab.center().dim(), 4);
        assert_eq!(ab.nilindex(), Some(1));
    }

    #[test]
    fn quotient_by_central_line() {
        let a = n23();
        let q = a.quotient(&Subspace::coordinate(5, &[3])).unwrap();
        assert_eq!(q.dim(), 4);
        assert_eq!(q.nilindex(), Some(3));
        assert_eq!(q.type_of(), 2);
        assert_eq!(a.quotient(&Subspace::coordinate(5, &[0])), Err(Error::NotAnIdeal));
        assert_eq!(a.quotient(&a.whole()).unwrap().dim(), 0);
    }

    #[test]
    fn extension_by_derivation() {
        let a = n23();
        let d = Mat::diag(&ivec(&[1, 2, 3, 4, 5]));
        let r = a.extend(&[("x", d.clone())], &[]).unwrap();
        assert_eq!(r.dim(), 6);
        assert_eq!(r.bracket_basis(5, 4), ivec(&[0, 0, 0, 0, 5, 0]).as_slice());
        assert!(r.is_solvable() && !r.is_nilpotent());
        assert_eq!(r.nilradical(), Subspace::coordinate(6, &[0, 1, 2, 3, 4]));

        let bad = Mat::diag(&ivec(&[1, 2, 3, 4, 4]));
        assert!(matches!(a.extend(&[("x", bad)], &[]), Err(Error::NotADerivation(_))));
    }

    #[test]
    fn nilradical_of_nilpotent_is_everything() {
        let a = n23();
        assert_eq!(a.nilradical(), a.whole());
        assert_eq!(a.radical(), a.whole());
    }

    #[test]
    fn change_basis_round_trip() {
        let a = n23();
        let basis: Vec<Vec<Rat>> = vec![
            ivec(&[1, 1, 0, 0, 0]),
            ivec(&[0, 1, 0, 0, 0]),
            ivec(&[0, 0, 1, 0, 0]),
            ivec(&[0, 0, 0, 1, 0]),
            ivec(&[0, 0, 0, 1, 1]),
        ];
        let labels = (0..5).map(|i| format!("u{i}")).collect();
        let c = a.change_basis(&basis, labels).unwrap();
        assert!(c.is_lie());
        assert_eq!(c.nilindex(), Some(3));
        assert_eq!(c.center().dim(), 2);
    }
}
