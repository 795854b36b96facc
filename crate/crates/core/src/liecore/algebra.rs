use std::fmt;

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// `table[i * dim + j]` is the coordinate vector of `[b_i, b_j]`. The table
/// is stored in full; antisymmetry is enforced when the builder assembles it.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlg {
    labels: Vec<String>,
    table: Vec<Vec<Rat>>,
    grading: Option<Vec<Vec<usize>>>,
}

/// Basis triples `i < j < k` on which the Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct JacobiDefect {
    pub triples: Vec<DefectTriple>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectTriple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]`, nonzero.
    pub residual: Vec<Rat>,
}

impl JacobiDefect {
    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }
}

/// Accumulates brackets `[b_i, b_j]` and fills in `[b_j, b_i]` by antisymmetry.
#[derive(Clone, Debug)]
pub struct LieAlgBuilder {
    labels: Vec<String>,
    table: Vec<Option<Vec<Rat>>>,
    grading: Option<Vec<Vec<usize>>>,
}

impl LieAlgBuilder {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        LieAlgBuilder { labels, table: vec![None; n * n], grading: None }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidTable(format!("unknown basis label {label:?}")))
    }

    /// Sets `[b_i, b_j] = value`; a later conflicting assignment is an error.
    pub fn set(&mut self, i: usize, j: usize, value: Vec<Rat>) -> Result<&mut Self> {
        let n = self.dim();
        if i >= n || j >= n {
            return Err(Error::InvalidTable(format!("index ({i},{j}) out of range for dim {n}")));
        }
        if value.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: value.len() });
        }
        if i == j {
            if value.iter().any(|c| !c.is_zero()) {
                return Err(Error::InvalidTable(format!("[b_{i}, b_{i}] must be zero")));
            }
            return Ok(self);
        }
        let neg: Vec<Rat> = value.iter().map(|c| -c).collect();
        for (slot, v) in [(i * n + j, value), (j * n + i, neg)] {
            match &self.table[slot] {
                Some(old) if *old != v => {
                    return Err(Error::InvalidTable(format!(
                        "conflicting values for [{}, {}]",
                        self.labels[i], self.labels[j]
                    )))
                }
                _ => self.table[slot] = Some(v),
            }
        }
        Ok(self)
    }

    /// Sets `[b_i, b_j]` from sparse `(index, coefficient)` terms.
    pub fn set_sparse(&mut self, i: usize, j: usize, terms: &[(usize, Rat)]) -> Result<&mut Self> {
        let n = self.dim();
        let mut v = vec![Rat::zero(); n];
        for (k, c) in terms {
            if *k >= n {
                return Err(Error::InvalidTable(format!("term index {k} out of range")));
            }
            v[*k] += c;
        }
        self.set(i, j, v)
    }

    /// Label-based variant of [`LieAlgBuilder::set_sparse`].
    pub fn set_labels(&mut self, a: &str, b: &str, terms: &[(&str, Rat)]) -> Result<&mut Self> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        let mut idx = Vec::with_capacity(terms.len());
        for (l, c) in terms {
            idx.push((self.index_of(l)?, c.clone()));
        }
        self.set_sparse(i, j, &idx)
    }

    pub fn grading(&mut self, blocks: Vec<Vec<usize>>) -> &mut Self {
        self.grading = Some(blocks);
        self
    }

    pub fn build(&self) -> Result<LieAlg> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if let Some(blocks) = &self.grading {
            for &i in blocks.iter().flatten() {
                if i >= n || seen[i] {
                    return Err(Error::InvalidTable("grading blocks do not partition the basis".into()));
                }
                seen[i] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::InvalidTable("grading blocks do not partition the basis".into()));
            }
        }
        let table = self
            .table
            .iter()
            .map(|e| e.clone().unwrap_or_else(|| vec![Rat::zero(); n]))
            .collect();
        Ok(LieAlg { labels: self.labels.clone(), table, grading: self.grading.clone() })
    }
}

impl LieAlg {
    pub fn abelian(dim: usize) -> LieAlg {
        let labels: Vec<String> = (0..dim).map(|i| format!("a{i}")).collect();
        LieAlgBuilder::new(labels).build().expect("abelian table")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Like [`LieAlg::index_of`] but reports an unknown label as an error.
    pub fn idx(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::InvalidArgument(format!("no basis element labelled {label:?}")))
    }

    pub fn grading(&self) -> Option<&[Vec<usize>]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, blocks: Option<Vec<Vec<usize>>>) -> Result<LieAlg> {
        let mut b = self.to_builder();
        if let Some(bl) = blocks.clone() {
            b.grading(bl);
        }
        b.build()?;
        self.grading = blocks;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<LieAlg> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn to_builder(&self) -> LieAlgBuilder {
        let n = self.dim();
        let mut b = LieAlgBuilder::new(self.labels.clone());
        for i in 0..n {
            for j in 0..n {
                if self.table[i * n + j].iter().any(|c| !c.is_zero()) {
                    b.table[i * n + j] = Some(self.table[i * n + j].clone());
                }
            }
        }
        b.grading = self.grading.clone();
        b
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rat] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = Rat::one();
        v
    }

    /// Vector from sparse label terms, e.g. `[("v0", 1), ("z1", 1)]`.
    pub fn vector(&self, terms: &[(&str, Rat)]) -> Result<Vec<Rat>> {
        let mut v = vec![Rat::zero(); self.dim()];
        for (l, c) in terms {
            v[self.idx(l)?] += c;
        }
        Ok(v)
    }

    /// Parses a combination such as `z0 - 1/2 z1 + (3/2)x1 + 2*x0`; `0` is the
    /// zero vector. Accepts the output of [`LieAlg::format_vector`].
    pub fn parse_vector(&self, text: &str) -> Result<Vec<Rat>> {
        let bad = || Error::InvalidArgument(format!("cannot read {text:?} as a combination of basis labels"));
        let mut v = vec![Rat::zero(); self.dim()];
        let mut terms = Vec::new();
        let (mut depth, mut start, mut sign) = (0i32, 0, Rat::one());
        for (i, c) in text.char_indices() {
            match c {
                '[' | '{' | '(' => depth += 1,
                ']' | '}' | ')' => depth -= 1,
                '+' | '-' if depth == 0 => {
                    terms.push((sign.clone(), &text[start..i]));
                    sign = if c == '-' { -Rat::one() } else { Rat::one() };
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push((sign, &text[start..]));
        for (k, (sign, term)) in terms.into_iter().enumerate() {
            let term = term.trim();
            if term.is_empty() {
                if k == 0 {
                    continue;
                }
                return Err(bad());
            }
            let (coeff, label) = match term.strip_prefix('(').and_then(|t| t.split_once(')')) {
                Some((c, l)) => (c.trim(), l),
                None => term.split_at(term.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(term.len())),
            };
            let label = label.trim_start_matches(|c: char| c == '*' || c.is_whitespace());
            let coeff = if coeff.is_empty() { Rat::one() } else { coeff.parse::<Rat>()? };
            if label.is_empty() {
                if coeff.is_zero() {
                    continue;
                }
                return Err(bad());
            }
            v[self.idx(label)?] += sign * coeff;
        }
        Ok(v)
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
        }
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(&self.table[i * n + j]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x = [x, -]`; column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Rat]) -> Result<Mat> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            cols.push(self.bracket(x, &self.basis_vector(j))?);
        }
        Mat::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |r, c| self.table[i * n + c][r].clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Rat::is_zero))
    }

    pub fn jacobi_defect(&self) -> JacobiDefect {
        let n = self.dim();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobi_residual(i, j, k);
                    if r.iter().any(|c| !c.is_zero()) {
                        triples.push(DefectTriple { i, j, k, residual: r });
                    }
                }
            }
        }
        JacobiDefect { triples }
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_defect().is_empty()
    }

    /// Errors with [`Error::JacobiFailure`] when the identity fails anywhere.
    pub fn validate(&self) -> Result<()> {
        let d = self.jacobi_defect();
        match d.triples.first() {
            None => Ok(()),
            Some(t) => Err(Error::JacobiFailure {
                count: d.len(),
                first: format!("{}, {}, {}", self.labels[t.i], self.labels[t.j], self.labels[t.k]),
            }),
        }
    }

    fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            // [[b_a, b_b], b_c] = sum_l c_ab^l [b_l, b_c]
            for (l, coef) in self.table[a * n + b].iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (o, t) in out.iter_mut().zip(&self.table[l * n + c]) {
                    if !t.is_zero() {
                        *o += coef * t;
                    }
                }
            }
        }
        out
    }

    /// Formats a coordinate vector with basis labels, e.g. `3z0 + z1`.
    pub fn format_vector(&self, v: &[Rat]) -> String {
        let mut parts = Vec::new();
        for (c, l) in v.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if mag.is_one() { l.clone() } else { format!("{mag}{l}") };
            let body = if !mag.is_integer() { format!("({mag}){l}") } else { body };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (neg, body)) in parts.into_iter().enumerate() {
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&body);
        }
        s
    }

    /// All nonzero products `[b_i, b_j]`, `i < j`, as text lines.
    pub fn product_lines(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(format!("[{}, {}] = {}", self.labels[i], self.labels[j], self.format_vector(v)));
                }
            }
        }
        out
    }
}

/// Basis line followed by the nonzero products `[a,b] = ...`.
impl fmt::Display for LieAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}: {}", self.dim(), self.labels.join(", "))?;
        for line in self.product_lines() {
            write!(f, "\n{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LieAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlg(dim {}; {})", self.dim(), self.labels.join(", "))?;
        for line in self.product_lines() {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ivec;

    fn heisenberg() -> LieAlg {
        let mut b = LieAlgBuilder::new(["v0", "v1", "w0"]);
        b.set_labels("v0", "v1", &[("w0", Rat::one())]).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn parse_vector_terms() {
        let h = heisenberg();
        assert_eq!(h.parse_vector("v0 - 1/2 w0").unwrap(), vec![Rat::one(), Rat::zero(), Rat::new(-1, 2)]);
        assert_eq!(h.parse_vector("-2*v1+v1").unwrap(), ivec(&[0, -1, 0]));
        assert_eq!(h.parse_vector("0").unwrap(), ivec(&[0, 0, 0]));
        assert_eq!(h.parse_vector("(3/2)v1").unwrap(), vec![Rat::zero(), Rat::new(3, 2), Rat::zero()]);
        assert!(h.parse_vector("v0 +").is_err());
        assert!(h.parse_vector("3").is_err());
        assert!(h.parse_vector("y").is_err());
    }

    #[test]
    fn antisymmetry_filled_in() {
        let h = heisenberg();
        assert_eq!(h.bracket_basis(0, 1), ivec(&[0, 0, 1]).as_slice());
        assert_eq!(h.bracket_basis(1, 0), ivec(&[0, 0, -1]).as_slice());
        let x = ivec(&[1, 2, 3]);
        assert!(h.bracket(&x, &x).unwrap().iter().all(Rat::is_zero));
    }

    #[test]
    fn builder_rejects_bad_tables() {
        let mut b = LieAlgBuilder::new(["a", "b"]);
        assert!(b.set(0, 0, ivec(&[1, 0])).is_err());
        b.set(0, 1, ivec(&[1, 0])).unwrap();
        assert!(b.set(1, 0, ivec(&[1, 0])).is_err());
        assert!(b.set(1, 0, ivec(&[-1, 0])).is_ok());
        assert!(b.grading(vec![vec![0]]).build().is_err());
        assert!(b.grading(vec![vec![1], vec![0]]).build().is_ok());
    }

    #[test]
    fn ad_is_column_convention() {
        let h = heisenberg();
        let ad = h.ad(&h.basis_vector(0)).unwrap();
        assert_eq!(ad, h.ad_basis(0));
        assert_eq!(ad.col(1), ivec(&[0, 0, 1]));
    }

    #[test]
    fn jacobi_detects_failure() {
        assert!(heisenberg().is_lie());
        // [a,b]=b, [a,c]=c, [b,c]=a fails
        let mut b = LieAlgBuilder::new(["a", "b", "c"]);
        b.set_labels("a", "b", &[("b", Rat::one())]).unwrap();
        b.set_labels("a", "c", &[("c", Rat::one())]).unwrap();
        b.set_labels("b", "c", &[("a", Rat::one())]).unwrap();
        let alg = b.build().unwrap();
        let d = alg.jacobi_defect();
        assert_eq!(d.len(), 1);
        assert!(alg.validate().is_err());
    }

    #[test]
    fn formats_vectors() {
        let h = heisenberg();
        assert_eq!(h.format_vector(&[Rat::from(3), Rat::zero(), Rat::from(-1)]), "3v0 - w0");
        assert_eq!(h.format_vector(&[Rat::new(1, 2), Rat::zero(), Rat::zero()]), "(1/2)v0");
        assert_eq!(h.product_lines(), vec!["[v0, v1] = w0".to_string()]);
    }
}
