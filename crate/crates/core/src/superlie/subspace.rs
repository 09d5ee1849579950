use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::scalar::{Field, Scalar};

/// A subspace of `field^dim` held in canonical reduced row echelon form, so
/// two subspaces are equal exactly when their rows are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, dim: usize) -> Self {
        Subspace { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, dim: usize) -> Self {
        Self::coordinate(field, dim, 0..dim)
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(field: Field, dim: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        let mut axes: Vec<usize> = axes.into_iter().collect();
        axes.sort_unstable();
        axes.dedup();
        let rows = axes
            .iter()
            .map(|&a| {
                let mut r = vec![field.zero(); dim];
                r[a] = field.one();
                r
            })
            .collect();
        Subspace { field, dim, rows, pivots: axes }
    }

    pub fn span(field: Field, dim: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.len() != dim {
                return Err(Error::AlgebraMismatch);
            }
            if v.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        let mut rows = vectors.to_vec();
        let pivots = linalg::rref(&mut rows, dim);
        Ok(Subspace { field, dim, rows, pivots })
    }

    /// Kernel of the matrix with the given rows.
    pub fn kernel(field: Field, matrix: &[Vector], ncols: usize) -> Self {
        let ns = linalg::nullspace(field, matrix, ncols);
        Subspace::span(field, ncols, &ns).expect("nullspace vectors are well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.dim != other.dim {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// What remains of `v` after clearing the pivot columns.
    fn residue(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let a = -&r[p];
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.add_mul_assign(&a, y);
                }
            }
        }
        r
    }

    pub fn member(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.residue(v).iter().all(Scalar::is_zero))
    }

    /// Coefficients of `v` against the echelon rows (read off at the pivots).
    pub fn coords(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.member(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.field, self.dim, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        // a·S = b·T  <=>  (a, b) in the kernel of [S^T | -T^T]
        let k = self.dim();
        let l = other.dim();
        let mut m = vec![vec![self.field.zero(); k + l]; self.dim];
        for (i, r) in self.rows.iter().enumerate() {
            for (c, x) in r.iter().enumerate() {
                m[c][i] = x.clone();
            }
        }
        for (j, r) in other.rows.iter().enumerate() {
            for (c, x) in r.iter().enumerate() {
                m[c][k + j] = -x;
            }
        }
        let ns = linalg::nullspace(self.field, &m, k + l);
        let vecs: Vec<Vector> = ns
            .iter()
            .map(|ab| {
                let mut v = vec![self.field.zero(); self.dim];
                for (a, r) in ab[..k].iter().zip(&self.rows) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(r) {
                        x.add_mul_assign(a, y);
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.dim, &vecs)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for r in &other.rows {
            if !self.member(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
