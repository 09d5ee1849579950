//! Matrix realisations inside gl(m|n).
//!
//! Elements of gl(m|n) are coordinate vectors of length `N²`, `N = m + n`,
//! with index `a*N + b` holding the entry of `E_{ab}` (the unit sending
//! `e_b` to `e_a`). Basis vectors `0..m` of `V` are even, `m..N` odd.

use super::{gate, AlgebraKind, BuildOptions};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::scalar::{Field, Scalar};
use crate::superlie::{BasisLabel, Element, Sparse, Subspace, SuperAlgebra};

#[derive(Clone, Debug)]
pub struct Realization {
    field: Field,
    m: usize,
    n: usize,
    basis: Vec<Sparse>,
    pivots: Vec<usize>,
    mod_identity: bool,
    gram: Option<Vec<Vector>>,
}

impl Realization {
    pub fn even_dim(&self) -> usize {
        self.m
    }

    pub fn odd_dim(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn vector_parity(&self, a: usize) -> u8 {
        u8::from(a >= self.m)
    }

    /// Gram matrix of the invariant form (osp only).
    pub fn gram(&self) -> Option<&[Vector]> {
        self.gram.as_deref()
    }

    /// Whether the algebra is a quotient by the identity (psl).
    pub fn is_quotient(&self) -> bool {
        self.mod_identity
    }

    fn project(&self, z: &mut [Scalar]) {
        if self.mod_identity {
            let n = self.size();
            let c = z[0].clone();
            if !c.is_zero() {
                for a in 0..n {
                    z[a * n + a] = &z[a * n + a] - &c;
                }
            }
        }
    }

    /// Coordinates of a gl matrix in the algebra basis, `None` when it is not
    /// in the algebra (for psl: not in sl(n|n)).
    pub fn coords_of(&self, z: &[Scalar]) -> Option<Vector> {
        let mut z = z.to_vec();
        self.project(&mut z);
        let c: Vector = self.pivots.iter().map(|&p| z[p].clone()).collect();
        let mut back = vec![self.field.zero(); z.len()];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (k, v) in b {
                back[*k].add_mul_assign(ci, v);
            }
        }
        (back == z).then_some(c)
    }

    pub fn element_of(&self, alg: &SuperAlgebra, z: &[Scalar]) -> Result<Option<Element>> {
        match self.coords_of(z) {
            Some(c) => Ok(Some(alg.element(c)?)),
            None => Ok(None),
        }
    }

    /// Sparse gl matrix of basis element `j`.
    pub fn basis_matrix(&self, j: usize) -> &Sparse {
        &self.basis[j]
    }

    /// The gl matrix (lift) of an element.
    pub fn matrix_of(&self, x: &Element) -> Vector {
        let n = self.size();
        let mut z = vec![self.field.zero(); n * n];
        for (ci, b) in x.coeffs().iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (k, v) in b {
                z[*k].add_mul_assign(ci, v);
            }
        }
        z
    }
}

/// `X·Y` for matrices in coordinate form.
pub(crate) fn mat_mul(field: Field, n: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = vec![field.zero(); n * n];
    for a in 0..n {
        for b in 0..n {
            let xab = &x[a * n + b];
            if xab.is_zero() {
                continue;
            }
            for c in 0..n {
                let ybc = &y[b * n + c];
                if !ybc.is_zero() {
                    out[a * n + c].add_mul_assign(xab, ybc);
                }
            }
        }
    }
    out
}

fn sparse_mul(field: Field, n: usize, x: &Sparse, y: &Sparse, sign: &Scalar, out: &mut [Scalar]) {
    let _ = field;
    for (i, a) in x {
        let (r, k) = (i / n, i % n);
        for (j, b) in y {
            if j / n == k {
                out[r * n + j % n].add_mul_assign(&(a * sign), b);
            }
        }
    }
}

fn from_rows(
    field: Field,
    kind: AlgebraKind,
    m: usize,
    n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    label: impl Fn(usize, usize, usize) -> String,
    mod_identity: bool,
    gram: Option<Vec<Vector>>,
) -> Result<SuperAlgebra> {
    let size = m + n;
    let vpar = |a: usize| u8::from(a >= m);
    let basis: Vec<Sparse> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect())
        .collect();
    let labels: Vec<BasisLabel> = pivots
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let (a, b) = (p / size, p % size);
            BasisLabel::new(label(i, a, b), (vpar(a) + vpar(b)) % 2)
        })
        .collect();
    for (b, l) in basis.iter().zip(&labels) {
        if b.iter().any(|(k, _)| (vpar(k / size) + vpar(k % size)) % 2 != l.parity) {
            return Err(Error::Construction(format!("{} is not homogeneous", l.name)));
        }
    }
    let real = Realization { field, m, n, basis, pivots, mod_identity, gram };
    let d = labels.len();
    let one = field.one();
    let mut table = Vec::with_capacity(d * (d + 1) / 2);
    let mut z = vec![field.zero(); size * size];
    for j in 0..d {
        for i in 0..=j {
            z.iter_mut().for_each(|c| *c = field.zero());
            sparse_mul(field, size, &real.basis[i], &real.basis[j], &one, &mut z);
            let s = if labels[i].parity == 1 && labels[j].parity == 1 { one.clone() } else { -&one };
            // XY - (-1)^{|X||Y|} YX
            sparse_mul(field, size, &real.basis[j], &real.basis[i], &s, &mut z);
            let c = real.coords_of(&z).ok_or_else(|| {
                Error::Construction(format!("[{}, {}] leaves the subspace", labels[i].name, labels[j].name))
            })?;
            table.push(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
        }
    }
    let mut alg = SuperAlgebra::from_table(field, kind, labels, table)?;
    alg.realization = Some(real);
    Ok(alg)
}

fn unit_label(_: usize, a: usize, b: usize) -> String {
    format!("e({},{})", a + 1, b + 1)
}

fn sl_label(_: usize, a: usize, b: usize) -> String {
    if a == b {
        format!("h({})", a + 1)
    } else {
        unit_label(0, a, b)
    }
}

pub(crate) fn gl(m: usize, n: usize, field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    let kind = AlgebraKind::Gl { m, n };
    if m + n == 0 {
        return Err(Error::BadParams("gl(0|0) is empty".into()));
    }
    gate(&kind, field, opts)?;
    let size = m + n;
    let full = Subspace::full(field, size * size);
    from_rows(field, kind, m, n, full.rows().to_vec(), full.pivots().to_vec(), unit_label, false, None)
}

fn supertrace_row(field: Field, m: usize, n: usize) -> Vector {
    let size = m + n;
    let mut r = vec![field.zero(); size * size];
    for a in 0..size {
        r[a * size + a] = if a < m { field.one() } else { -field.one() };
    }
    r
}

pub(crate) fn sl(m: usize, n: usize, field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    let kind = AlgebraKind::Sl { m, n };
    if m == n {
        return Err(Error::BadParams("sl(m|n) needs m != n; use psl for m = n".into()));
    }
    gate(&kind, field, opts)?;
    let size = m + n;
    let s = Subspace::kernel(field, &[supertrace_row(field, m, n)], size * size);
    from_rows(field, kind, m, n, s.rows().to_vec(), s.pivots().to_vec(), sl_label, false, None)
}

pub(crate) fn psl(n: usize, field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    let kind = AlgebraKind::Psl { n };
    if n < 2 {
        return Err(Error::BadParams("psl(n|n) needs n > 1".into()));
    }
    let p = field.characteristic();
    if p != 0 && (n as u64) % p == 0 {
        return Err(Error::PslBadPrime { n, p });
    }
    gate(&kind, field, opts)?;
    let size = 2 * n;
    // complement of <I> inside sl(n|n): the hyperplane with vanishing (1,1) entry
    let mut first = vec![field.zero(); size * size];
    first[0] = field.one();
    let s = Subspace::kernel(field, &[supertrace_row(field, n, n), first], size * size);
    from_rows(field, kind, n, n, s.rows().to_vec(), s.pivots().to_vec(), sl_label, true, None)
}

/// The standard form: identity on V0, `J = [[0,1],[-1,0]]` blocks on V1.
pub(crate) fn standard_gram(field: Field, m: usize, n2: usize) -> Vec<Vector> {
    let size = m + n2;
    let mut g = vec![vec![field.zero(); size]; size];
    for a in 0..m {
        g[a][a] = field.one();
    }
    for k in 0..n2 / 2 {
        let (a, b) = (m + 2 * k, m + 2 * k + 1);
        g[a][b] = field.one();
        g[b][a] = -field.one();
    }
    g
}

pub(crate) fn osp(m: usize, n2: usize, field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    osp_with_form(m, n2, standard_gram(field, m, n2), field, opts)
}

pub(crate) fn osp_with_form(
    m: usize,
    n2: usize,
    gram: Vec<Vector>,
    field: Field,
    opts: BuildOptions,
) -> Result<SuperAlgebra> {
    let kind = AlgebraKind::Osp { m, n2 };
    if m == 0 || n2 == 0 || n2 % 2 == 1 {
        return Err(Error::BadParams(format!("osp({m}|{n2}) needs m >= 1 and a positive even n2")));
    }
    if field.characteristic() == 2 {
        return Err(Error::BadPrime { family: kind.to_string(), p: 2 });
    }
    gate(&kind, field, opts)?;
    let size = m + n2;
    let par = |a: usize| u8::from(a >= m);
    if gram.len() != size || gram.iter().any(|r| r.len() != size) {
        return Err(Error::BadParams("form has the wrong size".into()));
    }
    for a in 0..size {
        for b in 0..size {
            let g = &gram[a][b];
            if par(a) != par(b) && !g.is_zero() {
                return Err(Error::BadParams("form is not even".into()));
            }
            let want = if par(a) == 1 { -&gram[b][a] } else { gram[b][a].clone() };
            if *g != want {
                return Err(Error::BadParams("form is not supersymmetric".into()));
            }
        }
    }
    if linalg::rank(&gram, size) != size {
        return Err(Error::BadParams("form is degenerate".into()));
    }
    // B(X e_c, e_d) + (-1)^{|X||c|} B(e_c, X e_d) = 0 for each parity class of X
    let mut rows = Vec::new();
    for px in 0..2u8 {
        for c in 0..size {
            for d in 0..size {
                let mut r = vec![field.zero(); size * size];
                let sign = if px * par(c) == 1 { -field.one() } else { field.one() };
                for a in 0..size {
                    if (par(a) + par(c)) % 2 == px && !gram[a][d].is_zero() {
                        r[a * size + c] = &r[a * size + c] + &gram[a][d];
                    }
                    if (par(a) + par(d)) % 2 == px && !gram[c][a].is_zero() {
                        r[a * size + d] = &r[a * size + d] + &(&sign * &gram[c][a]);
                    }
                }
                if r.iter().any(|x| !x.is_zero()) {
                    rows.push(r);
                }
            }
        }
    }
    let s = Subspace::kernel(field, &rows, size * size);
    let label = |_: usize, a: usize, b: usize| format!("o({},{})", a + 1, b + 1);
    from_rows(field, kind, m, n2, s.rows().to_vec(), s.pivots().to_vec(), label, false, Some(gram))
}

pub fn build_gl(m: usize, n: usize, field: Field) -> Result<SuperAlgebra> {
    gl(m, n, field, BuildOptions::default())
}

pub fn build_sl(m: usize, n: usize, field: Field) -> Result<SuperAlgebra> {
    sl(m, n, field, BuildOptions::default())
}

pub fn build_psl(n: usize, field: Field) -> Result<SuperAlgebra> {
    psl(n, field, BuildOptions::default())
}

pub fn build_osp(m: usize, n2: usize, field: Field) -> Result<SuperAlgebra> {
    osp(m, n2, field, BuildOptions::default())
}

/// osp for an explicit even supersymmetric Gram matrix on `V = V0 ⊕ V1`.
pub fn build_osp_with_form(m: usize, n2: usize, gram: Vec<Vector>, field: Field) -> Result<SuperAlgebra> {
    osp_with_form(m, n2, gram, field, BuildOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let f5 = Field::prime(5).unwrap();
        let g = build_gl(2, 1, f5).unwrap();
        assert_eq!((g.dim(), g.even_dim(), g.odd_dim()), (9, 5, 4));
        assert_eq!(build_sl(2, 1, f5).unwrap().dim(), 8);
        assert_eq!(build_psl(2, f5).unwrap().dim(), 14);
        let o = build_osp(3, 2, f5).unwrap();
        assert_eq!((o.dim(), o.even_dim(), o.odd_dim()), (12, 6, 6));
        assert_eq!(build_osp(1, 2, Field::prime(7).unwrap()).unwrap().dim(), 5);
    }

    #[test]
    fn gating() {
        assert!(build_osp(4, 2, Field::prime(3).unwrap()).is_ok());
        assert!(matches!(build_osp(4, 2, Field::prime(2).unwrap()), Err(Error::BadPrime { .. })));
        assert!(matches!(build_osp(3, 2, Field::prime(2).unwrap()), Err(Error::BadPrime { .. })));
        assert_eq!(build_psl(3, Field::prime(3).unwrap()).unwrap_err(), Error::PslBadPrime { n: 3, p: 3 });
        assert!(matches!(build_sl(2, 2, Field::prime(5).unwrap()), Err(Error::BadParams(_))));
    }

    #[test]
    fn realised_brackets_satisfy_jacobi() {
        let f = Field::prime(7).unwrap();
        for a in [build_sl(2, 1, f).unwrap(), build_psl(2, f).unwrap(), build_osp(3, 2, f).unwrap()] {
            assert!(a.check_super_jacobi().is_empty(), "{}", a.kind());
        }
    }
}
