//! Dense exact row reduction over a [`Field`].

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

/// Brings `rows` to reduced row echelon form in place, dropping zero rows.
/// Pivots are chosen by fixed column order and first nonzero row.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let f = -&other[c];
            for (x, y) in other[c..].iter_mut().zip(prow[c..].iter()) {
                if !y.is_zero() {
                    x.add_mul_assign(&f, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : M x = 0}` where `m` lists the rows of M.
pub fn nullspace(field: Field, m: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[f] = field.one();
        for (row, &c) in rows.iter().zip(&pivots) {
            v[c] = -&row[f];
        }
        out.push(v);
    }
    out
}

/// One solution of `M x = b`, or `None` when inconsistent. Free variables are zero.
pub fn solve(field: Field, m: &[Vector], b: &[Scalar], ncols: usize) -> Option<Vector> {
    let mut rows: Vec<Vector> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &c) in rows.iter().zip(&pivots) {
        x[c] = row[ncols].clone();
    }
    Some(x)
}

/// Rank of the matrix whose rows are given.
pub fn rank(m: &[Vector], ncols: usize) -> usize {
    let mut rows = m.to_vec();
    rref(&mut rows, ncols).len()
}

/// Coordinates with respect to an arbitrary independent family.
pub struct Coordinates {
    field: Field,
    ncols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    transform: Vec<Vector>,
}

impl Coordinates {
    pub fn new(field: Field, basis: &[Vector], ncols: usize) -> Result<Self> {
        let k = basis.len();
        let mut rows: Vec<Vector> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut r = v.clone();
                r.extend((0..k).map(|j| if i == j { field.one() } else { field.zero() }));
                r
            })
            .collect();
        let pivots = rref(&mut rows, ncols);
        if pivots.len() != k {
            return Err(Error::Construction("family is linearly dependent".into()));
        }
        let transform = rows.iter().map(|r| r[ncols..].to_vec()).collect();
        let rows = rows.into_iter().map(|mut r| {
            r.truncate(ncols);
            r
        });
        Ok(Coordinates { field, ncols, rows: rows.collect(), pivots, transform })
    }

    /// Coefficients `c` with `v = Σ c_i basis_i`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let k = self.pivots.len();
        let mut c = vec![self.field.zero(); k];
        let mut resid = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let a = resid[p].clone();
            if a.is_zero() {
                continue;
            }
            let na = -&a;
            for (x, y) in resid.iter_mut().zip(&self.rows[r]) {
                x.add_mul_assign(&na, y);
            }
            for (ci, t) in c.iter_mut().zip(&self.transform[r]) {
                ci.add_mul_assign(&a, t);
            }
        }
        if resid.iter().any(|x| !x.is_zero()) {
            return None;
        }
        debug_assert_eq!(resid.len(), self.ncols);
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = Field::prime(5).unwrap();
        let m = vec![v(f, &[1, 2, 3]), v(f, &[2, 4, 6])];
        let ns = nullspace(f, &m, 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            let dot = m[0].iter().zip(x).fold(f.zero(), |a, (p, q)| &a + &(p * q));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_and_coordinates() {
        let q = Field::rationals();
        let m = vec![v(q, &[2, 1]), v(q, &[1, 3])];
        let x = solve(q, &m, &v(q, &[3, 4]), 2).unwrap();
        assert_eq!(x, v(q, &[1, 1]));
        let c = Coordinates::new(q, &m, 2).unwrap();
        assert_eq!(c.coords(&v(q, &[3, 4])).unwrap(), v(q, &[1, 1]));
        assert!(solve(q, &[v(q, &[1, 1]), v(q, &[2, 2])], &v(q, &[1, 3]), 2).is_none());
    }
}
