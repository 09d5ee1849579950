//! Lie superalgebras given by a labelled homogeneous basis and a sparse
//! table of structure constants.

mod expr;
mod json;
pub mod subspace;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::constructors::{AlgebraKind, Realization};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalar::{Field, Scalar};

pub use subspace::Subspace;

/// `(index, coefficient)` pairs with nonzero coefficients, sorted by index.
pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub name: String,
    pub parity: u8,
}

impl BasisLabel {
    pub fn new(name: impl Into<String>, parity: u8) -> Self {
        BasisLabel { name: name.into(), parity }
    }
}

/// Integer weights of every basis vector under one torus element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusWeights {
    pub name: String,
    pub weights: Vec<i64>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    id: u64,
    field: Field,
    kind: AlgebraKind,
    basis: Vec<BasisLabel>,
    table: Vec<Sparse>,
    index: HashMap<String, usize>,
    aliases: HashMap<String, Sparse>,
    pub(crate) realization: Option<Realization>,
    pub(crate) torus: Vec<TorusWeights>,
    notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    alg: u64,
    coeffs: Vector,
}

impl Element {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vector {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn same(&self, o: &Element) -> Result<()> {
        if self.alg != o.alg || self.coeffs.len() != o.coeffs.len() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Element) -> Result<Element> {
        self.same(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(Element { alg: self.alg, coeffs })
    }

    pub fn sub(&self, o: &Element) -> Result<Element> {
        self.same(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Ok(Element { alg: self.alg, coeffs })
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { alg: self.alg, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }
}

fn tri(i: usize, j: usize) -> usize {
    debug_assert!(i <= j);
    j * (j + 1) / 2 + i
}

impl SuperAlgebra {
    /// Builds an algebra from the upper-triangular table `[b_i, b_j]`, `i <= j`,
    /// indexed as returned by [`SuperAlgebra::pair_index`].
    pub fn from_table(
        field: Field,
        kind: AlgebraKind,
        basis: Vec<BasisLabel>,
        table: Vec<Sparse>,
    ) -> Result<Self> {
        let n = basis.len();
        if table.len() != n * (n + 1) / 2 {
            return Err(Error::Construction("structure table has the wrong size".into()));
        }
        let mut index = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            if b.parity > 1 {
                return Err(Error::Construction(format!("bad parity on {}", b.name)));
            }
            if index.insert(b.name.clone(), i).is_some() {
                return Err(Error::Construction(format!("duplicate label {}", b.name)));
            }
        }
        for j in 0..n {
            for i in 0..=j {
                let want = (basis[i].parity + basis[j].parity) % 2;
                for (k, c) in &table[tri(i, j)] {
                    if *k >= n || c.is_zero() || c.field() != field {
                        return Err(Error::Construction("malformed structure table entry".into()));
                    }
                    if basis[*k].parity != want {
                        return Err(Error::Construction(format!(
                            "[{}, {}] leaves parity {}",
                            basis[i].name, basis[j].name, want
                        )));
                    }
                }
                if i == j && basis[i].parity == 0 && !table[tri(i, j)].is_empty() {
                    return Err(Error::Construction(format!(
                        "[{0}, {0}] must vanish for even {0}",
                        basis[i].name
                    )));
                }
            }
        }
        Ok(SuperAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field,
            kind,
            basis,
            table,
            index,
            aliases: HashMap::new(),
            realization: None,
            torus: Vec::new(),
            notes: Vec::new(),
        })
    }

    pub fn pair_index(i: usize, j: usize) -> usize {
        tri(i.min(j), i.max(j))
    }

    pub(crate) fn set_aliases(&mut self, aliases: HashMap<String, Sparse>) {
        self.aliases = aliases;
    }

    pub(crate) fn push_note(&mut self, note: String) {
        self.notes.push(note);
    }

    /// Remarks recorded during construction (e.g. normalisation freedom).
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn even_dim(&self) -> usize {
        self.basis.iter().filter(|b| b.parity == 0).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.basis[i].parity
    }

    pub fn torus(&self) -> &[TorusWeights] {
        &self.torus
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn zero(&self) -> Element {
        Element { alg: self.id, coeffs: vec![self.field.zero(); self.dim()] }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut x = self.zero();
        x.coeffs[i] = self.field.one();
        x
    }

    pub fn element(&self, coeffs: Vector) -> Result<Element> {
        if coeffs.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        if coeffs.iter().any(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Element { alg: self.id, coeffs })
    }

    fn owns(&self, x: &Element) -> Result<()> {
        if x.alg != self.id || x.coeffs.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Element named by a basis label or alias.
    pub fn label(&self, name: &str) -> Result<Element> {
        if let Some(&i) = self.index.get(name) {
            return Ok(self.basis_element(i));
        }
        if let Some(sp) = self.aliases.get(name) {
            let mut x = self.zero();
            for (k, c) in sp {
                x.coeffs[*k] = c.clone();
            }
            return Ok(x);
        }
        Err(Error::UnknownLabel(name.to_string()))
    }

    pub(crate) fn label_names(&self) -> impl Iterator<Item = &str> {
        self.basis.iter().map(|b| b.name.as_str()).chain(self.aliases.keys().map(|s| s.as_str()))
    }

    /// Parses expressions such as `"E+x1"`, `"6*v-1.e3 - v1.e-1"`,
    /// `"E+(x2+x5)"` or `"[v1.e0-v-1.e1, v1.e0-v-1.e1]"`.
    pub fn parse(&self, s: &str) -> Result<Element> {
        expr::parse(self, s)
    }

    /// `Some(parity)` for homogeneous nonzero elements, `None` otherwise.
    pub fn element_parity(&self, x: &Element) -> Option<u8> {
        let mut ps = x.support().map(|i| self.basis[i].parity);
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    /// `[b_i, b_j]` as a sign and the stored entry.
    #[inline]
    pub fn basis_bracket(&self, i: usize, j: usize) -> (bool, &Sparse) {
        if i <= j {
            (false, &self.table[tri(i, j)])
        } else {
            // [b_i,b_j] = -(-1)^{|i||j|} [b_j,b_i]
            let both_odd = self.basis[i].parity == 1 && self.basis[j].parity == 1;
            (!both_odd, &self.table[tri(j, i)])
        }
    }

    #[inline]
    fn accumulate(&self, i: usize, j: usize, c: &Scalar, out: &mut [Scalar]) {
        let (neg, entry) = self.basis_bracket(i, j);
        let c = if neg { -c } else { c.clone() };
        for (k, v) in entry {
            out[*k].add_mul_assign(&c, v);
        }
    }

    fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim()];
        let ys: Vec<usize> = (0..y.len()).filter(|&j| !y[j].is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ys {
                self.accumulate(i, j, &(xi * &y[j]), &mut out);
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(Element { alg: self.id, coeffs: self.bracket_vec(&x.coeffs, &y.coeffs) })
    }

    /// Bracket of raw coordinate vectors (used by subspace computations).
    pub fn bracket_coords(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.bracket_vec(x, y))
    }

    /// Matrix of `ad x`; column `j` holds the coordinates of `[x, b_j]`.
    pub fn ad_matrix(&self, x: &Element) -> Result<Vec<Vector>> {
        self.owns(x)?;
        let n = self.dim();
        let mut m = vec![vec![self.field.zero(); n]; n];
        let mut col = vec![self.field.zero(); n];
        for j in 0..n {
            col.iter_mut().for_each(|c| *c = self.field.zero());
            for (i, xi) in x.coeffs.iter().enumerate() {
                if !xi.is_zero() {
                    self.accumulate(i, j, xi, &mut col);
                }
            }
            for k in 0..n {
                m[k][j] = col[k].clone();
            }
        }
        Ok(m)
    }

    /// Exhaustive super-Jacobi check over all ordered basis triples. Returns
    /// the violating triples `(i, j, k)`.
    pub fn check_super_jacobi(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        let mut acc = vec![self.field.zero(); n];
        let mut touched = Vec::new();
        let par = |i: usize| self.basis[i].parity as u32;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let sign_neg = par(a) * par(c) == 1;
                        let (neg, inner) = self.basis_bracket(b, c);
                        for (m, v) in inner {
                            let coef = if neg != sign_neg { -v } else { v.clone() };
                            let (neg2, outer) = self.basis_bracket(a, *m);
                            let coef = if neg2 { -coef } else { coef };
                            for (t, w) in outer {
                                acc[*t].add_mul_assign(&coef, w);
                                touched.push(*t);
                            }
                        }
                    }
                    let mut ok = true;
                    for &t in &touched {
                        if !acc[t].is_zero() {
                            ok = false;
                        }
                        acc[t] = self.field.zero();
                    }
                    touched.clear();
                    if !ok {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Checks that the stored table is parity compatible and that every
    /// derived `(j, i)` entry equals `-(-1)^{|i||j|}` times the `(i, j)` one.
    pub fn check_anticommutativity(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let a = self.bracket_vec(&self.basis_element(i).coeffs, &self.basis_element(j).coeffs);
                let b = self.bracket_vec(&self.basis_element(j).coeffs, &self.basis_element(i).coeffs);
                let s = if self.basis[i].parity == 1 && self.basis[j].parity == 1 {
                    self.field.one()
                } else {
                    -self.field.one()
                };
                if a.iter().zip(&b).any(|(x, y)| x != &(&s * y)) {
                    return false;
                }
                let want = (self.basis[i].parity + self.basis[j].parity) % 2;
                if a.iter().enumerate().any(|(k, x)| !x.is_zero() && self.basis[k].parity != want) {
                    return false;
                }
            }
        }
        true
    }

    /// Human readable form, e.g. `"2*E1 - v(1,1,1)"`.
    pub fn format(&self, x: &Element) -> String {
        self.format_coords(&x.coeffs)
    }

    pub fn format_coords(&self, x: &[Scalar]) -> String {
        let mut s = String::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c.to_i64() {
                Some(v) if v < 0 => (true, (-c).to_string()),
                _ if c.is_negative_rep() => (true, (-c).to_string()),
                _ => (false, c.to_string()),
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                let _ = write!(s, "{mag}*");
            }
            s.push_str(&self.basis[i].name);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json::to_json(self)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json values serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        json::from_json(v)
    }

    /// Reduces a rational algebra into `field`. Fails with `DivisionByZero`
    /// when a structure constant has a denominator divisible by p.
    pub(crate) fn reduce_to(&self, field: Field) -> Result<SuperAlgebra> {
        let conv = |sp: &Sparse| -> Result<Sparse> {
            let mut out = Vec::with_capacity(sp.len());
            for (k, c) in sp {
                let x = match c.as_rational() {
                    Some(q) => field.from_rational(q)?,
                    None if c.field() == field => c.clone(),
                    None => return Err(Error::FieldMismatch),
                };
                if !x.is_zero() {
                    out.push((*k, x));
                }
            }
            Ok(out)
        };
        let table = self.table.iter().map(conv).collect::<Result<Vec<_>>>()?;
        let mut out = SuperAlgebra::from_table(field, self.kind.clone(), self.basis.clone(), table)?;
        out.aliases =
            self.aliases.iter().map(|(k, v)| Ok((k.clone(), conv(v)?))).collect::<Result<_>>()?;
        out.torus = self.torus.clone();
        out.notes = self.notes.clone();
        Ok(out)
    }

    /// Replaces one structure constant; only meant for mutation tests.
    #[doc(hidden)]
    pub fn corrupt_entry(&mut self, i: usize, j: usize) {
        let t = &mut self.table[tri(i.min(j), i.max(j))];
        if let Some((_, c)) = t.first_mut() {
            *c = -&*c;
        }
    }
}
