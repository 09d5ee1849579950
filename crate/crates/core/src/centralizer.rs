//! Centralizers `g^e`, their τ-graded pieces and centers, computed as
//! kernels, together with the closed-form ξ bases of the classical
//! families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::constructors::matrix::mat_mul;
use crate::constructors::{AlgebraKind, Realization};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::orbits::{OrbitSpec, Partition};
use crate::scalar::{Field, Scalar};
use crate::superlie::{Element, Subspace, SuperAlgebra};

fn require_even(alg: &SuperAlgebra, e: &Element) -> Result<()> {
    if e.support().any(|i| alg.parity(i) == 1) {
        return Err(Error::OddElement);
    }
    Ok(())
}

/// `g^e = ker ad(e)`.
pub fn centralizer(alg: &SuperAlgebra, e: &Element) -> Result<Subspace> {
    require_even(alg, e)?;
    let ad = alg.ad_matrix(e)?;
    Ok(Subspace::kernel(alg.field(), &ad, alg.dim()))
}

/// `g^e(j) = g^e ∩ g(j)` for every degree `j` carrying basis vectors.
/// Empty degrees are kept so callers can read off vanishing.
pub fn graded_centralizer(alg: &SuperAlgebra, o: &OrbitSpec) -> Result<BTreeMap<i64, Subspace>> {
    require_even(alg, &o.representative)?;
    let ad = alg.ad_matrix(&o.representative)?;
    let (field, n) = (alg.field(), alg.dim());
    let mut out = BTreeMap::new();
    for (j, idx) in o.degrees() {
        let sub: Vec<Vector> = ad.iter().map(|r| idx.iter().map(|&c| r[c].clone()).collect()).collect();
        let vs: Vec<Vector> = linalg::nullspace(field, &sub, idx.len())
            .into_iter()
            .map(|k| {
                let mut v = vec![field.zero(); n];
                for (c, x) in idx.iter().zip(k) {
                    v[*c] = x;
                }
                v
            })
            .collect();
        out.insert(j, Subspace::span(field, n, &vs)?);
    }
    Ok(out)
}

/// Elements of `s` supercommuting with all of `s`.
pub fn center_of(alg: &SuperAlgebra, s: &Subspace) -> Result<Subspace> {
    let (field, n) = (alg.field(), alg.dim());
    let basis = s.rows();
    let d = basis.len();
    let mut system: Vec<Vector> = Vec::with_capacity(d * n);
    let brackets: Vec<Vec<Vector>> = basis
        .iter()
        .map(|y| basis.iter().map(|x| alg.bracket_coords(x, y)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    for col in &brackets {
        for r in 0..n {
            let row: Vector = col.iter().map(|v| v[r].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                system.push(row);
            }
        }
    }
    let ker = linalg::nullspace(field, &system, d);
    let vs: Vec<Vector> = ker.iter().map(|c| combine(field, n, c, basis)).collect();
    Subspace::span(field, n, &vs)
}

pub fn center_of_centralizer(alg: &SuperAlgebra, e: &Element) -> Result<Subspace> {
    let ge = centralizer(alg, e)?;
    center_of(alg, &ge)
}

pub(crate) fn combine(field: Field, n: usize, c: &[Scalar], basis: &[Vector]) -> Vector {
    let mut v = vec![field.zero(); n];
    for (ci, b) in c.iter().zip(basis) {
        if ci.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            if !y.is_zero() {
                x.add_mul_assign(ci, y);
            }
        }
    }
    v
}

/// `ξ_i^{j,k}`: sends `v_i` to `e^k v_j` and commutes with `e`. Block
/// indices are 0-based positions in [`Partition::blocks`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XiLabel {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl XiLabel {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        XiLabel { i, j, k }
    }

    pub fn parity(&self, lam: &Partition) -> u8 {
        (lam.blocks()[self.i].parity + lam.blocks()[self.j].parity) % 2
    }

    /// Whether `k` lies in the window `max(λ_j − λ_i, 0) ≤ k ≤ λ_j − 1`.
    pub fn in_window(&self, lam: &Partition) -> bool {
        let b = lam.blocks();
        let (li, lj) = (b[self.i].size, b[self.j].size);
        self.k + li >= lj && self.k < lj
    }
}

impl fmt::Display for XiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi_{}^{{{},{}}}", self.i + 1, self.j + 1, self.k)
    }
}

/// An integer combination of ξ maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiCombo {
    pub terms: Vec<(i64, XiLabel)>,
}

impl XiCombo {
    pub fn single(x: XiLabel) -> Self {
        XiCombo { terms: vec![(1, x)] }
    }
}

impl fmt::Display for XiCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (c, x)) in self.terms.iter().enumerate() {
            match (n, *c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A closed-form basis together with any conventions chosen on the way.
#[derive(Clone, Debug)]
pub struct ClosedForm<T> {
    pub vectors: Vec<T>,
    pub notes: Vec<String>,
}

/// Element of a predicted center basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterTerm {
    Identity,
    Power(usize),
    Xi(XiCombo),
}

impl fmt::Display for CenterTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterTerm::Identity => write!(f, "I"),
            CenterTerm::Power(1) => write!(f, "e"),
            CenterTerm::Power(l) => write!(f, "e^{l}"),
            CenterTerm::Xi(c) => write!(f, "{c}"),
        }
    }
}

fn gl_window(lam: &Partition) -> Vec<XiLabel> {
    let r = lam.blocks().len();
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..lam.blocks()[j].size {
                let x = XiLabel::new(i, j, k);
                if x.in_window(lam) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Every `ξ_i^{j,k}` in the membership window.
pub fn closed_form_basis_gl(lam: &Partition) -> Vec<XiCombo> {
    gl_window(lam).into_iter().map(XiCombo::single).collect()
}

fn p_part(p: u64, mut a: usize, mut b: usize) -> usize {
    if p == 0 {
        return 1;
    }
    let p = p as usize;
    let mut q = 1;
    while a % p == 0 && b % p == 0 {
        a /= p;
        b /= p;
        q *= p;
    }
    q
}

/// `(λ_j/p^a) ξ_i^{i,0} − (−1)^{ī+j̄} (λ_i/p^a) ξ_j^{j,0}`, supertraceless.
fn diag_combo(lam: &Partition, field: Field, i: usize, j: usize) -> XiCombo {
    let b = lam.blocks();
    let q = p_part(field.characteristic(), b[i].size, b[j].size);
    let s = if (b[i].parity + b[j].parity) % 2 == 0 { -1 } else { 1 };
    XiCombo {
        terms: vec![
            ((b[j].size / q) as i64, XiLabel::new(i, i, 0)),
            (s * (b[i].size / q) as i64, XiLabel::new(j, j, 0)),
        ],
    }
}

fn diag_vector(lam: &Partition, field: Field, c: &XiCombo) -> Vector {
    let mut v = vec![field.zero(); lam.blocks().len()];
    for (a, x) in &c.terms {
        v[x.i] = &v[x.i] + &field.from_i64(*a);
    }
    v
}

/// Chooses diagonal combinations greedily from `candidates` until their
/// coefficient vectors (together with `seed`) reach rank `target`.
fn pick_diagonal(
    lam: &Partition,
    field: Field,
    seed: Vec<Vector>,
    candidates: Vec<(XiCombo, bool)>,
    target: usize,
    notes: &mut Vec<String>,
) -> Vec<XiCombo> {
    let r = lam.blocks().len();
    let mut rows = seed;
    let mut chosen = Vec::new();
    for (c, adjacent) in candidates {
        if linalg::rank(&rows, r) == target {
            break;
        }
        let mut next = rows.clone();
        next.push(diag_vector(lam, field, &c));
        if linalg::rank(&next, r) > linalg::rank(&rows, r) {
            if !adjacent {
                notes.push(format!("adjacent diagonal combinations are dependent mod p; used {c}"));
            }
            rows = next;
            chosen.push(c);
        } else if adjacent {
            notes.push(format!("dropped dependent combination {c}"));
        }
    }
    chosen
}

fn fallback_pivot(lam: &Partition, field: Field) -> Option<usize> {
    let p = field.characteristic() as usize;
    lam.blocks().iter().position(|b| p == 0 || b.size % p != 0)
}

fn diagonal_candidates(lam: &Partition, field: Field, skip_first: bool) -> Vec<(XiCombo, bool)> {
    let r = lam.blocks().len();
    let start = usize::from(skip_first);
    let mut out: Vec<(XiCombo, bool)> =
        (start..r.saturating_sub(1)).map(|i| (diag_combo(lam, field, i, i + 1), true)).collect();
    if skip_first && r >= 2 {
        out.push((diag_combo(lam, field, 0, 1), false));
    }
    if let Some(q) = fallback_pivot(lam, field) {
        out.extend((0..r).filter(|&i| i != q).map(|i| (diag_combo(lam, field, i, q), false)));
    }
    out
}

/// Every prime divides every part: the sl centralizer equals the gl one.
fn p_divides_all(lam: &Partition, field: Field) -> bool {
    let p = field.characteristic() as usize;
    p != 0 && lam.blocks().iter().all(|b| b.size % p == 0)
}

/// The sl basis: off-diagonal and nilpotent ξ plus adjacent supertraceless
/// combinations of the `ξ_i^{i,0}`; the gl basis when `p` divides every part.
pub fn closed_form_basis_sl(lam: &Partition, field: Field) -> ClosedForm<XiCombo> {
    if p_divides_all(lam, field) {
        return ClosedForm { vectors: closed_form_basis_gl(lam), notes: Vec::new() };
    }
    let mut notes = Vec::new();
    let mut vectors: Vec<XiCombo> =
        gl_window(lam).into_iter().filter(|x| x.i != x.j || x.k > 0).map(XiCombo::single).collect();
    let r = lam.blocks().len();
    let cands = diagonal_candidates(lam, field, false);
    vectors.extend(pick_diagonal(lam, field, Vec::new(), cands, r - 1, &mut notes));
    ClosedForm { vectors, notes }
}

/// The psl(n|n) basis: the sl basis without the first diagonal combination
/// (the identity is zero in the quotient).
pub fn closed_form_basis_psl(lam: &Partition, field: Field) -> Result<ClosedForm<XiCombo>> {
    let n = lam.even_sum();
    let p = field.characteristic();
    if lam.odd_sum() != n {
        return Err(Error::BadPartition(format!("{lam} is not a partition of ({n}|{n})")));
    }
    if p != 0 && n as u64 % p == 0 {
        return Err(Error::PslBadPrime { n, p });
    }
    let mut notes = Vec::new();
    let mut vectors: Vec<XiCombo> =
        gl_window(lam).into_iter().filter(|x| x.i != x.j || x.k > 0).map(XiCombo::single).collect();
    let r = lam.blocks().len();
    let ones = vec![vec![field.one(); r]];
    let cands = diagonal_candidates(lam, field, true);
    vectors.extend(pick_diagonal(lam, field, ones, cands, r - 1, &mut notes));
    Ok(ClosedForm { vectors, notes })
}

/// Realises an integer ξ combination as a gl matrix in the Jordan basis of `lam`.
pub fn xi_matrix(lam: &Partition, field: Field, c: &XiCombo) -> Vector {
    let n = lam.even_sum() + lam.odd_sum();
    let starts = lam.starts();
    let b = lam.blocks();
    let mut z = vec![field.zero(); n * n];
    for (a, x) in &c.terms {
        let a = field.from_i64(*a);
        for l in 0..b[x.i].size {
            if x.k + l >= b[x.j].size {
                break;
            }
            let idx = (starts[x.j] + x.k + l) * n + starts[x.i] + l;
            z[idx] = &z[idx] + &a;
        }
    }
    z
}

fn realization(alg: &SuperAlgebra) -> Result<&Realization> {
    alg.realization()
        .ok_or_else(|| Error::BadPartition(format!("{} has no matrix realisation", alg.kind())))
}

fn check_shape(alg: &SuperAlgebra, lam: &Partition) -> Result<()> {
    lam.check_for(alg.kind())?;
    let real = realization(alg)?;
    if real.size() != lam.even_sum() + lam.odd_sum() {
        return Err(Error::BadPartition(format!("{lam} does not fit {}", alg.kind())));
    }
    Ok(())
}

/// Elements of `alg` for the given ξ combinations.
pub fn realize(alg: &SuperAlgebra, lam: &Partition, combos: &[XiCombo]) -> Result<Vec<Element>> {
    check_shape(alg, lam)?;
    let real = realization(alg)?;
    combos
        .iter()
        .map(|c| {
            real.element_of(alg, &xi_matrix(lam, alg.field(), c))?
                .ok_or_else(|| Error::Construction(format!("{c} is not in {}", alg.kind())))
        })
        .collect()
}

/// Picks the sign `s` for which `first + s·second` lies in the algebra.
fn resolve_sign(alg: &SuperAlgebra, lam: &Partition, first: XiLabel, second: XiLabel) -> Result<XiCombo> {
    let real = realization(alg)?;
    let ok: Vec<XiCombo> = [1, -1]
        .into_iter()
        .map(|s| XiCombo { terms: vec![(1, first), (s, second)] })
        .filter(|c| real.coords_of(&xi_matrix(lam, alg.field(), c)).is_some())
        .collect();
    match ok.as_slice() {
        [c] => Ok(c.clone()),
        _ => Err(Error::AmbiguousSign(format!("{first} and {second}: {} signs fit", ok.len()))),
    }
}

/// The basis `S0 ∪ S1 ∪ S2` of `osp^e`, with the signs of `S2` fixed by
/// membership in the algebra. `alg` must carry the form adapted to `lam`.
pub fn closed_form_basis_osp(alg: &SuperAlgebra, lam: &Partition) -> Result<ClosedForm<XiCombo>> {
    if !matches!(alg.kind(), AlgebraKind::Osp { .. }) {
        return Err(Error::BadParams(format!("{} is not orthosymplectic", alg.kind())));
    }
    check_shape(alg, lam)?;
    let star = lam.osp_pairing()?;
    let b = lam.blocks();
    let real = realization(alg)?;
    let mut vectors = Vec::new();
    for (i, bi) in b.iter().enumerate() {
        for k in 0..bi.size {
            if (k % 2 == 1) == (bi.parity == 0) {
                let c = XiCombo::single(XiLabel::new(i, star[i], bi.size - 1 - k));
                if real.coords_of(&xi_matrix(lam, alg.field(), &c)).is_none() {
                    return Err(Error::Construction(format!("{c} is not in {}", alg.kind())));
                }
                vectors.push(c);
            }
        }
    }
    let mut seen = BTreeSet::new();
    for i in 0..b.len() {
        for j in 0..b.len() {
            if star[i] == j {
                continue;
            }
            for k in 0..b[i].size.min(b[j].size) {
                let key = (i, j, k);
                let twin = (star[j], star[i], k);
                if seen.contains(&twin) {
                    continue;
                }
                seen.insert(key);
                let first = XiLabel::new(i, j, b[j].size - 1 - k);
                let second = XiLabel::new(star[j], star[i], b[i].size - 1 - k);
                vectors.push(resolve_sign(alg, lam, first, second)?);
            }
        }
    }
    Ok(ClosedForm { vectors, notes: Vec::new() })
}

/// Singled-out blocks (odd total multiplicity, decreasing sizes) and the
/// remaining blocks grouped in pairs, as used by the osp center.
pub fn osp_center_grouping(lam: &Partition) -> (Vec<usize>, Vec<(usize, usize)>) {
    let b = lam.blocks();
    let mut sizes: Vec<usize> = b.iter().map(|x| x.size).collect();
    sizes.dedup();
    let mut single = Vec::new();
    let mut pairs = Vec::new();
    for s in sizes {
        let mut idx: Vec<usize> = (0..b.len()).filter(|&i| b[i].size == s).collect();
        if idx.len() % 2 == 1 {
            let want = u8::from(s % 2 == 0);
            let pos = idx.iter().position(|&i| b[i].parity == want).expect("a self-paired block exists");
            single.push(idx.remove(pos));
        }
        pairs.extend(idx.chunks(2).map(|c| (c[0], c[1])));
    }
    (single, pairs)
}

/// Whether `ξ_1^{2,λ2−1} ± ξ_2^{1,λ1−1}` joins the osp center: at least two
/// singled-out parts, `λ2` above every paired part, and the largest
/// singled-out block even.
pub fn first_bullet(lam: &Partition) -> bool {
    let (single, pairs) = osp_center_grouping(lam);
    let b = lam.blocks();
    single.len() >= 2
        && pairs.first().map_or(true, |p| b[single[1]].size > b[p.0].size)
        && b[single[0]].parity == 0
}

/// The first-bullet condition with the parity clause as printed: both top
/// blocks even when `a ≥ 3`, opposite parities when `a = 2`.
pub fn first_bullet_as_printed(lam: &Partition) -> bool {
    let (single, pairs) = osp_center_grouping(lam);
    let b = lam.blocks();
    let a = single.len();
    if a < 2 || pairs.first().is_some_and(|p| b[single[1]].size <= b[p.0].size) {
        return false;
    }
    let (p1, p2) = (b[single[0]].parity, b[single[1]].parity);
    (a >= 3 && p1 == 0 && p2 == 0) || (a == 2 && p1 != p2)
}

/// The predicted basis of `z(g^e)` for gl, sl, psl and osp.
pub fn closed_form_center(alg: &SuperAlgebra, lam: &Partition) -> Result<ClosedForm<CenterTerm>> {
    check_shape(alg, lam)?;
    let field = alg.field();
    let top = lam.largest();
    let powers = |step: usize| (1..top).step_by(step).map(CenterTerm::Power);
    let mut notes = Vec::new();
    let vectors = match alg.kind() {
        AlgebraKind::Gl { .. } => std::iter::once(CenterTerm::Identity).chain(powers(1)).collect(),
        AlgebraKind::Sl { m, n } => {
            let p = field.characteristic() as usize;
            let with_i = p != 0 && m.abs_diff(*n) % p == 0;
            with_i.then_some(CenterTerm::Identity).into_iter().chain(powers(1)).collect()
        }
        AlgebraKind::Psl { n } => {
            let p = field.characteristic();
            if p != 0 && *n as u64 % p == 0 {
                return Err(Error::HypothesisViolation(format!("psl({n}|{n}) with p = {p} dividing n")));
            }
            powers(1).collect()
        }
        AlgebraKind::Osp { .. } => {
            if field.characteristic() == 2 {
                return Err(Error::HypothesisViolation("osp needs p != 2".into()));
            }
            let mut out: Vec<CenterTerm> = powers(2).collect();
            let (single, pairs) = osp_center_grouping(lam);
            let b = lam.blocks();
            let size = |i: usize| b[i].size;
            let par = |i: usize| b[i].parity;
            let second_pair = pairs.get(1).map(|p| size(p.0));
            if first_bullet(lam) {
                let (s1, s2) = (single[0], single[1]);
                let first = XiLabel::new(s1, s2, size(s2) - 1);
                let second = XiLabel::new(s2, s1, size(s1) - 1);
                out.push(CenterTerm::Xi(resolve_sign(alg, lam, first, second)?));
                notes.push("first exceptional vector present".into());
            }
            if let Some(&(u, w)) = pairs.first() {
                let l = size(u);
                let below = single.first().map_or(true, |&s| size(s) < l);
                let strict = second_pair.map_or(true, |m| l > m);
                if below && strict && par(u) == 0 && l % 2 == 1 {
                    let first = XiLabel::new(u, w, l - 1);
                    let second = XiLabel::new(w, u, l - 1);
                    out.push(CenterTerm::Xi(resolve_sign(alg, lam, first, second)?));
                    notes.push("second exceptional vector present".into());
                }
            }
            out
        }
        other => return Err(Error::BadParams(format!("{other} has no closed-form center"))),
    };
    Ok(ClosedForm { vectors, notes })
}

/// Elements of `alg` for a predicted center basis.
pub fn realize_center(alg: &SuperAlgebra, lam: &Partition, terms: &[CenterTerm]) -> Result<Vec<Element>> {
    check_shape(alg, lam)?;
    let real = realization(alg)?;
    let field = alg.field();
    let n = real.size();
    let e_terms: Vec<(i64, XiLabel)> =
        (0..lam.blocks().len()).filter(|&i| lam.blocks()[i].size > 1).map(|i| (1, XiLabel::new(i, i, 1))).collect();
    let e = xi_matrix(lam, field, &XiCombo { terms: e_terms });
    let mut id = vec![field.zero(); n * n];
    for a in 0..n {
        id[a * n + a] = field.one();
    }
    terms
        .iter()
        .map(|t| {
            let z = match t {
                CenterTerm::Identity => id.clone(),
                CenterTerm::Power(l) => (1..*l).fold(e.clone(), |acc, _| mat_mul(field, n, &acc, &e)),
                CenterTerm::Xi(c) => xi_matrix(lam, field, c),
            };
            real.element_of(alg, &z)?
                .ok_or_else(|| Error::Construction(format!("{t} is not in {}", alg.kind())))
        })
        .collect()
}

/// Span of the given elements.
pub fn span_of(alg: &SuperAlgebra, xs: &[Element]) -> Result<Subspace> {
    let vs: Vec<Vector> = xs.iter().map(|x| x.coeffs().to_vec()).collect();
    Subspace::span(alg.field(), alg.dim(), &vs)
}

/// Closed-form basis and center of a classical orbit compared with the
/// kernel oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCheck {
    pub basis_matches: bool,
    pub center_matches: bool,
    pub notes: Vec<String>,
}

pub fn closed_form_check(alg: &SuperAlgebra, lam: &Partition, e: &Element) -> Result<ClosedFormCheck> {
    let basis = match alg.kind() {
        AlgebraKind::Gl { .. } => ClosedForm { vectors: closed_form_basis_gl(lam), notes: Vec::new() },
        AlgebraKind::Sl { .. } => closed_form_basis_sl(lam, alg.field()),
        AlgebraKind::Psl { .. } => closed_form_basis_psl(lam, alg.field())?,
        AlgebraKind::Osp { .. } => closed_form_basis_osp(alg, lam)?,
        other => return Err(Error::BadParams(format!("{other} has no closed-form centralizer"))),
    };
    let ge = centralizer(alg, e)?;
    let xs = realize(alg, lam, &basis.vectors)?;
    let basis_matches = xs.len() == ge.dim() && span_of(alg, &xs)? == ge;
    let z = center_of(alg, &ge)?;
    let pred = closed_form_center(alg, lam)?;
    let zs = realize_center(alg, lam, &pred.vectors)?;
    let center_matches = zs.len() == z.dim() && span_of(alg, &zs)? == z;
    let mut notes = basis.notes;
    notes.extend(pred.notes);
    Ok(ClosedFormCheck { basis_matches, center_matches, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_d21, build_gl, build_psl, build_sl};
    use crate::orbits::{nilpotent_from_partition, orbit_by_label, osp_orbit};
    use crate::BuildOptions;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn check_classical(alg: &SuperAlgebra, lam: &Partition, basis: &ClosedForm<XiCombo>) {
        let o = nilpotent_from_partition(alg, lam).unwrap();
        let ge = centralizer(alg, &o.representative).unwrap();
        let xs = realize(alg, lam, &basis.vectors).unwrap();
        assert_eq!(xs.len(), ge.dim(), "{lam} size");
        assert_eq!(span_of(alg, &xs).unwrap(), ge, "{lam} span");
        let z = center_of(alg, &ge).unwrap();
        let pred = closed_form_center(alg, lam).unwrap();
        let zs = realize_center(alg, lam, &pred.vectors).unwrap();
        assert_eq!(zs.len(), z.dim(), "{lam} center size");
        assert_eq!(span_of(alg, &zs).unwrap(), z, "{lam} center");
    }

    #[test]
    fn gl_and_sl_worked_instances() {
        let f = fp(7);
        let lam = Partition::parse("5,2|3").unwrap();
        assert_eq!(closed_form_basis_gl(&lam).len(), 24);
        let g = build_gl(7, 3, f).unwrap();
        check_classical(&g, &lam, &ClosedForm { vectors: closed_form_basis_gl(&lam), notes: vec![] });
        let s = build_sl(7, 3, f).unwrap();
        let b = closed_form_basis_sl(&lam, f);
        assert_eq!(b.vectors.len(), 23);
        check_classical(&s, &lam, &b);

        let lam = Partition::parse("3|2").unwrap();
        let s = build_sl(3, 2, fp(5)).unwrap();
        let b = closed_form_basis_sl(&lam, fp(5));
        assert_eq!(b.vectors.len(), 8);
        check_classical(&s, &lam, &b);
    }

    #[test]
    fn sl_all_parts_divisible() {
        let f = fp(2);
        let lam = Partition::parse("2,2|2").unwrap();
        let b = closed_form_basis_sl(&lam, f);
        for i in 0..3 {
            assert!(b.vectors.contains(&XiCombo::single(XiLabel::new(i, i, 0))));
        }
        let s = build_sl(4, 2, f).unwrap();
        check_classical(&s, &lam, &b);
    }

    #[test]
    fn sl_dependent_adjacent_pairs() {
        let f = fp(2);
        let lam = Partition::parse("4|1,1").unwrap();
        let b = closed_form_basis_sl(&lam, f);
        let s = build_sl(4, 2, f).unwrap();
        check_classical(&s, &lam, &b);
    }

    #[test]
    fn psl_instances() {
        let f = fp(5);
        for s in ["3|3", "2,1|2,1", "1,1,1|3", "2,1|1,1,1"] {
            let lam = Partition::parse(s).unwrap();
            let g = build_psl(3, f).unwrap();
            check_classical(&g, &lam, &closed_form_basis_psl(&lam, f).unwrap());
        }
        let lam = Partition::parse("3|3").unwrap();
        let g = build_psl(3, f).unwrap();
        assert_eq!(closed_form_center(&g, &lam).unwrap().vectors, vec![CenterTerm::Power(1), CenterTerm::Power(2)]);
        assert!(matches!(closed_form_basis_psl(&lam, fp(3)), Err(Error::PslBadPrime { .. })));
    }

    #[test]
    fn osp_instances() {
        let f = fp(5);
        for s in ["3|2,2", "1|2", "3,1,1|2", "2,2|1,1", "5,3,1|2", "3,3|4", "1|3,3", "3,1|2,2"] {
            let lam = Partition::parse(s).unwrap();
            let (a, o) = osp_orbit(&lam, f, BuildOptions::default()).unwrap();
            let b = closed_form_basis_osp(&a, &lam).unwrap();
            let ge = centralizer(&a, &o.representative).unwrap();
            let xs = realize(&a, &lam, &b.vectors).unwrap();
            assert_eq!(xs.len(), ge.dim(), "{s}");
            assert_eq!(span_of(&a, &xs).unwrap(), ge, "{s}");
            let z = center_of(&a, &ge).unwrap();
            let pred = closed_form_center(&a, &lam).unwrap();
            let zs = realize_center(&a, &lam, &pred.vectors).unwrap();
            assert_eq!(span_of(&a, &zs).unwrap(), z, "{s} center");
        }
    }

    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for k in (1..=n.min(max)).rev() {
            for mut r in partitions(n - k, k) {
                r.insert(0, k);
                out.push(r);
            }
        }
        out
    }

    #[test]
    fn osp_center_sweep() {
        let f = fp(5);
        let mut disagreements = 0;
        for m in 1..=5 {
            for n2 in [2, 4] {
                for a in partitions(m, m) {
                    for b in partitions(n2, n2) {
                        let lam = Partition::new(a.clone(), b).unwrap();
                        if !lam.osp_admissible() {
                            continue;
                        }
                        let (alg, o) = osp_orbit(&lam, f, BuildOptions::default()).unwrap();
                        let z = center_of_centralizer(&alg, &o.representative).unwrap();
                        let pred = closed_form_center(&alg, &lam).unwrap();
                        let zs = realize_center(&alg, &lam, &pred.vectors).unwrap();
                        assert_eq!(span_of(&alg, &zs).unwrap(), z, "{lam}");
                        disagreements += usize::from(first_bullet(&lam) != first_bullet_as_printed(&lam));
                    }
                }
            }
        }
        assert!(disagreements > 0);
        assert!(first_bullet_as_printed(&Partition::parse("1|2").unwrap()));
        assert!(!first_bullet(&Partition::parse("1|2").unwrap()));
    }

    #[test]
    fn exceptional_spot_checks() {
        let f = fp(7);
        let d = build_d21(2, f).unwrap();
        let e = d.parse("E1+E2+E3").unwrap();
        let ge = centralizer(&d, &e).unwrap();
        assert_eq!(ge.dim(), 6);
        let want = ["E1", "E2", "E3", "v(1,1,1)", "v(1,1,-1)-v(-1,1,1)", "v(1,-1,1)-v(-1,1,1)"];
        let xs: Vec<Element> = want.iter().map(|s| d.parse(s).unwrap()).collect();
        assert_eq!(span_of(&d, &xs).unwrap(), ge);
        assert!(center_of_centralizer(&d, &d.zero()).unwrap().is_zero());
        let o = orbit_by_label(&d, "E1+E2+E3").unwrap();
        let gr = graded_centralizer(&d, &o).unwrap();
        assert_eq!(gr.values().map(Subspace::dim).sum::<usize>(), 6);
        assert!(centralizer(&d, &d.parse("v(1,1,1)").unwrap()).is_err());
    }
}
