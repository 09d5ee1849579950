//! Nilpotent orbit data: Jordan partitions for the matrix families, the
//! catalog of exceptional representatives, and the grading by an associated
//! cocharacter.

use std::collections::BTreeMap;
use std::fmt;

use crate::constructors::matrix::{self, Realization};
use crate::constructors::{AlgebraKind, BuildOptions};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalar::Field;
use crate::superlie::{Element, Subspace, SuperAlgebra};

/// One Jordan block: its size and the parity of the space it lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub size: usize,
    pub parity: u8,
}

/// A partition `(p_1,…,p_r | q_1,…,q_s)`: blocks on the even and on the odd
/// part of the natural module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    even_parts: Vec<usize>,
    odd_parts: Vec<usize>,
    blocks: Vec<Block>,
}

impl Partition {
    pub fn new(mut even_parts: Vec<usize>, mut odd_parts: Vec<usize>) -> Result<Self> {
        if even_parts.iter().chain(&odd_parts).any(|&p| p == 0) {
            return Err(Error::BadPartition("parts must be positive".into()));
        }
        even_parts.sort_unstable_by(|a, b| b.cmp(a));
        odd_parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut blocks: Vec<Block> = even_parts
            .iter()
            .map(|&size| Block { size, parity: 0 })
            .chain(odd_parts.iter().map(|&size| Block { size, parity: 1 }))
            .collect();
        // larger first; on ties the even block comes first
        blocks.sort_by(|a, b| b.size.cmp(&a.size).then(a.parity.cmp(&b.parity)));
        Ok(Partition { even_parts, odd_parts, blocks })
    }

    /// Parses `"5,2|3"`, `"3^2,1|"` or `"|2,2"`. A string without `|` has
    /// only even parts.
    pub fn parse(s: &str) -> Result<Self> {
        let (even, odd) = s.split_once('|').unwrap_or((s, ""));
        Partition::new(parse_parts(even)?, parse_parts(odd)?)
    }

    pub fn even_parts(&self) -> &[usize] {
        &self.even_parts
    }

    pub fn odd_parts(&self) -> &[usize] {
        &self.odd_parts
    }

    /// Blocks in merged order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn even_sum(&self) -> usize {
        self.even_parts.iter().sum()
    }

    pub fn odd_sum(&self) -> usize {
        self.odd_parts.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.blocks.first().map_or(0, |b| b.size)
    }

    /// Even sizes on the even side and odd sizes on the odd side occur with
    /// even multiplicity.
    pub fn osp_admissible(&self) -> bool {
        let even_ok = count(&self.even_parts).iter().all(|(s, c)| s % 2 == 1 || c % 2 == 0);
        let odd_ok = count(&self.odd_parts).iter().all(|(s, c)| s % 2 == 0 || c % 2 == 0);
        even_ok && odd_ok
    }

    pub fn check_for(&self, kind: &AlgebraKind) -> Result<()> {
        let (m, n) = (self.even_sum(), self.odd_sum());
        let fits = match *kind {
            AlgebraKind::Gl { m: a, n: b } | AlgebraKind::Sl { m: a, n: b } => (m, n) == (a, b),
            AlgebraKind::Psl { n: a } => (m, n) == (a, a),
            AlgebraKind::Osp { m: a, n2 } => {
                if (m, n) == (a, n2) && !self.osp_admissible() {
                    return Err(Error::BadPartition(format!("{self} is not an orthosymplectic Jordan type")));
                }
                (m, n) == (a, n2)
            }
            _ => return Err(Error::BadPartition(format!("{kind} orbits are labelled by the catalog"))),
        };
        if !fits {
            return Err(Error::BadPartition(format!("{self} is not a partition of ({m}|{n}) for {kind}")));
        }
        Ok(())
    }

    /// The involution `i ↦ i*` pairing blocks under the form: a block is its
    /// own partner when even with odd size or odd with even size, otherwise
    /// consecutive equal blocks are paired.
    pub fn osp_pairing(&self) -> Result<Vec<usize>> {
        if !self.osp_admissible() {
            return Err(Error::BadPartition(format!("{self} is not an orthosymplectic Jordan type")));
        }
        let mut star = vec![usize::MAX; self.blocks.len()];
        let mut i = 0;
        while i < self.blocks.len() {
            let b = self.blocks[i];
            if self_paired(b) {
                star[i] = i;
                i += 1;
            } else {
                star[i] = i + 1;
                star[i + 1] = i;
                i += 2;
            }
        }
        Ok(star)
    }

    /// First basis position of each block: even blocks fill `0..m`, odd
    /// blocks `m..`, both in merged order.
    pub fn starts(&self) -> Vec<usize> {
        let mut next = [0, self.even_sum()];
        self.blocks
            .iter()
            .map(|b| {
                let s = next[b.parity as usize];
                next[b.parity as usize] += b.size;
                s
            })
            .collect()
    }

    /// Weight `2k + 1 − λ_i` of `e^k v_i` at each basis position.
    pub fn vector_weights(&self) -> Vec<i64> {
        let mut w = vec![0; self.even_sum() + self.odd_sum()];
        for (b, s) in self.blocks.iter().zip(self.starts()) {
            for k in 0..b.size {
                w[s + k] = 2 * k as i64 + 1 - b.size as i64;
            }
        }
        w
    }
}

fn self_paired(b: Block) -> bool {
    (b.parity == 0) == (b.size % 2 == 1)
}

fn count(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((s, c)) if *s == p => *c += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::BadPartition(format!("cannot read parts {s:?}"));
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (base, exp) = item.split_once('^').unwrap_or((item, "1"));
        let base: usize = base.trim().parse().map_err(|_| bad())?;
        let exp: usize = exp.trim().parse().map_err(|_| bad())?;
        out.extend(std::iter::repeat(base).take(exp));
    }
    Ok(out)
}

/// `[3,3,1]` as `"3^2,1"`.
pub fn exponent_form(parts: &[usize]) -> String {
    count(parts)
        .into_iter()
        .map(|(s, c)| if c == 1 { s.to_string() } else { format!("{s}^{c}") })
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.even_parts), join(&self.odd_parts))
    }
}

/// A nilpotent representative with the weights of an associated cocharacter
/// on every basis label.
#[derive(Clone, Debug)]
pub struct OrbitSpec {
    pub label: String,
    pub representative: Element,
    pub cochar_weights: Vec<i64>,
    pub partition: Option<Partition>,
}

impl OrbitSpec {
    pub fn new(
        alg: &SuperAlgebra,
        label: String,
        representative: Element,
        cochar_weights: Vec<i64>,
        partition: Option<Partition>,
    ) -> Result<Self> {
        if cochar_weights.len() != alg.dim() || representative.coeffs().len() != alg.dim() {
            return Err(Error::AlgebraMismatch);
        }
        if alg.element_parity(&representative) == Some(1) {
            return Err(Error::OddElement);
        }
        if let Some(i) = representative.support().find(|&i| cochar_weights[i] != 2) {
            return Err(Error::Construction(format!(
                "{label}: {} has cocharacter weight {}, not 2",
                alg.basis()[i].name, cochar_weights[i]
            )));
        }
        Ok(OrbitSpec { label, representative, cochar_weights, partition })
    }

    /// Basis indices grouped by degree.
    pub fn degrees(&self) -> BTreeMap<i64, Vec<usize>> {
        let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, &w) in self.cochar_weights.iter().enumerate() {
            out.entry(w).or_default().push(i);
        }
        out
    }
}

/// `ad(e)` is nilpotent: the images `ad(e)^k g` shrink to zero.
pub fn is_nilpotent(alg: &SuperAlgebra, e: &Element) -> Result<bool> {
    let ad = alg.ad_matrix(e)?;
    let n = alg.dim();
    let mut image = Subspace::full(alg.field(), n);
    loop {
        if image.is_zero() {
            return Ok(true);
        }
        let next: Vec<Vector> = image
            .rows()
            .iter()
            .map(|v| (0..n).map(|r| dot(&ad[r], v, alg.field())).collect())
            .collect();
        let next = Subspace::span(alg.field(), n, &next)?;
        if next.dim() == image.dim() {
            return Ok(false);
        }
        image = next;
    }
}

fn dot(a: &[crate::Scalar], b: &[crate::Scalar], field: Field) -> crate::Scalar {
    let mut s = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s.add_mul_assign(x, y);
        }
    }
    s
}

fn realization(alg: &SuperAlgebra) -> Result<&Realization> {
    alg.realization()
        .ok_or_else(|| Error::BadPartition(format!("{} has no matrix realisation", alg.kind())))
}

/// The Jordan-block representative `e^k v_i ↦ e^{k+1} v_i` of a partition.
/// For osp the algebra's form must be the one adapted to the partition (see
/// [`osp_orbit`]); for F(4) a partition of 7 names the so7 orbit.
pub fn nilpotent_from_partition(alg: &SuperAlgebra, lam: &Partition) -> Result<OrbitSpec> {
    if *alg.kind() == AlgebraKind::F4 {
        if !lam.odd_parts.is_empty() || lam.even_sum() != 7 {
            return Err(Error::BadPartition(format!("{lam} is not a partition of 7")));
        }
        let label = format!("e({})", exponent_form(&lam.even_parts));
        let mut o = orbit_by_label(alg, &label)?;
        o.partition = Some(lam.clone());
        return Ok(o);
    }
    lam.check_for(alg.kind())?;
    let real = realization(alg)?;
    let field = alg.field();
    if matches!(alg.kind(), AlgebraKind::Osp { .. }) {
        let g = osp_adapted_gram(lam, field)?;
        if real.gram() != Some(&g[..]) {
            return Err(Error::BadPartition(format!(
                "the form of {} is not adapted to {lam}; build the algebra with osp_orbit",
                alg.kind()
            )));
        }
    }
    let n = real.size();
    let mut z = vec![field.zero(); n * n];
    for (b, s) in lam.blocks.iter().zip(lam.starts()) {
        for k in 0..b.size.saturating_sub(1) {
            z[(s + k + 1) * n + s + k] = field.one();
        }
    }
    let e = real
        .element_of(alg, &z)?
        .ok_or_else(|| Error::BadPartition(format!("the Jordan form of {lam} is not in {}", alg.kind())))?;
    let w = lam.vector_weights();
    let weights = matrix_weights(alg, real, &w)?;
    OrbitSpec::new(alg, lam.to_string(), e, weights, Some(lam.clone()))
}

/// Weight of each basis matrix under `diag(w)`.
fn matrix_weights(alg: &SuperAlgebra, real: &Realization, w: &[i64]) -> Result<Vec<i64>> {
    let n = real.size();
    (0..alg.dim())
        .map(|j| {
            let mut ws = real.basis_matrix(j).iter().map(|(k, _)| w[k / n] - w[k % n]);
            let first = ws.next().unwrap_or(0);
            if ws.all(|x| x == first) {
                Ok(first)
            } else {
                Err(Error::Construction(format!("{} is not homogeneous", alg.basis()[j].name)))
            }
        })
        .collect()
}

/// The supersymmetric form for which the Jordan basis of `lam` is adapted:
/// `B(e^k v_i, e^{λ−1−k} v_{i*}) = (−1)^k`, with the reversed pairing
/// signed so the form is symmetric on V0 and alternating on V1.
pub fn osp_adapted_gram(lam: &Partition, field: Field) -> Result<Vec<Vector>> {
    let star = lam.osp_pairing()?;
    let starts = lam.starts();
    let size = lam.even_sum() + lam.odd_sum();
    let mut g = vec![vec![field.zero(); size]; size];
    let sign = |k: usize| if k % 2 == 0 { field.one() } else { -field.one() };
    for (i, b) in lam.blocks.iter().enumerate() {
        let l = b.size;
        let j = star[i];
        for k in 0..l {
            let (a, c) = (starts[i] + k, starts[j] + l - 1 - k);
            g[a][c] = if j >= i {
                sign(k)
            } else {
                let s = sign(l - 1 - k);
                if b.parity == 0 { s } else { -s }
            };
        }
    }
    Ok(g)
}

/// osp(m|2n) built on the form adapted to `lam`, together with the orbit.
pub fn osp_orbit(lam: &Partition, field: Field, opts: BuildOptions) -> Result<(SuperAlgebra, OrbitSpec)> {
    if !lam.osp_admissible() {
        return Err(Error::BadPartition(format!("{lam} is not an orthosymplectic Jordan type")));
    }
    let (m, n2) = (lam.even_sum(), lam.odd_sum());
    let g = osp_adapted_gram(lam, field)?;
    let alg = matrix::osp_with_form(m, n2, g, field, opts)?;
    let o = nilpotent_from_partition(&alg, lam)?;
    Ok((alg, o))
}

struct Entry {
    label: String,
    rep: String,
    cochar: Vec<i64>,
}

fn entry(label: &str, rep: &str, cochar: &[i64]) -> Entry {
    Entry { label: label.into(), rep: rep.into(), cochar: cochar.to_vec() }
}

fn catalog_entries(kind: &AlgebraKind) -> Vec<Entry> {
    match kind {
        AlgebraKind::D21 { .. } => ["0", "E1", "E2", "E3", "E1+E2", "E2+E3", "E1+E3", "E1+E2+E3"]
            .iter()
            .map(|l| {
                let c: Vec<i64> = (1..=3).map(|i| i64::from(l.contains(&format!("E{i}")))).collect();
                entry(l, l, &c)
            })
            .collect(),
        AlgebraKind::G3 => {
            let base = [("x2", [0, 1]), ("x1", [1, 0]), ("x2+x5", [2, 4]), ("x1+x2", [6, 10])];
            let mut out = vec![entry("0", "0", &[0, 0, 0])];
            for (l, c) in base {
                out.push(entry(l, l, &[0, c[0], c[1]]));
            }
            out.push(entry("E", "E", &[1, 0, 0]));
            for (l, c) in base {
                let label = if l.contains('+') { format!("E+({l})") } else { format!("E+{l}") };
                out.push(entry(&label, &format!("E+{l}"), &[1, c[0], c[1]]));
            }
            out
        }
        AlgebraKind::F4 => {
            let base = [
                ("e(7)", "R(1,-2)+R(2,-3)+R(3,0)", [6, 10, 6]),
                ("e(5,1^2)", "R(1,-2)+R(2,0)", [4, 6, 3]),
                ("e(3^2,1)", "R(1,-3)+R(2,3)", [2, 4, 2]),
                ("e(3,2^2)", "R(1,0)+R(2,3)", [2, 3, 2]),
                ("e(3,1^4)", "R(1,0)", [2, 2, 1]),
                ("e(2^2,1^3)", "R(1,2)", [1, 2, 1]),
                ("e(1^7)", "0", [0, 0, 0]),
            ];
            let mut out: Vec<Entry> = base.iter().map(|(l, r, c)| entry(l, r, &[0, c[0], c[1], c[2]])).collect();
            for (l, r, c) in &base[..6] {
                out.push(entry(&format!("E+{l}"), &format!("E+{r}"), &[1, c[0], c[1], c[2]]));
            }
            out.push(entry("E", "E", &[1, 0, 0, 0]));
            out
        }
        _ => Vec::new(),
    }
}

/// Every tabulated orbit of D(2,1;α), G(3) or F(4) with its cocharacter.
pub fn exceptional_orbit_catalog(alg: &SuperAlgebra) -> Result<Vec<OrbitSpec>> {
    let entries = catalog_entries(alg.kind());
    if entries.is_empty() {
        return Err(Error::BadParams(format!("{} has no orbit catalog", alg.kind())));
    }
    entries.iter().map(|e| catalog_orbit(alg, e)).collect()
}

fn catalog_orbit(alg: &SuperAlgebra, e: &Entry) -> Result<OrbitSpec> {
    let torus = alg.torus();
    if torus.len() != e.cochar.len() {
        return Err(Error::Construction(format!("{} carries no matching torus", alg.kind())));
    }
    let mut w = vec![0i64; alg.dim()];
    for (t, &c) in torus.iter().zip(&e.cochar) {
        for (acc, x) in w.iter_mut().zip(&t.weights) {
            *acc += c * x;
        }
    }
    let rep = alg.parse(&e.rep)?;
    OrbitSpec::new(alg, e.label.clone(), rep, w, None)
}

/// Canonical spelling of a catalog label (spaces dropped, `0` accepted for
/// the zero orbit of F(4)).
fn normalise_label(kind: &AlgebraKind, label: &str) -> String {
    let s: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    if *kind == AlgebraKind::F4 && s == "0" {
        return "e(1^7)".into();
    }
    s
}

pub fn orbit_by_label(alg: &SuperAlgebra, label: &str) -> Result<OrbitSpec> {
    let want = normalise_label(alg.kind(), label);
    let entries = catalog_entries(alg.kind());
    let e = entries
        .iter()
        .find(|e| e.label == want)
        .ok_or_else(|| Error::UnknownLabel(format!("no orbit {label:?} for {}", alg.kind())))?;
    catalog_orbit(alg, e)
}

/// Builds the algebra and the orbit named by a catalog label or a partition.
pub fn algebra_and_orbit(
    kind: &AlgebraKind,
    field: Field,
    opts: BuildOptions,
    label: Option<&str>,
    partition: Option<&Partition>,
) -> Result<(SuperAlgebra, OrbitSpec)> {
    match (label, partition) {
        (Some(_), Some(_)) => Err(Error::BadParams("give an orbit label or a partition, not both".into())),
        (None, None) => Err(Error::BadParams("an orbit label or a partition is required".into())),
        (None, Some(lam)) if matches!(kind, AlgebraKind::Osp { .. }) => {
            lam.check_for(kind)?;
            osp_orbit(lam, field, opts)
        }
        (None, Some(lam)) => {
            let alg = crate::constructors::build(kind, field, opts)?;
            let o = nilpotent_from_partition(&alg, lam)?;
            Ok((alg, o))
        }
        (Some(l), None) => {
            let alg = crate::constructors::build(kind, field, opts)?;
            let o = orbit_by_label(&alg, l)?;
            Ok((alg, o))
        }
    }
}

/// `g(j)` for every occupied degree `j`.
pub fn tau_grading(alg: &SuperAlgebra, o: &OrbitSpec) -> BTreeMap<i64, Subspace> {
    o.degrees()
        .into_iter()
        .map(|(j, idx)| (j, Subspace::coordinate(alg.field(), alg.dim(), idx)))
        .collect()
}

/// `[g(i), g(j)] ⊆ g(i+j)` on all basis pairs.
pub fn grading_is_compatible(alg: &SuperAlgebra, o: &OrbitSpec) -> bool {
    let w = &o.cochar_weights;
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let (_, entry) = alg.basis_bracket(i, j);
            if entry.iter().any(|(k, _)| w[*k] != w[i] + w[j]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_d21, build_f4, build_g3, build_gl};

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn partition_parsing_and_merge() {
        let l = Partition::parse("2,5|3").unwrap();
        assert_eq!(l.to_string(), "5,2|3");
        let sizes: Vec<(usize, u8)> = l.blocks().iter().map(|b| (b.size, b.parity)).collect();
        assert_eq!(sizes, vec![(5, 0), (3, 1), (2, 0)]);
        let t = Partition::parse("2|2,2").unwrap();
        assert_eq!(t.blocks().iter().map(|b| b.parity).collect::<Vec<_>>(), vec![0, 1, 1]);
        assert_eq!(Partition::parse("3^2,1").unwrap().even_parts(), &[3, 3, 1]);
        assert!(Partition::parse("0|1").is_err());
        assert!(Partition::parse("a|1").is_err());
        assert_eq!(exponent_form(&[3, 3, 1]), "3^2,1");
    }

    #[test]
    fn admissibility() {
        assert!(Partition::parse("3|2").unwrap().osp_admissible());
        assert!(!Partition::parse("2|2").unwrap().osp_admissible());
        assert!(Partition::parse("2,2|1,1").unwrap().osp_admissible());
        assert!(!Partition::parse("1|3").unwrap().osp_admissible());
    }

    #[test]
    fn jordan_representatives() {
        let f = fp(7);
        let g = build_gl(7, 3, f).unwrap();
        let o = nilpotent_from_partition(&g, &Partition::parse("5,2|3").unwrap()).unwrap();
        assert!(is_nilpotent(&g, &o.representative).unwrap());
        assert!(grading_is_compatible(&g, &o));
        let g = build_gl(2, 1, f).unwrap();
        let o = nilpotent_from_partition(&g, &Partition::parse("2|1").unwrap()).unwrap();
        assert!(!o.representative.is_zero());
        assert!(nilpotent_from_partition(&g, &Partition::parse("1|1").unwrap()).is_err());
    }

    #[test]
    fn osp_forms() {
        let f = fp(5);
        for s in ["3|2", "1,1,1|2", "2,2,1|2", "1|1,1", "3|2,2", "1|4", "2,2|1,1,2"] {
            let lam = Partition::parse(s).unwrap();
            let (a, o) = osp_orbit(&lam, f, BuildOptions::default()).unwrap();
            assert!(is_nilpotent(&a, &o.representative).unwrap(), "{s}");
            assert!(grading_is_compatible(&a, &o), "{s}");
        }
        let std = crate::constructors::build_osp(1, 2, f).unwrap();
        assert!(nilpotent_from_partition(&std, &Partition::parse("1|1,1").unwrap()).is_ok());
        assert!(nilpotent_from_partition(&std, &Partition::parse("1|2").unwrap()).is_ok());
        let std = crate::constructors::build_osp(3, 2, f).unwrap();
        assert!(matches!(
            nilpotent_from_partition(&std, &Partition::parse("3|2").unwrap()),
            Err(Error::BadPartition(_))
        ));
    }

    #[test]
    fn catalogs() {
        let f = fp(7);
        let d = build_d21(2, f).unwrap();
        let g = build_g3(f).unwrap();
        let h = build_f4(f).unwrap();
        for (a, n) in [(&d, 8), (&g, 10), (&h, 14)] {
            let cat = exceptional_orbit_catalog(a).unwrap();
            assert_eq!(cat.len(), n);
            for o in &cat {
                assert!(grading_is_compatible(a, o), "{}", o.label);
                let gr = tau_grading(a, o);
                assert_eq!(gr.values().map(Subspace::dim).sum::<usize>(), a.dim());
                for (j, s) in &gr {
                    assert_eq!(s.dim(), gr.get(&-j).map_or(0, Subspace::dim), "{} degree {j}", o.label);
                }
            }
        }
        let o = orbit_by_label(&d, "E1+E2+E3").unwrap();
        assert_eq!(o.cochar_weights[d.index_of("v(1,1,1)").unwrap()], 3);
        assert_eq!(o.cochar_weights[d.index_of("v(-1,-1,-1)").unwrap()], -3);
        let o = orbit_by_label(&g, "x2").unwrap();
        for l in ["v1.e-2", "v-1.e-2", "v1.e1", "v-1.e1"] {
            assert_eq!(o.cochar_weights[g.index_of(l).unwrap()], -1, "{l}");
        }
        let o = nilpotent_from_partition(&h, &Partition::parse("3,3,1").unwrap()).unwrap();
        assert_eq!(o.representative, h.parse("R(1,-3)+R(2,3)").unwrap());
        assert!(orbit_by_label(&h, "0").unwrap().representative.is_zero());
        assert!(orbit_by_label(&h, "e(4,3)").is_err());
    }
}
