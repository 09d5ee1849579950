//! D(2,1;α), G(3) and F(4).
//!
//! The even part is a direct sum of simple factors, each given by matrices
//! in a faithful defining representation, and the odd part is the tensor
//! product of one module per factor. The odd-odd bracket is written as
//!
//! ```text
//! [x, y] = Σ_f s_f Σ_a ω(ρ(X_a) x, y) X^a        (X^a dual to X_a under tr)
//! ```
//!
//! with ω the product of the invariant forms of the factor modules. Each
//! summand is equivariant by construction; the odd super-Jacobi identity
//! and a handful of fixed commutators determine the scalars `s_f`. Everything
//! is solved over Q and then reduced mod p.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{gate, AlgebraKind, BuildOptions};
use crate::error::{Error, Result};
use crate::linalg::{self, Coordinates, Vector};
use crate::scalar::{Field, Scalar};
use crate::superlie::{BasisLabel, Sparse, SuperAlgebra, TorusWeights};

type Mat = Vec<Vec<Scalar>>;

fn q() -> Field {
    Field::rationals()
}

fn zeros(n: usize) -> Mat {
    vec![vec![q().zero(); n]; n]
}

fn mat(n: usize, entries: &[(usize, usize, i64)]) -> Mat {
    let mut m = zeros(n);
    for &(r, c, v) in entries {
        m[r][c] = q().from_i64(v);
    }
    m
}

fn diag(d: &[i64]) -> Mat {
    let mut m = zeros(d.len());
    for (i, &v) in d.iter().enumerate() {
        m[i][i] = q().from_i64(v);
    }
    m
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j].add_mul_assign(&a[i][k], &b[k][j]);
                }
            }
        }
    }
    out
}

fn comm(a: &Mat, b: &Mat) -> Mat {
    let (ab, ba) = (mul(a, b), mul(b, a));
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

fn flat(m: &Mat) -> Vector {
    m.iter().flatten().cloned().collect()
}

struct Factor {
    labels: Vec<String>,
    /// Faithful representation used for brackets and the trace form.
    def: Vec<Mat>,
    /// Action on this factor's slot of the odd part.
    module: Vec<Mat>,
    module_labels: Vec<String>,
}

struct Anchor {
    x: &'static str,
    y: &'static str,
    target: &'static str,
    scale: BigRational,
    /// Used to normalise the odd bracket; the others are only checked.
    fixes: bool,
}

struct Presentation {
    kind: AlgebraKind,
    factors: Vec<Factor>,
    odd_label: fn(&[&str]) -> String,
    aliases: Vec<(String, String)>,
    torus: Vec<(&'static str, &'static str)>,
    anchors: Vec<Anchor>,
}

fn anchor(x: &'static str, y: &'static str, target: &'static str) -> Anchor {
    Anchor { x, y, target, scale: BigRational::one(), fixes: true }
}

fn checked(a: Anchor) -> Anchor {
    Anchor { fixes: false, ..a }
}

fn sl2_matrices() -> Vec<Mat> {
    vec![mat(2, &[(0, 1, 1)]), diag(&[1, -1]), mat(2, &[(1, 0, 1)])]
}

fn sl2_factor(suffix: &str) -> Factor {
    let m = sl2_matrices();
    Factor {
        labels: ["E", "H", "F"].iter().map(|l| format!("{l}{suffix}")).collect(),
        def: m.clone(),
        module: m,
        module_labels: vec!["1".into(), "-1".into()],
    }
}

fn sl2_factor_v() -> Factor {
    let mut f = sl2_factor("");
    f.module_labels = vec!["v1".into(), "v-1".into()];
    f
}

/// Invariant bilinear form on a module, unique up to scale.
fn invariant_form(module: &[Mat]) -> Result<Mat> {
    let d = module[0].len();
    let mut rows = Vec::new();
    for x in module {
        for u in 0..d {
            for w in 0..d {
                // B(Xu, w) + B(u, Xw) = 0
                let mut r = vec![q().zero(); d * d];
                for l in 0..d {
                    r[l * d + w] = &r[l * d + w] + &x[l][u];
                    r[u * d + l] = &r[u * d + l] + &x[l][w];
                }
                rows.push(r);
            }
        }
    }
    let ns = linalg::nullspace(q(), &rows, d * d);
    if ns.len() != 1 {
        return Err(Error::Construction(format!("module has {} invariant forms", ns.len())));
    }
    Ok(ns[0].chunks(d).map(<[Scalar]>::to_vec).collect())
}

fn inverse(m: &Mat) -> Result<Mat> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for c in 0..n {
        let e: Vector = (0..n).map(|i| if i == c { q().one() } else { q().zero() }).collect();
        cols.push(
            linalg::solve(q(), m, &e, n)
                .ok_or_else(|| Error::Construction("degenerate trace form".into()))?,
        );
    }
    Ok((0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect())
}

fn assemble(p: &Presentation) -> Result<SuperAlgebra> {
    let zero = q().zero();
    let mut labels: Vec<BasisLabel> = Vec::new();
    let mut offsets = Vec::new();
    for f in &p.factors {
        offsets.push(labels.len());
        labels.extend(f.labels.iter().map(|l| BasisLabel::new(l.clone(), 0)));
    }
    let ne = labels.len();

    // odd basis: tensor product, first factor slowest
    let dims: Vec<usize> = p.factors.iter().map(|f| f.module_labels.len()).collect();
    let mut multi: Vec<Vec<usize>> = vec![vec![]];
    for &d in &dims {
        multi = multi.iter().flat_map(|m| (0..d).map(move |i| [m.as_slice(), &[i]].concat())).collect();
    }
    let no = multi.len();
    let index_of = |m: &[usize]| m.iter().zip(&dims).fold(0, |acc, (i, d)| acc * d + i);
    for m in &multi {
        let parts: Vec<&str> =
            m.iter().zip(&p.factors).map(|(i, f)| f.module_labels[*i].as_str()).collect();
        labels.push(BasisLabel::new((p.odd_label)(&parts), 1));
    }
    let n = ne + no;
    let mut table: Vec<Sparse> = vec![Vec::new(); n * (n + 1) / 2];

    // even-even and the dual bases
    let mut dual: Vec<Mat> = Vec::new();
    for (f, off) in p.factors.iter().zip(&offsets) {
        let d = f.def[0].len();
        let flats: Vec<Vector> = f.def.iter().map(flat).collect();
        let coords = Coordinates::new(q(), &flats, d * d)?;
        for b in 0..f.def.len() {
            for a in 0..=b {
                let c = coords.coords(&flat(&comm(&f.def[a], &f.def[b]))).ok_or_else(|| {
                    Error::Construction(format!("[{}, {}] leaves the factor", f.labels[a], f.labels[b]))
                })?;
                table[SuperAlgebra::pair_index(off + a, off + b)] =
                    c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (off + k, x)).collect();
            }
        }
        let k = f.def.len();
        let gram: Mat = (0..k)
            .map(|a| (0..k).map(|b| mul(&f.def[a], &f.def[b]).iter().enumerate().fold(q().zero(), |s, (i, r)| &s + &r[i])).collect())
            .collect();
        dual.push(inverse(&gram)?);
    }

    // even-odd
    let mut act: Vec<Vec<Sparse>> = vec![Vec::new(); ne];
    for (fi, (f, off)) in p.factors.iter().zip(&offsets).enumerate() {
        for (a, x) in f.module.iter().enumerate() {
            let mut cols = Vec::with_capacity(no);
            for (oi, m) in multi.iter().enumerate() {
                let mut out: Sparse = Vec::new();
                for (l, row) in x.iter().enumerate() {
                    let c = &row[m[fi]];
                    if !c.is_zero() {
                        let mut t = m.clone();
                        t[fi] = l;
                        out.push((ne + index_of(&t), c.clone()));
                    }
                }
                out.sort_by_key(|(k, _)| *k);
                table[SuperAlgebra::pair_index(off + a, ne + oi)] = out.clone();
                cols.push(out);
            }
            act[off + a] = cols;
        }
    }

    // φ_f on pairs of odd basis vectors, as coordinate vectors on the even part
    let forms: Vec<Mat> = p.factors.iter().map(|f| invariant_form(&f.module)).collect::<Result<_>>()?;
    let nf = p.factors.len();
    let mut phi = vec![vec![vec![zero.clone(); ne]; no * no]; nf];
    for (x, mx) in multi.iter().enumerate() {
        for (y, my) in multi.iter().enumerate() {
            for fi in 0..nf {
                let rest = (0..nf)
                    .filter(|&g| g != fi)
                    .fold(q().one(), |acc, g| &acc * &forms[g][mx[g]][my[g]]);
                if rest.is_zero() {
                    continue;
                }
                let f = &p.factors[fi];
                let k = f.module.len();
                let w: Vector = f
                    .module
                    .iter()
                    .map(|xa| {
                        let mut s = q().zero();
                        for (l, row) in xa.iter().enumerate() {
                            s.add_mul_assign(&row[mx[fi]], &forms[fi][l][my[fi]]);
                        }
                        &s * &rest
                    })
                    .collect();
                let out = &mut phi[fi][x * no + y];
                for c in 0..k {
                    let mut s = q().zero();
                    for a in 0..k {
                        s.add_mul_assign(&dual[fi][c][a], &w[a]);
                    }
                    out[offsets[fi] + c] = s;
                }
            }
        }
    }

    let act_on = |even: &[Scalar], o: usize, out: &mut [Scalar]| {
        for (a, c) in even.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, v) in &act[a][o] {
                out[k - ne].add_mul_assign(c, v);
            }
        }
    };

    // odd triples: ρ(φ(y,z))x + ρ(φ(z,x))y + ρ(φ(x,y))z = 0, linear in s
    let mut rows: Vec<Vector> = Vec::new();
    for x in 0..no {
        for y in x..no {
            for z in y..no {
                let mut cols = Vec::with_capacity(nf);
                for f in 0..nf {
                    let mut v = vec![zero.clone(); no];
                    act_on(&phi[f][y * no + z], x, &mut v);
                    act_on(&phi[f][z * no + x], y, &mut v);
                    act_on(&phi[f][x * no + y], z, &mut v);
                    cols.push(v);
                }
                for t in 0..no {
                    let r: Vector = (0..nf).map(|f| cols[f][t].clone()).collect();
                    if r.iter().any(|c| !c.is_zero()) {
                        rows.push(r);
                    }
                }
                if rows.len() > 64 {
                    linalg::rref(&mut rows, nf);
                }
            }
        }
    }
    let jacobi_nullity = nf - linalg::rank(&rows, nf);

    // anchors, parsed in a scaffold with zero odd-odd bracket
    let mut scaffold = SuperAlgebra::from_table(q(), p.kind.clone(), labels.clone(), table.clone())?;
    let alias_map = build_aliases(&scaffold, &p.aliases)?;
    scaffold.set_aliases(alias_map.clone());
    let mut rhs: Vector = vec![zero.clone(); rows.len()];
    for a in p.anchors.iter().filter(|a| a.fixes) {
        let x = scaffold.parse(a.x)?;
        let y = scaffold.parse(a.y)?;
        let t = scaffold.parse(a.target)?.scale(&Scalar::Q(a.scale.clone()));
        let mut sums = vec![vec![zero.clone(); ne]; nf];
        for (i, xi) in x.coeffs()[ne..].iter().enumerate() {
            for (j, yj) in y.coeffs()[ne..].iter().enumerate() {
                if xi.is_zero() || yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for f in 0..nf {
                    for (s, v) in sums[f].iter_mut().zip(&phi[f][i * no + j]) {
                        s.add_mul_assign(&c, v);
                    }
                }
            }
        }
        if t.coeffs()[ne..].iter().any(|c| !c.is_zero()) {
            return Err(Error::Construction(format!("anchor {} is not even", a.target)));
        }
        for c in 0..ne {
            rows.push((0..nf).map(|f| sums[f][c].clone()).collect());
            rhs.push(t.coeffs()[c].clone());
        }
    }
    if linalg::rank(&rows, nf) != nf {
        return Err(Error::Construction("commutators leave the odd bracket underdetermined".into()));
    }
    let s = linalg::solve(q(), &rows, &rhs, nf)
        .ok_or_else(|| Error::Construction("odd bracket cannot meet the fixed commutators".into()))?;

    for x in 0..no {
        for y in x..no {
            let mut v = vec![zero.clone(); ne];
            for f in 0..nf {
                for (acc, c) in v.iter_mut().zip(&phi[f][x * no + y]) {
                    acc.add_mul_assign(&s[f], c);
                }
            }
            table[SuperAlgebra::pair_index(ne + x, ne + y)] =
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        }
    }
    let mut alg = SuperAlgebra::from_table(q(), p.kind.clone(), labels, table)?;
    alg.set_aliases(alias_map);
    let torus = p
        .torus
        .iter()
        .map(|(name, expr)| torus_weights(&alg, name, expr))
        .collect::<Result<Vec<_>>>()?;
    alg.torus = torus;
    alg.push_note(format!("odd Jacobi solutions: {jacobi_nullity}-dimensional before normalisation"));
    let s: Vec<String> = s.iter().map(ToString::to_string).collect();
    alg.push_note(format!("odd bracket scalars: ({})", s.join(", ")));
    for a in &p.anchors {
        let got = alg.bracket(&alg.parse(a.x)?, &alg.parse(a.y)?)?;
        let want = alg.parse(a.target)?.scale(&Scalar::Q(a.scale.clone()));
        let verdict = if got == want { "holds".to_string() } else { format!("gives {}", alg.format(&got)) };
        let scale = if a.scale.is_one() { String::new() } else { format!("{}*", a.scale) };
        alg.push_note(format!("[{}, {}] = {scale}{}: {verdict}", a.x, a.y, a.target));
    }
    Ok(alg)
}

fn build_aliases(alg: &SuperAlgebra, aliases: &[(String, String)]) -> Result<HashMap<String, Sparse>> {
    let mut out = HashMap::new();
    for (name, expr) in aliases {
        let x = alg.parse(expr)?;
        out.insert(name.clone(), x.coeffs().iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect());
    }
    Ok(out)
}

fn torus_weights(alg: &SuperAlgebra, name: &str, expr: &str) -> Result<TorusWeights> {
    let h = alg.parse(expr)?;
    let mut weights = Vec::with_capacity(alg.dim());
    for j in 0..alg.dim() {
        let b = alg.basis_element(j);
        let r = alg.bracket(&h, &b)?;
        let w = r.coeffs()[j].clone();
        if r.sub(&b.scale(&w))?.is_zero() {
            if let Some(w) = w.to_i64() {
                weights.push(w);
                continue;
            }
        }
        return Err(Error::Construction(format!("{name} does not act diagonally on {}", alg.basis()[j].name)));
    }
    Ok(TorusWeights { name: name.to_string(), weights })
}

fn d21_presentation(alpha: &BigRational) -> Presentation {
    let mut factors = Vec::new();
    for i in 1..=3 {
        factors.push(sl2_factor(&i.to_string()));
    }
    let four = BigRational::from_integer(BigInt::from(4));
    let sigma = [BigRational::one() + alpha, -BigRational::one(), -alpha.clone()];
    Presentation {
        kind: AlgebraKind::D21 { alpha: alpha.clone() },
        factors,
        odd_label: |p| format!("v({},{},{})", p[0], p[1], p[2]),
        aliases: Vec::new(),
        torus: vec![("H1", "H1"), ("H2", "H2"), ("H3", "H3")],
        anchors: vec![
            Anchor {
                x: "v(1,1,-1)-v(-1,1,1)",
                y: "v(1,1,-1)-v(-1,1,1)",
                target: "E2",
                scale: &four * &sigma[1],
                fixes: true,
            },
            Anchor {
                x: "v(1,-1,1)-v(-1,1,1)",
                y: "v(1,-1,1)-v(-1,1,1)",
                target: "E3",
                scale: &four * &sigma[2],
                fixes: true,
            },
        ],
    }
}

fn g2_matrices() -> Vec<Mat> {
    // rows and columns ordered e3, e2, e1, e0, e-1, e-2, e-3
    let x1 = mat(7, &[(0, 1, -1), (2, 3, 1), (3, 4, -2), (5, 6, 1)]);
    let x2 = mat(7, &[(1, 2, 1), (4, 5, -1)]);
    let y1 = mat(7, &[(1, 0, -1), (3, 2, 2), (4, 3, -1), (6, 5, 1)]);
    let y2 = mat(7, &[(2, 1, 1), (5, 4, -1)]);
    let h1 = diag(&[1, -1, 2, 0, -2, 1, -1]);
    let h2 = diag(&[0, 1, -1, 0, 1, -1, 0]);
    let x3 = comm(&x1, &x2);
    let x4 = comm(&x1, &x3);
    let x5 = comm(&x1, &x4);
    let x6 = comm(&x5, &x2);
    let y3 = comm(&y1, &y2);
    let y4 = comm(&y1, &y3);
    let y5 = comm(&y1, &y4);
    let y6 = comm(&y5, &y2);
    vec![h1, h2, x1, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6]
}

fn g3_presentation() -> Presentation {
    let g2 = g2_matrices();
    let mut labels = vec!["h1".to_string(), "h2".to_string()];
    labels.extend((1..=6).map(|i| format!("x{i}")));
    labels.extend((1..=6).map(|i| format!("y{i}")));
    let v7 = ["e3", "e2", "e1", "e0", "e-1", "e-2", "e-3"];
    Presentation {
        kind: AlgebraKind::G3,
        factors: vec![
            sl2_factor_v(),
            Factor {
                labels,
                def: g2.clone(),
                module: g2,
                module_labels: v7.iter().map(|s| s.to_string()).collect(),
            },
        ],
        odd_label: |p| p.join("."),
        aliases: Vec::new(),
        torus: vec![("H", "H"), ("h1", "h1"), ("h2", "h2")],
        anchors: vec![
            checked(anchor("v1.e0-v-1.e1", "v1.e0-v-1.e1", "-8*E+8*x1")),
            anchor("v1.e3", "v1.e-3-v-1.e-2", "16*E+4*x1"),
            anchor("v1.e-2", "v1.e2+v-1.e3", "16*E+4*x1"),
        ],
    }
}

/// Position of `e_i` (`i` in -3..=3) in the ordering e1, e2, e3, e0, e-1, e-2, e-3.
fn so_pos(i: i32) -> usize {
    match i {
        1..=3 => (i - 1) as usize,
        0 => 3,
        _ => (3 - i) as usize,
    }
}

fn beta(a: i32, b: i32) -> i64 {
    if a == 0 && b == 0 {
        2
    } else if a != 0 && a == -b {
        1
    } else {
        0
    }
}

/// `X_{u,w}(v) = β(w,v)u − β(u,v)w` on the 7-dimensional module.
fn so_r(a: i32, b: i32) -> Mat {
    let mut m = zeros(7);
    for v in -3..=3 {
        let c = beta(b, v);
        if c != 0 {
            m[so_pos(a)][so_pos(v)] = &m[so_pos(a)][so_pos(v)] + &q().from_i64(c);
        }
        let c = beta(a, v);
        if c != 0 {
            m[so_pos(b)][so_pos(v)] = &m[so_pos(b)][so_pos(v)] - &q().from_i64(c);
        }
    }
    m
}

/// Spin monomials e_S s as bitmasks over {1,2,3}, in the listed order.
const SPIN: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

fn spin_label(mask: u8) -> String {
    let mut s = String::new();
    for i in 0..3 {
        if mask & (1 << i) != 0 {
            s.push_str(&format!("e{}", i + 1));
        }
    }
    s.push('s');
    s
}

/// Clifford action of e_i on the spin module, `uv + vu = β(u,v)`.
fn clifford(i: i32) -> Mat {
    let pos = |mask: u8| SPIN.iter().position(|&m| m == mask).unwrap();
    let mut m = zeros(8);
    for &s in &SPIN {
        if i == 0 {
            let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            m[pos(s)][pos(s)] = q().from_i64(sign);
            continue;
        }
        let bit = 1u8 << (i.unsigned_abs() - 1);
        let below = (s & (bit - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        if i > 0 && s & bit == 0 {
            m[pos(s | bit)][pos(s)] = q().from_i64(sign);
        } else if i < 0 && s & bit != 0 {
            m[pos(s & !bit)][pos(s)] = q().from_i64(sign);
        }
    }
    m
}

fn spin_r(a: i32, b: i32) -> Mat {
    let (ca, cb) = (clifford(a), clifford(b));
    let two = q().from_i64(2).inv().unwrap();
    comm(&ca, &cb).into_iter().map(|r| r.into_iter().map(|x| &x * &two).collect()).collect()
}

fn so7_basis() -> Vec<(i32, i32)> {
    let mut out = vec![(1, -1), (2, -2), (3, -3)];
    for (u, w) in [(1, 2), (1, 3), (2, 3)] {
        for (su, sw) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            out.push((su * u, sw * w));
        }
    }
    for a in [1, 2, 3, -1, -2, -3] {
        out.push((a, 0));
    }
    out
}

fn f4_presentation() -> Presentation {
    let basis = so7_basis();
    let name = |(a, b): (i32, i32)| format!("R({a},{b})");
    let mut aliases = Vec::new();
    for &(a, b) in &basis {
        aliases.push((name((b, a)), format!("-{}", name((a, b)))));
    }
    Presentation {
        kind: AlgebraKind::F4,
        factors: vec![
            sl2_factor_v(),
            Factor {
                labels: basis.iter().map(|&p| name(p)).collect(),
                def: basis.iter().map(|&(a, b)| so_r(a, b)).collect(),
                module: basis.iter().map(|&(a, b)| spin_r(a, b)).collect(),
                module_labels: SPIN.iter().map(|&m| spin_label(m)).collect(),
            },
        ],
        odd_label: |p| p.join("."),
        aliases,
        torus: vec![
            ("H", "H"),
            ("h1", "R(1,-1)-R(2,-2)"),
            ("h2", "R(2,-2)-R(3,-3)"),
            ("h3", "2*R(3,-3)"),
        ],
        anchors: vec![
            anchor("v1.e1s-v-1.e1e2e3s", "v1.e1s-v-1.e1e2e3s", "R(1,0)"),
            checked(anchor("v1.e2s", "v1.e1e3s", "6*E")),
            anchor("v1.e1e2e3s", "v-1.e1e2s+v1.e2e3s", "R(1,2)"),
        ],
    }
}

fn over(alg: &SuperAlgebra, field: Field, kind: &AlgebraKind) -> Result<SuperAlgebra> {
    alg.reduce_to(field).map_err(|e| match e {
        Error::DivisionByZero => Error::BadPrime { family: kind.to_string(), p: field.characteristic() },
        e => e,
    })
}

pub(crate) fn d21(alpha: &BigRational, field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    let kind = AlgebraKind::D21 { alpha: alpha.clone() };
    gate(&kind, field, opts)?;
    let a = field.from_rational(alpha).map_err(|_| Error::BadAlpha(alpha.to_string()))?;
    if a.is_zero() || (&a + &field.one()).is_zero() || alpha.is_zero() || (alpha + BigRational::one()).is_zero()
    {
        return Err(Error::BadAlpha(format!("{alpha} in {field}")));
    }
    let alg = assemble(&d21_presentation(alpha))?;
    over(&alg, field, &kind)
}

static G3_Q: OnceLock<Result<SuperAlgebra>> = OnceLock::new();
static F4_Q: OnceLock<Result<SuperAlgebra>> = OnceLock::new();

pub(crate) fn g3(field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    gate(&AlgebraKind::G3, field, opts)?;
    let alg = G3_Q.get_or_init(|| assemble(&g3_presentation())).as_ref().map_err(Clone::clone)?;
    over(alg, field, &AlgebraKind::G3)
}

pub(crate) fn f4(field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    gate(&AlgebraKind::F4, field, opts)?;
    let alg = F4_Q.get_or_init(|| assemble(&f4_presentation())).as_ref().map_err(Clone::clone)?;
    over(alg, field, &AlgebraKind::F4)
}

/// D(2,1;α) for an integer α.
pub fn build_d21(alpha: i64, field: Field) -> Result<SuperAlgebra> {
    d21(&BigRational::from_integer(BigInt::from(alpha)), field, BuildOptions::default())
}

pub fn build_g3(field: Field) -> Result<SuperAlgebra> {
    g3(field, BuildOptions::default())
}

pub fn build_f4(field: Field) -> Result<SuperAlgebra> {
    f4(field, BuildOptions::default())
}
