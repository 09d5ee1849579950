//! Root systems, simple systems, highest roots and good primes.
//!
//! Root sets are written down from their closed forms and stored with
//! rational coordinates; positivity is decided by expanding in a simple
//! system.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A { m: usize, n: usize },
    /// osp(m|2n) with m odd.
    B { m: usize, n: usize },
    /// osp(2|2n).
    C { n: usize },
    /// osp(m|2n) with m even, m >= 4.
    D { m: usize, n: usize },
    D21,
    G3,
    F4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub coords: Vec<BigRational>,
    pub parity: u8,
}

#[derive(Clone, Debug)]
pub struct SimpleSystem {
    pub simples: Vec<WeightVector>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub coordinate_names: Vec<String>,
    /// Gram matrix of the form on the coordinate basis.
    pub form: Vec<Vec<BigRational>>,
    pub roots: Vec<WeightVector>,
    pub systems: Vec<SimpleSystem>,
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

fn wv(coords: Vec<BigRational>, parity: u8) -> WeightVector {
    WeightVector { coords, parity }
}

fn ints(c: &[i64], parity: u8) -> WeightVector {
    wv(c.iter().map(|&x| r(x)).collect(), parity)
}

pub fn inner(a: &WeightVector, b: &WeightVector, form: &[Vec<BigRational>]) -> BigRational {
    let mut s = BigRational::zero();
    for (i, x) in a.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coords.iter().enumerate() {
            if !y.is_zero() {
                s += x * y * &form[i][j];
            }
        }
    }
    s
}

/// `⟨β, α⟩`: `2(α,β)/(α,α)` for non-isotropic α, otherwise −1 or 0.
pub fn pairing(beta: &WeightVector, alpha: &WeightVector, form: &[Vec<BigRational>]) -> BigRational {
    let aa = inner(alpha, alpha, form);
    let ab = inner(alpha, beta, form);
    if !aa.is_zero() {
        r(2) * ab / aa
    } else if !ab.is_zero() {
        -BigRational::one()
    } else {
        BigRational::zero()
    }
}

/// Coefficients of `root` in the simple roots, if it lies in their span.
pub fn expand(root: &WeightVector, pi: &SimpleSystem) -> Option<Vec<BigRational>> {
    let k = pi.simples.len();
    let d = root.coords.len();
    // augmented d × (k+1) system, eliminated over Q
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> = pi.simples.iter().map(|s| s.coords[i].clone()).collect();
            row.push(root.coords[i].clone());
            row
        })
        .collect();
    let mut piv = Vec::new();
    let mut row = 0;
    for c in 0..k {
        let Some(p) = (row..d).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..d {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=k {
                    let t = &f * &m[row][j];
                    m[i][j] -= t;
                }
            }
        }
        piv.push(c);
        row += 1;
    }
    if (row..d).any(|i| !m[i][k].is_zero()) {
        return None;
    }
    let mut out = vec![BigRational::zero(); k];
    for (i, &c) in piv.iter().enumerate() {
        out[c] = m[i][k].clone();
    }
    Some(out)
}

/// Φ⁺ for Π, with integer coefficient vectors.
pub fn positive_roots(phi: &[WeightVector], pi: &SimpleSystem) -> Result<Vec<(WeightVector, Vec<i64>)>> {
    let mut out = Vec::new();
    for root in phi {
        let c = expand(root, pi)
            .ok_or_else(|| Error::NotAPositiveSystem(format!("{:?} is outside the span", root.coords)))?;
        if c.iter().any(|x| !x.is_integer()) {
            return Err(Error::NotAPositiveSystem("non-integral expansion".into()));
        }
        if c.iter().all(|x| !x.is_negative()) {
            out.push((root.clone(), c.iter().map(|x| x.to_i64().unwrap()).collect()));
        } else if !c.iter().all(|x| !x.is_positive()) {
            return Err(Error::NotAPositiveSystem("root with mixed signs".into()));
        }
    }
    Ok(out)
}

/// The unique positive root whose coefficients dominate all others.
pub fn highest_root(phi: &[WeightVector], pi: &SimpleSystem) -> Result<(WeightVector, Vec<i64>)> {
    let pos = positive_roots(phi, pi)?;
    pos.iter()
        .find(|(_, a)| pos.iter().all(|(_, b)| b.iter().zip(a).all(|(x, y)| x <= y)))
        .cloned()
        .ok_or_else(|| Error::NotAPositiveSystem("no dominating root".into()))
}

fn diag_form(d: &[BigRational]) -> Vec<Vec<BigRational>> {
    (0..d.len())
        .map(|i| (0..d.len()).map(|j| if i == j { d[i].clone() } else { BigRational::zero() }).collect())
        .collect()
}

fn unit(d: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = c;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn classical_roots(eta: &[u8], osp: Option<bool>) -> Vec<WeightVector> {
    let d = eta.len();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let par = (eta[i] + eta[j]) % 2;
            out.push(ints(&add(&unit(d, i, 1), &unit(d, j, -1)), par));
            if osp.is_some() && i < j {
                let s = add(&unit(d, i, 1), &unit(d, j, 1));
                out.push(ints(&s, par));
                out.push(ints(&s.iter().map(|x| -x).collect::<Vec<_>>(), par));
            }
        }
    }
    if let Some(odd_m) = osp {
        for i in 0..d {
            for s in [1, -1] {
                if eta[i] == 1 {
                    out.push(ints(&unit(d, i, 2 * s), 0));
                    if odd_m {
                        out.push(ints(&unit(d, i, s), 1));
                    }
                } else if odd_m {
                    out.push(ints(&unit(d, i, s), 0));
                }
            }
        }
    }
    out
}

fn chain(eta: &[u8], upto: usize) -> Vec<WeightVector> {
    let d = eta.len();
    (0..upto).map(|i| ints(&add(&unit(d, i, 1), &unit(d, i + 1, -1)), (eta[i] + eta[i + 1]) % 2)).collect()
}

fn eps_names(eta: &[u8]) -> Vec<String> {
    eta.iter().enumerate().map(|(i, e)| format!("eps{}^{}", i + 1, e)).collect()
}

fn eps_form(eta: &[u8]) -> Vec<Vec<BigRational>> {
    diag_form(&eta.iter().map(|&e| r(if e == 0 { 1 } else { -1 })).collect::<Vec<_>>())
}

fn ortho_eta(l: usize, n: usize, odd_first: bool) -> Vec<u8> {
    let mut eta = vec![0u8; l];
    if odd_first {
        eta.splice(0..0, std::iter::repeat(1).take(n));
    } else {
        eta.extend(std::iter::repeat(1).take(n));
    }
    eta
}

fn parse_ratio(s: &[(i64, i64)]) -> Vec<BigRational> {
    s.iter().map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect()
}

/// Root data for a family. `alpha` only enters the form of D(2,1;α).
pub fn root_system(family: &Family, alpha: &BigRational) -> RootSystem {
    match *family {
        Family::A { m, n } => {
            let eta: Vec<u8> = std::iter::repeat(0).take(m).chain(std::iter::repeat(1).take(n)).collect();
            let d = eta.len();
            RootSystem {
                family: family.clone(),
                coordinate_names: eps_names(&eta),
                form: eps_form(&eta),
                roots: classical_roots(&eta, None),
                systems: vec![SimpleSystem { simples: chain(&eta, d.saturating_sub(1)) }],
            }
        }
        Family::B { m, n } => {
            let eta = ortho_eta(m / 2, n, false);
            let d = eta.len();
            let mut simples = chain(&eta, d - 1);
            simples.push(ints(&unit(d, d - 1, 1), eta[d - 1]));
            RootSystem {
                family: family.clone(),
                coordinate_names: eps_names(&eta),
                form: eps_form(&eta),
                roots: classical_roots(&eta, Some(true)),
                systems: vec![SimpleSystem { simples }],
            }
        }
        Family::C { n } => even_osp(family, 1, n),
        Family::D { m, n } => even_osp(family, m / 2, n),
        Family::D21 => {
            let form = diag_form(&[half(1), -(alpha + BigRational::one()) / r(2), alpha / r(2)]);
            let mut roots = Vec::new();
            for i in 0..3 {
                for s in [2, -2] {
                    roots.push(ints(&unit(3, i, s), 0));
                }
            }
            for a in [1, -1] {
                for b in [1, -1] {
                    for c in [1, -1] {
                        roots.push(ints(&[a, b, c], 1));
                    }
                }
            }
            let sys = |v: [[i64; 3]; 3]| SimpleSystem {
                simples: v.iter().map(|c| ints(c, (c.iter().filter(|x| x.abs() == 1).count() > 0) as u8)).collect(),
            };
            RootSystem {
                family: family.clone(),
                coordinate_names: vec!["beta1".into(), "beta2".into(), "beta3".into()],
                form,
                roots,
                systems: vec![
                    sys([[2, 0, 0], [-1, 1, -1], [0, 0, 2]]),
                    sys([[2, 0, 0], [-1, -1, 1], [0, 2, 0]]),
                    sys([[0, 0, 2], [1, -1, -1], [0, 2, 0]]),
                    sys([[-1, 1, 1], [1, -1, 1], [1, 1, -1]]),
                ],
            }
        }
        Family::G3 => {
            // coordinates (δ, ε1, ε2); ε3 = −ε1 − ε2
            let eps = [[0, 1, 0], [0, 0, 1], [0, -1, -1]];
            let e = |i: usize, s: i64| -> [i64; 3] { [0, s * eps[i][1], s * eps[i][2]] };
            let mut roots = vec![ints(&[2, 0, 0], 0), ints(&[-2, 0, 0], 0), ints(&[1, 0, 0], 1), ints(&[-1, 0, 0], 1)];
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(ints(&add(&e(i, 1), &e(j, -1)), 0));
                    }
                }
                for s in [1, -1] {
                    roots.push(ints(&e(i, s), 0));
                    for t in [1, -1] {
                        roots.push(ints(&add(&[t, 0, 0], &e(i, s)), 1));
                    }
                }
            }
            let d = [1, 0, 0];
            let sys = |v: [Vec<i64>; 3], p: [u8; 3]| SimpleSystem {
                simples: v.iter().zip(p).map(|(c, p)| ints(c, p)).collect(),
            };
            let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
            RootSystem {
                family: family.clone(),
                coordinate_names: vec!["delta".into(), "eps1".into(), "eps2".into()],
                form: vec![
                    vec![r(2), r(0), r(0)],
                    vec![r(0), r(-2), r(1)],
                    vec![r(0), r(1), r(-2)],
                ],
                roots,
                systems: vec![
                    sys([add(&d, &e(2, 1)), e(0, 1).to_vec(), add(&e(1, 1), &e(0, -1))], [1, 0, 0]),
                    sys([neg(&add(&d, &e(2, 1))), add(&d, &e(1, -1)), add(&e(1, 1), &e(0, -1))], [1, 1, 0]),
                    sys([d.to_vec(), add(&neg(&d), &e(0, 1)), add(&e(1, 1), &e(0, -1))], [1, 1, 0]),
                    sys([e(0, 1).to_vec(), add(&neg(&d), &e(1, 1)), add(&d, &e(0, -1))], [0, 1, 1]),
                ],
            }
        }
        Family::F4 => {
            let mut roots = Vec::new();
            for s in [1, -1] {
                roots.push(ints(&[s, 0, 0, 0], 0));
            }
            for i in 1..4 {
                for s in [1, -1] {
                    roots.push(ints(&unit(4, i, s), 0));
                    for j in i + 1..4 {
                        for t in [1, -1] {
                            roots.push(ints(&add(&unit(4, i, s), &unit(4, j, t)), 0));
                        }
                    }
                }
            }
            for mask in 0..16 {
                let c: Vec<(i64, i64)> = (0..4).map(|b| (if mask & (1 << b) != 0 { -1 } else { 1 }, 2)).collect();
                roots.push(wv(parse_ratio(&c), 1));
            }
            let h = |c: [i64; 4]| wv(c.iter().map(|&x| half(x)).collect(), 1);
            let ev = |c: [i64; 4]| ints(&c, 0);
            RootSystem {
                family: family.clone(),
                coordinate_names: vec!["delta".into(), "eps1".into(), "eps2".into(), "eps3".into()],
                form: diag_form(&[r(-6), r(2), r(2), r(2)]),
                roots,
                systems: [
                    vec![h([1, -1, -1, -1]), ev([0, 0, 0, 1]), ev([0, 0, 1, -1]), ev([0, 1, -1, 0])],
                    vec![h([-1, 1, 1, 1]), h([1, -1, -1, 1]), ev([0, 0, 1, -1]), ev([0, 1, -1, 0])],
                    vec![ev([0, 1, -1, 0]), h([1, -1, 1, -1]), h([-1, 1, 1, -1]), ev([0, 0, 0, 1])],
                    vec![h([1, 1, -1, -1]), h([1, -1, 1, 1]), h([-1, 1, -1, 1]), ev([0, 0, 1, -1])],
                    vec![ev([1, 0, 0, 0]), h([-1, 1, -1, -1]), ev([0, 0, 0, 1]), ev([0, 0, 1, -1])],
                    vec![ev([1, 0, 0, 0]), h([-1, -1, 1, 1]), ev([0, 1, -1, 0]), ev([0, 0, 1, -1])],
                ]
                .into_iter()
                .map(|simples| SimpleSystem { simples })
                .collect(),
            }
        }
    }
}

fn even_osp(family: &Family, l: usize, n: usize) -> RootSystem {
    // Π₁ on the ordering (0^l, 1^n); Π₂ on (1^n, 0^l) when l >= 2
    let eta = ortho_eta(l, n, false);
    let d = eta.len();
    let mut pi1 = chain(&eta, d - 1);
    pi1.push(ints(&unit(d, d - 1, 2), 0));
    let mut systems = vec![SimpleSystem { simples: pi1 }];
    let roots = classical_roots(&eta, Some(false));
    if l >= 2 {
        // same roots, coordinates permuted so the odd block comes first
        let eta2 = ortho_eta(l, n, true);
        let mut pi2 = chain(&eta2, d - 1);
        pi2.push(ints(&add(&unit(d, d - 2, 1), &unit(d, d - 1, 1)), 0));
        let perm: Vec<usize> = (l..d).chain(0..l).collect();
        let back = |w: &WeightVector| {
            let mut c = vec![BigRational::zero(); d];
            for (k, &p) in perm.iter().enumerate() {
                c[p] = w.coords[k].clone();
            }
            wv(c, w.parity)
        };
        systems.push(SimpleSystem { simples: pi2.iter().map(back).collect() });
    }
    RootSystem {
        family: family.clone(),
        coordinate_names: eps_names(&eta),
        form: eps_form(&eta),
        roots,
        systems,
    }
}

/// Largest highest-root coefficient over every listed simple system.
pub fn max_coefficient(family: &Family) -> i64 {
    systems_max(&root_system(family, &r(1)))
}

fn systems_max(rs: &RootSystem) -> i64 {
    rs.systems
        .iter()
        .filter_map(|pi| highest_root(&rs.roots, pi).ok())
        .flat_map(|(_, c)| c)
        .max()
        .unwrap_or(0)
}

/// `p` is good when it exceeds every highest-root coefficient.
pub fn is_good_prime(family: &Family, p: u64) -> bool {
    p as i64 > max_coefficient(family)
}

pub fn format_weight(w: &WeightVector, names: &[String]) -> String {
    let mut s = String::new();
    for (c, n) in w.coords.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { "-" } else { "+" });
        }
        if !mag.is_one() {
            s.push_str(&format!("{mag}*"));
        }
        s.push_str(n);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Summary used by the `roots` subcommand.
pub fn to_json(rs: &RootSystem) -> Result<Value> {
    let f = |w: &WeightVector| format_weight(w, &rs.coordinate_names);
    let mut systems = Vec::new();
    for pi in &rs.systems {
        let pos = positive_roots(&rs.roots, pi)?;
        let (top, coeffs) = highest_root(&rs.roots, pi)?;
        systems.push(json!({
            "simple_roots": pi.simples.iter().map(|w| json!({"root": f(w), "parity": w.parity})).collect::<Vec<_>>(),
            "positive_roots": pos.iter().map(|(w, c)| json!({"root": f(w), "parity": w.parity, "coefficients": c})).collect::<Vec<_>>(),
            "highest_root": f(&top),
            "coefficients": coeffs,
        }));
    }
    Ok(json!({
        "coordinates": rs.coordinate_names,
        "root_count": rs.roots.len(),
        "systems": systems,
        "max_coefficient": systems_max(rs),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tops(f: Family) -> Vec<Vec<i64>> {
        let rs = root_system(&f, &r(2));
        rs.systems.iter().map(|pi| highest_root(&rs.roots, pi).unwrap().1).collect()
    }

    #[test]
    fn exceptional_tables() {
        assert_eq!(tops(Family::D21), vec![vec![1, 2, 1]; 3].into_iter().chain([vec![1, 1, 1]]).collect::<Vec<_>>());
        assert_eq!(tops(Family::G3), vec![vec![2, 4, 2], vec![3, 4, 2], vec![3, 3, 2], vec![3, 2, 2]]);
        assert_eq!(
            tops(Family::F4),
            vec![
                vec![2, 3, 2, 1],
                vec![2, 3, 2, 1],
                vec![1, 2, 2, 2],
                vec![1, 2, 3, 2],
                vec![1, 2, 3, 2],
                vec![2, 4, 3, 2]
            ]
        );
    }

    #[test]
    fn classical_tables() {
        // osp(5|4): l = 2, n = 2, η1 = 0
        assert_eq!(tops(Family::B { m: 5, n: 2 }), vec![vec![1, 2, 2, 2]]);
        // osp(1|4): all odd
        assert_eq!(tops(Family::B { m: 1, n: 2 }), vec![vec![2, 2]]);
        // osp(6|4): Π₁ and Π₂
        assert_eq!(tops(Family::D { m: 6, n: 2 }), vec![vec![1, 2, 2, 2, 1], vec![2, 2, 2, 1, 1]]);
        assert_eq!(tops(Family::A { m: 2, n: 3 }), vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn good_primes() {
        assert!(is_good_prime(&Family::A { m: 2, n: 1 }, 2));
        assert!(!is_good_prime(&Family::G3, 3));
        assert!(is_good_prime(&Family::G3, 5));
        assert!(!is_good_prime(&Family::F4, 3));
        assert!(!is_good_prime(&Family::B { m: 3, n: 1 }, 2));
        assert!(!is_good_prime(&Family::D21, 2));
        assert!(is_good_prime(&Family::D21, 3));
    }

    #[test]
    fn pairing_branches() {
        let rs = root_system(&Family::A { m: 1, n: 1 }, &r(1));
        let a = &rs.systems[0].simples[0];
        assert_eq!(pairing(a, a, &rs.form), BigRational::zero());
        let rs = root_system(&Family::F4, &r(1));
        let a = ints(&[0, 1, -1, 0], 0);
        assert_eq!(pairing(&a, &a, &rs.form), r(2));
        let rs = root_system(&Family::A { m: 1, n: 2 }, &r(1));
        let (a, b) = (&rs.systems[0].simples[0], &rs.systems[0].simples[1]);
        assert_eq!(pairing(b, a, &rs.form), r(-1));
    }

    #[test]
    fn integrality_of_pairings() {
        for f in [Family::G3, Family::F4, Family::B { m: 3, n: 2 }] {
            let rs = root_system(&f, &r(1));
            for pi in &rs.systems {
                for a in &pi.simples {
                    for b in &rs.roots {
                        assert!(pairing(b, a, &rs.form).is_integer(), "{f:?}");
                    }
                }
            }
        }
    }
}
