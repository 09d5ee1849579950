//! Reachable, strongly reachable and Panyushev even nilpotent elements.

use std::collections::BTreeMap;

use crate::centralizer::graded_centralizer;
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::orbits::OrbitSpec;
use crate::scalar::Scalar;
use crate::superlie::{Subspace, SuperAlgebra};

/// `[x_a, x_b]` for `a ≤ b` over the rows of `s`, with the index pairs.
fn pair_brackets(alg: &SuperAlgebra, s: &Subspace) -> Result<Vec<((usize, usize), Vector)>> {
    let rows = s.rows();
    let mut out = Vec::with_capacity(rows.len() * (rows.len() + 1) / 2);
    for a in 0..rows.len() {
        for b in a..rows.len() {
            out.push(((a, b), alg.bracket_coords(&rows[a], &rows[b])?));
        }
    }
    Ok(out)
}

fn closed(s: &Subspace, brackets: &[((usize, usize), Vector)]) -> Result<bool> {
    for (_, v) in brackets {
        if !s.member(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[s, s]`, including the self-brackets `[x, x]` of odd vectors.
pub fn derived_subspace(alg: &SuperAlgebra, s: &Subspace) -> Result<Subspace> {
    let br = pair_brackets(alg, s)?;
    if !closed(s, &br)? {
        return Err(Error::NotASubalgebra);
    }
    let vs: Vec<Vector> = br.into_iter().map(|(_, v)| v).collect();
    Subspace::span(alg.field(), alg.dim(), &vs)
}

/// Least bracket-closed subspace of `ambient` containing `seed`, with the
/// number of closure rounds taken.
pub fn generated_subalgebra_steps(
    alg: &SuperAlgebra,
    seed: &Subspace,
    ambient: &Subspace,
) -> Result<(Subspace, usize)> {
    if !ambient.contains(seed)? {
        return Err(Error::SeedOutsideAmbient);
    }
    let mut cur = seed.clone();
    let mut steps = 0;
    loop {
        let rows = cur.rows();
        let mut vs: Vec<Vector> = rows.to_vec();
        for a in 0..rows.len() {
            for b in a..rows.len() {
                vs.push(alg.bracket_coords(&rows[a], &rows[b])?);
            }
        }
        let next = Subspace::span(alg.field(), alg.dim(), &vs)?;
        if !ambient.contains(&next)? {
            return Err(Error::NotASubalgebra);
        }
        if next.dim() == cur.dim() {
            return Ok((cur, steps));
        }
        cur = next;
        steps += 1;
    }
}

pub fn generated_subalgebra(alg: &SuperAlgebra, seed: &Subspace, ambient: &Subspace) -> Result<Subspace> {
    generated_subalgebra_steps(alg, seed, ambient).map(|(s, _)| s)
}

/// One term `c · [x_a, x_b]` of a witness, indices into the rows of `g^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTerm {
    pub coeff: Scalar,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachabilityVerdict {
    pub reachable: bool,
    pub strongly_reachable: bool,
    pub panyushev: bool,
    /// Expresses `e` through brackets of the canonical basis of `g^e`.
    pub witness: Option<Vec<WitnessTerm>>,
}

pub fn classify(alg: &SuperAlgebra, o: &OrbitSpec) -> Result<ReachabilityVerdict> {
    let graded = graded_centralizer(alg, o)?;
    classify_graded(alg, o, &graded)
}

/// [`classify`] with `g^e(j)` already computed.
pub fn classify_graded(
    alg: &SuperAlgebra,
    o: &OrbitSpec,
    graded: &BTreeMap<i64, Subspace>,
) -> Result<ReachabilityVerdict> {
    let field = alg.field();
    let n = alg.dim();
    let mut ge = Subspace::zero(field, n);
    let mut positive = Subspace::zero(field, n);
    for (j, s) in graded {
        ge = ge.sum(s)?;
        if *j >= 1 {
            positive = positive.sum(s)?;
        }
    }
    let br = pair_brackets(alg, &ge)?;
    let cols: Vec<Vector> = br.iter().map(|(_, v)| v.clone()).collect();
    let derived = Subspace::span(field, n, &cols)?;
    let e = o.representative.coeffs();
    let reachable = derived.member(e)?;
    let witness = if reachable {
        let m: Vec<Vector> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let x = linalg::solve(field, &m, e, cols.len()).ok_or_else(|| {
            Error::Construction("e lies in the derived span but the bracket system is inconsistent".into())
        })?;
        Some(
            x.into_iter()
                .zip(&br)
                .filter(|(c, _)| !c.is_zero())
                .map(|(coeff, ((a, b), _))| WitnessTerm { coeff, a: *a, b: *b })
                .collect(),
        )
    } else {
        None
    };
    let seed = graded.get(&1).cloned().unwrap_or_else(|| Subspace::zero(field, n));
    let generated = generated_subalgebra(alg, &seed, &positive)?;
    Ok(ReachabilityVerdict {
        reachable,
        strongly_reachable: derived == ge,
        panyushev: generated == positive,
        witness,
    })
}

/// Re-evaluates a witness against the rows of `g^e`.
pub fn evaluate_witness(alg: &SuperAlgebra, ge: &Subspace, w: &[WitnessTerm]) -> Result<Vector> {
    let rows = ge.rows();
    let mut out = vec![alg.field().zero(); alg.dim()];
    for t in w {
        let (x, y) = rows
            .get(t.a)
            .zip(rows.get(t.b))
            .ok_or_else(|| Error::BadParams("witness index outside g^e".into()))?;
        let v = alg.bracket_coords(x, y)?;
        for (o, c) in out.iter_mut().zip(&v) {
            if !c.is_zero() {
                o.add_mul_assign(&t.coeff, c);
            }
        }
    }
    Ok(out)
}

/// Human-readable witness, `c*[x, y] + …`, with basis vectors formatted.
pub fn format_witness(alg: &SuperAlgebra, ge: &Subspace, w: &[WitnessTerm]) -> String {
    let rows = ge.rows();
    w.iter()
        .map(|t| {
            format!(
                "{}*[{}, {}]",
                t.coeff,
                alg.format_coords(&rows[t.a]),
                alg.format_coords(&rows[t.b])
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::centralizer;
    use crate::constructors::{build_d21, build_f4, build_g3};
    use crate::orbits::orbit_by_label;
    use crate::Field;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn span(alg: &SuperAlgebra, xs: &[&str]) -> Subspace {
        let vs: Vec<Vector> = xs.iter().map(|s| alg.parse(s).unwrap().into_coeffs()).collect();
        Subspace::span(alg.field(), alg.dim(), &vs).unwrap()
    }

    #[test]
    fn derived_and_generated_basics() {
        let d = build_d21(2, fp(7)).unwrap();
        assert!(derived_subspace(&d, &span(&d, &["E1", "E2"])).unwrap().is_zero());
        let sl2 = span(&d, &["E1", "H1", "F1"]);
        assert_eq!(derived_subspace(&d, &sl2).unwrap(), sl2);
        assert!(matches!(derived_subspace(&d, &span(&d, &["E1", "F1"])), Err(Error::NotASubalgebra)));
        let z = Subspace::zero(d.field(), d.dim());
        assert!(generated_subalgebra(&d, &z, &sl2).unwrap().is_zero());
        assert!(matches!(generated_subalgebra(&d, &span(&d, &["E2"]), &sl2), Err(Error::SeedOutsideAmbient)));
    }

    #[test]
    fn table_spot_checks() {
        let d = build_d21(2, fp(7)).unwrap();
        let o = orbit_by_label(&d, "E1+E2+E3").unwrap();
        let v = classify(&d, &o).unwrap();
        assert_eq!((v.reachable, v.strongly_reachable, v.panyushev), (true, false, true));
        let ge = centralizer(&d, &o.representative).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(evaluate_witness(&d, &ge, &w).unwrap(), o.representative.coeffs());

        let h = build_f4(fp(7)).unwrap();
        let v = classify(&h, &orbit_by_label(&h, "e(7)").unwrap()).unwrap();
        assert_eq!((v.reachable, v.strongly_reachable, v.panyushev), (false, false, false));

        let g = build_g3(fp(7)).unwrap();
        let o = orbit_by_label(&g, "E+x1").unwrap();
        let gr = graded_centralizer(&g, &o).unwrap();
        let mut pos = Subspace::zero(g.field(), g.dim());
        for (_, s) in gr.range(1..) {
            pos = pos.sum(s).unwrap();
        }
        let gen = generated_subalgebra(&g, &gr[&1], &pos).unwrap();
        assert!(gen.dim() < pos.dim());
    }
}
