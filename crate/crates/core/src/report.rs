//! Orbit reports: everything computed about one even nilpotent orbit, with
//! the dimension identities re-checked before the report is returned.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::centralizer::{center_of, closed_form_check, graded_centralizer};
use crate::constructors::{wang_zhao_bound, AlgebraKind};
use crate::error::Result;
use crate::linalg::Vector;
use crate::orbits::OrbitSpec;
use crate::reachability::{classify_graded, evaluate_witness, format_witness};
use crate::superlie::{Subspace, SuperAlgebra};

pub const SCHEMA: &str = "superz-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDim {
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub coeff: String,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub schema: String,
    pub algebra: String,
    pub family: String,
    pub params: Value,
    pub prime: String,
    pub orbit: String,
    pub partition: Option<String>,
    pub representative: String,
    pub dim_g: usize,
    pub dim_ge: usize,
    pub dim_ge_even: usize,
    pub dim_ge_odd: usize,
    /// `dim g(j)` for the cocharacter grading.
    pub g_grading: Vec<DegreeDim>,
    /// `dim g^e(j)`.
    pub grading: Vec<DegreeDim>,
    pub centralizer_basis: Vec<BTreeMap<String, String>>,
    pub center_dim: usize,
    pub center_basis: Vec<BTreeMap<String, String>>,
    pub reachable: bool,
    pub strongly_reachable: bool,
    pub panyushev: bool,
    /// Indices refer to `centralizer_basis`.
    pub witness: Option<Vec<WitnessEntry>>,
    pub witness_text: Option<String>,
    pub checks: BTreeMap<String, bool>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

fn labelled(alg: &SuperAlgebra, v: &[crate::Scalar]) -> BTreeMap<String, String> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (alg.basis()[i].name.clone(), c.to_string()))
        .collect()
}

fn prime_string(alg: &SuperAlgebra) -> String {
    match alg.field().characteristic() {
        0 => "rational".into(),
        p => p.to_string(),
    }
}

/// The grading identities need `I ∉ g`; this fails only for sl(m|n) with
/// p dividing m − n.
pub fn grading_identity_applies(alg: &SuperAlgebra) -> bool {
    let p = alg.field().characteristic() as usize;
    match *alg.kind() {
        AlgebraKind::Sl { m, n } => p == 0 || m.abs_diff(n) % p != 0,
        _ => true,
    }
}

pub fn orbit_report(alg: &SuperAlgebra, o: &OrbitSpec) -> Result<OrbitReport> {
    let field = alg.field();
    let n = alg.dim();
    let graded = graded_centralizer(alg, o)?;
    let mut ge = Subspace::zero(field, n);
    for s in graded.values() {
        ge = ge.sum(s)?;
    }
    let evens = Subspace::coordinate(field, n, (0..n).filter(|&i| alg.parity(i) == 0));
    let dim_ge_even = ge.intersect(&evens)?.dim();
    let dim_ge_odd = ge.dim() - dim_ge_even;
    let degrees = o.degrees();
    let g_dim = |j: i64| degrees.get(&j).map_or(0, Vec::len);
    let ge_dim = |j: i64| graded.get(&j).map_or(0, Subspace::dim);

    let center = center_of(alg, &ge)?;
    let verdict = classify_graded(alg, o, &graded)?;

    let mut checks = BTreeMap::new();
    let graded_sum: usize = graded.values().map(Subspace::dim).sum();
    checks.insert("dim_split".to_string(), ge.dim() == dim_ge_even + dim_ge_odd && ge.dim() == graded_sum);
    checks.insert("negative_degrees_vanish".into(), graded.range(..0).all(|(_, s)| s.is_zero()));
    let mut notes: Vec<String> = alg.notes().to_vec();
    if grading_identity_applies(alg) {
        checks.insert("dim_ge_is_g0_plus_g1".into(), ge.dim() == g_dim(0) + g_dim(1));
        checks.insert(
            "graded_dims".into(),
            degrees.keys().filter(|&&j| j >= 0).all(|&j| ge_dim(j) + g_dim(j + 2) == g_dim(j)),
        );
    } else {
        notes.push("identity matrix lies in the algebra and is central; dim g^e = dim g(0) + dim g(1) + 1 is not checked".into());
    }
    let e_line = Subspace::span(field, n, &[o.representative.coeffs().to_vec()])?;
    let g2 = Subspace::coordinate(field, n, degrees.get(&2).cloned().unwrap_or_default());
    checks.insert("center_in_degree_two_is_e".into(), center.intersect(&g2)? == e_line);
    checks.insert("center_inside_centralizer".into(), ge.contains(&center)?);
    checks.insert(
        "strongly_reachable_implies_reachable".into(),
        !verdict.strongly_reachable || verdict.reachable,
    );
    if let Some(w) = &verdict.witness {
        checks.insert("witness_reproduces_e".into(), evaluate_witness(alg, &ge, w)? == o.representative.coeffs());
    }

    if let (Some(lam), true) = (&o.partition, alg.realization().is_some()) {
        let cf = closed_form_check(alg, lam, &o.representative)?;
        checks.insert("closed_form_basis".into(), cf.basis_matches);
        checks.insert("closed_form_center".into(), cf.center_matches);
        notes.extend(cf.notes);
    }

    let mut warnings = Vec::new();
    let p = field.characteristic();
    if let Some(b) = wang_zhao_bound(alg.kind()) {
        if p != 0 && p < b {
            warnings.push(format!(
                "p = {p} is below {b}, the bound of the cited characteristic-p centralizer dimension results"
            ));
        }
    }

    let rows = ge.rows();
    Ok(OrbitReport {
        schema: SCHEMA.into(),
        algebra: alg.kind().to_string(),
        family: alg.kind().family_name().into(),
        params: alg.kind().params_json(),
        prime: prime_string(alg),
        orbit: o.label.clone(),
        partition: o.partition.as_ref().map(ToString::to_string),
        representative: alg.format(&o.representative),
        dim_g: n,
        dim_ge: ge.dim(),
        dim_ge_even,
        dim_ge_odd,
        g_grading: degrees.iter().map(|(&degree, v)| DegreeDim { degree, dim: v.len() }).collect(),
        grading: graded.iter().map(|(&degree, s)| DegreeDim { degree, dim: s.dim() }).collect(),
        centralizer_basis: rows.iter().map(|v| labelled(alg, v)).collect(),
        center_dim: center.dim(),
        center_basis: center.rows().iter().map(|v| labelled(alg, v)).collect(),
        reachable: verdict.reachable,
        strongly_reachable: verdict.strongly_reachable,
        panyushev: verdict.panyushev,
        witness_text: verdict.witness.as_ref().map(|w| format_witness(alg, &ge, w)),
        witness: verdict.witness.map(|w| {
            w.into_iter()
                .map(|t| WitnessEntry { coeff: t.coeff.to_string(), left: t.a, right: t.b })
                .collect()
        }),
        checks,
        warnings,
        notes,
    })
}

impl OrbitReport {
    pub fn consistent(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    /// Keys sorted at every level.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    /// Scalar fields only, in a fixed column order.
    pub fn csv_fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("algebra", self.algebra.clone()),
            ("prime", self.prime.clone()),
            ("orbit", self.orbit.clone()),
            ("partition", self.partition.clone().unwrap_or_default()),
            ("dim_g", self.dim_g.to_string()),
            ("dim_ge", self.dim_ge.to_string()),
            ("dim_ge_even", self.dim_ge_even.to_string()),
            ("dim_ge_odd", self.dim_ge_odd.to_string()),
            ("center_dim", self.center_dim.to_string()),
            ("reachable", self.reachable.to_string()),
            ("strongly_reachable", self.strongly_reachable.to_string()),
            ("panyushev", self.panyushev.to_string()),
            ("consistent", self.consistent().to_string()),
        ]
    }
}

/// Rows of `s` as label maps, for callers that want a subspace in report form.
pub fn labelled_basis(alg: &SuperAlgebra, s: &Subspace) -> Vec<BTreeMap<String, String>> {
    s.rows().iter().map(|v: &Vector| labelled(alg, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_f4, build_sl};
    use crate::orbits::{nilpotent_from_partition, orbit_by_label, Partition};
    use crate::Field;

    #[test]
    fn f4_report_and_determinism() {
        let h = build_f4(Field::prime(7).unwrap()).unwrap();
        let o = orbit_by_label(&h, "e(5,1^2)").unwrap();
        let r = orbit_report(&h, &o).unwrap();
        assert_eq!((r.dim_ge_even, r.dim_ge_odd, r.center_dim), (8, 4, 2));
        assert!(r.consistent(), "{:?}", r.checks);
        assert_eq!(r.warnings.len(), 1);
        let again = orbit_report(&h, &orbit_by_label(&h, "e(5,1^2)").unwrap()).unwrap();
        assert_eq!(r.to_json_string(), again.to_json_string());
    }

    #[test]
    fn sl_report_checks_closed_forms() {
        let f = Field::prime(7).unwrap();
        let s = build_sl(7, 3, f).unwrap();
        let o = nilpotent_from_partition(&s, &Partition::parse("5,2|3").unwrap()).unwrap();
        let r = orbit_report(&s, &o).unwrap();
        assert_eq!(r.dim_ge, 23);
        assert_eq!(r.checks["closed_form_basis"], true);
        assert_eq!(r.checks["closed_form_center"], true);
        assert!(r.consistent());
    }
}
