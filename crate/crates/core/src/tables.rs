//! Published centralizer, center and reachability tables for D(2,1;α), G(3)
//! and F(4), and a row-by-row comparison against computed reports.

use serde::Serialize;

use crate::constructors::AlgebraKind;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::orbits::orbit_by_label;
use crate::report::{orbit_report, OrbitReport};
use crate::superlie::{Subspace, SuperAlgebra};

/// What a table says about `g^e`.
#[derive(Clone, Debug)]
pub enum Span {
    Full,
    Exact(Vec<String>),
    /// Only dimensions are tabulated in a form that can be compared.
    DimsOnly,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub orbit: &'static str,
    pub dim_ge: usize,
    pub even_odd: Option<(usize, usize)>,
    pub span: Span,
    /// `"e"` stands for the representative.
    pub center: Vec<&'static str>,
    /// Reachable, strongly reachable, Panyushev.
    pub verdict: (bool, bool, bool),
    /// Primes at which the reachable cell flips.
    pub reachable_fails_at: Vec<u64>,
}

fn row(orbit: &'static str, dim_ge: usize, span: Span, center: &[&'static str], verdict: &str) -> TableRow {
    let b: Vec<bool> = verdict.chars().map(|c| c == 'Y').collect();
    TableRow {
        orbit,
        dim_ge,
        even_odd: None,
        span,
        center: center.to_vec(),
        verdict: (b[0], b[1], b[2]),
        reachable_fails_at: Vec::new(),
    }
}

fn with_v<S: AsRef<str>>(even: &[&str], odd: &[S]) -> Span {
    Span::Exact(even.iter().map(|s| s.to_string()).chain(odd.iter().map(|s| s.as_ref().to_string())).collect())
}

pub fn d21_rows() -> Vec<TableRow> {
    let e1 = with_v(
        &["E1", "E2", "H2", "F2", "E3", "H3", "F3"],
        &["v(1,1,1)", "v(1,1,-1)", "v(1,-1,1)", "v(1,-1,-1)"],
    );
    let e12 = with_v(
        &["E1", "E2", "E3", "H3", "F3"],
        &["v(1,1,1)", "v(1,1,-1)", "v(1,-1,1)-v(-1,1,1)", "v(1,-1,-1)-v(-1,1,-1)"],
    );
    let e123 = with_v(&["E1", "E2", "E3"], &["v(1,1,1)", "v(1,1,-1)-v(-1,1,1)", "v(1,-1,1)-v(-1,1,1)"]);
    vec![
        row("0", 17, Span::Full, &[], "YYY"),
        row("E1", 11, e1, &["e"], "YYY"),
        row("E2", 11, Span::DimsOnly, &["e"], "YYY"),
        row("E3", 11, Span::DimsOnly, &["e"], "YYY"),
        row("E1+E2", 9, e12, &["e"], "NNN"),
        row("E2+E3", 9, Span::DimsOnly, &["e"], "NNN"),
        row("E1+E3", 9, Span::DimsOnly, &["e"], "NNN"),
        row("E1+E2+E3", 6, e123, &["e", "v(1,1,1)"], "YNY"),
    ]
}

fn g3_odd(sign: &str, idx: &[&str]) -> Vec<String> {
    idx.iter().map(|i| format!("v{sign}.e{i}")).collect()
}

fn both_signs(idx: &[&str]) -> Vec<String> {
    let mut v = g3_odd("1", idx);
    v.extend(g3_odd("-1", idx));
    v
}

pub fn g3_rows() -> Vec<TableRow> {
    const G2: [&str; 14] = [
        "h1", "h2", "x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y3", "y4", "y5", "y6",
    ];
    let mut e_span = vec!["E"];
    e_span.extend(G2);
    let mut e_x1 = row(
        "E+x1",
        13,
        with_v(
            &["E", "x5", "y2", "x1", "x6", "y6", "h1+2*h2"],
            &["v1.e1", "v1.e3", "v1.e-2", "v1.e0-v-1.e1", "v1.e-3-v-1.e-2", "v1.e2+v-1.e3"],
        ),
        &["e"],
        "YNN",
    );
    e_x1.reachable_fails_at = vec![5];
    vec![
        row("0", 31, Span::Full, &[], "YYY"),
        row(
            "x2",
            21,
            with_v(
                &["E", "H", "F", "2*h1+3*h2", "x2", "x3", "x6", "y1", "y5", "x4", "y4"],
                &both_signs(&["0", "-1", "2", "3", "-3"]),
            ),
            &["e"],
            "YYY",
        ),
        row(
            "x1",
            15,
            with_v(&["E", "H", "F", "x5", "y2", "x1", "x6", "y6", "h1+2*h2"], &both_signs(&["-2", "1", "3"])),
            &["e"],
            "YYN",
        ),
        row(
            "x2+x5",
            13,
            with_v(&["E", "H", "F", "x6", "x2+x5", "x3", "x4"], &both_signs(&["0", "2", "3"])),
            &["e", "x6"],
            "NNN",
        ),
        row("x1+x2", 7, with_v(&["E", "H", "F", "x6", "x1+x2"], &both_signs(&["3"])), &["e", "x6"], "NNN"),
        row("E", 22, with_v(&e_span, &g3_odd("1", &["0", "1", "-1", "2", "-2", "3", "-3"])), &["e"], "YYY"),
        row(
            "E+x2",
            16,
            with_v(
                &["E", "2*h1+3*h2", "x2", "x3", "x6", "y1", "y5", "x4", "y4"],
                &["v1.e2", "v1.e-1", "v1.e3", "v1.e-3", "v1.e0", "v1.e-2+v-1.e-1", "v1.e1-v-1.e2"],
            ),
            &["e"],
            "YYY",
        ),
        e_x1,
        row(
            "E+(x2+x5)",
            10,
            with_v(
                &["E", "x6", "x2+x5", "x3", "x4"],
                &["v1.e3", "v1.e2", "v1.e0", "v1.e1-v-1.e2", "6*v-1.e3-v1.e-1"],
            ),
            &["e", "x6"],
            "YNY",
        ),
        row(
            "E+(x1+x2)",
            5,
            with_v(&["E", "x6", "x1+x2"], &["v1.e3", "v-1.e3+v1.e2"]),
            &["e", "x6", "v1.e3"],
            "NNN",
        ),
    ]
}

pub fn f4_rows() -> Vec<TableRow> {
    let data: [(&str, usize, usize, &[&str], &str); 14] = [
        ("e(7)", 6, 4, &["e", "R(1,2)"], "NNN"),
        ("e(5,1^2)", 8, 4, &["e", "R(1,2)"], "NNN"),
        ("e(3^2,1)", 10, 8, &["e", "R(1,2)"], "NNN"),
        ("e(3,2^2)", 12, 8, &["e"], "YYY"),
        ("e(3,1^4)", 14, 8, &["e"], "YYY"),
        ("e(2^2,1^3)", 16, 12, &["e"], "YYY"),
        ("e(1^7)", 24, 16, &[], "YYY"),
        ("E+e(7)", 4, 3, &["e", "R(1,2)", "v1.e1e2e3s"], "NNN"),
        ("E+e(5,1^2)", 6, 4, &["e", "R(1,2)"], "NNN"),
        ("E+e(3^2,1)", 8, 6, &["e", "R(1,2)"], "YNY"),
        ("E+e(3,2^2)", 10, 7, &["e"], "YNY"),
        ("E+e(3,1^4)", 12, 8, &["e"], "NNN"),
        ("E+e(2^2,1^3)", 14, 8, &["e"], "YYY"),
        ("E", 22, 8, &["e"], "YYY"),
    ];
    data.iter()
        .map(|&(orbit, ev, od, center, verdict)| {
            let mut r = row(orbit, ev + od, Span::DimsOnly, center, verdict);
            r.even_odd = Some((ev, od));
            r
        })
        .collect()
}

pub fn rows_for(kind: &AlgebraKind) -> Result<Vec<TableRow>> {
    match kind {
        AlgebraKind::D21 { .. } => Ok(d21_rows()),
        AlgebraKind::G3 => Ok(g3_rows()),
        AlgebraKind::F4 => Ok(f4_rows()),
        other => Err(Error::BadParams(format!("no published tables for {other}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub algebra: String,
    pub prime: String,
    pub orbit: String,
    pub item: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowResult {
    pub report: OrbitReport,
    pub mismatches: Vec<Mismatch>,
}

fn span_of_exprs<S: AsRef<str>>(alg: &SuperAlgebra, xs: &[S], rep: &Vector) -> Result<Subspace> {
    let vs: Vec<Vector> = xs
        .iter()
        .map(|s| match s.as_ref() {
            "e" => Ok(rep.clone()),
            s => alg.parse(s).map(|x| x.into_coeffs()),
        })
        .collect::<Result<_>>()?;
    Subspace::span(alg.field(), alg.dim(), &vs)
}

/// Compares one computed orbit against its table row.
pub fn verify_row(alg: &SuperAlgebra, row: &TableRow) -> Result<RowResult> {
    let o = orbit_by_label(alg, row.orbit)?;
    let report = orbit_report(alg, &o)?;
    let rep = o.representative.coeffs().to_vec();
    let p = alg.field().characteristic();
    let mut mismatches = Vec::new();
    let mut diff = |item: &str, expected: String, got: String| {
        if expected != got {
            mismatches.push(Mismatch {
                algebra: report.algebra.clone(),
                prime: report.prime.clone(),
                orbit: row.orbit.into(),
                item: item.into(),
                expected,
                got,
            });
        }
    };
    diff("dim_ge", row.dim_ge.to_string(), report.dim_ge.to_string());
    if let Some((ev, od)) = row.even_odd {
        diff("dim_ge_even", ev.to_string(), report.dim_ge_even.to_string());
        diff("dim_ge_odd", od.to_string(), report.dim_ge_odd.to_string());
    }
    let field = alg.field();
    let n = alg.dim();
    let ge = Subspace::span(field, n, &report_rows(alg, &report)?)?;
    match &row.span {
        Span::Full => diff("centralizer_span", "full".into(), if ge.dim() == n { "full" } else { "proper" }.into()),
        Span::Exact(xs) => {
            let want = span_of_exprs(alg, xs, &rep)?;
            diff("centralizer_span", "tabulated".into(), if want == ge { "tabulated" } else { "different" }.into());
        }
        Span::DimsOnly => {}
    }
    let want_z = span_of_exprs(alg, &row.center, &rep)?;
    let got_z = Subspace::span(field, n, &center_rows(alg, &report)?)?;
    diff("center_dim", row.center.len().to_string(), report.center_dim.to_string());
    diff("center_span", "tabulated".into(), if want_z == got_z { "tabulated" } else { "different" }.into());
    let reachable = row.verdict.0 && !row.reachable_fails_at.contains(&p);
    diff("reachable", reachable.to_string(), report.reachable.to_string());
    diff("strongly_reachable", row.verdict.1.to_string(), report.strongly_reachable.to_string());
    diff("panyushev", row.verdict.2.to_string(), report.panyushev.to_string());
    for (k, ok) in &report.checks {
        diff(k, "true".into(), ok.to_string());
    }
    Ok(RowResult { report, mismatches })
}

fn parse_labelled(alg: &SuperAlgebra, m: &std::collections::BTreeMap<String, String>) -> Result<Vector> {
    let mut v = vec![alg.field().zero(); alg.dim()];
    for (k, c) in m {
        v[alg.index_of(k)?] = alg.field().parse(c)?;
    }
    Ok(v)
}

fn report_rows(alg: &SuperAlgebra, r: &OrbitReport) -> Result<Vec<Vector>> {
    r.centralizer_basis.iter().map(|m| parse_labelled(alg, m)).collect()
}

fn center_rows(alg: &SuperAlgebra, r: &OrbitReport) -> Result<Vec<Vector>> {
    r.center_basis.iter().map(|m| parse_labelled(alg, m)).collect()
}

/// Every row of the tables for `alg`, in catalog order.
pub fn verify_algebra(alg: &SuperAlgebra) -> Result<Vec<RowResult>> {
    rows_for(alg.kind())?.iter().map(|r| verify_row(alg, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_d21, build_f4, build_g3};
    use crate::Field;

    fn assert_clean(rs: &[RowResult]) {
        let bad: Vec<&Mismatch> = rs.iter().flat_map(|r| &r.mismatches).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn d21_at_seven() {
        assert_clean(&verify_algebra(&build_d21(2, Field::prime(7).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn g3_at_seven() {
        assert_clean(&verify_algebra(&build_g3(Field::prime(7).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn f4_at_seven() {
        assert_clean(&verify_algebra(&build_f4(Field::prime(7).unwrap()).unwrap()).unwrap());
    }
}
