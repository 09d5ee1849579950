use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use superz::centralizer::{center_of, centralizer};
use superz::orbits::{algebra_and_orbit, Partition};
use superz::report::orbit_report as make_report;
use superz::tables::verify_algebra;
use superz::{build, AlgebraKind, BuildOptions, Field, Subspace, SuperAlgebra};

fn err(e: superz::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.code()))
}

fn kind(ty: &str, m: Option<usize>, n: Option<usize>, alpha: Option<i64>) -> PyResult<AlgebraKind> {
    let need = |x: Option<usize>, what: &str| {
        x.ok_or_else(|| PyValueError::new_err(format!("BadParams: {ty} needs {what}")))
    };
    Ok(match ty.to_ascii_lowercase().as_str() {
        "gl" => AlgebraKind::Gl { m: need(m, "m")?, n: need(n, "n")? },
        "sl" => AlgebraKind::Sl { m: need(m, "m")?, n: need(n, "n")? },
        "psl" => AlgebraKind::Psl { n: need(n.or(m), "n")? },
        "osp" => AlgebraKind::Osp { m: need(m, "m")?, n2: 2 * need(n, "n")? },
        "d21" => AlgebraKind::d21(alpha.ok_or_else(|| PyValueError::new_err("BadParams: d21 needs alpha"))?),
        "g3" => AlgebraKind::G3,
        "f4" => AlgebraKind::F4,
        other => return Err(PyValueError::new_err(format!("BadParams: unknown type {other:?}"))),
    })
}

fn formatted(alg: &SuperAlgebra, s: &Subspace) -> Vec<String> {
    s.rows().iter().map(|v| alg.format_coords(v)).collect()
}

/// A Lie superalgebra with exact structure constants.
#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: SuperAlgebra,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    #[pyo3(signature = (ty, prime, m=None, n=None, alpha=None, allow_bad_prime=false))]
    fn new(
        ty: &str,
        prime: u64,
        m: Option<usize>,
        n: Option<usize>,
        alpha: Option<i64>,
        allow_bad_prime: bool,
    ) -> PyResult<Self> {
        let k = kind(ty, m, n, alpha)?;
        let field = Field::from_cli(prime).map_err(err)?;
        let inner = build(&k, field, BuildOptions { allow_bad_prime }).map_err(err)?;
        Ok(PyAlgebra { inner })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.kind().to_string()
    }

    #[getter]
    fn prime(&self) -> u64 {
        self.inner.field().characteristic()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn even_dim(&self) -> usize {
        self.inner.even_dim()
    }

    #[getter]
    fn odd_dim(&self) -> usize {
        self.inner.odd_dim()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.basis().iter().map(|b| b.name.clone()).collect()
    }

    /// `[x, y]` of two expressions such as `"E1+2*v(1,1,1)"`.
    fn bracket(&self, x: &str, y: &str) -> PyResult<String> {
        let a = &self.inner;
        let z = a.bracket(&a.parse(x).map_err(err)?, &a.parse(y).map_err(err)?).map_err(err)?;
        Ok(a.format(&z))
    }

    /// 0 or 1, or None for an inhomogeneous element.
    fn parity(&self, x: &str) -> PyResult<Option<u8>> {
        Ok(self.inner.element_parity(&self.inner.parse(x).map_err(err)?))
    }

    fn jacobi_violations(&self) -> usize {
        self.inner.check_super_jacobi().len()
    }

    fn centralizer(&self, e: &str) -> PyResult<Vec<String>> {
        let x = self.inner.parse(e).map_err(err)?;
        Ok(formatted(&self.inner, &centralizer(&self.inner, &x).map_err(err)?))
    }

    /// Basis of the center of the centralizer of `e`.
    fn center(&self, e: &str) -> PyResult<Vec<String>> {
        let x = self.inner.parse(e).map_err(err)?;
        let ge = centralizer(&self.inner, &x).map_err(err)?;
        Ok(formatted(&self.inner, &center_of(&self.inner, &ge).map_err(err)?))
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    fn __repr__(&self) -> String {
        format!("Algebra({} over {}, dim {})", self.inner.kind(), self.inner.field(), self.inner.dim())
    }
}

/// Orbit report as a JSON string.
#[pyfunction]
#[pyo3(signature = (ty, prime, orbit=None, partition=None, m=None, n=None, alpha=None, allow_bad_prime=false))]
#[allow(clippy::too_many_arguments)]
fn orbit_report(
    ty: &str,
    prime: u64,
    orbit: Option<&str>,
    partition: Option<&str>,
    m: Option<usize>,
    n: Option<usize>,
    alpha: Option<i64>,
    allow_bad_prime: bool,
) -> PyResult<String> {
    let k = kind(ty, m, n, alpha)?;
    let lam = partition.map(Partition::parse).transpose().map_err(err)?;
    let field = Field::from_cli(prime).map_err(err)?;
    let (alg, o) =
        algebra_and_orbit(&k, field, BuildOptions { allow_bad_prime }, orbit, lam.as_ref()).map_err(err)?;
    Ok(make_report(&alg, &o).map_err(err)?.to_json_string())
}

/// Table mismatches for one exceptional algebra, as a JSON list.
#[pyfunction]
#[pyo3(signature = (ty, prime, alpha=None))]
fn verify_tables(ty: &str, prime: u64, alpha: Option<i64>) -> PyResult<String> {
    let k = kind(ty, None, None, alpha)?;
    let alg = build(&k, Field::from_cli(prime).map_err(err)?, BuildOptions::default()).map_err(err)?;
    let rows = verify_algebra(&alg).map_err(err)?;
    let bad: Vec<_> = rows.into_iter().flat_map(|r| r.mismatches).collect();
    Ok(serde_json::to_string(&bad).expect("mismatches serialize"))
}

#[pyfunction]
#[pyo3(signature = (ty, m=None, n=None, alpha=None))]
fn roots(ty: &str, m: Option<usize>, n: Option<usize>, alpha: Option<i64>) -> PyResult<String> {
    let k = kind(ty, m, n, alpha)?;
    let doc = superz::roots::to_json(&k.root_system()).map_err(err)?;
    Ok(doc.to_string())
}

#[pyfunction]
#[pyo3(signature = (ty, p, m=None, n=None, alpha=None))]
fn is_good_prime(ty: &str, p: u64, m: Option<usize>, n: Option<usize>, alpha: Option<i64>) -> PyResult<bool> {
    let k = kind(ty, m, n, alpha.or(Some(1)))?;
    Ok(superz::roots::is_good_prime(&k.root_family(), p))
}

#[pymodule]
fn superz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(orbit_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    m.add_function(wrap_pyfunction!(roots, m)?)?;
    m.add_function(wrap_pyfunction!(is_good_prime, m)?)?;
    Ok(())
}
