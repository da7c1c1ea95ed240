//! Python bindings. Scalars cross the boundary as strings `"n"` or `"n/d"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rota_baxter::binomial::{build_binomial, lemma_exhaustive_check};
use rota_baxter::duality::{self, RbAlgebra as CoreRbAlgebra};
use rota_baxter::hopf::{smash_coalgebra, smash_p1, smash_p2};
use rota_baxter::linear::{format_scalar, parse_scalar, Scalar, Vector};
use rota_baxter::rota_baxter as ops;
use rota_baxter::{Matrix, RbCoalgebra as CoreRbCoalgebra, Report};
use rota_baxter_cli::commands::hopf_by_name;
use rota_baxter_cli::{Kind, StructureFile};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalar(s: &str) -> PyResult<Scalar> {
    parse_scalar(s).map_err(err)
}

fn vector(v: &[String]) -> PyResult<Vector> {
    v.iter().map(|s| scalar(s)).collect()
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

fn dense(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

fn report_dict<'py>(py: Python<'py>, r: &Report) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("check", &r.check)?;
    d.set_item("pass", r.passed())?;
    if let Some(cx) = &r.failure {
        let c = PyDict::new(py);
        c.set_item("law", &cx.law)?;
        c.set_item("basis", cx.basis.clone())?;
        let terms = |t: &rota_baxter::Tensor| -> Vec<(Vec<usize>, String)> {
            t.terms().into_iter().map(|(i, v)| (i, format_scalar(&v))).collect()
        };
        c.set_item("lhs", terms(&cx.lhs))?;
        c.set_item("rhs", terms(&cx.rhs))?;
        d.set_item("counterexample", c)?;
    }
    Ok(d)
}

/// A finite-dimensional Rota-Baxter coalgebra.
#[pyclass(name = "RbCoalgebra", module = "rota_baxter_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyRbCoalgebra {
    inner: CoreRbCoalgebra,
}

#[pymethods]
impl PyRbCoalgebra {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.inner.coalgebra().basis_names().to_vec()
    }

    #[getter]
    fn weight(&self) -> String {
        format_scalar(self.inner.weight())
    }

    /// Operator matrix, `P(e_j) = Σ_i m[i][j] e_i`.
    #[getter]
    fn operator(&self) -> Vec<Vec<String>> {
        dense(self.inner.operator().matrix())
    }

    #[getter]
    fn counit(&self) -> Option<Vec<String>> {
        self.inner.coalgebra().counit().map(|e| strings(e))
    }

    /// Nonzero terms `((i, j), c)` of `Δ(e_k)`.
    fn coproduct(&self, k: usize) -> PyResult<Vec<((usize, usize), String)>> {
        if k >= self.inner.dim() {
            return Err(err(format!("basis index {k} out of range")));
        }
        Ok(self
            .inner
            .coalgebra()
            .delta_of_basis(k)
            .terms()
            .into_iter()
            .map(|(i, v)| ((i[0], i[1]), format_scalar(&v)))
            .collect())
    }

    /// Coalgebra laws and the Rota-Baxter identity.
    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        report_dict(py, &self.inner.check())
    }

    fn is_idempotent(&self) -> bool {
        self.inner.operator().is_idempotent()
    }

    fn complement(&self) -> Self {
        Self {
            inner: ops::complement_operator(&self.inner),
        }
    }

    fn rescale(&self, mu: &str) -> PyResult<Self> {
        let inner = ops::rescale_weight(&self.inner, &scalar(mu)?).map_err(err)?;
        Ok(Self { inner })
    }

    fn double_coproduct(&self) -> Self {
        Self {
            inner: ops::double_coproduct(&self.inner),
        }
    }

    fn counitize(&self) -> PyResult<Self> {
        let inner = ops::counitize(self.inner.coalgebra(), self.inner.operator()).map_err(err)?;
        Ok(Self { inner })
    }

    fn quotient_by_image(&self) -> PyResult<Self> {
        let q = ops::quotient_by_image(&self.inner).map_err(err)?;
        Ok(Self { inner: q.rb })
    }

    /// `(C₁, C₂)` as echelon bases.
    fn split(&self) -> PyResult<(Vec<Vec<String>>, Vec<Vec<String>>)> {
        let s = ops::split_idempotent(&self.inner).map_err(err)?;
        Ok((dense(s.c1.basis()), dense(s.c2.basis())))
    }

    fn dualize(&self) -> PyRbAlgebra {
        PyRbAlgebra {
            inner: duality::dualize(&self.inner),
        }
    }

    fn to_json(&self) -> String {
        StructureFile::from_rb_coalgebra(&self.inner).to_json()
    }

    fn __repr__(&self) -> String {
        format!("RbCoalgebra(dim={}, weight={})", self.inner.dim(), self.weight())
    }
}

/// A finite-dimensional Rota-Baxter algebra.
#[pyclass(name = "RbAlgebra", module = "rota_baxter_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyRbAlgebra {
    inner: CoreRbAlgebra,
}

#[pymethods]
impl PyRbAlgebra {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.inner.algebra().basis_names().to_vec()
    }

    #[getter]
    fn weight(&self) -> String {
        format_scalar(self.inner.weight())
    }

    #[getter]
    fn operator(&self) -> Vec<Vec<String>> {
        dense(self.inner.operator().matrix())
    }

    fn multiply(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let (x, y) = (vector(&x)?, vector(&y)?);
        let n = self.inner.dim();
        if x.len() != n || y.len() != n {
            return Err(err(format!("vectors must have length {n}")));
        }
        Ok(strings(&self.inner.algebra().multiply(&x, &y)))
    }

    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        report_dict(py, &self.inner.check())
    }

    fn double_product(&self) -> Self {
        Self {
            inner: duality::double_product(&self.inner),
        }
    }

    fn to_json(&self) -> String {
        StructureFile::from_rb_algebra(&self.inner).to_json()
    }

    fn __repr__(&self) -> String {
        format!("RbAlgebra(dim={}, weight={})", self.inner.dim(), self.weight())
    }
}

/// Binomial coalgebra `c0..cN` with the shift operator at weight −1.
#[pyfunction]
fn binomial(n: usize) -> PyRbCoalgebra {
    PyRbCoalgebra {
        inner: build_binomial(n).rb(),
    }
}

/// Smash coproduct on `H⊗H` for `hopf` in `z<n>`, `sweedler`; `op` is
/// `p1` or `p2`.
#[pyfunction]
fn smash(hopf: &str, op: &str) -> PyResult<PyRbCoalgebra> {
    let h = hopf_by_name(hopf).map_err(err)?;
    let c = smash_coalgebra(&h).map_err(err)?;
    let p = match op {
        "p1" => smash_p1(&h),
        "p2" => smash_p2(&h),
        _ => return Err(err(format!("unknown smash operator {op:?}"))),
    };
    let inner = CoreRbCoalgebra::new(c, p, scalar("-1")?).map_err(err)?;
    Ok(PyRbCoalgebra { inner })
}

/// `t K[t]` truncated at degree `n`, operator `q^k/(1−q^k)` on `t^k`, weight 1.
#[pyfunction]
fn qpoly(q: &str, n: usize) -> PyResult<PyRbAlgebra> {
    let inner = duality::q_polynomial_truncation(&scalar(q)?, n).map_err(err)?;
    Ok(PyRbAlgebra { inner })
}

/// Graded dual of [`qpoly`].
#[pyfunction]
fn qpoly_dual(q: &str, n: usize) -> PyResult<PyRbCoalgebra> {
    let g = duality::q_polynomial_graded(&scalar(q)?, n).map_err(err)?;
    let inner = duality::graded_dual(&g).map_err(err)?;
    Ok(PyRbCoalgebra { inner })
}

/// `(passed, tuples checked)` for the binomial lemma up to `max_n`.
#[pyfunction]
fn lemma_check(max_n: usize) -> (bool, usize) {
    let r = lemma_exhaustive_check(max_n);
    (r.passed(), r.tuples)
}

/// Reads an `rb-coalgebra` or `rb-algebra` structure file.
#[pyfunction]
fn from_json(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    let f = StructureFile::from_json(text).map_err(err)?;
    match f.kind {
        Kind::RbCoalgebra => {
            let inner = f.rb_coalgebra("P", None).map_err(err)?;
            Ok(Py::new(py, PyRbCoalgebra { inner })?.into_any())
        }
        Kind::RbAlgebra => {
            let inner = f.rb_algebra("P", None).map_err(err)?;
            Ok(Py::new(py, PyRbAlgebra { inner })?.into_any())
        }
        k => Err(err(format!("expected an rb-coalgebra or rb-algebra file, got {}", k.name()))),
    }
}

#[pymodule]
fn rota_baxter_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRbCoalgebra>()?;
    m.add_class::<PyRbAlgebra>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(smash, m)?)?;
    m.add_function(wrap_pyfunction!(qpoly, m)?)?;
    m.add_function(wrap_pyfunction!(qpoly_dual, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_check, m)?)?;
    m.add_function(wrap_pyfunction!(from_json, m)?)?;
    Ok(())
}
