//! Python bindings: `import kflat`.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use kflat_core::chow::{self, CycleSpec, SampleOptions};
use kflat_core::deform::{self, CnDeformation, MonomialCurve, PlaneCurveDeformation, RefuteOptions};
use kflat_core::dsupp::{self, SquareMatrix};
use kflat_core::expr::{parse_laurent, parse_poly, parse_poly_list};
use kflat_core::groebner::{self, PowerScalars};
use kflat_core::{Field, Ideal, MonomialOrder, Poly, Ring, Scalar};

create_exception!(kflat, KflatError, PyValueError);

fn err(e: kflat_core::Error) -> PyErr {
    KflatError::new_err(e.to_string())
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for kflat_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

fn field(name: &str) -> PyResult<Field> {
    name.parse().py()
}

fn scalars(field: Field, values: &[Bound<'_, PyAny>]) -> PyResult<Vec<Scalar>> {
    let ring = Ring::new(field, &[] as &[&str]).py()?;
    values
        .iter()
        .map(|v| {
            let text = v.str()?.to_string();
            parse_poly(&text, &ring)
                .py()?
                .as_constant()
                .ok_or_else(|| KflatError::new_err(format!("`{text}` is not a constant")))
        })
        .collect()
}

fn scalars_out(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

/// A polynomial ring `k[x1, …, xn]` with a monomial order.
#[pyclass(name = "Ring", frozen)]
struct PyRing(Ring);

/// A polynomial with exact coefficients.
#[pyclass(name = "Poly", frozen)]
struct PyPoly(Poly);

/// An ideal of a polynomial ring.
#[pyclass(name = "Ideal", frozen)]
struct PyIdeal(Ideal);

fn to_poly(ring: &Ring, obj: &Bound<'_, PyAny>) -> PyResult<Poly> {
    if let Ok(p) = obj.extract::<PyRef<'_, PyPoly>>() {
        ring.check_same(p.0.ring()).py()?;
        return Ok(p.0.clone());
    }
    if let Ok(n) = obj.extract::<i64>() {
        return Ok(ring.from_i64(n));
    }
    parse_poly(&obj.extract::<String>()?, ring).py()
}

fn to_ideal(ring: &Ring, obj: &Bound<'_, PyAny>) -> PyResult<Ideal> {
    if let Ok(i) = obj.extract::<PyRef<'_, PyIdeal>>() {
        ring.check_same(i.0.ring()).py()?;
        return Ok(i.0.clone());
    }
    if let Ok(text) = obj.extract::<String>() {
        return Ideal::new(ring, parse_poly_list(&text, ring).py()?).py();
    }
    let gens = obj.try_iter()?.map(|g| to_poly(ring, &g?)).collect::<PyResult<Vec<_>>>()?;
    Ideal::new(ring, gens).py()
}

fn power_scalars(mode: &str) -> PyResult<PowerScalars> {
    match mode {
        "closure" => Ok(PowerScalars::AlgebraicClosure),
        "base" => Ok(PowerScalars::BaseField),
        "exhaustive" => Ok(PowerScalars::ExhaustiveBaseField),
        other => Err(KflatError::new_err(format!("unknown scalars mode `{other}`"))),
    }
}

#[pymethods]
impl PyRing {
    #[new]
    #[pyo3(signature = (vars, field = "Q", order = "grevlex"))]
    fn new(vars: Vec<String>, field: &str, order: &str) -> PyResult<Self> {
        let order: MonomialOrder = order.parse().py()?;
        Ok(PyRing(Ring::new(self::field(field)?, &vars).py()?.with_order(order)))
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.0.vars().to_vec()
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().to_string()
    }

    #[getter]
    fn order(&self) -> String {
        self.0.order().to_string()
    }

    fn poly(&self, src: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(to_poly(&self.0, src)?))
    }

    fn var(&self, name: &str) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.var(name).py()?))
    }

    /// From a comma-separated string or a sequence of polynomials.
    fn ideal(&self, gens: &Bound<'_, PyAny>) -> PyResult<PyIdeal> {
        Ok(PyIdeal(to_ideal(&self.0, gens)?))
    }

    fn __repr__(&self) -> String {
        format!("Ring({})", self.0)
    }
}

#[pymethods]
impl PyPoly {
    #[getter]
    fn ring(&self) -> PyRing {
        PyRing(self.0.ring().clone())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn total_degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    fn derivative(&self, var: &str) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.derivative(var).py()?))
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.checked_add(&to_poly(self.0.ring(), other)?).py()?))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.checked_sub(&to_poly(self.0.ring(), other)?).py()?))
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(to_poly(self.0.ring(), other)?.checked_sub(&self.0).py()?))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.checked_mul(&to_poly(self.0.ring(), other)?).py()?))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(self.0.neg())
    }

    fn __pow__(&self, e: u32, _modulo: Option<Bound<'_, PyAny>>) -> PyPoly {
        PyPoly(self.0.pow(e))
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        to_poly(self.0.ring(), other).is_ok_and(|p| p == self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.0)
    }
}

#[pymethods]
impl PyIdeal {
    #[getter]
    fn ring(&self) -> PyRing {
        PyRing(self.0.ring().clone())
    }

    #[getter]
    fn gens(&self) -> Vec<PyPoly> {
        self.0.gens().iter().cloned().map(PyPoly).collect()
    }

    /// Reduced Gröbner basis under the ring's order.
    fn groebner_basis(&self) -> Vec<PyPoly> {
        self.0.groebner_basis().iter().cloned().map(PyPoly).collect()
    }

    fn normal_form(&self, p: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.normal_form(&to_poly(self.0.ring(), p)?).py()?))
    }

    fn contains(&self, p: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.0.contains(&to_poly(self.0.ring(), p)?).py()
    }

    fn __contains__(&self, p: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.contains(p)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> PyResult<bool> {
        let other = to_ideal(self.0.ring(), other)?;
        self.0.ideal_equal(&other).py()
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyIdeal> {
        Ok(PyIdeal(self.0.sum(&to_ideal(self.0.ring(), other)?).py()?))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyIdeal> {
        Ok(PyIdeal(self.0.product(&to_ideal(self.0.ring(), other)?).py()?))
    }

    fn intersect(&self, other: &Bound<'_, PyAny>) -> PyResult<PyIdeal> {
        Ok(PyIdeal(groebner::intersect(&self.0, &to_ideal(self.0.ring(), other)?).py()?))
    }

    fn quotient(&self, by: &Bound<'_, PyAny>) -> PyResult<PyIdeal> {
        Ok(PyIdeal(groebner::quotient_ideal(&self.0, &to_ideal(self.0.ring(), by)?).py()?))
    }

    /// Saturation by `by`, or by the maximal ideal of the origin.
    #[pyo3(signature = (by = None))]
    fn saturate(&self, by: Option<&Bound<'_, PyAny>>) -> PyResult<PyIdeal> {
        let s = match by {
            Some(b) => groebner::saturate_ideal(&self.0, &to_ideal(self.0.ring(), b)?),
            None => groebner::saturate_maximal(&self.0),
        };
        Ok(PyIdeal(s.py()?))
    }

    fn eliminate(&self, vars: Vec<String>) -> PyResult<PyIdeal> {
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        Ok(PyIdeal(groebner::eliminate(&self.0, &names).py()?))
    }

    fn power(&self, m: u32) -> PyResult<PyIdeal> {
        Ok(PyIdeal(groebner::power(&self.0, m).py()?))
    }

    /// Element-wise power `I^[m]`; `scalars` is `closure`, `base` or `exhaustive`.
    #[pyo3(signature = (m, scalars = "closure"))]
    fn frob_power(&self, m: u32, scalars: &str) -> PyResult<PyIdeal> {
        Ok(PyIdeal(groebner::elementwise_power(&self.0, m, power_scalars(scalars)?).py()?))
    }

    fn pure_part(&self) -> PyResult<PyIdeal> {
        Ok(PyIdeal(groebner::pure_part(&self.0).py()?))
    }

    fn torsion_length(&self) -> PyResult<usize> {
        groebner::torsion_length(&self.0).py()
    }

    fn quotient_length(&self) -> PyResult<usize> {
        groebner::quotient_length(&self.0).py()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal{}", self.0)
    }
}

/// First-order deformation of the coordinate axes, `φ_ij` Laurent in `x_j`.
#[pyclass(name = "CnDeformation", frozen)]
struct PyCn(CnDeformation);

#[pymethods]
impl PyCn {
    /// Parses the `n N` / `m M` / `i j: φ` text format.
    #[staticmethod]
    #[pyo3(signature = (text, field = "Q"))]
    fn parse(text: &str, field: &str) -> PyResult<Self> {
        Ok(PyCn(deform::parse_cn(text, self::field(field)?).py()?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    fn max_pole_order(&self) -> u32 {
        self.0.max_pole_order()
    }

    fn is_flat(&self) -> PyResult<bool> {
        deform::cn_is_flat(&self.0).py()
    }

    fn is_kflat(&self) -> bool {
        deform::cn_is_kflat(&self.0)
    }

    fn chow_vanishing(&self) -> PyResult<bool> {
        deform::cn_chow_vanishing(&self.0).py()
    }

    fn normalize(&self) -> PyCn {
        PyCn(deform::cn_normalize(&self.0))
    }

    /// A projection with a polar `B` as a dict, or `None` within the budget.
    #[pyo3(signature = (seed = 0, draws = 25))]
    fn refute(&self, py: Python<'_>, seed: u64, draws: usize) -> PyResult<Option<BTreeMap<&'static str, Py<PyAny>>>> {
        let opts = RefuteOptions { plain_draws: draws, scaled_draws: draws, seed, ..Default::default() };
        let Some(r) = deform::cn_refute_kflat(&self.0, &opts).py()? else {
            return Ok(None);
        };
        let mut out = BTreeMap::new();
        out.insert("lambda", scalars_out(&r.lambda).into_pyobject(py)?.into_any().unbind());
        out.insert("abar", scalars_out(&r.abar).into_pyobject(py)?.into_any().unbind());
        out.insert("aprime", scalars_out(&r.aprime).into_pyobject(py)?.into_any().unbind());
        out.insert("witness", r.witness.to_string().into_pyobject(py)?.into_any().unbind());
        Ok(Some(out))
    }

    fn central_fiber_ideal(&self) -> PyResult<PyIdeal> {
        Ok(PyIdeal(deform::cn_central_fiber_ideal_general(&self.0).py()?))
    }

    fn central_fiber_torsion(&self) -> PyResult<usize> {
        deform::cn_central_fiber_torsion(&self.0).py()
    }

    fn __str__(&self) -> String {
        deform::format_cn(&self.0)
    }
}

/// First-order deformation `f = ψε, z = φε` of a plane curve.
#[pyclass(name = "PlaneDeformation", frozen)]
struct PyPlane(PlaneCurveDeformation);

#[pymethods]
impl PyPlane {
    /// Parses `f; ψ; φ` in a two-variable ring, Laurent in the first variable.
    #[staticmethod]
    fn parse(text: &str, ring: &PyRing) -> PyResult<Self> {
        Ok(PyPlane(deform::parse_plane(text, &ring.0).py()?))
    }

    /// `x^a = y^c` with `ψ, φ` Laurent polynomials in `t`.
    #[staticmethod]
    #[pyo3(signature = (a, c, phi, psi = "0", field = "Q"))]
    fn monomial(a: u32, c: u32, phi: &str, psi: &str, field: &str) -> PyResult<Self> {
        let k = self::field(field)?;
        let plane = Ring::new(k, &["u", "v"]).py()?;
        let t = Ring::new(k, &["t"]).py()?;
        let curve = MonomialCurve::new(a, c).py()?;
        let d = PlaneCurveDeformation::monomial(curve, &plane, &parse_laurent(psi, &t, "t").py()?, &parse_laurent(phi, &t, "t").py()?);
        Ok(PyPlane(d.py()?))
    }

    /// Dict with `flat`, `globalizes` (None when unknown), `cflat`, `psi_regular`.
    fn classify(&self) -> PyResult<BTreeMap<&'static str, Option<bool>>> {
        let f = deform::plane_classify(&self.0).py()?;
        Ok(BTreeMap::from([
            ("flat", Some(f.flat)),
            ("globalizes", f.globalizes),
            ("cflat", Some(f.cflat)),
            ("psi_regular", Some(f.psi_regular)),
        ]))
    }

    fn __str__(&self) -> String {
        deform::format_plane(&self.0)
    }
}

#[pyfunction]
#[pyo3(signature = (n, field = "Q"))]
fn chow_ideal_axes(n: usize, field: &str) -> PyResult<PyIdeal> {
    Ok(PyIdeal(chow::chow_ideal_axes(n, self::field(field)?).py()?))
}

/// 0-based indices `S` with `Σ_{i∈S} w_i = n − |S|`, or `None`.
#[pyfunction]
fn find_weight_subset(w: Vec<u32>) -> PyResult<Option<Vec<usize>>> {
    chow::find_weight_subset(&w).py()
}

fn cycle(components: Vec<(PyRef<'_, PyIdeal>, u32)>) -> PyResult<CycleSpec> {
    CycleSpec::new(components.into_iter().map(|(i, m)| (i.0.clone(), m)).collect()).py()
}

/// Chow hull of `Σ m_i Z_i` from `[(ideal, m), …]`.
#[pyfunction]
#[pyo3(signature = (components, scalars = "closure"))]
fn chow_hull(components: Vec<(PyRef<'_, PyIdeal>, u32)>, scalars: &str) -> PyResult<PyIdeal> {
    Ok(PyIdeal(chow::chow_hull(&cycle(components)?, power_scalars(scalars)?).py()?))
}

/// Sampled ideal of Chow equations of a curve cycle; returns `(ideal, stabilized)`.
#[pyfunction]
#[pyo3(signature = (components, seed = 0, trials = 50))]
fn sample_chow_ideal(components: Vec<(PyRef<'_, PyIdeal>, u32)>, seed: u64, trials: usize) -> PyResult<(PyIdeal, bool)> {
    let rep = chow::sample_chow_ideal(&cycle(components)?, &SampleOptions { seed, trials, ..Default::default() }).py()?;
    Ok((PyIdeal(rep.ideal), rep.stabilized))
}

/// `det(v·I − C)` for the companion matrix `C` of `g`, monic in `var`.
#[pyfunction]
fn companion_char_poly(g: &PyPoly, var: &str) -> PyResult<PyPoly> {
    let m = dsupp::companion_matrix(&g.0, var).py()?;
    Ok(PyPoly(dsupp::char_poly(&m, var).py()?))
}

/// dsupp of a matrix of Laurent entries (strings) in `laurent` over `ring`; returns
/// `(equation, is_cartier)`.
#[pyfunction]
#[pyo3(signature = (rows, ring, laurent = "u", var = "v"))]
fn dsupp_matrix(rows: Vec<Vec<String>>, ring: &PyRing, laurent: &str, var: &str) -> PyResult<(String, bool)> {
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|e| parse_laurent(e, &ring.0, laurent).py()).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    let res = dsupp::dsupp(&SquareMatrix::new(entries).py()?, var).py()?;
    Ok((res.equation.body.to_string(), res.is_cartier))
}

/// `(member, y_regular_mod_f, y_regular_mod_g)` for `g ∈ (f, y^r)`.
#[pyfunction]
fn cartier_principal_test(f: &PyPoly, g: &PyPoly, y: &str, r: u32) -> PyResult<(bool, bool, bool)> {
    let rep = deform::cartier_principal_test(&f.0, &g.0, y, r).py()?;
    Ok((rep.member, rep.y_regular_mod_f, rep.y_regular_mod_g))
}

/// `(frobenius, gaps, lemma_holds)` for the semigroup generated by `a, c`.
#[pyfunction]
fn semigroup(a: u32, c: u32) -> PyResult<(i64, Vec<u64>, bool)> {
    let e = deform::NumericalSemigroup::new(a, c).py()?;
    Ok((e.frobenius(), e.gaps(), deform::check_semigroup_lemma(a, c).py()?.passed()))
}

#[pyfunction]
fn monomial_cflat_nonglobal_dim(a: u32, c: u32) -> PyResult<u64> {
    deform::monomial_cflat_nonglobal_dim(a, c).py()
}

/// Smoothing equations and first-order data for points `p` and weights `lam`.
#[pyfunction]
#[pyo3(signature = (p, lam, field = "Q"))]
fn cn_smoothing(p: Vec<Bound<'_, PyAny>>, lam: Vec<Bound<'_, PyAny>>, field: &str) -> PyResult<(Vec<PyPoly>, PyCn)> {
    let k = self::field(field)?;
    let s = deform::cn_smoothing(&scalars(k, &p)?, &scalars(k, &lam)?).py()?;
    Ok((s.equations.into_iter().map(PyPoly).collect(), PyCn(s.first_order)))
}

#[pymodule]
fn kflat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("KflatError", m.py().get_type::<KflatError>())?;
    m.add_class::<PyRing>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyCn>()?;
    m.add_class::<PyPlane>()?;
    m.add_function(wrap_pyfunction!(chow_ideal_axes, m)?)?;
    m.add_function(wrap_pyfunction!(find_weight_subset, m)?)?;
    m.add_function(wrap_pyfunction!(chow_hull, m)?)?;
    m.add_function(wrap_pyfunction!(sample_chow_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(companion_char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(dsupp_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(cartier_principal_test, m)?)?;
    m.add_function(wrap_pyfunction!(semigroup, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_cflat_nonglobal_dim, m)?)?;
    m.add_function(wrap_pyfunction!(cn_smoothing, m)?)?;
    Ok(())
}
