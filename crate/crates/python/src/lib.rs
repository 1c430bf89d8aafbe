//! Python bindings for the reductlab engine.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use reductlab_core as core;
use reductlab_core::grid::{section_classify as core_sections, SectionConvention};
use reductlab_core::verify::{self, VerifyConfig};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Permutation", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(core::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        core::Permutation::new(images).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(core::Permutation::identity(n))
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.0.images().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    /// `self.compose(other)` maps `i` to `self(other(i))`.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn invert(&self) -> Self {
        Self(self.0.invert())
    }

    fn apply(&self, tuple: Vec<usize>) -> PyResult<Vec<usize>> {
        self.0.apply_to_tuple(&tuple).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.images())
    }
}

#[pyclass(name = "Group", frozen)]
struct PyGroup(core::PermutationGroup);

#[pymethods]
impl PyGroup {
    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn members(&self) -> Vec<PyPermutation> {
        self.0
            .members()
            .iter()
            .cloned()
            .map(PyPermutation)
            .collect()
    }

    fn __contains__(&self, p: &PyPermutation) -> bool {
        self.0.contains(&p.0)
    }

    fn is_subgroup_of(&self, other: &PyGroup) -> bool {
        self.0.is_subgroup_of(&other.0)
    }

    fn __repr__(&self) -> String {
        format!(
            "Group(degree={}, order={})",
            self.0.degree(),
            self.0.order()
        )
    }
}

#[pyclass(name = "Relation", frozen, from_py_object)]
#[derive(Clone)]
struct PyRelation(core::Relation);

#[pymethods]
impl PyRelation {
    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    #[getter]
    fn arity(&self) -> usize {
        self.0.arity()
    }

    fn tuples(&self) -> Vec<Vec<usize>> {
        self.0.tuples().collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __contains__(&self, t: Vec<usize>) -> bool {
        self.0.contains(&t)
    }

    fn __repr__(&self) -> String {
        format!(
            "Relation({:?}, arity={}, size={})",
            self.0.name(),
            self.0.arity(),
            self.0.len()
        )
    }
}

#[pyclass(name = "Structure")]
struct PyStructure(core::FiniteStructure);

#[pymethods]
impl PyStructure {
    #[staticmethod]
    fn linear(n: usize) -> PyResult<Self> {
        core::FiniteStructure::linear(n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn grid(m: usize, h: usize) -> PyResult<Self> {
        let g = core::GridStructure::new(m, h).map_err(err)?;
        Ok(Self(core::FiniteStructure::grid(g)))
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn is_grid(&self) -> bool {
        self.0.as_grid().is_some()
    }

    /// Builds a named preset such as `"between"` or `"codir_1"`.
    fn preset(&self, name: &str) -> PyResult<PyRelation> {
        let p: core::RelationPreset = name.parse().map_err(err)?;
        p.build(&self.0).map(PyRelation).map_err(err)
    }

    /// Evaluates a definition; earlier registered relations may be used.
    fn evaluate(&self, text: &str) -> PyResult<PyRelation> {
        let d = core::parse(text).map_err(err)?;
        core::logic::evaluate(&d, &self.0)
            .map(PyRelation)
            .map_err(err)
    }

    /// Registers a relation so formulas can refer to it by name.
    fn add(&mut self, rel: PyRelation) -> PyResult<()> {
        self.0.add_relation(rel.0).map_err(err)
    }

    fn render(&self, tuple: Vec<usize>) -> String {
        self.0.render_tuple(&tuple)
    }

    fn __repr__(&self) -> String {
        match self.0.as_grid() {
            Some(g) => format!("Structure.grid({}, {})", g.verticals(), g.height()),
            None => format!("Structure.linear({})", self.0.size()),
        }
    }
}

fn inner(rels: &[PyRelation]) -> Vec<core::Relation> {
    rels.iter().map(|r| r.0.clone()).collect()
}

/// Canonical, fully parenthesized form of a definition.
#[pyfunction]
fn parse_formula(text: &str) -> PyResult<String> {
    core::parse(text)
        .map(|d| core::logic::print(&d))
        .map_err(err)
}

#[pyfunction]
fn generate_group(degree: usize, generators: Vec<PyPermutation>) -> PyResult<PyGroup> {
    let gens: Vec<_> = generators.into_iter().map(|p| p.0).collect();
    core::generate_group(degree, &gens)
        .map(PyGroup)
        .map_err(err)
}

#[pyfunction]
fn aut_group(s: &PyStructure, relations: Vec<PyRelation>) -> PyResult<PyGroup> {
    core::aut_group(&s.0, &inner(&relations))
        .map(PyGroup)
        .map_err(err)
}

/// `None` when `target` is definable from `base`, otherwise a dict with
/// the separating permutation and tuple.
#[pyfunction]
fn definable<'py>(
    py: Python<'py>,
    s: &PyStructure,
    target: &PyRelation,
    base: Vec<PyRelation>,
) -> PyResult<Option<Bound<'py, pyo3::types::PyDict>>> {
    match core::definable(&target.0, &inner(&base), &s.0).map_err(err)? {
        core::Definability::Yes => Ok(None),
        core::Definability::No(w) => {
            let d = pyo3::types::PyDict::new(py);
            d.set_item("permutation", PyPermutation(w.permutation))?;
            d.set_item("broken", w.broken)?;
            d.set_item("tuple", w.tuple)?;
            d.set_item("image", w.image)?;
            Ok(Some(d))
        }
    }
}

fn spaces(s: &PyStructure, sets: Vec<Vec<PyRelation>>) -> PyResult<core::HasseDiagram> {
    let spaces = sets
        .iter()
        .map(|set| core::DefinabilitySpace::new(&s.0, inner(set)))
        .collect::<core::Result<Vec<_>>>()
        .map_err(err)?;
    core::hasse(spaces).map_err(err)
}

type HasseParts = (Vec<(Vec<String>, usize)>, Vec<(usize, usize)>);

/// Hasse diagram of the spaces generated by each set: node labels with
/// group orders, and (lower, upper) covering edges.
#[pyfunction]
fn hasse(s: &PyStructure, sets: Vec<Vec<PyRelation>>) -> PyResult<HasseParts> {
    let d = spaces(s, sets)?;
    let nodes = d
        .nodes
        .iter()
        .map(|n| (n.labels.clone(), n.order()))
        .collect();
    Ok((nodes, d.edges))
}

#[pyfunction]
#[pyo3(signature = (s, sets, name = "lattice"))]
fn lattice_dot(s: &PyStructure, sets: Vec<Vec<PyRelation>>, name: &str) -> PyResult<String> {
    Ok(core::dot::to_dot(&spaces(s, sets)?, name))
}

/// Boundary of a relation; raises `ValueError` when it exceeds `cap`
/// (default: height - 1).
#[pyfunction]
#[pyo3(signature = (s, relation, cap = None))]
fn boundary(s: &PyStructure, relation: &PyRelation, cap: Option<usize>) -> PyResult<usize> {
    let view = s.0.difference_view();
    let cap = cap.unwrap_or(view.height().saturating_sub(1));
    view.boundary(&relation.0, cap).map_err(err)
}

/// Flags of a grid permutation.
#[pyfunction]
fn classify(
    m: usize,
    h: usize,
    p: &PyPermutation,
) -> PyResult<std::collections::BTreeMap<&'static str, bool>> {
    let g = core::GridStructure::new(m, h).map_err(err)?;
    let c = g.classify(&p.0).map_err(err)?;
    Ok([
        ("systemic", c.systemic),
        ("positive", c.positive),
        ("negative", c.negative),
        ("shift", c.shift),
        ("vertical_shift", c.vertical_shift),
    ]
    .into_iter()
    .collect())
}

#[pyfunction]
fn initiate(m: usize, h: usize, p: &PyPermutation) -> PyResult<PyPermutation> {
    let g = core::GridStructure::new(m, h).map_err(err)?;
    g.initiate(&p.0).map(PyPermutation).map_err(err)
}

/// Section matches as `(split, condition)` with condition `"(i)"` or
/// `"(ii)"`.
#[pyfunction]
fn section_classify(p: &PyPermutation) -> Vec<(usize, String)> {
    core_sections(&p.0)
        .into_iter()
        .map(|(s, c)| (s.split, c.to_string()))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (p, convention = "vacuous-empty-part"))]
fn section_member(p: &PyPermutation, convention: &str) -> PyResult<bool> {
    let conv = SectionConvention::ALL
        .into_iter()
        .find(|c| c.name() == convention)
        .ok_or_else(|| PyValueError::new_err(format!("unknown convention {convention:?}")))?;
    Ok(core::grid::section_member(&p.0, conv))
}

/// Runs the reproduction suite with default sizes; returns
/// `(all_passed, report_text)`.
#[pyfunction]
fn verify_paper(py: Python<'_>) -> PyResult<(bool, String)> {
    let report = py
        .detach(|| verify::run(&VerifyConfig::default()))
        .map_err(err)?;
    Ok((report.all_passed(), report.render()))
}

#[pymodule]
fn reductlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyRelation>()?;
    m.add_class::<PyStructure>()?;
    m.add_function(wrap_pyfunction!(parse_formula, m)?)?;
    m.add_function(wrap_pyfunction!(generate_group, m)?)?;
    m.add_function(wrap_pyfunction!(aut_group, m)?)?;
    m.add_function(wrap_pyfunction!(definable, m)?)?;
    m.add_function(wrap_pyfunction!(hasse, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_dot, m)?)?;
    m.add_function(wrap_pyfunction!(boundary, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(initiate, m)?)?;
    m.add_function(wrap_pyfunction!(section_classify, m)?)?;
    m.add_function(wrap_pyfunction!(section_member, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    Ok(())
}
