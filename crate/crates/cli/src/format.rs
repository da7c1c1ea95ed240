//! The JSON interchange format.
//!
//! Rank-3 structure constants are sparse quadruples `[i, j, k, "v"]` in both
//! directions: for a product `e_i·e_j` has coefficient `v` on `e_k`, for a
//! coproduct `Δ(e_k)` has coefficient `v` on `e_i⊗e_j`. Operators are sparse
//! `[row, col, "v"]` with `P(e_col) = Σ_row v e_row`. Scalars are strings
//! `"n"` or `"n/d"`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rota_baxter::duality::{Algebra, GradedAlgebraTruncation, RbAlgebra};
use rota_baxter::linear::{format_scalar, parse_scalar, Matrix, Scalar, Subspace, Vector};
use rota_baxter::{Coalgebra, HopfAlgebra, LinearOperator, RbCoalgebra};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, Result};

pub const FORMAT_VERSION: u32 = 1;
/// Operator name used for the Rota-Baxter operator.
pub const OPERATOR: &str = "P";
/// Operator name used for a Hopf antipode.
pub const ANTIPODE: &str = "S";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Coalgebra,
    Algebra,
    Hopf,
    RbCoalgebra,
    RbAlgebra,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Coalgebra => "coalgebra",
            Kind::Algebra => "algebra",
            Kind::Hopf => "hopf",
            Kind::RbCoalgebra => "rb-coalgebra",
            Kind::RbAlgebra => "rb-algebra",
        }
    }
}

pub type Quad = (usize, usize, usize, String);
pub type Triple = (usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub format: u32,
    pub kind: Kind,
    pub dim: usize,
    pub basis_names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Quad>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Quad>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub operators: BTreeMap<String, Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, Vec<Vec<String>>>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Format(msg.into())
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

fn parse_vector(v: &[String], dim: usize, what: &str) -> Result<Vector> {
    if v.len() != dim {
        return Err(invalid(format!("{what} has length {}, expected {dim}", v.len())));
    }
    v.iter().map(|s| Ok(parse_scalar(s)?)).collect()
}

/// Column `i·n + j`, row `k` of an `n × n²` (product) matrix.
fn quads_from_product(m: &Matrix) -> Vec<Quad> {
    let n = m.rows();
    let mut out: Vec<Quad> = m
        .nonzeros()
        .map(|(k, col, v)| (col / n, col % n, k, format_scalar(v)))
        .collect();
    out.sort();
    out
}

fn product_from_quads(q: &[Quad], n: usize, what: &str) -> Result<Matrix> {
    let mut m = Matrix::zeros(n, n * n);
    for (i, j, k, v) in q {
        if *i >= n || *j >= n || *k >= n {
            return Err(invalid(format!("{what} index ({i}, {j}, {k}) out of range for dim {n}")));
        }
        let v = parse_scalar(v)?;
        if !m.get(*k, i * n + j).is_zero() {
            return Err(invalid(format!("{what} entry ({i}, {j}, {k}) repeated")));
        }
        m.set(*k, i * n + j, v);
    }
    Ok(m)
}

fn triples_from_matrix(m: &Matrix) -> Vec<Triple> {
    m.nonzeros().map(|(r, c, v)| (r, c, format_scalar(v))).collect()
}

fn matrix_from_triples(t: &[Triple], n: usize, what: &str) -> Result<Matrix> {
    let mut m = Matrix::zeros(n, n);
    for (r, c, v) in t {
        if *r >= n || *c >= n {
            return Err(invalid(format!("operator {what} index ({r}, {c}) out of range for dim {n}")));
        }
        if !m.get(*r, *c).is_zero() {
            return Err(invalid(format!("operator {what} entry ({r}, {c}) repeated")));
        }
        m.set(*r, *c, parse_scalar(v)?);
    }
    Ok(m)
}

impl StructureFile {
    fn empty(kind: Kind, names: &[String]) -> Self {
        Self {
            format: FORMAT_VERSION,
            kind,
            dim: names.len(),
            basis_names: names.to_vec(),
            mult: None,
            unit: None,
            delta: None,
            counit: None,
            operators: BTreeMap::new(),
            weight: None,
            degrees: None,
            subspaces: BTreeMap::new(),
        }
    }

    pub fn from_coalgebra(c: &Coalgebra) -> Self {
        let mut f = Self::empty(Kind::Coalgebra, c.basis_names());
        f.delta = Some(quads_from_product(&c.delta_matrix().transpose()));
        f.counit = c.counit().map(|e| scalar_strings(e));
        f
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        let mut f = Self::empty(Kind::Algebra, a.basis_names());
        f.mult = Some(quads_from_product(a.mult_matrix()));
        f.unit = a.unit().map(|u| scalar_strings(u));
        f
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let mut f = Self::from_coalgebra(h.coalgebra());
        f.kind = Kind::Hopf;
        f.mult = Some(quads_from_product(h.mult_matrix()));
        f.unit = Some(scalar_strings(h.unit()));
        f.operators
            .insert(ANTIPODE.into(), triples_from_matrix(h.antipode().matrix()));
        f
    }

    pub fn from_rb_coalgebra(rb: &RbCoalgebra) -> Self {
        let mut f = Self::from_coalgebra(rb.coalgebra());
        f.kind = Kind::RbCoalgebra;
        f.operators
            .insert(OPERATOR.into(), triples_from_matrix(rb.operator().matrix()));
        f.weight = Some(format_scalar(rb.weight()));
        f
    }

    pub fn from_rb_algebra(rb: &RbAlgebra) -> Self {
        let mut f = Self::from_algebra(rb.algebra());
        f.kind = Kind::RbAlgebra;
        f.operators
            .insert(OPERATOR.into(), triples_from_matrix(rb.operator().matrix()));
        f.weight = Some(format_scalar(rb.weight()));
        f
    }

    pub fn from_graded(g: &GradedAlgebraTruncation) -> Self {
        let mut f = Self::from_rb_algebra(&g.rb);
        f.degrees = Some(g.degrees.clone());
        f
    }

    pub fn with_subspace(mut self, name: &str, s: &Subspace) -> Self {
        let rows = s.basis_vectors().iter().map(|r| scalar_strings(r)).collect();
        self.subspaces.insert(name.to_string(), rows);
        self
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: Self = serde_json::from_str(text)?;
        f.validate()?;
        Ok(f)
    }

    /// Shape and per-kind field checks; scalars are parsed when the structure
    /// is built.
    pub fn validate(&self) -> Result<()> {
        if self.format != FORMAT_VERSION {
            return Err(invalid(format!(
                "unsupported format version {}, expected {FORMAT_VERSION}",
                self.format
            )));
        }
        if self.basis_names.len() != self.dim {
            return Err(invalid(format!(
                "{} basis names for dim {}",
                self.basis_names.len(),
                self.dim
            )));
        }
        let (needs_mult, needs_delta) = match self.kind {
            Kind::Coalgebra | Kind::RbCoalgebra => (false, true),
            Kind::Algebra | Kind::RbAlgebra => (true, false),
            Kind::Hopf => (true, true),
        };
        let check_field = |present: bool, needed: bool, name: &str| -> Result<()> {
            match (present, needed) {
                (false, true) => Err(invalid(format!("{} file needs `{name}`", self.kind.name()))),
                (true, false) => Err(invalid(format!(
                    "`{name}` does not apply to a {} file",
                    self.kind.name()
                ))),
                _ => Ok(()),
            }
        };
        check_field(self.mult.is_some(), needs_mult, "mult")?;
        check_field(self.delta.is_some(), needs_delta, "delta")?;
        if self.unit.is_some() && !needs_mult {
            return Err(invalid(format!("`unit` does not apply to a {} file", self.kind.name())));
        }
        if self.counit.is_some() && !needs_delta {
            return Err(invalid(format!("`counit` does not apply to a {} file", self.kind.name())));
        }
        let rb = matches!(self.kind, Kind::RbCoalgebra | Kind::RbAlgebra);
        check_field(self.weight.is_some(), rb, "weight")?;
        if self.kind == Kind::Hopf {
            if self.unit.is_none() || self.counit.is_none() {
                return Err(invalid("hopf file needs `unit` and `counit`"));
            }
            if !self.operators.contains_key(ANTIPODE) {
                return Err(invalid(format!("hopf file needs operator `{ANTIPODE}`")));
            }
        }
        if rb && !self.operators.contains_key(OPERATOR) {
            return Err(invalid(format!(
                "{} file needs operator `{OPERATOR}`",
                self.kind.name()
            )));
        }
        if let Some(d) = &self.degrees {
            if self.kind != Kind::RbAlgebra {
                return Err(invalid("`degrees` only applies to rb-algebra files"));
            }
            if d.len() != self.dim {
                return Err(invalid(format!("{} degrees for dim {}", d.len(), self.dim)));
            }
        }
        for (name, rows) in &self.subspaces {
            for r in rows {
                if r.len() != self.dim {
                    return Err(invalid(format!("subspace {name} has a row of length {}", r.len())));
                }
            }
        }
        Ok(())
    }

    pub fn weight(&self) -> Result<Option<Scalar>> {
        self.weight.as_deref().map(parse_scalar).transpose().map_err(Into::into)
    }

    pub fn operator(&self, name: &str) -> Result<LinearOperator> {
        let t = self
            .operators
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("no operator named {name:?} in file")))?;
        Ok(LinearOperator::new(matrix_from_triples(t, self.dim, name)?)?)
    }

    pub fn coalgebra(&self) -> Result<Coalgebra> {
        let q = self
            .delta
            .as_ref()
            .ok_or_else(|| invalid(format!("{} file has no `delta`", self.kind.name())))?;
        let delta = product_from_quads(q, self.dim, "delta")?.transpose();
        let counit = self
            .counit
            .as_ref()
            .map(|e| parse_vector(e, self.dim, "counit"))
            .transpose()?;
        Ok(Coalgebra::new(self.basis_names.clone(), delta, counit)?)
    }

    pub fn algebra(&self) -> Result<Algebra> {
        let q = self
            .mult
            .as_ref()
            .ok_or_else(|| invalid(format!("{} file has no `mult`", self.kind.name())))?;
        let mult = product_from_quads(q, self.dim, "mult")?;
        let unit = self
            .unit
            .as_ref()
            .map(|u| parse_vector(u, self.dim, "unit"))
            .transpose()?;
        Ok(Algebra::new(self.basis_names.clone(), mult, unit)?)
    }

    pub fn hopf(&self) -> Result<HopfAlgebra> {
        let a = self.algebra()?;
        let c = self.coalgebra()?;
        let s = self.operator(ANTIPODE)?;
        Ok(HopfAlgebra::new(
            self.basis_names.clone(),
            a.mult_matrix().clone(),
            a.unit().cloned().ok_or_else(|| invalid("hopf file needs `unit`"))?,
            c.delta_matrix().clone(),
            c.counit().cloned().ok_or_else(|| invalid("hopf file needs `counit`"))?,
            s.into_matrix(),
        )?)
    }

    fn weight_or(&self, over: Option<&Scalar>) -> Result<Scalar> {
        match over {
            Some(w) => Ok(w.clone()),
            None => self
                .weight()?
                .ok_or_else(|| CliError::Usage("no weight in file; pass --weight".into())),
        }
    }

    /// The coalgebra with operator `op` at the file's weight, or `weight`
    /// when given.
    pub fn rb_coalgebra(&self, op: &str, weight: Option<&Scalar>) -> Result<RbCoalgebra> {
        Ok(RbCoalgebra::new(
            self.coalgebra()?,
            self.operator(op)?,
            self.weight_or(weight)?,
        )?)
    }

    pub fn rb_algebra(&self, op: &str, weight: Option<&Scalar>) -> Result<RbAlgebra> {
        Ok(RbAlgebra::new(
            self.algebra()?,
            self.operator(op)?,
            self.weight_or(weight)?,
        )?)
    }

    pub fn graded(&self, op: &str) -> Result<GradedAlgebraTruncation> {
        let degrees = self
            .degrees
            .clone()
            .ok_or_else(|| CliError::Usage("file has no `degrees`".into()))?;
        Ok(GradedAlgebraTruncation::new(self.rb_algebra(op, None)?, degrees)?)
    }

    pub fn subspace(&self, name: &str) -> Result<Subspace> {
        let rows = self
            .subspaces
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("no subspace named {name:?} in file")))?;
        let vs = rows
            .iter()
            .map(|r| parse_vector(r, self.dim, name))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.dim, &vs)?)
    }
}

/// Pretty JSON with arrays of scalars kept on one line.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("plain data serializes");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_leaf) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}
