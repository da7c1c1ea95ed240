//! JSON check reports.

use std::time::Instant;

use rota_baxter::linear::{format_scalar, Tensor};
use rota_baxter::Report;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct TensorTerm {
    pub index: Vec<usize>,
    pub value: String,
}

fn sparse(t: &Tensor) -> Vec<TensorTerm> {
    t.terms()
        .into_iter()
        .map(|(index, v)| TensorTerm {
            index,
            value: format_scalar(&v),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleJson {
    pub law: String,
    pub basis: Vec<usize>,
    pub basis_names: Vec<String>,
    pub lhs: Vec<TensorTerm>,
    pub rhs: Vec<TensorTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub check: String,
    pub pass: bool,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub kind: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    pub pass: bool,
    pub checks: Vec<CheckEntry>,
    pub elapsed_ms: f64,
}

pub fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

/// Runs `f` and records its report with timing.
pub fn timed(names: &[String], f: impl FnOnce() -> Report) -> CheckEntry {
    let start = Instant::now();
    let r = f();
    let elapsed_ms = millis(start);
    CheckEntry {
        check: r.check.clone(),
        pass: r.passed(),
        elapsed_ms,
        counterexample: r.failure.map(|cx| CounterexampleJson {
            basis_names: cx
                .basis
                .iter()
                .map(|&i| names.get(i).cloned().unwrap_or_default())
                .collect(),
            law: cx.law,
            basis: cx.basis,
            lhs: sparse(&cx.lhs),
            rhs: sparse(&cx.rhs),
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaFailureJson {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub j: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReportJson {
    pub command: String,
    pub check: String,
    pub max_n: usize,
    pub tuples: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<LemmaFailureJson>,
    pub elapsed_ms: f64,
}
