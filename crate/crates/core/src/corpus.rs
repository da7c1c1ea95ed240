//! A fixed collection of small Rota-Baxter coalgebras used by tests, the CLI
//! and the Python bindings.

use crate::binomial::build_binomial;
use crate::coalgebra::{Coalgebra, LinearOperator};
use crate::duality::{graded_dual, q_polynomial_graded};
use crate::hopf::{group_algebra, smash_coalgebra, smash_p1, smash_p2, sweedler_h4, HopfAlgebra};
use crate::linear::{int, unit_vector};
use crate::rota_baxter::{complement_operator, grouplike_projector, RbCoalgebra};

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub rb: RbCoalgebra,
    /// `P² = P` at weight −1.
    pub idempotent: bool,
}

fn entry(name: &str, rb: RbCoalgebra) -> Entry {
    let idempotent = rb.operator().is_idempotent() && *rb.weight() == int(-1);
    Entry {
        name: name.to_string(),
        rb,
        idempotent,
    }
}

/// Hopf instances for the smash construction: `𝕂[Z₂]`, `𝕂[Z₃]`, Sweedler's `H₄`.
pub fn hopf_instances() -> Vec<(&'static str, HopfAlgebra)> {
    vec![
        ("z2", group_algebra(2).expect("n >= 1")),
        ("z3", group_algebra(3).expect("n >= 1")),
        ("sweedler", sweedler_h4()),
    ]
}

fn z2_coalgebra() -> Coalgebra {
    Coalgebra::group_like(vec!["e".into(), "g".into()])
}

/// Every example Rota-Baxter coalgebra; all of them pass their own check.
pub fn rb_corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in [1, 3, 5] {
        out.push(entry(&format!("binomial-{n}"), build_binomial(n).rb()));
    }
    let b3 = build_binomial(3);
    out.push(entry(
        "binomial-3-complement",
        complement_operator(&b3.rb()),
    ));
    out.push(entry(
        "binomial-3-grouplike",
        grouplike_projector(b3.coalgebra(), &unit_vector(4, 0)).expect("c0 is group-like"),
    ));
    out.push(entry(
        "binomial-3-zero",
        RbCoalgebra::new(b3.coalgebra().clone(), LinearOperator::zero(4), int(2)).expect("dims"),
    ));
    out.push(entry(
        "z2-grouplike",
        grouplike_projector(&z2_coalgebra(), &unit_vector(2, 1)).expect("g is group-like"),
    ));
    out.push(entry(
        "z2-identity",
        RbCoalgebra::new(z2_coalgebra(), LinearOperator::identity(2), int(-1)).expect("dims"),
    ));
    for (name, h) in hopf_instances() {
        let c = smash_coalgebra(&h).expect("valid Hopf algebra");
        out.push(entry(
            &format!("smash-{name}-p1"),
            RbCoalgebra::new(c.clone(), smash_p1(&h), int(-1)).expect("dims"),
        ));
        out.push(entry(
            &format!("smash-{name}-p2"),
            RbCoalgebra::new(c, smash_p2(&h), int(-1)).expect("dims"),
        ));
    }
    let g = q_polynomial_graded(&int(2), 6).expect("2 is not a root of unity");
    out.push(entry("qpoly-2-6-dual", graded_dual(&g).expect("graded")));
    out
}
