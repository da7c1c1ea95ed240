use std::time::Instant;

use rota_baxter::binomial::{build_binomial, lemma_exhaustive_check};
use rota_baxter::coalgebra::{check_coassociativity, check_counit};
use rota_baxter::duality::{
    check_associativity, check_rb_algebra_axiom, check_unit, complement_algebra_operator,
    double_product, dualize, dualize_coalgebra, graded_dual, q_polynomial_graded,
    rescale_algebra_weight,
};
use rota_baxter::hopf::{
    check_hopf_axioms, group_algebra, smash_coalgebra, smash_p1, smash_p2, sweedler_h4,
    HopfAlgebra,
};
use rota_baxter::linear::{format_scalar, parse_scalar, Scalar};
use rota_baxter::rota_baxter::{
    check_rb_axiom, complement_operator, counitize, double_coproduct, projector_from_split,
    quotient_by_image, rescale_weight, split_idempotent,
};

use crate::error::{CliError, Result};
use crate::format::{to_json, Kind, StructureFile, OPERATOR};
use crate::report::{millis, timed, CheckReport, LemmaFailureJson, LemmaReportJson};

/// Hopf algebra by short name: `z<n>` for the cyclic group algebra, or
/// `sweedler`.
pub fn hopf_by_name(name: &str) -> Result<HopfAlgebra> {
    if name == "sweedler" {
        return Ok(sweedler_h4());
    }
    let n = name
        .strip_prefix('z')
        .and_then(|n| n.parse::<usize>().ok())
        .ok_or_else(|| CliError::Usage(format!("unknown Hopf algebra {name:?}")))?;
    Ok(group_algebra(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Binomial { n: usize },
    Group { n: usize },
    Sweedler,
    Smash { hopf: String, op: String },
    Qpoly { q: String, n: usize },
}

pub fn generate(g: &Generator) -> Result<StructureFile> {
    Ok(match g {
        Generator::Binomial { n } => StructureFile::from_rb_coalgebra(&build_binomial(*n).rb()),
        Generator::Group { n } => StructureFile::from_hopf(&group_algebra(*n)?),
        Generator::Sweedler => StructureFile::from_hopf(&sweedler_h4()),
        Generator::Smash { hopf, op } => {
            let h = hopf_by_name(hopf)?;
            let c = smash_coalgebra(&h)?;
            let p = match op.as_str() {
                "p1" => smash_p1(&h),
                "p2" => smash_p2(&h),
                _ => return Err(CliError::Usage(format!("unknown smash operator {op:?}"))),
            };
            let rb = rota_baxter::RbCoalgebra::new(c, p, Scalar::from_integer((-1).into()))?;
            StructureFile::from_rb_coalgebra(&rb)
        }
        Generator::Qpoly { q, n } => {
            StructureFile::from_graded(&q_polynomial_graded(&parse_scalar(q)?, *n)?)
        }
    })
}

pub struct Outcome {
    pub json: String,
    pub pass: bool,
}

/// All laws that apply to the file's kind. `op` and `weight` add a
/// Rota-Baxter check to plain (co)algebras and override the file's own values
/// otherwise.
pub fn check(file: &StructureFile, op: Option<&str>, weight: Option<&str>) -> Result<Outcome> {
    let start = Instant::now();
    let weight = weight.map(parse_scalar).transpose()?;
    let names = &file.basis_names;
    let mut checks = Vec::new();
    let op_name = op.unwrap_or(OPERATOR);
    let mut used_weight = None;
    match file.kind {
        Kind::Coalgebra | Kind::RbCoalgebra => {
            let c = file.coalgebra()?;
            checks.push(timed(names, || check_coassociativity(&c)));
            if c.is_counital() {
                checks.push(timed(names, || check_counit(&c).expect("counital")));
            }
            if file.kind == Kind::RbCoalgebra || op.is_some() {
                let rb = file.rb_coalgebra(op_name, weight.as_ref())?;
                used_weight = Some(rb.weight().clone());
                checks.push(timed(names, || {
                    check_rb_axiom(rb.coalgebra(), rb.operator(), rb.weight()).expect("dims")
                }));
            }
        }
        Kind::Algebra | Kind::RbAlgebra => {
            let a = file.algebra()?;
            checks.push(timed(names, || check_associativity(&a)));
            if a.unit().is_some() {
                checks.push(timed(names, || check_unit(&a).expect("unital")));
            }
            if file.kind == Kind::RbAlgebra || op.is_some() {
                let rb = file.rb_algebra(op_name, weight.as_ref())?;
                used_weight = Some(rb.weight().clone());
                checks.push(timed(names, || {
                    check_rb_algebra_axiom(rb.algebra(), rb.operator(), rb.weight()).expect("dims")
                }));
            }
        }
        Kind::Hopf => {
            let h = file.hopf()?;
            checks.push(timed(names, || check_hopf_axioms(&h)));
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    let report = CheckReport {
        command: "check".into(),
        kind: file.kind.name().into(),
        dim: file.dim,
        weight: used_weight.as_ref().map(format_scalar),
        pass,
        checks,
        elapsed_ms: millis(start),
    };
    Ok(Outcome {
        json: to_json(&report),
        pass,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Dualize,
    DoubleCoproduct,
    DoubleProduct,
    Complement,
    Rescale,
    Counitize,
    QuotientImage,
    Split,
    Projector,
    GradedDual,
}

impl Verb {
    pub const ALL: [(&'static str, Verb); 10] = [
        ("dualize", Verb::Dualize),
        ("double-coproduct", Verb::DoubleCoproduct),
        ("double-product", Verb::DoubleProduct),
        ("complement", Verb::Complement),
        ("rescale", Verb::Rescale),
        ("counitize", Verb::Counitize),
        ("quotient-image", Verb::QuotientImage),
        ("split", Verb::Split),
        ("projector", Verb::Projector),
        ("graded-dual", Verb::GradedDual),
    ];

    pub fn parse(s: &str) -> Option<Verb> {
        Self::ALL.iter().find(|(n, _)| *n == s).map(|(_, v)| *v)
    }

    pub fn name(self) -> &'static str {
        Self::ALL.iter().find(|(_, v)| *v == self).map(|(n, _)| *n).expect("listed")
    }
}

fn wrong_kind(verb: Verb, kind: Kind) -> CliError {
    CliError::Usage(format!("{} does not apply to a {} file", verb.name(), kind.name()))
}

pub fn transform(
    file: &StructureFile,
    verb: Verb,
    mu: Option<&str>,
    op: Option<&str>,
) -> Result<StructureFile> {
    let op = op.unwrap_or(OPERATOR);
    let kind = file.kind;
    let out = match (verb, kind) {
        (Verb::Dualize, Kind::RbCoalgebra) => {
            StructureFile::from_rb_algebra(&dualize(&file.rb_coalgebra(op, None)?))
        }
        (Verb::Dualize, Kind::Coalgebra) => {
            StructureFile::from_algebra(&dualize_coalgebra(&file.coalgebra()?))
        }
        (Verb::DoubleCoproduct, Kind::RbCoalgebra) => {
            StructureFile::from_rb_coalgebra(&double_coproduct(&file.rb_coalgebra(op, None)?))
        }
        (Verb::DoubleProduct, Kind::RbAlgebra) => {
            StructureFile::from_rb_algebra(&double_product(&file.rb_algebra(op, None)?))
        }
        (Verb::Complement, Kind::RbCoalgebra) => {
            StructureFile::from_rb_coalgebra(&complement_operator(&file.rb_coalgebra(op, None)?))
        }
        (Verb::Complement, Kind::RbAlgebra) => {
            StructureFile::from_rb_algebra(&complement_algebra_operator(&file.rb_algebra(op, None)?))
        }
        (Verb::Rescale, Kind::RbCoalgebra | Kind::RbAlgebra) => {
            let mu = mu.ok_or_else(|| CliError::Usage("rescale needs --mu".into()))?;
            let mu = parse_scalar(mu)?;
            if kind == Kind::RbCoalgebra {
                StructureFile::from_rb_coalgebra(&rescale_weight(&file.rb_coalgebra(op, None)?, &mu)?)
            } else {
                StructureFile::from_rb_algebra(&rescale_algebra_weight(&file.rb_algebra(op, None)?, &mu)?)
            }
        }
        (Verb::Counitize, Kind::RbCoalgebra) => {
            let rb = file.rb_coalgebra(op, None)?;
            if *rb.weight() != Scalar::from_integer((-1).into()) {
                return Err(rota_baxter::Error::WeightNotMinusOne(format_scalar(rb.weight())).into());
            }
            StructureFile::from_rb_coalgebra(&counitize(rb.coalgebra(), rb.operator())?)
        }
        (Verb::QuotientImage, Kind::RbCoalgebra) => {
            let q = quotient_by_image(&file.rb_coalgebra(op, None)?)?;
            StructureFile::from_rb_coalgebra(&q.rb)
        }
        (Verb::Split, Kind::RbCoalgebra) => {
            let s = split_idempotent(&file.rb_coalgebra(op, None)?)?;
            file.clone()
                .with_subspace("C1", &s.c1)
                .with_subspace("C2", &s.c2)
        }
        (Verb::Projector, Kind::Coalgebra | Kind::RbCoalgebra) => {
            let (c1, c2) = (file.subspace("C1")?, file.subspace("C2")?);
            let rb = projector_from_split(&file.coalgebra()?, &c1, &c2)?;
            StructureFile::from_rb_coalgebra(&rb)
                .with_subspace("C1", &c1)
                .with_subspace("C2", &c2)
        }
        (Verb::GradedDual, Kind::RbAlgebra) => {
            StructureFile::from_rb_coalgebra(&graded_dual(&file.graded(op)?)?)
        }
        _ => return Err(wrong_kind(verb, kind)),
    };
    Ok(out)
}

pub fn lemma(max_n: usize) -> Outcome {
    let start = Instant::now();
    let r = lemma_exhaustive_check(max_n);
    let pass = r.passed();
    let report = LemmaReportJson {
        command: "lemma".into(),
        check: "binomial-lemma".into(),
        max_n,
        tuples: r.tuples,
        pass,
        counterexample: r.failure.map(|f| LemmaFailureJson {
            n: f.n,
            k: f.k,
            l: f.l,
            j: f.j,
            lhs: f.lhs.to_string(),
            rhs: f.rhs.to_string(),
        }),
        elapsed_ms: millis(start),
    };
    Outcome {
        json: to_json(&report),
        pass,
    }
}
