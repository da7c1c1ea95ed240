//! Rota-Baxter operators on coalgebras and the constructions built from them.
//!
//! An operator `P` on `(C, Δ)` is Rota-Baxter of weight `λ` when
//!
//! ```text
//! (P⊗P)Δ = (id⊗P)ΔP + (P⊗id)ΔP + λΔP
//! ```
//!
//! holds on every basis element.

use num_traits::{One, Zero};

use crate::coalgebra::{apply_delta, check_coalgebra, check_grouplike, Coalgebra, LinearOperator};
use crate::error::{Error, Result};
use crate::linear::{
    int, tensor_subspace_sum_membership, unit_vector, Matrix, Scalar, Subspace, Tensor, Vector,
};
use crate::report::Report;

/// A (possibly noncounitary) coalgebra with an operator and a weight.
///
/// The axiom is not enforced on construction; see [`RbCoalgebra::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbCoalgebra {
    coalgebra: Coalgebra,
    operator: LinearOperator,
    weight: Scalar,
}

impl RbCoalgebra {
    pub fn new(coalgebra: Coalgebra, operator: LinearOperator, weight: Scalar) -> Result<Self> {
        if operator.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: coalgebra.dim(),
                found: operator.dim(),
            });
        }
        Ok(Self {
            coalgebra,
            operator,
            weight,
        })
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn operator(&self) -> &LinearOperator {
        &self.operator
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn with_operator(&self, operator: LinearOperator) -> Result<Self> {
        Self::new(self.coalgebra.clone(), operator, self.weight.clone())
    }

    /// Coalgebra laws followed by the Rota-Baxter axiom.
    pub fn check(&self) -> Report {
        Report::all(
            "rb-coalgebra",
            [
                check_coalgebra(&self.coalgebra),
                check_rb_axiom(&self.coalgebra, &self.operator, &self.weight)
                    .expect("dimensions checked on construction"),
            ],
        )
    }
}

fn same_dim(c: &Coalgebra, p: &LinearOperator) -> Result<()> {
    if c.dim() == p.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: c.dim(),
            found: p.dim(),
        })
    }
}

/// Both sides of the axiom at `e_k`: `(P⊗P)Δ(e_k)` and
/// `(id⊗P)ΔP(e_k) + (P⊗id)ΔP(e_k) + λΔP(e_k)`.
pub fn rb_sides(
    c: &Coalgebra,
    p: &LinearOperator,
    weight: &Scalar,
    k: usize,
) -> Result<(Tensor, Tensor)> {
    same_dim(c, p)?;
    let lhs = p.on_all(&c.delta_of_basis(k))?;
    let dp = apply_delta(c, &p.image_of_basis(k))?;
    let mut rhs = p.on_slot(&dp, 1)?;
    rhs.add_assign(&p.on_slot(&dp, 0)?)?;
    rhs.add_scaled(weight, &dp)?;
    Ok((lhs, rhs))
}

pub fn check_rb_axiom(c: &Coalgebra, p: &LinearOperator, weight: &Scalar) -> Result<Report> {
    same_dim(c, p)?;
    Ok(Report::first_failure(
        "rota-baxter",
        "(P⊗P)Δ = (id⊗P)ΔP + (P⊗id)ΔP + λΔP",
        (0..c.dim()).map(|k| vec![k]),
        |b| rb_sides(c, p, weight, b[0]).expect("dimensions checked"),
    ))
}

/// Checks `ΔP = (P⊗P)Δ`.
pub fn check_comultiplicative(c: &Coalgebra, p: &LinearOperator) -> Result<Report> {
    same_dim(c, p)?;
    Ok(Report::first_failure(
        "comultiplicative",
        "ΔP = (P⊗P)Δ",
        (0..c.dim()).map(|k| vec![k]),
        |b| {
            let lhs = apply_delta(c, &p.image_of_basis(b[0])).expect("dims");
            let rhs = p.on_all(&c.delta_of_basis(b[0])).expect("dims");
            (lhs, rhs)
        },
    ))
}

/// `P_g(c) = ε(c) g` for a group-like `g`; idempotent of weight −1.
pub fn grouplike_projector(c: &Coalgebra, g: &[Scalar]) -> Result<RbCoalgebra> {
    if !check_grouplike(c, g)? {
        return Err(Error::NotGroupLike);
    }
    let eps = c.counit().ok_or(Error::Noncounitary)?;
    let m = Matrix::from_fn(c.dim(), c.dim(), |i, k| &g[i] * &eps[k]);
    RbCoalgebra::new(c.clone(), LinearOperator::new(m)?, int(-1))
}

/// Replaces `(P, λ)` by `(μλ⁻¹P, μ)`.
pub fn rescale_weight(rb: &RbCoalgebra, mu: &Scalar) -> Result<RbCoalgebra> {
    if rb.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let factor = mu / &rb.weight;
    RbCoalgebra::new(rb.coalgebra.clone(), rb.operator.scale(&factor), mu.clone())
}

/// `−λ·id − P`, same weight.
pub fn complement_operator(rb: &RbCoalgebra) -> RbCoalgebra {
    let n = rb.dim();
    let m = Matrix::identity(n)
        .scale(&-&rb.weight)
        .sub(rb.operator.matrix())
        .expect("square of equal size");
    rb.with_operator(LinearOperator::new(m).expect("square"))
        .expect("same dimension")
}

/// `Δ_P = (P⊗id)Δ + (id⊗P)Δ + λΔ`, returned without counit and with the same
/// operator and weight.
pub fn double_coproduct(rb: &RbCoalgebra) -> RbCoalgebra {
    let c = &rb.coalgebra;
    let p = &rb.operator;
    let coproducts = (0..c.dim())
        .map(|k| {
            let d = c.delta_of_basis(k);
            let mut t = p.on_slot(&d, 0).expect("dims");
            t.add_assign(&p.on_slot(&d, 1).expect("dims")).expect("dims");
            t.add_scaled(&rb.weight, &d).expect("dims");
            t
        })
        .collect();
    let delta_p = Coalgebra::from_coproducts(c.basis_names().to_vec(), coproducts, None)
        .expect("shapes preserved");
    RbCoalgebra::new(delta_p, p.clone(), rb.weight.clone()).expect("same dimension")
}

/// `Δ_P P = (P⊗P)Δ`, with `Δ_P` the double coproduct of `rb`.
pub fn check_double_coproduct_identity(rb: &RbCoalgebra) -> Report {
    let doubled = double_coproduct(rb);
    let p = &rb.operator;
    Report::first_failure(
        "double-coproduct",
        "Δ_P P = (P⊗P)Δ",
        (0..rb.dim()).map(|k| vec![k]),
        |b| {
            let lhs = apply_delta(doubled.coalgebra(), &p.image_of_basis(b[0])).expect("dims");
            let rhs = p.on_all(&rb.coalgebra.delta_of_basis(b[0])).expect("dims");
            (lhs, rhs)
        },
    )
}

/// Name of the basis element adjoined by [`counitize`].
pub const COUNIT_ELEMENT: &str = "1";

/// Adjoins a group-like `𝟏` (at index 0) to an idempotent weight −1
/// noncounitary Rota-Baxter coalgebra:
/// `Δ̃(𝟏) = 𝟏⊗𝟏`, `Δ̃(x) = Δ(x) + 𝟏⊗x + x⊗𝟏`, `ε = 𝟏*`, `P̃(𝟏) = 𝟏`.
///
/// Any counit already present on `c` is ignored.
pub fn counitize(c: &Coalgebra, p: &LinearOperator) -> Result<RbCoalgebra> {
    same_dim(c, p)?;
    if !p.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let rb = check_rb_axiom(c, p, &int(-1))?;
    if let Some(cx) = rb.failure {
        return Err(Error::AxiomFailed(format!(
            "input operator is not Rota-Baxter of weight -1 at basis element {:?}",
            cx.basis
        )));
    }
    let n = c.dim();
    let m = n + 1;
    let mut names = vec![COUNIT_ELEMENT.to_string()];
    names.extend(c.basis_names().iter().cloned());
    let mut delta = Matrix::zeros(m * m, m);
    delta.set(0, 0, Scalar::one());
    for x in 0..n {
        let col = x + 1;
        for (idx, v) in c.delta_of_basis(x).terms() {
            delta.set((idx[0] + 1) * m + idx[1] + 1, col, v);
        }
        *delta.entry_mut(col, col) += Scalar::one();
        *delta.entry_mut(col * m, col) += Scalar::one();
    }
    let counit = Some(unit_vector(m, 0));
    let extended = Coalgebra::new(names, delta, counit)?;
    let pm = Matrix::from_fn(m, m, |i, j| match (i, j) {
        (0, 0) => Scalar::one(),
        (0, _) | (_, 0) => Scalar::zero(),
        _ => p.matrix().get(i - 1, j - 1).clone(),
    });
    RbCoalgebra::new(extended, LinearOperator::new(pm)?, int(-1))
}

/// Index of the first basis vector `v` of `j` with `Δ(v) ∉ C⊗J + J⊗C`.
pub fn first_coideal_violation(c: &Coalgebra, j: &Subspace) -> Result<Option<usize>> {
    for (i, v) in j.basis_vectors().iter().enumerate() {
        let t = apply_delta(c, v)?;
        if !tensor_subspace_sum_membership(j, j, &t)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn is_noncounitary_coideal(c: &Coalgebra, j: &Subspace) -> Result<bool> {
    Ok(first_coideal_violation(c, j)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageCoideal {
    pub image: Subspace,
    /// `Δ(P(C)) ⊂ C⊗P(C) + P(C)⊗C`
    pub noncounitary_coideal: bool,
    /// `P(C) ⊂ ker ε`; `None` for noncounitary input.
    pub in_counit_kernel: Option<bool>,
}

impl ImageCoideal {
    /// A coideal in the counital sense.
    pub fn is_coideal(&self) -> bool {
        self.noncounitary_coideal && self.in_counit_kernel == Some(true)
    }
}

pub fn image_coideal(rb: &RbCoalgebra) -> Result<ImageCoideal> {
    if rb.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let image = Subspace::image(rb.operator.matrix())?;
    let noncounitary_coideal = is_noncounitary_coideal(&rb.coalgebra, &image)?;
    let in_counit_kernel = match rb.coalgebra.counit() {
        Some(eps) => Some(
            image
                .basis_vectors()
                .iter()
                .all(|v| crate::linear::dot(eps, v).is_zero()),
        ),
        None => None,
    };
    Ok(ImageCoideal {
        image,
        noncounitary_coideal,
        in_counit_kernel,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub rb: RbCoalgebra,
    pub image: Subspace,
    /// `C -> C/P(C)` in the coordinates of the quotient basis.
    pub projection: Matrix,
    /// Original basis indices whose classes form the quotient basis.
    pub basis: Vec<usize>,
    /// Whether the counit descends (only when `P(C) ⊂ ker ε`).
    pub counit_inherited: bool,
    /// Coalgebra laws and the axiom re-checked on the quotient.
    pub laws: Report,
}

/// `C/P(C)` with the induced comultiplication and operator.
///
/// The quotient basis is the classes of the non-pivot coordinates of the
/// canonical echelon basis of `P(C)`. Both induced maps are checked to vanish
/// on `P(C)` before they are used.
pub fn quotient_by_image(rb: &RbCoalgebra) -> Result<Quotient> {
    if rb.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let c = &rb.coalgebra;
    let p = &rb.operator;
    let image = Subspace::image(p.matrix())?;
    let q = image.quotient_map();
    let free = image.non_pivots();

    for (i, v) in image.basis_vectors().iter().enumerate() {
        if !apply_delta(c, v)?.map_all(&q)?.is_zero() {
            return Err(Error::IllDefinedQuotient(format!(
                "Δ does not vanish modulo the image on its basis vector {i}"
            )));
        }
        if !crate::linear::is_zero_vector(&q.mul_vec(&p.apply(v)?)?) {
            return Err(Error::IllDefinedQuotient(format!(
                "P does not preserve the image on its basis vector {i}"
            )));
        }
    }

    let names: Vec<String> = free
        .iter()
        .map(|&i| format!("[{}]", c.basis_names()[i]))
        .collect();
    let coproducts = free
        .iter()
        .map(|&i| c.delta_of_basis(i).map_all(&q))
        .collect::<Result<Vec<_>>>()?;
    let counit_inherited = match c.counit() {
        Some(eps) => image
            .basis_vectors()
            .iter()
            .all(|v| crate::linear::dot(eps, v).is_zero()),
        None => false,
    };
    let counit: Option<Vector> = if counit_inherited {
        c.counit().map(|eps| free.iter().map(|&i| eps[i].clone()).collect())
    } else {
        None
    };
    let quotient = Coalgebra::from_coproducts(names, coproducts, counit)?;
    let images: Vec<Vector> = free
        .iter()
        .map(|&i| q.mul_vec(&p.image_of_basis(i)))
        .collect::<Result<_>>()?;
    let op = if free.is_empty() {
        LinearOperator::zero(0)
    } else {
        LinearOperator::from_images(&images)?
    };
    let rb_q = RbCoalgebra::new(quotient, op, rb.weight.clone())?;
    let laws = rb_q.check();
    Ok(Quotient {
        rb: rb_q,
        image,
        projection: q,
        basis: free,
        counit_inherited,
        laws,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub c1: Subspace,
    pub c2: Subspace,
}

fn require_idempotent_minus_one(rb: &RbCoalgebra) -> Result<()> {
    if rb.weight != int(-1) {
        return Err(Error::WeightNotMinusOne(rb.weight.to_string()));
    }
    if !rb.operator.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    Ok(())
}

fn require_coideal(c: &Coalgebra, j: &Subspace, name: &str) -> Result<()> {
    match first_coideal_violation(c, j)? {
        None => Ok(()),
        Some(i) => Err(Error::NotCoideal(format!("{name} (basis vector {i})"))),
    }
}

/// `C₁ = P(C)`, `C₂ = (id−P)(C)` for an idempotent operator of weight −1.
pub fn split_idempotent(rb: &RbCoalgebra) -> Result<SplitDecomposition> {
    require_idempotent_minus_one(rb)?;
    let n = rb.dim();
    let c1 = Subspace::image(rb.operator.matrix())?;
    let c2 = Subspace::image(&Matrix::identity(n).sub(rb.operator.matrix())?)?;
    if !c1.is_complement_of(&c2)? {
        return Err(Error::NotDirectSum);
    }
    require_coideal(&rb.coalgebra, &c1, "C1")?;
    require_coideal(&rb.coalgebra, &c2, "C2")?;
    Ok(SplitDecomposition { c1, c2 })
}

/// The projection onto `c1` along `c2`, as a weight −1 operator.
pub fn projector_from_split(c: &Coalgebra, c1: &Subspace, c2: &Subspace) -> Result<RbCoalgebra> {
    let n = c.dim();
    for s in [c1, c2] {
        if s.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.ambient_dim(),
            });
        }
    }
    if !c1.is_complement_of(c2)? {
        return Err(Error::NotDirectSum);
    }
    require_coideal(c, c1, "C1")?;
    require_coideal(c, c2, "C2")?;
    let mut columns = c1.basis_vectors();
    columns.extend(c2.basis_vectors());
    let basis = Matrix::from_columns(n, &columns)?;
    let keep = Matrix::from_fn(n, n, |i, j| {
        if i == j && i < c1.dim() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let inv = basis.inverse().ok_or(Error::NotDirectSum)?;
    let proj = basis.mul(&keep)?.mul(&inv)?;
    RbCoalgebra::new(c.clone(), LinearOperator::new(proj)?, int(-1))
}
