//! Finite-dimensional coalgebras given by structure constants.

use num_traits::One;

use crate::error::{Error, Result};
use crate::linear::{unit_vector, Matrix, Scalar, Tensor, Vector};
use crate::report::Report;

/// A coalgebra on the basis `e_0..e_{n-1}`.
///
/// The comultiplication is stored as a `n² × n` matrix whose column `k` is
/// `Δ(e_k)` flattened as `i * n + j`, i.e. `Δ(e_k) = Σ μ[k][i][j] e_i⊗e_j`.
/// A missing counit means the coalgebra is noncounitary.
///
/// Construction only checks shapes. Use [`check_coassociativity`] and
/// [`check_counit`] to verify the laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    basis_names: Vec<String>,
    delta: Matrix,
    counit: Option<Vector>,
}

impl Coalgebra {
    pub fn new(basis_names: Vec<String>, delta: Matrix, counit: Option<Vector>) -> Result<Self> {
        let n = basis_names.len();
        if delta.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: delta.cols(),
            });
        }
        if delta.rows() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: delta.rows(),
            });
        }
        if let Some(eps) = &counit {
            if eps.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: eps.len(),
                });
            }
        }
        Ok(Self {
            basis_names,
            delta,
            counit,
        })
    }

    /// Builds from the per-basis-element values `Δ(e_k)`.
    pub fn from_coproducts(
        basis_names: Vec<String>,
        coproducts: Vec<Tensor>,
        counit: Option<Vector>,
    ) -> Result<Self> {
        let n = basis_names.len();
        let cols: Vec<Vector> = coproducts
            .into_iter()
            .map(|t| {
                if t.order() != 2 || t.dim() != n {
                    Err(Error::DimensionMismatch {
                        expected: n,
                        found: t.dim(),
                    })
                } else {
                    Ok(t.into_flat())
                }
            })
            .collect::<Result<_>>()?;
        Self::new(basis_names, Matrix::from_columns(n * n, &cols)?, counit)
    }

    /// The coalgebra spanned by group-like elements with the given names.
    pub fn group_like(basis_names: Vec<String>) -> Self {
        let n = basis_names.len();
        let mut delta = Matrix::zeros(n * n, n);
        for k in 0..n {
            delta.set(k * n + k, k, Scalar::one());
        }
        let counit = Some(vec![Scalar::one(); n]);
        Self {
            basis_names,
            delta,
            counit,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn delta_matrix(&self) -> &Matrix {
        &self.delta
    }

    pub fn counit(&self) -> Option<&Vector> {
        self.counit.as_ref()
    }

    pub fn is_counital(&self) -> bool {
        self.counit.is_some()
    }

    /// Coefficient of `e_i⊗e_j` in `Δ(e_k)`.
    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> &Scalar {
        self.delta.get(i * self.dim() + j, k)
    }

    pub fn set_structure_constant(&mut self, k: usize, i: usize, j: usize, value: Scalar) {
        let n = self.dim();
        self.delta.set(i * n + j, k, value);
    }

    pub fn delta_of_basis(&self, k: usize) -> Tensor {
        Tensor::from_flat(self.dim(), 2, self.delta.column(k)).expect("shape checked on construction")
    }

    pub fn without_counit(&self) -> Self {
        Self {
            counit: None,
            ..self.clone()
        }
    }

    pub fn with_counit(&self, counit: Option<Vector>) -> Result<Self> {
        Self::new(self.basis_names.clone(), self.delta.clone(), counit)
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Result<Scalar> {
        let eps = self.counit.as_ref().ok_or(Error::Noncounitary)?;
        check_len(self.dim(), v.len())?;
        Ok(crate::linear::dot(eps, v))
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A square matrix acting on a coalgebra (or algebra) by `e_k ↦ Σ_i m[i][k] e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    matrix: Matrix,
}

impl LinearOperator {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: Matrix::zeros(n, n),
        }
    }

    /// Operator with the given images of basis elements.
    pub fn from_images(images: &[Vector]) -> Result<Self> {
        Self::new(Matrix::from_columns(images.len(), images)?)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    pub fn image_of_basis(&self, k: usize) -> Vector {
        self.matrix.column(k)
    }

    pub fn compose(&self, inner: &Self) -> Result<Self> {
        Self::new(self.matrix.mul(&inner.matrix)?)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            matrix: self.matrix.scale(c),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.matrix.mul(&self.matrix).is_ok_and(|sq| sq == self.matrix)
    }

    /// Applies the operator to one slot of a tensor.
    pub fn on_slot(&self, t: &Tensor, slot: usize) -> Result<Tensor> {
        t.map_slot(slot, &self.matrix, 1)
    }

    /// Applies the operator to every slot of a tensor (`P⊗P⊗…`).
    pub fn on_all(&self, t: &Tensor) -> Result<Tensor> {
        t.map_all(&self.matrix)
    }
}

pub fn apply_delta(c: &Coalgebra, v: &[Scalar]) -> Result<Tensor> {
    check_len(c.dim(), v.len())?;
    Tensor::from_flat(c.dim(), 2, c.delta.mul_vec(v)?)
}

/// `(Δ⊗id)Δ(e_k)` and `(id⊗Δ)Δ(e_k)`.
fn coassociativity_sides(c: &Coalgebra, k: usize) -> (Tensor, Tensor) {
    let d = c.delta_of_basis(k);
    let left = d.map_slot(0, &c.delta, 2).expect("shapes agree");
    let right = d.map_slot(1, &c.delta, 2).expect("shapes agree");
    (left, right)
}

pub fn check_coassociativity(c: &Coalgebra) -> Report {
    Report::first_failure(
        "coassociativity",
        "(Δ⊗id)Δ = (id⊗Δ)Δ",
        (0..c.dim()).map(|k| vec![k]),
        |b| coassociativity_sides(c, b[0]),
    )
}

/// Checks `(ε⊗id)Δ = id = (id⊗ε)Δ` on every basis element.
pub fn check_counit(c: &Coalgebra) -> Result<Report> {
    let eps = c.counit.as_ref().ok_or(Error::Noncounitary)?;
    let functional = Matrix::from_rows(vec![eps.clone()])?;
    let n = c.dim();
    let sides = |k: usize, slot: usize| {
        let d = c.delta_of_basis(k);
        let contracted = d.map_slot(slot, &functional, 0).expect("shapes agree");
        (contracted, Tensor::from_vector(unit_vector(n, k)))
    };
    Ok(Report::all(
        "counit",
        [
            Report::first_failure("counit", "(ε⊗id)Δ = id", (0..n).map(|k| vec![k]), |b| {
                sides(b[0], 0)
            }),
            Report::first_failure("counit", "(id⊗ε)Δ = id", (0..n).map(|k| vec![k]), |b| {
                sides(b[0], 1)
            }),
        ],
    ))
}

/// Runs coassociativity, and the counit check when a counit is present.
pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let mut parts = vec![check_coassociativity(c)];
    if c.is_counital() {
        parts.push(check_counit(c).expect("counit present"));
    }
    Report::all("coalgebra", parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nesting {
    /// `(Δ⊗id⊗…)…(Δ⊗id)Δ`
    Left,
    /// `(…⊗id⊗Δ)…(id⊗Δ)Δ`
    Right,
}

/// The `k`-fold comultiplication `Δ^{(k)}(v)`, a tensor of order `k`
/// (`k = 1` returns `v`, `k = 2` is `Δ(v)`), computed by left nesting.
pub fn iterated_delta(c: &Coalgebra, v: &[Scalar], k: usize) -> Result<Tensor> {
    iterated_delta_nested(c, v, k, Nesting::Left)
}

pub fn iterated_delta_nested(
    c: &Coalgebra,
    v: &[Scalar],
    k: usize,
    nesting: Nesting,
) -> Result<Tensor> {
    if k == 0 {
        return Err(Error::OutOfRange("iterated coproduct needs k >= 1".into()));
    }
    check_len(c.dim(), v.len())?;
    let mut t = Tensor::from_vector(v.to_vec());
    for _ in 1..k {
        let slot = match nesting {
            Nesting::Left => 0,
            Nesting::Right => t.order() - 1,
        };
        t = t.map_slot(slot, &c.delta, 2)?;
    }
    Ok(t)
}

pub fn check_grouplike(c: &Coalgebra, v: &[Scalar]) -> Result<bool> {
    let eps = c.counit_of(v)?;
    if !eps.is_one() {
        return Ok(false);
    }
    let d = apply_delta(c, v)?;
    let vv = Tensor::from_vector(v.to_vec());
    Ok(d == vv.outer(&vv)?)
}
