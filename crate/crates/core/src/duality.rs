//! Algebras, Rota-Baxter algebras, and the passage between them and
//! Rota-Baxter coalgebras by linear (or graded) duality.

use num_traits::{One, Zero};

use crate::coalgebra::{Coalgebra, LinearOperator};
use crate::error::{Error, Result};
use crate::linear::{unit_vector, zero_vector, Matrix, Scalar, Tensor, Vector};
use crate::report::Report;
use crate::rota_baxter::RbCoalgebra;

/// An algebra by structure constants: `mult` is `n × n²`, column `i·n + j`
/// holding `e_i·e_j`. No unit means nonunitary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    basis_names: Vec<String>,
    mult: Matrix,
    unit: Option<Vector>,
}

impl Algebra {
    pub fn new(basis_names: Vec<String>, mult: Matrix, unit: Option<Vector>) -> Result<Self> {
        let n = basis_names.len();
        if mult.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: mult.rows(),
            });
        }
        if mult.cols() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: mult.cols(),
            });
        }
        if let Some(u) = &unit {
            if u.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: u.len(),
                });
            }
        }
        Ok(Self {
            basis_names,
            mult,
            unit,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mult_matrix(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    /// Coefficient of `e_k` in `e_i·e_j`.
    pub fn mult_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.mult.get(k, i * self.dim() + j)
    }

    pub fn set_mult_constant(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.dim();
        self.mult.set(k, i * n + j, value);
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let col = i * n + j;
                for (k, o) in out.iter_mut().enumerate() {
                    let m = self.mult.get(k, col);
                    if !m.is_zero() {
                        *o += &ab * m;
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }
}

fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..n).map(move |j| vec![i, j]))
}

fn triples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| pairs(n).map(move |p| vec![i, p[0], p[1]]))
}

pub fn check_associativity(a: &Algebra) -> Report {
    Report::first_failure("associativity", "(xy)z = x(yz)", triples(a.dim()), |b| {
        let (x, y, z) = (a.basis(b[0]), a.basis(b[1]), a.basis(b[2]));
        (
            Tensor::from_vector(a.multiply(&a.multiply(&x, &y), &z)),
            Tensor::from_vector(a.multiply(&x, &a.multiply(&y, &z))),
        )
    })
}

pub fn check_unit(a: &Algebra) -> Result<Report> {
    let u = a.unit.as_ref().ok_or(Error::OutOfRange("algebra has no unit".into()))?;
    let n = a.dim();
    Ok(Report::all(
        "unit",
        [
            Report::first_failure("unit", "1·x = x", (0..n).map(|i| vec![i]), |b| {
                (
                    Tensor::from_vector(a.multiply(u, &a.basis(b[0]))),
                    Tensor::from_vector(a.basis(b[0])),
                )
            }),
            Report::first_failure("unit", "x·1 = x", (0..n).map(|i| vec![i]), |b| {
                (
                    Tensor::from_vector(a.multiply(&a.basis(b[0]), u)),
                    Tensor::from_vector(a.basis(b[0])),
                )
            }),
        ],
    ))
}

/// Associativity, and the unit laws when a unit is present.
pub fn check_algebra(a: &Algebra) -> Report {
    let mut parts = vec![check_associativity(a)];
    if a.unit.is_some() {
        parts.push(check_unit(a).expect("unit present"));
    }
    Report::all("algebra", parts)
}

fn same_dim(a: &Algebra, p: &LinearOperator) -> Result<()> {
    if a.dim() == p.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: p.dim(),
        })
    }
}

/// Both sides of `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)` at `(e_i, e_j)`.
pub fn rb_algebra_sides(
    a: &Algebra,
    p: &LinearOperator,
    weight: &Scalar,
    i: usize,
    j: usize,
) -> Result<(Tensor, Tensor)> {
    same_dim(a, p)?;
    let (x, y) = (a.basis(i), a.basis(j));
    let (px, py) = (p.apply(&x)?, p.apply(&y)?);
    let lhs = a.multiply(&px, &py);
    let mut inner = a.multiply(&x, &py);
    crate::linear::axpy(&mut inner, &Scalar::one(), &a.multiply(&px, &y));
    crate::linear::axpy(&mut inner, weight, &a.multiply(&x, &y));
    let rhs = p.apply(&inner)?;
    Ok((Tensor::from_vector(lhs), Tensor::from_vector(rhs)))
}

pub fn check_rb_algebra_axiom(a: &Algebra, p: &LinearOperator, weight: &Scalar) -> Result<Report> {
    same_dim(a, p)?;
    Ok(Report::first_failure(
        "rota-baxter-algebra",
        "P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)",
        pairs(a.dim()),
        |b| rb_algebra_sides(a, p, weight, b[0], b[1]).expect("dimensions checked"),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbAlgebra {
    algebra: Algebra,
    operator: LinearOperator,
    weight: Scalar,
}

impl RbAlgebra {
    pub fn new(algebra: Algebra, operator: LinearOperator, weight: Scalar) -> Result<Self> {
        same_dim(&algebra, &operator)?;
        Ok(Self {
            algebra,
            operator,
            weight,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn operator(&self) -> &LinearOperator {
        &self.operator
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Algebra laws followed by the Rota-Baxter identity.
    pub fn check(&self) -> Report {
        Report::all(
            "rb-algebra",
            [
                check_algebra(&self.algebra),
                check_rb_algebra_axiom(&self.algebra, &self.operator, &self.weight)
                    .expect("dimensions checked on construction"),
            ],
        )
    }
}

/// `−λ·id − P` at the same weight.
pub fn complement_algebra_operator(rb: &RbAlgebra) -> RbAlgebra {
    let m = Matrix::identity(rb.dim())
        .scale(&-&rb.weight)
        .sub(rb.operator.matrix())
        .expect("square");
    RbAlgebra::new(rb.algebra.clone(), LinearOperator::new(m).expect("square"), rb.weight.clone())
        .expect("same dimension")
}

/// Operator `(μ/λ)P` at weight `μ`.
pub fn rescale_algebra_weight(rb: &RbAlgebra, mu: &Scalar) -> Result<RbAlgebra> {
    if rb.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let p = rb.operator.scale(&(mu / &rb.weight));
    RbAlgebra::new(rb.algebra.clone(), p, mu.clone())
}

fn dual_names(names: &[String]) -> Vec<String> {
    names.iter().map(|n| format!("{n}*")).collect()
}

/// The dual-basis algebra of a coalgebra: `(f·h)(c) = Σ f(c₁)h(c₂)`, unit `ε`.
pub fn dualize_coalgebra(c: &Coalgebra) -> Algebra {
    Algebra::new(
        dual_names(c.basis_names()),
        c.delta_matrix().transpose(),
        c.counit().cloned(),
    )
    .expect("transpose has the algebra shape")
}

/// Linear dual of a Rota-Baxter coalgebra, with operator `P* = Pᵀ`.
pub fn dualize(rb: &RbCoalgebra) -> RbAlgebra {
    RbAlgebra::new(
        dualize_coalgebra(rb.coalgebra()),
        rb.operator().transpose(),
        rb.weight().clone(),
    )
    .expect("same dimension")
}

/// `x ⋆ y = xP(y) + P(x)y + λxy`, nonunitary, same operator and weight.
pub fn double_product(rb: &RbAlgebra) -> RbAlgebra {
    let a = &rb.algebra;
    let p = &rb.operator;
    let n = a.dim();
    let columns: Vec<Vector> = pairs(n)
        .map(|b| {
            let (x, y) = (a.basis(b[0]), a.basis(b[1]));
            let (px, py) = (p.apply(&x).expect("dims"), p.apply(&y).expect("dims"));
            let mut out = a.multiply(&x, &py);
            crate::linear::axpy(&mut out, &Scalar::one(), &a.multiply(&px, &y));
            crate::linear::axpy(&mut out, &rb.weight, &a.multiply(&x, &y));
            out
        })
        .collect();
    let mult = if n == 0 {
        Matrix::zeros(0, 0)
    } else {
        Matrix::from_columns(n, &columns).expect("shape")
    };
    let algebra = Algebra::new(a.basis_names.clone(), mult, None).expect("shape");
    RbAlgebra::new(algebra, p.clone(), rb.weight.clone()).expect("same dimension")
}

/// `P(x ⋆ y) = P(x)P(y)` on all basis pairs, `⋆` being the product of `derived`.
pub fn check_algebra_map(derived: &Algebra, original: &Algebra, p: &LinearOperator) -> Result<Report> {
    same_dim(original, p)?;
    same_dim(derived, p)?;
    Ok(Report::first_failure(
        "algebra-map",
        "P(x⋆y) = P(x)P(y)",
        pairs(original.dim()),
        |b| {
            let (x, y) = (original.basis(b[0]), original.basis(b[1]));
            let lhs = p.apply(&derived.multiply(&x, &y)).expect("dims");
            let rhs = original.multiply(&p.apply(&x).expect("dims"), &p.apply(&y).expect("dims"));
            (Tensor::from_vector(lhs), Tensor::from_vector(rhs))
        },
    ))
}

/// A finite-dimensional graded Rota-Baxter algebra; `degrees[i]` is the degree
/// of basis element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraTruncation {
    pub rb: RbAlgebra,
    pub degrees: Vec<usize>,
}

impl GradedAlgebraTruncation {
    pub fn new(rb: RbAlgebra, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != rb.dim() {
            return Err(Error::DimensionMismatch {
                expected: rb.dim(),
                found: degrees.len(),
            });
        }
        Ok(Self { rb, degrees })
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Number of basis elements in each degree `0..=max_degree`.
    pub fn degree_dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.max_degree() + 1];
        for &d in &self.degrees {
            dims[d] += 1;
        }
        dims
    }

    /// `R_i·R_j ⊂ R_{i+j}`.
    pub fn is_graded(&self) -> bool {
        let a = self.rb.algebra();
        let n = a.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    a.mult_constant(i, j, k).is_zero()
                        || self.degrees[k] == self.degrees[i] + self.degrees[j]
                })
            })
        })
    }

    /// `P(R_i) ⊂ R_i`.
    pub fn operator_preserves_grading(&self) -> bool {
        self.rb
            .operator()
            .matrix()
            .nonzeros()
            .all(|(i, k, _)| self.degrees[i] == self.degrees[k])
    }
}

/// `t𝕂[t]` truncated at degree `max_degree` (products of total degree above
/// the bound vanish), with `P(tⁿ) = qⁿ/(1−qⁿ) tⁿ` at weight 1.
/// Basis index `i` is `t^{i+1}`.
pub fn q_polynomial_truncation(q: &Scalar, max_degree: usize) -> Result<RbAlgebra> {
    let n = max_degree;
    let mut power = Scalar::one();
    let mut diag = Vec::with_capacity(n);
    for d in 1..=n {
        power *= q;
        if power.is_one() {
            return Err(Error::RootOfUnity(d));
        }
        diag.push(&power / (Scalar::one() - &power));
    }
    let names = (1..=n).map(|d| format!("t^{d}")).collect();
    let mut mult = Matrix::zeros(n, n * n);
    for i in 0..n {
        for j in 0..n {
            // t^{i+1} t^{j+1} = t^{i+j+2}, index i + j + 1
            if i + j + 1 < n {
                mult.set(i + j + 1, i * n + j, Scalar::one());
            }
        }
    }
    let algebra = Algebra::new(names, mult, None)?;
    let p = Matrix::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { Scalar::zero() });
    RbAlgebra::new(algebra, LinearOperator::new(p)?, Scalar::one())
}

/// [`q_polynomial_truncation`] with its grading attached.
pub fn q_polynomial_graded(q: &Scalar, max_degree: usize) -> Result<GradedAlgebraTruncation> {
    let rb = q_polynomial_truncation(q, max_degree)?;
    GradedAlgebraTruncation::new(rb, (1..=max_degree).collect())
}

/// Degreewise dual: `Δ = multᵀ`, operator `Pᵀ`, counit the dual of the unit
/// when there is one (otherwise noncounitary).
pub fn graded_dual(g: &GradedAlgebraTruncation) -> Result<RbCoalgebra> {
    if !g.is_graded() {
        return Err(Error::NotGraded);
    }
    if !g.operator_preserves_grading() {
        return Err(Error::GradingNotPreserved);
    }
    let a = g.rb.algebra();
    let c = Coalgebra::new(
        dual_names(a.basis_names()),
        a.mult_matrix().transpose(),
        a.unit().cloned(),
    )?;
    RbCoalgebra::new(c, g.rb.operator().transpose(), g.rb.weight().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::build_binomial;
    use crate::linear::{int, ratio};

    #[test]
    fn dual_of_grouplikes_is_idempotent_basis() {
        let c = Coalgebra::group_like(vec!["e".into(), "g".into()]);
        let a = dualize_coalgebra(&c);
        let e = unit_vector(2, 0);
        let g = unit_vector(2, 1);
        assert_eq!(a.multiply(&e, &e), e);
        assert_eq!(a.multiply(&g, &g), g);
        assert_eq!(a.multiply(&e, &g), zero_vector(2));
        assert!(check_algebra(&a).passed());
    }

    #[test]
    fn dual_of_binomial_shift() {
        let d = dualize(&build_binomial(3).rb());
        let p = d.operator();
        assert_eq!(p.image_of_basis(0), unit_vector(4, 1));
        assert_eq!(p.image_of_basis(2), unit_vector(4, 3));
        assert_eq!(p.image_of_basis(3), zero_vector(4));
        assert!(d.check().passed());
    }

    #[test]
    fn trivial_operators_on_algebras() {
        let a = dualize_coalgebra(build_binomial(3).coalgebra());
        for w in [int(0), int(3), ratio(1, 2)] {
            assert!(check_rb_algebra_axiom(&a, &LinearOperator::zero(4), &w).unwrap().passed());
        }
        assert!(check_rb_algebra_axiom(&a, &LinearOperator::identity(4), &int(-1))
            .unwrap()
            .passed());
        assert!(check_rb_algebra_axiom(&a, &LinearOperator::identity(3), &int(-1)).is_err());
    }

    #[test]
    fn double_product_with_zero_operator_at_weight_one() {
        let a = dualize_coalgebra(build_binomial(3).coalgebra());
        let rb = RbAlgebra::new(a.clone(), LinearOperator::zero(4), int(1)).unwrap();
        assert_eq!(double_product(&rb).algebra().mult_matrix(), a.mult_matrix());
    }

    #[test]
    fn q_polynomial_values() {
        let rb = q_polynomial_truncation(&int(2), 5).unwrap();
        // P(t²) = 4/(1−4) t²
        assert_eq!(rb.operator().image_of_basis(1)[1], ratio(-4, 3));
        let star = double_product(&rb);
        let t5 = star.algebra().multiply(&unit_vector(5, 1), &unit_vector(5, 2));
        assert_eq!(t5[4], ratio(-31, 21));
        assert!(rb.check().passed());
        assert_eq!(
            q_polynomial_truncation(&int(1), 3),
            Err(Error::RootOfUnity(1))
        );
        assert_eq!(
            q_polynomial_truncation(&int(-1), 3),
            Err(Error::RootOfUnity(2))
        );
        assert!(q_polynomial_truncation(&int(0), 3).is_ok());
    }

    #[test]
    fn algebra_side_complement_and_rescale() {
        let d = dualize(&build_binomial(4).rb());
        let c = complement_algebra_operator(&d);
        assert!(c.check().passed());
        assert_eq!(complement_algebra_operator(&c), d);
        for mu in [int(1), int(-3), ratio(2, 5)] {
            assert!(rescale_algebra_weight(&d, &mu).unwrap().check().passed());
        }
        let z = RbAlgebra::new(d.algebra().clone(), LinearOperator::zero(5), int(0)).unwrap();
        assert_eq!(rescale_algebra_weight(&z, &int(1)), Err(Error::ZeroWeight));
    }

    #[test]
    fn graded_dual_values() {
        let g = q_polynomial_graded(&int(2), 4).unwrap();
        assert_eq!(g.degree_dims(), vec![0, 1, 1, 1, 1]);
        let d = graded_dual(&g).unwrap();
        // Δ(f₃) = f₁⊗f₂ + f₂⊗f₁
        assert_eq!(
            d.coalgebra().delta_of_basis(2).terms(),
            vec![(vec![0, 1], int(1)), (vec![1, 0], int(1))]
        );
        assert_eq!(d.operator().image_of_basis(2)[2], ratio(-8, 7));
        assert!(!d.coalgebra().is_counital());
    }

    #[test]
    fn graded_dual_rejects_bad_grading() {
        let mut g = q_polynomial_graded(&int(2), 3).unwrap();
        let mut m = g.rb.operator().matrix().clone();
        m.set(0, 1, int(1));
        g.rb = RbAlgebra::new(g.rb.algebra().clone(), LinearOperator::new(m).unwrap(), int(1))
            .unwrap();
        assert_eq!(graded_dual(&g), Err(Error::GradingNotPreserved));

        let mut g = q_polynomial_graded(&int(2), 3).unwrap();
        g.degrees = vec![1, 1, 3];
        assert_eq!(graded_dual(&g), Err(Error::NotGraded));
    }
}
