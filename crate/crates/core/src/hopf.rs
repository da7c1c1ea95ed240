//! Finite-dimensional Hopf algebras and the smash coalgebra on `H⊗H`.
//!
//! Every Sweedler-notation formula here is evaluated the same way: expand the
//! iterated coproduct of each tensor factor into its nonzero terms, then
//! contract with the multiplication and antipode.

use num_traits::{One, Zero};

use crate::coalgebra::{iterated_delta, Coalgebra, LinearOperator};
use crate::error::{Error, Result};
use crate::linear::{axpy, int, unit_vector, zero_vector, Matrix, Scalar, Tensor, Vector};
use crate::report::Report;

/// A Hopf algebra by structure constants.
///
/// `mult` is `n × n²` with column `i * n + j` equal to `e_i·e_j`; the
/// coalgebra half is stored as a [`Coalgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    mult: Matrix,
    unit: Vector,
    coalgebra: Coalgebra,
    antipode: LinearOperator,
    products: Vec<Vec<(usize, Scalar)>>,
}

impl HopfAlgebra {
    pub fn new(
        basis_names: Vec<String>,
        mult: Matrix,
        unit: Vector,
        delta: Matrix,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = basis_names.len();
        if mult.rows() != n || mult.cols() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: mult.cols(),
            });
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: unit.len(),
            });
        }
        let coalgebra = Coalgebra::new(basis_names, delta, Some(counit))?;
        let antipode = LinearOperator::new(antipode)?;
        if antipode.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: antipode.dim(),
            });
        }
        let products = mult.column_nonzeros();
        Ok(Self {
            mult,
            unit,
            coalgebra,
            antipode,
            products,
        })
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        self.coalgebra.basis_names()
    }

    pub fn mult_matrix(&self) -> &Matrix {
        &self.mult
    }

    /// Coefficient of `e_k` in `e_i·e_j`.
    pub fn mult_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.mult.get(k, i * self.dim() + j)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn counit(&self) -> &Vector {
        self.coalgebra.counit().expect("Hopf algebras are counital")
    }

    pub fn antipode(&self) -> &LinearOperator {
        &self.antipode
    }

    pub fn with_antipode(&self, antipode: Matrix) -> Result<Self> {
        Self::new(
            self.basis_names().to_vec(),
            self.mult.clone(),
            self.unit.clone(),
            self.coalgebra.delta_matrix().clone(),
            self.counit().clone(),
            antipode,
        )
    }

    fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
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
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn multiply_all(&self, factors: &[&[Scalar]]) -> Vector {
        factors
            .iter()
            .fold(self.unit.clone(), |acc, f| self.multiply(&acc, f))
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vector {
        self.antipode.apply(x).expect("dimension checked")
    }

    fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    fn counit_of(&self, x: &[Scalar]) -> Scalar {
        crate::linear::dot(self.counit(), x)
    }

    /// Multiplies two tensors of the same order slot by slot, i.e. the
    /// product in `H^{⊗r}`.
    pub fn multiply_slotwise(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        if x.order() != y.order() {
            return Err(Error::DimensionMismatch {
                expected: x.order(),
                found: y.order(),
            });
        }
        let n = self.dim();
        let mut out = Tensor::zeros(n, x.order());
        let ys = y.terms();
        for (xi, a) in x.terms() {
            for (yi, b) in &ys {
                let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), &a * b)];
                for (p, q) in xi.iter().zip(yi) {
                    let mut next = Vec::new();
                    for (idx, c) in &partial {
                        for (k, m) in self.basis_product(*p, *q) {
                            let mut idx = idx.clone();
                            idx.push(*k);
                            next.push((idx, c * m));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    out.add_at(&idx, &c);
                }
            }
        }
        Ok(out)
    }
}

fn each_basis(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let total = n.pow(arity as u32);
    (0..total)
        .map(|mut f| {
            let mut idx = vec![0; arity];
            for slot in (0..arity).rev() {
                idx[slot] = f % n;
                f /= n;
            }
            idx
        })
        .collect()
}

/// Associativity, unit, coalgebra, bialgebra and antipode laws.
pub fn check_hopf_axioms(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let vec_t = Tensor::from_vector;
    let scalar_t = Tensor::scalar;
    let unit_t = vec_t(h.unit.clone());
    let parts = [
        Report::first_failure(
            "hopf",
            "(ab)c = a(bc)",
            each_basis(n, 3),
            |b| {
                let (x, y, z) = (h.basis(b[0]), h.basis(b[1]), h.basis(b[2]));
                (
                    vec_t(h.multiply(&h.multiply(&x, &y), &z)),
                    vec_t(h.multiply(&x, &h.multiply(&y, &z))),
                )
            },
        ),
        Report::first_failure("hopf", "1·a = a", each_basis(n, 1), |b| {
            (vec_t(h.multiply(&h.unit, &h.basis(b[0]))), vec_t(h.basis(b[0])))
        }),
        Report::first_failure("hopf", "a·1 = a", each_basis(n, 1), |b| {
            (vec_t(h.multiply(&h.basis(b[0]), &h.unit)), vec_t(h.basis(b[0])))
        }),
        crate::coalgebra::check_coalgebra(&h.coalgebra),
        Report::first_failure("hopf", "Δ(ab) = Δ(a)Δ(b)", each_basis(n, 2), |b| {
            let ab = h.multiply(&h.basis(b[0]), &h.basis(b[1]));
            let lhs = crate::coalgebra::apply_delta(&h.coalgebra, &ab).expect("dims");
            let rhs = h
                .multiply_slotwise(
                    &h.coalgebra.delta_of_basis(b[0]),
                    &h.coalgebra.delta_of_basis(b[1]),
                )
                .expect("orders agree");
            (lhs, rhs)
        }),
        Report::first_failure("hopf", "ε(ab) = ε(a)ε(b)", each_basis(n, 2), |b| {
            let ab = h.multiply(&h.basis(b[0]), &h.basis(b[1]));
            (
                scalar_t(h.counit_of(&ab)),
                scalar_t(&h.counit()[b[0]] * &h.counit()[b[1]]),
            )
        }),
        Report::first_failure("hopf", "Δ(1) = 1⊗1", [vec![]], |_| {
            (
                crate::coalgebra::apply_delta(&h.coalgebra, &h.unit).expect("dims"),
                unit_t.outer(&unit_t).expect("dims"),
            )
        }),
        Report::first_failure("hopf", "ε(1) = 1", [vec![]], |_| {
            (scalar_t(h.counit_of(&h.unit)), scalar_t(Scalar::one()))
        }),
        Report::first_failure("hopf", "m(S⊗id)Δ = uε", each_basis(n, 1), |b| {
            let d = h.coalgebra.delta_of_basis(b[0]);
            let mut acc = zero_vector(n);
            for (idx, c) in d.terms() {
                let s = h.apply_antipode(&h.basis(idx[0]));
                axpy(&mut acc, &c, &h.multiply(&s, &h.basis(idx[1])));
            }
            (vec_t(acc), vec_t(h.unit.iter().map(|u| u * &h.counit()[b[0]]).collect()))
        }),
        Report::first_failure("hopf", "m(id⊗S)Δ = uε", each_basis(n, 1), |b| {
            let d = h.coalgebra.delta_of_basis(b[0]);
            let mut acc = zero_vector(n);
            for (idx, c) in d.terms() {
                let s = h.apply_antipode(&h.basis(idx[1]));
                axpy(&mut acc, &c, &h.multiply(&h.basis(idx[0]), &s));
            }
            (vec_t(acc), vec_t(h.unit.iter().map(|u| u * &h.counit()[b[0]]).collect()))
        }),
    ];
    Report::all("hopf", parts)
}

fn group_element_name(k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => "g".to_string(),
        _ => format!("g^{k}"),
    }
}

/// The group algebra of the cyclic group of order `n`, basis `g^0..g^{n-1}`.
pub fn group_algebra(n: usize) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::OutOfRange("cyclic group order must be >= 1".into()));
    }
    let names = (0..n).map(group_element_name).collect();
    let mut mult = Matrix::zeros(n, n * n);
    let mut delta = Matrix::zeros(n * n, n);
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set((i + j) % n, i * n + j, Scalar::one());
        }
        delta.set(i * n + i, i, Scalar::one());
        antipode.set((n - i) % n, i, Scalar::one());
    }
    HopfAlgebra::new(
        names,
        mult,
        unit_vector(n, 0),
        delta,
        vec![Scalar::one(); n],
        antipode,
    )
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`,
/// `S(g) = g`, `S(x) = −gx`.
pub fn sweedler_h4() -> HopfAlgebra {
    // basis index = a + 2b for g^a x^b
    let idx = |a: usize, b: usize| (a % 2) + 2 * b;
    let n = 4;
    let mut mult = Matrix::zeros(n, n * n);
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + d >= 2 {
                continue;
            }
            // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
            let sign = if b * c % 2 == 1 { -1 } else { 1 };
            mult.set(idx(a + c, b + d), idx(a, b) * n + idx(c, d), int(sign));
        }
    }
    let mut delta = Matrix::zeros(n * n, n);
    let mut put = |k: usize, i: usize, j: usize, v: i64| delta.set(i * n + j, k, int(v));
    put(0, 0, 0, 1);
    put(1, 1, 1, 1);
    put(2, 2, 0, 1);
    put(2, 1, 2, 1);
    put(3, 3, 1, 1);
    put(3, 0, 3, 1);
    let mut antipode = Matrix::zeros(n, n);
    antipode.set(0, 0, int(1));
    antipode.set(1, 1, int(1));
    antipode.set(3, 2, int(-1));
    antipode.set(2, 3, int(1));
    HopfAlgebra::new(
        ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit_vector(n, 0),
        delta,
        vec![int(1), int(1), int(0), int(0)],
        antipode,
    )
    .expect("shapes are consistent")
}

fn require_valid(h: &HopfAlgebra) -> Result<()> {
    let r = check_hopf_axioms(h);
    match r.failure {
        None => Ok(()),
        Some(cx) => Err(Error::InvalidHopf(format!("{} fails at {:?}", cx.law, cx.basis))),
    }
}

fn pair_names(h: &HopfAlgebra) -> Vec<String> {
    let names = h.basis_names();
    names
        .iter()
        .flat_map(|a| names.iter().map(move |b| format!("{a}⊗{b}")))
        .collect()
}

/// Nonzero terms of `Δ^{(k)}(e_i)`.
fn sweedler_terms(h: &HopfAlgebra, i: usize, k: usize) -> Vec<(Vec<usize>, Scalar)> {
    iterated_delta(&h.coalgebra, &h.basis(i), k)
        .expect("valid index")
        .terms()
}

/// `Δ_s(a⊗b) = Σ (a₁ ⊗ a₂S(a₄)b₁) ⊗ (a₃ ⊗ b₂)` on `H⊗H`, basis `(a, b) ↦ a·n + b`,
/// with counit `ε_s(a⊗b) = ε(a)ε(b)`.
pub fn smash_coalgebra(h: &HopfAlgebra) -> Result<Coalgebra> {
    require_valid(h)?;
    let n = h.dim();
    let big = n * n;
    let mut coproducts = Vec::with_capacity(big);
    for a in 0..n {
        let a_terms = sweedler_terms(h, a, 4);
        for b in 0..n {
            let b_terms = sweedler_terms(h, b, 2);
            let mut t = Tensor::zeros(n, 4);
            for (ai, ac) in &a_terms {
                let s4 = h.apply_antipode(&h.basis(ai[3]));
                let a2s4 = h.multiply(&h.basis(ai[1]), &s4);
                for (bi, bc) in &b_terms {
                    let middle = h.multiply(&a2s4, &h.basis(bi[0]));
                    let coef = ac * bc;
                    for (y, m) in middle.iter().enumerate() {
                        if !m.is_zero() {
                            t.add_at(&[ai[0], y, ai[2], bi[1]], &(&coef * m));
                        }
                    }
                }
            }
            coproducts.push(t.reshape(big, 2)?);
        }
    }
    let counit = (0..big)
        .map(|f| &h.counit()[f / n] * &h.counit()[f % n])
        .collect();
    Coalgebra::from_coproducts(pair_names(h), coproducts, Some(counit))
}

/// `P₁(a⊗b) = a ⊗ ε(b)1_H`.
pub fn smash_p1(h: &HopfAlgebra) -> LinearOperator {
    let n = h.dim();
    let m = Matrix::from_fn(n * n, n * n, |row, col| {
        let (a, b) = (col / n, col % n);
        let (a2, u) = (row / n, row % n);
        if a2 == a {
            &h.counit()[b] * &h.unit[u]
        } else {
            Scalar::zero()
        }
    });
    LinearOperator::new(m).expect("square")
}

/// `P₂(a⊗b) = Σ S(a₂S(a₄)b₂)a₃ ⊗ S(a₁S(a₅)b₁)b₃`.
pub fn smash_p2(h: &HopfAlgebra) -> LinearOperator {
    let n = h.dim();
    let big = n * n;
    let mut columns = Vec::with_capacity(big);
    for a in 0..n {
        let a_terms = sweedler_terms(h, a, 5);
        for b in 0..n {
            let b_terms = sweedler_terms(h, b, 3);
            let mut col = zero_vector(big);
            for (ai, ac) in &a_terms {
                let [a1, a2, a3, a4, a5] = [ai[0], ai[1], ai[2], ai[3], ai[4]].map(|i| h.basis(i));
                let a2s4 = h.multiply(&a2, &h.apply_antipode(&a4));
                let a1s5 = h.multiply(&a1, &h.apply_antipode(&a5));
                for (bi, bc) in &b_terms {
                    let [b1, b2, b3] = [bi[0], bi[1], bi[2]].map(|i| h.basis(i));
                    let left = h.multiply(&h.apply_antipode(&h.multiply(&a2s4, &b2)), &a3);
                    let right = h.multiply(&h.apply_antipode(&h.multiply(&a1s5, &b1)), &b3);
                    let coef = ac * bc;
                    for (u, x) in left.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let cx = &coef * x;
                        for (v, y) in right.iter().enumerate() {
                            if !y.is_zero() {
                                col[u * n + v] += &cx * y;
                            }
                        }
                    }
                }
            }
            columns.push(col);
        }
    }
    LinearOperator::from_images(&columns).expect("square")
}

/// `h.(x₁⊗…⊗x_r) = Σ h₁x₁ ⊗ … ⊗ h_r x_r`, the diagonal action on `H^{⊗r}`.
pub fn diagonal_action(h: &HopfAlgebra, hv: &[Scalar], t: &Tensor) -> Result<Tensor> {
    if hv.len() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: hv.len(),
        });
    }
    if t.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: t.dim(),
        });
    }
    let spread = iterated_delta(&h.coalgebra, hv, t.order())?;
    h.multiply_slotwise(&spread, t)
}

fn basis_pair(n: usize, a: usize, b: usize) -> Tensor {
    let mut t = Tensor::zeros(n, 2);
    t.set(&[a, b], Scalar::one());
    t
}

fn action_triples(n: usize) -> Vec<Vec<usize>> {
    each_basis(n, 3)
}

/// `P₂(h.(a⊗b)) = ε(h)P₂(a⊗b)` on all basis triples `(h, a, b)`.
pub fn check_p2_invariance(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let p2 = smash_p2(h);
    Report::first_failure(
        "p2-invariance",
        "P₂(h.(a⊗b)) = ε(h)P₂(a⊗b)",
        action_triples(n),
        |b| {
            let moved = diagonal_action(h, &h.basis(b[0]), &basis_pair(n, b[1], b[2])).expect("dims");
            let lhs = p2.apply(moved.flat()).expect("dims");
            let rhs = Tensor::from_flat(n, 2, p2.image_of_basis(b[1] * n + b[2]))
                .expect("shape")
                .scaled(&h.counit()[b[0]]);
            (Tensor::from_flat(n, 2, lhs).expect("shape"), rhs)
        },
    )
}

/// `Δ_s(h.(a⊗b)) = h.Δ_s(a⊗b)` on all basis triples, `h` acting diagonally
/// on all four tensor factors.
pub fn check_smash_equivariance(h: &HopfAlgebra) -> Result<Report> {
    let n = h.dim();
    let c = smash_coalgebra(h)?;
    Ok(Report::first_failure(
        "smash-equivariance",
        "Δ_s(h.(a⊗b)) = h.Δ_s(a⊗b)",
        action_triples(n),
        |b| {
            let hv = h.basis(b[0]);
            let moved = diagonal_action(h, &hv, &basis_pair(n, b[1], b[2])).expect("dims");
            let lhs = crate::coalgebra::apply_delta(&c, moved.flat())
                .expect("dims")
                .reshape(n, 4)
                .expect("shape");
            let ds = c.delta_of_basis(b[1] * n + b[2]).reshape(n, 4).expect("shape");
            let rhs = diagonal_action(h, &hv, &ds).expect("dims");
            (lhs, rhs)
        },
    ))
}
