//! The binomial coalgebra with its shift operator, and the binomial-sum
//! identity that makes it coassociative.
//!
//! Basis `c_0..c_N`; the truncation is closed because `Δ(c_n)` only involves
//! `c_i⊗c_j` with `i, j ≤ n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coalgebra::{Coalgebra, LinearOperator};
use crate::error::{Error, Result};
use crate::linear::{int, unit_vector, zero_vector, Matrix, Scalar, Tensor};
use crate::rota_baxter::RbCoalgebra;

/// `C(x, y)`, with `C(x, y) = 0` whenever `y < 0` or `y > x` (for `x ≥ 0`).
pub fn binom(x: i64, y: i64) -> BigInt {
    assert!(x >= 0, "binom is only defined here for x >= 0");
    if y < 0 || y > x {
        return BigInt::zero();
    }
    let y = y.min(x - y);
    let mut acc = BigInt::one();
    for t in 0..y {
        acc = acc * BigInt::from(x - t) / BigInt::from(t + 1);
    }
    acc
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Coefficient of `c_i⊗c_j` in `Δ(c_n)`, summing the inner index over the
/// full range `0..=n`.
pub fn delta_coefficient(n: i64, i: i64, j: i64) -> BigInt {
    binom(n, j) * binom(j, n - i) * sign(i + j + n)
}

/// `Δ(c_n)` using the restricted double sum `j = 0..=n`, `i = n-j..=n`.
pub fn delta_restricted(n: usize, dim: usize) -> Tensor {
    let mut t = Tensor::zeros(dim, 2);
    let n = n as i64;
    for j in 0..=n {
        for i in (n - j)..=n {
            let c = binom(n, j) * binom(j, n - i) * sign(i + j + n);
            t.add_at(&[i as usize, j as usize], &Scalar::from_integer(c));
        }
    }
    t
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialCoalgebra {
    max_degree: usize,
    coalgebra: Coalgebra,
    shift: LinearOperator,
}

impl BinomialCoalgebra {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    /// `c_n ↦ c_{n-1}`, `c_0 ↦ 0`.
    pub fn shift(&self) -> &LinearOperator {
        &self.shift
    }

    /// The coalgebra with the shift operator at weight −1.
    pub fn rb(&self) -> RbCoalgebra {
        RbCoalgebra::new(self.coalgebra.clone(), self.shift.clone(), int(-1))
            .expect("shift has matching dimension")
    }
}

pub fn build_binomial(max_degree: usize) -> BinomialCoalgebra {
    let dim = max_degree + 1;
    let names = (0..dim).map(|n| format!("c{n}")).collect();
    let mut delta = Matrix::zeros(dim * dim, dim);
    for n in 0..dim {
        for i in 0..=n {
            for j in 0..=n {
                let c = delta_coefficient(n as i64, i as i64, j as i64);
                if !c.is_zero() {
                    delta.set(i * dim + j, n, Scalar::from_integer(c));
                }
            }
        }
    }
    let counit = Some(unit_vector(dim, 0));
    let coalgebra = Coalgebra::new(names, delta, counit).expect("shapes are consistent");
    let images: Vec<_> = (0..dim)
        .map(|n| {
            if n == 0 {
                zero_vector(dim)
            } else {
                unit_vector(dim, n - 1)
            }
        })
        .collect();
    let shift = LinearOperator::from_images(&images).expect("square");
    BinomialCoalgebra {
        max_degree,
        coalgebra,
        shift,
    }
}

/// Table of `C(x, y)` for `0 ≤ y ≤ x ≤ max`.
struct Pascal {
    rows: Vec<Vec<BigInt>>,
}

impl Pascal {
    fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
        for x in 0..=max {
            let mut row = vec![BigInt::one(); x + 1];
            for y in 1..x {
                row[y] = &rows[x - 1][y - 1] + &rows[x - 1][y];
            }
            rows.push(row);
        }
        Self { rows }
    }

    fn get(&self, x: i64, y: i64) -> BigInt {
        if y < 0 || y > x {
            BigInt::zero()
        } else {
            self.rows[x as usize][y as usize].clone()
        }
    }
}

fn lemma_args(n: usize, k: usize, l: usize, j: usize) -> Result<()> {
    if k > n || l > n || j > n {
        return Err(Error::OutOfRange(format!(
            "need 0 <= k, l, j <= n, got n={n} k={k} l={l} j={j}"
        )));
    }
    Ok(())
}

fn lemma_lhs_with(p: &Pascal, n: i64, k: i64, l: i64, j: i64) -> BigInt {
    (0..=n)
        .map(|i| p.get(j, n - i) * p.get(i, l) * p.get(l, i - k))
        .sum()
}

fn lemma_rhs_with(p: &Pascal, n: i64, k: i64, l: i64, j: i64) -> BigInt {
    (0..=n)
        .map(|i| p.get(n - j, n - i) * p.get(i, n - k) * p.get(j, i - l))
        .sum()
}

/// `Σ_{i=0}^{n} C(j, n−i) C(i, l) C(l, i−k)`
pub fn lemma_lhs(n: usize, k: usize, l: usize, j: usize) -> Result<BigInt> {
    lemma_args(n, k, l, j)?;
    let p = Pascal::new(n);
    Ok(lemma_lhs_with(&p, n as i64, k as i64, l as i64, j as i64))
}

/// `Σ_{i=0}^{n} C(n−j, n−i) C(i, n−k) C(j, i−l)`
pub fn lemma_rhs(n: usize, k: usize, l: usize, j: usize) -> Result<BigInt> {
    lemma_args(n, k, l, j)?;
    let p = Pascal::new(n);
    Ok(lemma_rhs_with(&p, n as i64, k as i64, l as i64, j as i64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaFailure {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub j: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub max_n: usize,
    pub tuples: usize,
    pub failure: Option<LemmaFailure>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Compares both sums on every `(n, k, l, j)` with `0 ≤ k, l, j ≤ n ≤ max_n`.
pub fn lemma_exhaustive_check(max_n: usize) -> LemmaReport {
    let p = Pascal::new(max_n);
    let mut tuples = 0;
    for n in 0..=max_n as i64 {
        for k in 0..=n {
            for l in 0..=n {
                for j in 0..=n {
                    tuples += 1;
                    let lhs = lemma_lhs_with(&p, n, k, l, j);
                    let rhs = lemma_rhs_with(&p, n, k, l, j);
                    if lhs != rhs {
                        return LemmaReport {
                            max_n,
                            tuples,
                            failure: Some(LemmaFailure {
                                n: n as usize,
                                k: k as usize,
                                l: l as usize,
                                j: j as usize,
                                lhs,
                                rhs,
                            }),
                        };
                    }
                }
            }
        }
    }
    LemmaReport {
        max_n,
        tuples,
        failure: None,
    }
}

/// `Σ_{t=0}^{x} C(x, t) C(y, z−t) = C(x+y, z)`
pub fn vandermonde_check(x: usize, y: usize, z: usize) -> bool {
    let (x, y, z) = (x as i64, y as i64, z as i64);
    let lhs: BigInt = (0..=x).map(|t| binom(x, t) * binom(y, z - t)).sum();
    lhs == binom(x + y, z)
}

/// `C(x, y) = C(x−1, y−1) + C(x−1, y)`, for `x ≥ 1` and `x ≥ y ≥ 0`.
pub fn pascal_check(x: usize, y: usize) -> Result<bool> {
    if x == 0 || y > x {
        return Err(Error::OutOfRange(format!(
            "Pascal's rule needs x >= 1 and x >= y >= 0, got x={x} y={y}"
        )));
    }
    let (x, y) = (x as i64, y as i64);
    Ok(binom(x, y) == binom(x - 1, y - 1) + binom(x - 1, y))
}
