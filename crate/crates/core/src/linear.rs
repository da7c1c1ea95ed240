//! Exact linear algebra over the rationals.
//!
//! Everything here is dense. Dimensions stay small (at most a few dozen), so
//! the only optimisation is that tensor maps skip zero entries.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"` or `"n/d"`. A zero denominator is rejected.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || Error::InvalidScalar(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += coef * v`
pub fn axpy(acc: &mut [Scalar], coef: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if coef.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coef * x;
        }
    }
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            check_dim(c, row.len())?;
            data.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix whose `k`-th column is `columns[k]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (k, col) in columns.iter().enumerate() {
            check_dim(rows, col.len())?;
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + k] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Nonzero entries of each column, as `(row, value)` pairs.
    pub fn column_nonzeros(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, x) in self.row(i).iter().enumerate() {
                if !x.is_zero() {
                    cols[j].push((i, x.clone()));
                }
            }
        }
        cols
    }

    /// Nonzero entries as `(row, col, value)`, row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(f, x)| (f / self.cols, f % self.cols, x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        check_dim(self.cols, v.len())?;
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref_with_pivots(self).1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = rref_with_pivots(&aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_scalar).collect())
            .collect();
        write!(f, "Matrix{rows:?}")
    }
}

/// Reduced row-echelon form together with the pivot column of each nonzero row.
/// Zero rows are kept at the bottom so the shape is preserved.
pub fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let x = &a.data[r * cols + j] * &inv;
            a.data[r * cols + j] = x;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let x = &f * &a.data[r * cols + j];
                if !x.is_zero() {
                    a.data[i * cols + j] -= x;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// The unique reduced row-echelon form of `m`.
pub fn rref(m: &Matrix) -> Matrix {
    rref_with_pivots(m).0
}

/// Dense tensor of a fixed order over a single `dim`-dimensional space,
/// stored row-major (last slot fastest).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    dim: usize,
    order: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(dim: usize, order: usize) -> Self {
        Self {
            dim,
            order,
            data: vec![Scalar::zero(); dim.pow(order as u32)],
        }
    }

    pub fn from_vector(v: Vector) -> Self {
        Self {
            dim: v.len(),
            order: 1,
            data: v,
        }
    }

    pub fn scalar(x: Scalar) -> Self {
        Self {
            dim: 0,
            order: 0,
            data: vec![x],
        }
    }

    pub fn from_flat(dim: usize, order: usize, data: Vec<Scalar>) -> Result<Self> {
        check_dim(dim.pow(order as u32), data.len())?;
        Ok(Self { dim, order, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Scalar> {
        self.data
    }

    fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order);
        idx.iter().fold(0, |f, &i| f * self.dim + i)
    }

    pub fn unflatten(&self, mut f: usize) -> Vec<usize> {
        let mut idx = vec![0; self.order];
        for slot in (0..self.order).rev() {
            idx[slot] = f % self.dim;
            f /= self.dim;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.flatten(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) {
        let f = self.flatten(idx);
        self.data[f] = value;
    }

    pub fn add_at(&mut self, idx: &[usize], value: &Scalar) {
        let f = self.flatten(idx);
        self.data[f] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries as `(multi-index, coefficient)`.
    pub fn terms(&self) -> Vec<(Vec<usize>, Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(f, x)| (self.unflatten(f), x.clone()))
            .collect()
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        check_dim(self.data.len(), other.data.len())?;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b;
            }
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, coef: &Scalar, other: &Self) -> Result<()> {
        check_dim(self.data.len(), other.data.len())?;
        axpy(&mut self.data, coef, &other.data);
        Ok(())
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Self {
            dim: self.dim,
            order: self.order,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Tensor product `self ⊗ other` (orders add).
    pub fn outer(&self, other: &Self) -> Result<Self> {
        if self.order > 0 && other.order > 0 {
            check_dim(self.dim, other.dim)?;
        }
        let dim = if self.order > 0 { self.dim } else { other.dim };
        let mut out = Self::zeros(dim, self.order + other.order);
        let n = other.data.len();
        for (i, a) in self.data.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.data.iter().enumerate() {
                if !b.is_zero() {
                    out.data[i * n + j] = a * b;
                }
            }
        }
        Ok(out)
    }

    /// Applies a linear map `V -> V^{⊗arity}` (a `dim^arity × dim` matrix) to
    /// one slot. The result has order `order - 1 + arity`; `arity = 0` contracts
    /// the slot with a functional.
    pub fn map_slot(&self, slot: usize, map: &Matrix, arity: usize) -> Result<Self> {
        if slot >= self.order {
            return Err(Error::OutOfRange(format!(
                "slot {slot} of a tensor of order {}",
                self.order
            )));
        }
        check_dim(self.dim, map.cols())?;
        check_dim(self.dim.pow(arity as u32), map.rows())?;
        let cols = map.column_nonzeros();
        let d = self.dim;
        let suffix = d.pow((self.order - slot - 1) as u32);
        let block = d.pow(arity as u32) * suffix;
        let mut out = Self::zeros(d, self.order - 1 + arity);
        for (f, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let s = f % suffix;
            let a = (f / suffix) % d;
            let prefix = f / (suffix * d);
            for (r, c) in &cols[a] {
                out.data[prefix * block + r * suffix + s] += c * x;
            }
        }
        Ok(out)
    }

    /// Applies the same (possibly rectangular) map to every slot.
    pub fn map_all(&self, map: &Matrix) -> Result<Self> {
        check_dim(self.dim, map.cols())?;
        let cols = map.column_nonzeros();
        let mut out = Self::zeros(map.rows(), self.order);
        for (idx, x) in self.terms() {
            let mut partial: Vec<(usize, Scalar)> = vec![(0, x)];
            for &a in &idx {
                let mut next = Vec::with_capacity(partial.len() * cols[a].len());
                for (f, c) in &partial {
                    for (r, m) in &cols[a] {
                        next.push((f * map.rows() + r, c * m));
                    }
                }
                partial = next;
            }
            for (f, c) in partial {
                out.data[f] += c;
            }
        }
        Ok(out)
    }

    /// Reinterprets the flat data with a different `(dim, order)` of the same size,
    /// e.g. an order-2 tensor over `H⊗H` as an order-4 tensor over `H`.
    pub fn reshape(&self, dim: usize, order: usize) -> Result<Self> {
        Self::from_flat(dim, order, self.data.clone())
    }

    /// Moves slot `from` to position `to`, shifting the slots in between.
    pub fn move_slot(&self, from: usize, to: usize) -> Self {
        let mut out = Self::zeros(self.dim, self.order);
        for (f, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut idx = self.unflatten(f);
            let v = idx.remove(from);
            idx.insert(to, v);
            let g = out.flatten(&idx);
            out.data[g] = x.clone();
        }
        out
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(idx, c)| format!("{}{idx:?}", format_scalar(&c)))
            .collect();
        write!(f, "Tensor(dim={}, order={}; {})", self.dim, self.order, terms.join(" + "))
    }
}

/// A subspace of `K^n`, stored as the nonzero rows of a canonical RREF.
/// Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            check_dim(ambient_dim, v.len())?;
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        let (r, pivots) = rref_with_pivots(&m);
        let basis = Matrix::from_fn(pivots.len(), ambient_dim, |i, j| r.get(i, j).clone());
        Ok(Self {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Result<Self> {
        let cols: Vec<Vector> = (0..m.cols()).map(|j| m.column(j)).collect();
        if cols.is_empty() {
            return Ok(Self::zero(m.rows()));
        }
        Self::span(m.rows(), &cols)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; they index a basis of the quotient.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Coefficients of `v` in the stored basis, or `None` when `v` is outside.
    pub fn solve_membership(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        check_dim(self.ambient_dim, v.len())?;
        let coeffs: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            axpy(&mut residual, &-c, self.basis.row(i));
        }
        Ok(is_zero_vector(&residual).then_some(coeffs))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.solve_membership(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Self::span(self.ambient_dim, &vs)
    }

    /// `self ⊕ other = K^n` exactly.
    pub fn is_complement_of(&self, other: &Self) -> Result<bool> {
        Ok(self.dim() + other.dim() == self.ambient_dim
            && self.sum(other)?.dim() == self.ambient_dim)
    }

    /// The quotient map `K^n -> K^n / self` in coordinates indexed by
    /// [`Subspace::non_pivots`].
    pub fn quotient_map(&self) -> Matrix {
        let free = self.non_pivots();
        let mut q = Matrix::zeros(free.len(), self.ambient_dim);
        for (r, &c) in free.iter().enumerate() {
            q.set(r, c, Scalar::one());
        }
        for (i, &p) in self.pivots.iter().enumerate() {
            for (r, &c) in free.iter().enumerate() {
                q.set(r, p, -self.basis.get(i, c));
            }
        }
        q
    }
}

/// Decides `t ∈ C⊗a + b⊗C` for `t ∈ C⊗C`.
///
/// `(C⊗C)/(C⊗a + b⊗C) ≅ C/b ⊗ C/a`, so membership is equivalent to the image
/// of `t` under the product of the two quotient maps vanishing.
pub fn tensor_subspace_sum_membership(a: &Subspace, b: &Subspace, t: &Tensor) -> Result<bool> {
    check_dim(a.ambient_dim, b.ambient_dim)?;
    check_dim(a.ambient_dim, t.dim())?;
    check_dim(2, t.order())?;
    let qa = a.quotient_map();
    let qb = b.quotient_map();
    let qa_cols = qa.column_nonzeros();
    let qb_cols = qb.column_nonzeros();
    let mut image = Matrix::zeros(qb.rows(), qa.rows());
    for (idx, x) in t.terms() {
        for (r, u) in &qb_cols[idx[0]] {
            for (s, w) in &qa_cols[idx[1]] {
                *image.entry_mut(*r, *s) += &x * u * w;
            }
        }
    }
    Ok(image.is_zero())
}
