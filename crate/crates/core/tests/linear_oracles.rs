use num_traits::{One, Zero};
use proptest::prelude::*;
use rota_baxter::linear::{
    int, parse_scalar, ratio, rref, tensor_subspace_sum_membership, unit_vector, Matrix, Scalar,
    Subspace, Tensor,
};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| ratio(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    // small integer entries with many zeros so low ranks show up
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], rows * cols).prop_map(
        move |v| Matrix::from_fn(rows, cols, |i, j| int(v[i * cols + j])),
    )
}

fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut acc = Scalar::zero();
    for (c, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = a * det(&minor);
        if c % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn minor_rank(m: &Matrix) -> usize {
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<Scalar>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// `t ∈ C⊗a + b⊗C` by solving for the coefficients of `e_i⊗a_r` and `b_s⊗e_j`
/// in one flattened system.
fn flattened_membership(a: &Subspace, b: &Subspace, t: &Tensor) -> bool {
    let n = a.ambient_dim();
    let mut columns = Vec::new();
    for i in 0..n {
        for ar in a.basis_vectors() {
            let col = Tensor::from_vector(unit_vector(n, i))
                .outer(&Tensor::from_vector(ar))
                .unwrap();
            columns.push(col.into_flat());
        }
    }
    for bs in b.basis_vectors() {
        for j in 0..n {
            let col = Tensor::from_vector(bs.clone())
                .outer(&Tensor::from_vector(unit_vector(n, j)))
                .unwrap();
            columns.push(col.into_flat());
        }
    }
    if columns.is_empty() {
        return t.is_zero();
    }
    let m = Matrix::from_columns(n * n, &columns).unwrap();
    let mut augmented = columns.clone();
    augmented.push(t.flat().to_vec());
    let ma = Matrix::from_columns(n * n, &augmented).unwrap();
    m.rank() == ma.rank()
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    (0..=n).prop_flat_map(move |k| {
        prop::collection::vec(prop::collection::vec(-2i64..3, n), k).prop_map(move |rows| {
            let vs: Vec<Vec<Scalar>> =
                rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect();
            Subspace::span(n, &vs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn addition_is_associative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
    }

    #[test]
    fn nonzero_scalars_invert(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * a.recip(), Scalar::one());
    }

    #[test]
    fn scalars_are_reduced(n in -1000i64..1000, d in 1i64..1000) {
        let a = ratio(n, d);
        prop_assert!(a.denom() > &Zero::zero());
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rank_matches_minor_expansion(m in matrix(5, 5)) {
        prop_assert_eq!(m.rank(), minor_rank(&m));
    }

    #[test]
    fn rank_matches_minor_expansion_rectangular(m in matrix(3, 5)) {
        prop_assert_eq!(m.rank(), minor_rank(&m));
    }

    #[test]
    fn rref_is_idempotent(m in matrix(4, 6)) {
        let r = rref(&m);
        prop_assert_eq!(rref(&r), r);
    }

    #[test]
    fn rref_preserves_row_space(m in matrix(4, 5)) {
        let r = rref(&m);
        let s = Subspace::span(5, &r.row_vectors()).unwrap();
        for row in m.row_vectors() {
            prop_assert!(s.contains(&row).unwrap());
        }
        prop_assert_eq!(s.dim(), m.rank());
    }

    #[test]
    fn membership_coefficients_reproduce_vector(
        s in subspace(4),
        v in prop::collection::vec(-3i64..4, 4),
    ) {
        let v: Vec<Scalar> = v.into_iter().map(int).collect();
        match s.solve_membership(&v).unwrap() {
            Some(coef) => {
                let mut acc = vec![Scalar::zero(); 4];
                for (c, row) in coef.iter().zip(s.basis_vectors()) {
                    for (x, y) in acc.iter_mut().zip(row) {
                        *x += c * y;
                    }
                }
                prop_assert_eq!(acc, v);
            }
            None => {
                let mut rows = s.basis_vectors();
                rows.push(v);
                prop_assert_eq!(Subspace::span(4, &rows).unwrap().dim(), s.dim() + 1);
            }
        }
    }

    #[test]
    fn tensor_sum_membership_matches_flattened_system(
        a in subspace(3),
        b in subspace(3),
        t in prop::collection::vec(prop_oneof![2 => Just(0i64), 1 => -2i64..3], 9),
    ) {
        let t = Tensor::from_flat(3, 2, t.into_iter().map(int).collect()).unwrap();
        prop_assert_eq!(
            tensor_subspace_sum_membership(&a, &b, &t).unwrap(),
            flattened_membership(&a, &b, &t)
        );
    }
}

#[test]
fn subspace_equality_is_syntactic() {
    let a = Subspace::span(3, &[vec![int(1), int(1), int(0)], vec![int(0), int(0), int(2)]]).unwrap();
    let b = Subspace::span(
        3,
        &[vec![int(2), int(2), int(4)], vec![int(-1), int(-1), int(1)]],
    )
    .unwrap();
    assert_eq!(a, b);
}

#[test]
fn tensor_membership_dimension_mismatch() {
    let a = Subspace::full(2);
    let t = Tensor::zeros(3, 2);
    assert!(tensor_subspace_sum_membership(&a, &a, &t).is_err());
}
