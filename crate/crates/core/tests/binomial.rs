use num_bigint::BigInt;
use proptest::prelude::*;
use rota_baxter::binomial::{
    binom, build_binomial, delta_restricted, lemma_exhaustive_check, lemma_lhs, lemma_rhs,
    pascal_check, vandermonde_check,
};
use rota_baxter::coalgebra::{apply_delta, check_coassociativity, check_counit};
use rota_baxter::linear::{int, unit_vector, Scalar, Tensor};
use rota_baxter::rota_baxter::check_rb_axiom;

fn c(x: usize, y: i64) -> BigInt {
    binom(x as i64, y)
}

#[test]
fn restricted_and_full_forms_agree() {
    let b = build_binomial(9);
    for n in 0..=9 {
        assert_eq!(b.coalgebra().delta_of_basis(n), delta_restricted(n, 10));
    }
}

#[test]
fn truncations_are_coherent() {
    let big = build_binomial(9);
    for m in 0..9 {
        let small = build_binomial(m);
        for k in 0..=m {
            for i in 0..=m {
                for j in 0..=m {
                    assert_eq!(
                        big.coalgebra().structure_constant(k, i, j),
                        small.coalgebra().structure_constant(k, i, j)
                    );
                }
            }
        }
        // nothing in Δ(c_k) for k ≤ m reaches beyond c_m
        for k in 0..=m {
            for (idx, _) in big.coalgebra().delta_of_basis(k).terms() {
                assert!(idx.iter().all(|&i| i <= m));
            }
        }
    }
}

/// Left side `(id⊗P + P⊗id − id⊗id)ΔP(c_n)` against `(P⊗P)Δ(c_n)`, both
/// expanded from the coefficient formula without the structure matrix.
#[test]
fn shift_identity_by_hand_expansion() {
    let delta = |n: i64, dim: usize| -> Tensor {
        if n < 0 {
            Tensor::zeros(dim, 2)
        } else {
            delta_restricted(n as usize, dim)
        }
    };
    let shift = |t: &Tensor, slots: [bool; 2]| -> Tensor {
        let mut out = Tensor::zeros(t.dim(), 2);
        for (idx, coef) in t.terms() {
            let mut moved = idx.clone();
            let mut vanish = false;
            for s in 0..2 {
                if slots[s] {
                    if moved[s] == 0 {
                        vanish = true;
                    } else {
                        moved[s] -= 1;
                    }
                }
            }
            if !vanish {
                out.add_at(&moved, &coef);
            }
        }
        out
    };
    for n in 0..=8i64 {
        let dim = 9;
        let dp = delta(n - 1, dim);
        let mut lhs = shift(&dp, [false, true]);
        lhs.add_assign(&shift(&dp, [true, false])).unwrap();
        lhs.add_scaled(&int(-1), &dp).unwrap();
        let rhs = shift(&delta(n, dim), [true, true]);
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn checks_pass_up_to_eight() {
    for n in 0..=8 {
        let b = build_binomial(n);
        assert!(check_coassociativity(b.coalgebra()).passed());
        assert!(check_counit(b.coalgebra()).unwrap().passed());
        assert!(check_rb_axiom(b.coalgebra(), b.shift(), &int(-1)).unwrap().passed());
    }
}

#[test]
fn coassociativity_and_lemma_agree() {
    for n in 0..=7 {
        assert_eq!(
            check_coassociativity(build_binomial(n).coalgebra()).passed(),
            lemma_exhaustive_check(n).passed()
        );
        assert!(lemma_exhaustive_check(n).passed());
    }
}

#[test]
fn small_coproducts() {
    let b = build_binomial(0);
    assert_eq!(
        apply_delta(b.coalgebra(), &unit_vector(1, 0)).unwrap().terms(),
        vec![(vec![0, 0], int(1))]
    );
    let b = build_binomial(2);
    let d2: Vec<(Vec<usize>, Scalar)> = apply_delta(b.coalgebra(), &unit_vector(3, 2)).unwrap().terms();
    assert_eq!(
        d2,
        vec![
            (vec![0, 2], int(1)),
            (vec![1, 1], int(2)),
            (vec![1, 2], int(-2)),
            (vec![2, 0], int(1)),
            (vec![2, 1], int(-2)),
            (vec![2, 2], int(1)),
        ]
    );
}

#[test]
fn lemma_closed_forms() {
    for n in 0..=12usize {
        for a in 0..=n {
            for b in 0..=n {
                // k = n
                assert_eq!(lemma_lhs(n, n, a, b).unwrap(), c(n, a as i64));
                assert_eq!(lemma_rhs(n, n, a, b).unwrap(), c(n, (n - a) as i64));
                // l = n
                assert_eq!(lemma_lhs(n, a, n, b).unwrap(), c(n, a as i64));
                assert_eq!(lemma_rhs(n, a, n, b).unwrap(), c(n, (n - a) as i64));
                // j = n
                assert_eq!(lemma_lhs(n, a, b, n).unwrap(), c(n, a as i64) * c(n, b as i64));
                // j = 0
                let expected = c(n, b as i64) * c(b, n as i64 - a as i64);
                assert_eq!(lemma_lhs(n, a, b, 0).unwrap(), expected);
                assert_eq!(
                    lemma_rhs(n, a, b, 0).unwrap(),
                    c(n, (n - b) as i64) * c(b, n as i64 - a as i64)
                );
            }
        }
    }
}

#[test]
fn lemma_tuple_counts() {
    assert_eq!(lemma_exhaustive_check(5).tuples, 441);
    let r = lemma_exhaustive_check(12);
    assert!(r.passed());
    assert_eq!(r.tuples, (0..=12usize).map(|n| (n + 1).pow(3)).sum::<usize>());
    assert_eq!(r.tuples, 8281);
}

proptest! {
    #[test]
    fn vandermonde_holds(x in 0usize..=30, y in 0usize..=30, z in 0usize..=30) {
        prop_assert!(vandermonde_check(x, y, z));
    }

    #[test]
    fn pascal_holds(x in 1usize..=40, y in 0usize..=40) {
        prop_assume!(y <= x);
        prop_assert!(pascal_check(x, y).unwrap());
    }
}
