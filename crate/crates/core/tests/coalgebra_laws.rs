use proptest::prelude::*;
use rota_baxter::coalgebra::{
    apply_delta, check_coalgebra, check_coassociativity, check_counit, check_grouplike,
    iterated_delta_nested, Coalgebra, Nesting,
};
use rota_baxter::corpus::{hopf_instances, rb_corpus};
use rota_baxter::hopf::smash_coalgebra;
use rota_baxter::binomial::build_binomial;
use rota_baxter::linear::{int, unit_vector, Scalar};
use rota_baxter::Error;

fn example_coalgebras() -> Vec<Coalgebra> {
    let mut out: Vec<Coalgebra> = rb_corpus().into_iter().map(|e| e.rb.coalgebra().clone()).collect();
    for (_, h) in hopf_instances() {
        out.push(h.coalgebra().clone());
        out.push(smash_coalgebra(&h).unwrap());
    }
    out
}

#[test]
fn every_example_coalgebra_passes() {
    for c in example_coalgebras() {
        assert!(check_coassociativity(&c).passed(), "{:?}", c.basis_names());
        if c.is_counital() {
            assert!(check_counit(&c).unwrap().passed(), "{:?}", c.basis_names());
        }
        assert!(check_coalgebra(&c).passed());
    }
}

#[test]
fn nesting_order_is_irrelevant() {
    for c in example_coalgebras() {
        for k in 1..=4 {
            for b in 0..c.dim() {
                let v = unit_vector(c.dim(), b);
                assert_eq!(
                    iterated_delta_nested(&c, &v, k, Nesting::Left).unwrap(),
                    iterated_delta_nested(&c, &v, k, Nesting::Right).unwrap(),
                );
            }
        }
    }
}

#[test]
fn binomial_third_coproduct_of_c1() {
    let c = build_binomial(3).coalgebra().clone();
    let v = unit_vector(4, 1);
    let right = iterated_delta_nested(&c, &v, 3, Nesting::Right).unwrap();
    // (Δ⊗id)Δ(c₁) directly from Δ(c₁) = c₁⊗c₀ + c₀⊗c₁ − c₁⊗c₁
    let d1 = apply_delta(&c, &v).unwrap();
    let d0 = apply_delta(&c, &unit_vector(4, 0)).unwrap();
    let mut expected = rota_baxter::Tensor::zeros(4, 3);
    for (idx, coef) in d1.terms() {
        let first = if idx[0] == 0 { &d0 } else { &d1 };
        for (inner, c2) in first.terms() {
            expected.add_at(&[inner[0], inner[1], idx[1]], &(&coef * &c2));
        }
    }
    assert_eq!(right, expected);
}

#[test]
fn mutation_breaks_coassociativity_at_perturbed_index() {
    let base = build_binomial(5).coalgebra().clone();
    let n = base.dim();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut c = base.clone();
                let v = c.structure_constant(k, i, j) + int(1);
                c.set_structure_constant(k, i, j, v);
                let r = check_coassociativity(&c);
                let Some(cx) = r.failure else {
                    panic!("perturbing ({k},{i},{j}) went unnoticed");
                };
                // coproducts of c_m, m < k, never involve c_k
                assert!(cx.basis[0] >= k);
                let v = unit_vector(n, cx.basis[0]);
                let l = iterated_delta_nested(&c, &v, 3, Nesting::Left).unwrap();
                let r = iterated_delta_nested(&c, &v, 3, Nesting::Right).unwrap();
                assert_ne!(l, r);
                assert_eq!((cx.lhs, cx.rhs), (l, r));
            }
        }
    }
}

#[test]
fn mutation_reported_at_perturbed_element() {
    let mut c = build_binomial(5).coalgebra().clone();
    let v = c.structure_constant(3, 3, 3) + int(1);
    c.set_structure_constant(3, 3, 3, v);
    assert_eq!(check_coassociativity(&c).failure.unwrap().basis, vec![3]);
}

#[test]
fn counit_mutation_fails() {
    let c = build_binomial(5).coalgebra().clone();
    let mut eps = c.counit().unwrap().clone();
    eps[1] = int(1);
    let c = c.with_counit(Some(eps)).unwrap();
    assert!(!check_counit(&c).unwrap().passed());
    assert_eq!(check_counit(&c.without_counit()), Err(Error::Noncounitary));
}

#[test]
fn grouplike_examples() {
    let b = build_binomial(3);
    assert!(check_grouplike(b.coalgebra(), &unit_vector(4, 0)).unwrap());
    assert!(!check_grouplike(b.coalgebra(), &unit_vector(4, 1)).unwrap());
    let z2 = Coalgebra::group_like(vec!["e".into(), "g".into()]);
    assert!(check_grouplike(&z2, &unit_vector(2, 1)).unwrap());
    assert!(check_grouplike(&z2.without_counit(), &unit_vector(2, 1)).is_err());
    for k in 1..=4 {
        let t = iterated_delta_nested(&z2, &unit_vector(2, 1), k, Nesting::Left).unwrap();
        assert_eq!(t.terms(), vec![(vec![1; k], int(1))]);
    }
}

fn coefficients(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((-9i64..10, 1i64..5), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| rota_baxter::linear::ratio(a, b)).collect())
}

proptest! {
    #[test]
    fn apply_delta_is_linear(
        u in coefficients(6),
        v in coefficients(6),
        alpha in -5i64..6,
        beta in -5i64..6,
    ) {
        let c = build_binomial(5).coalgebra().clone();
        let (a, b) = (int(alpha), int(beta));
        let w: Vec<Scalar> = u.iter().zip(&v).map(|(x, y)| &a * x + &b * y).collect();
        let mut expected = apply_delta(&c, &u).unwrap().scaled(&a);
        expected.add_scaled(&b, &apply_delta(&c, &v).unwrap()).unwrap();
        prop_assert_eq!(apply_delta(&c, &w).unwrap(), expected);
    }
}

#[test]
fn apply_delta_rejects_wrong_length() {
    let c = build_binomial(2).coalgebra().clone();
    assert!(matches!(
        apply_delta(&c, &[int(1)]),
        Err(Error::DimensionMismatch { .. })
    ));
}
