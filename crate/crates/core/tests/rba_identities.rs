use itertools::Itertools;
use num_bigint::BigInt;
use proptest::prelude::*;

use rbgf_core::comb::{binomial, factorial, multinomial, stirling2};
use rbgf_core::rational::{frac, from_int, pow, rat};
use rbgf_core::rba::{
    derive, element_mul, element_pow, one_mul_closed, rb_apply, word_product_recursive,
    word_product_stuffle,
};
use rbgf_core::verify::{all_words, rb_axiom_pair};
use rbgf_core::{AlgebraContext, ProductBackend, RBAElement, Rational, TensorWord};

fn lambdas() -> Vec<Rational> {
    vec![rat(0), rat(1), rat(2), frac(5, 3)]
}

fn lambda_strategy() -> impl Strategy<Value = Rational> {
    prop_oneof![
        Just(rat(0)),
        Just(rat(1)),
        Just(rat(2)),
        Just(frac(5, 3)),
        Just(frac(-1, 2))
    ]
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn word_strategy(max_degree: usize) -> impl Strategy<Value = TensorWord> {
    prop::collection::vec(0u32..=2, 1..=max_degree + 1).prop_map(|v| TensorWord::new(v).unwrap())
}

fn element_strategy(max_degree: usize) -> impl Strategy<Value = RBAElement> {
    prop::collection::vec((word_strategy(max_degree), rational_strategy()), 1..=3)
        .prop_map(RBAElement::from_terms)
}

#[test]
fn backends_agree_on_short_words() {
    for lambda in lambdas() {
        for total in 2..=4 {
            for la in 1..total {
                let ctx = AlgebraContext::new(lambda.clone(), total - 2);
                for a in all_words(la, 3) {
                    for b in all_words(total - la, 3) {
                        assert_eq!(
                            word_product_recursive(&a, &b, &ctx),
                            word_product_stuffle(&a, &b, &ctx),
                            "{a} * {b} at λ={lambda}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn closed_form_for_scalar_words() {
    for lambda in lambdas() {
        let ctx = AlgebraContext::new(lambda.clone(), 16);
        for m in 0..=8 {
            for n in 0..=8 {
                let direct = element_mul(&RBAElement::one(m), &RBAElement::one(n), &ctx);
                assert_eq!(one_mul_closed(m, n, &ctx), direct, "m={m} n={n} λ={lambda}");
                if lambda == rat(0) {
                    let expected = RBAElement::one(m + n).scale(&from_int(&binomial(m + n, m)));
                    assert_eq!(direct, expected);
                }
            }
        }
    }
}

#[test]
fn stirling_expansion_of_one_one_powers() {
    for lambda in [rat(0), rat(1), rat(2), rat(3)] {
        let ctx = AlgebraContext::new(lambda.clone(), 8);
        for n in 0..=8 {
            let lhs = element_pow(&RBAElement::one(1), n, &ctx);
            let rhs = RBAElement::from_terms((0..=n).map(|k| {
                let c = from_int(&(factorial(k) * stirling2(n, k))) * pow(&lambda, n - k);
                (TensorWord::one(k), c)
            }));
            assert_eq!(lhs, rhs, "n={n} λ={lambda}");
        }
    }
}

#[test]
fn multinomial_identity_at_weight_zero() {
    let ctx = AlgebraContext::new(rat(0), 8);
    for k in 1..=4 {
        for parts in (0..k).map(|_| 0..=8usize).multi_cartesian_product() {
            let total: usize = parts.iter().sum();
            if total > 8 {
                continue;
            }
            let lhs = parts.iter().fold(RBAElement::unit(), |acc, &p| {
                element_mul(&acc, &RBAElement::from_word(TensorWord::x_tensor(p)), &ctx)
            });
            let c = from_int(&multinomial(total, &parts).unwrap());
            assert_eq!(
                lhs,
                RBAElement::term(TensorWord::x_tensor(total), c),
                "{parts:?}"
            );
        }
    }
}

#[test]
fn permutation_identity_at_weight_zero() {
    for k in 1..=4u32 {
        let ctx = AlgebraContext::new(rat(0), k as usize);
        let lhs = (1..=k).fold(RBAElement::unit(), |acc, i| {
            element_mul(
                &acc,
                &RBAElement::from_word(TensorWord::under_unit(&[i])),
                &ctx,
            )
        });
        let mut rhs = RBAElement::zero();
        for sigma in (1..=k).permutations(k as usize) {
            rhs.add_term(TensorWord::under_unit(&sigma), rat(1));
        }
        assert_eq!(lhs, rhs, "k={k}");
    }
}

fn distinct_part_compositions(max_norm: u32) -> Vec<Vec<u32>> {
    (1..=max_norm)
        .powerset()
        .filter(|s| s.iter().sum::<u32>() <= max_norm)
        .flat_map(|s| {
            let n = s.len();
            s.into_iter().permutations(n).collect::<Vec<_>>()
        })
        .collect()
}

#[test]
fn distinct_parts_identity() {
    for m in 1..=6u32 {
        let ctx = AlgebraContext::new(rat(0), m as usize);
        let product = (1..=m).fold(RBAElement::unit(), |acc, n| {
            let factor = &RBAElement::unit() + &RBAElement::from_word(TensorWord::under_unit(&[n]));
            element_mul(&acc, &factor, &ctx)
        });
        let low = RBAElement::from_terms(
            product
                .terms()
                .filter(|(w, _)| w.tail().iter().sum::<u32>() <= m)
                .map(|(w, c)| (w.clone(), c.clone())),
        );
        let expected = RBAElement::from_terms(
            distinct_part_compositions(m)
                .into_iter()
                .map(|j| (TensorWord::under_unit(&j), rat(1))),
        );
        assert_eq!(low, expected, "M={m}");
    }
}

#[test]
fn powers_of_x_tensor_at_weight_zero() {
    let ctx = AlgebraContext::new(rat(0), 8);
    for k in 1..=4 {
        for n in 1..=8 / k {
            let lhs = element_pow(&RBAElement::from_word(TensorWord::x_tensor(k)), n, &ctx);
            let c: BigInt = factorial(k * n) / factorial(k).pow(n as u32);
            assert_eq!(
                lhs,
                RBAElement::term(TensorWord::x_tensor(k * n), from_int(&c))
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_is_commutative_and_associative(
        a in element_strategy(2),
        b in element_strategy(2),
        c in element_strategy(2),
        lambda in lambda_strategy(),
    ) {
        let ctx = AlgebraContext::new(lambda, 6);
        let ab = element_mul(&a, &b, &ctx);
        prop_assert_eq!(&ab, &element_mul(&b, &a, &ctx));
        prop_assert_eq!(
            element_mul(&ab, &c, &ctx),
            element_mul(&a, &element_mul(&b, &c, &ctx), &ctx)
        );
    }

    #[test]
    fn unit_is_neutral(a in element_strategy(3), lambda in lambda_strategy()) {
        let ctx = AlgebraContext::new(lambda, 4);
        prop_assert_eq!(element_mul(&RBAElement::unit(), &a, &ctx), a);
    }

    #[test]
    fn rota_baxter_axiom(
        x in element_strategy(2),
        y in element_strategy(2),
        lambda in lambda_strategy(),
    ) {
        let ctx = AlgebraContext::new(lambda, 6);
        prop_assert_eq!(rb_axiom_pair(&x, &y, &ctx), None);
    }

    #[test]
    fn backends_agree_on_elements(
        a in element_strategy(2),
        b in element_strategy(2),
        lambda in lambda_strategy(),
    ) {
        let ctx = AlgebraContext::new(lambda, 4);
        let stuffle = ctx.clone().with_backend(ProductBackend::Stuffle);
        prop_assert_eq!(element_mul(&a, &b, &ctx), element_mul(&a, &b, &stuffle));
    }

    #[test]
    fn derive_undoes_operator_on_scalars(
        coeffs in prop::collection::vec(rational_strategy(), 1..8),
        lambda in lambda_strategy(),
    ) {
        let ctx = AlgebraContext::new(lambda, 8);
        let e = RBAElement::from_scalar_coeffs(&coeffs);
        prop_assert_eq!(derive(&rb_apply(&e, &ctx)).unwrap(), e);
    }

    #[test]
    fn product_distributes_over_addition(
        a in element_strategy(2),
        b in element_strategy(2),
        c in element_strategy(2),
        lambda in lambda_strategy(),
    ) {
        let ctx = AlgebraContext::new(lambda, 4);
        prop_assert_eq!(
            element_mul(&a, &(&b + &c), &ctx),
            &element_mul(&a, &b, &ctx) + &element_mul(&a, &c, &ctx)
        );
    }
}
