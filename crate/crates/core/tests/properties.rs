//! Algebraic invariants of `C_K(n)`, `L_K(n)` and `M_d(L_K(n))` on random inputs.

mod common;

use common::ctx;
use leavitt_core::cohn::random_nonzero_scalar;
use leavitt_core::leavitt::{normal_form_randomized, normal_form_with_certificate, expand_certificate};
use leavitt_core::{
    ideal_generator, normal_form, random_element, AlgebraContext, CohnElement, LeavittElement, Monomial, Word,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn any_ctx() -> impl Strategy<Value = AlgebraContext> {
    (prop::sample::select(vec![0u64, 2, 3, 5]), 2usize..=4).prop_map(|(p, n)| ctx(p, n))
}

/// Contexts in which `τ` is defined.
fn trace_ctx() -> impl Strategy<Value = AlgebraContext> {
    prop::sample::select(vec![(2u64, 3usize), (3, 4), (2, 5), (5, 6)]).prop_map(|(p, n)| ctx(p, n))
}

fn word(n: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..=max).prop_map(move |l| Word::new(n, l).unwrap())
}

fn basis(c: AlgebraContext, xs: &Word, ys: &Word) -> CohnElement {
    CohnElement::monomial(c, Monomial::new(xs.clone(), ys.clone()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cohn_product_is_associative(c in any_ctx(), s in any::<u64>()) {
        let a = random_element(c, 3, 3, s);
        let b = random_element(c, 3, 3, s ^ 1);
        let e = random_element(c, 3, 3, s ^ 2);
        prop_assert_eq!(&(&a * &b) * &e, &a * &(&b * &e));
    }

    #[test]
    fn bracket_is_a_lie_bracket(c in any_ctx(), s in any::<u64>()) {
        let a = random_element(c, 2, 3, s);
        let b = random_element(c, 2, 3, s ^ 1);
        let e = random_element(c, 2, 3, s ^ 2);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let k = random_nonzero_scalar(&mut rng, c.spec());
        prop_assert!(a.bracket(&a).unwrap().is_zero());
        prop_assert_eq!(a.bracket(&b).unwrap(), -b.bracket(&a).unwrap());
        prop_assert_eq!(
            a.scale(&k).unwrap().checked_add(&b).unwrap().bracket(&e).unwrap(),
            a.bracket(&e).unwrap().scale(&k).unwrap().checked_add(&b.bracket(&e).unwrap()).unwrap()
        );
        let jacobi = &(&a.bracket(&b.bracket(&e).unwrap()).unwrap()
            + &b.bracket(&e.bracket(&a).unwrap()).unwrap())
            + &e.bracket(&a.bracket(&b).unwrap()).unwrap();
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn trace_cancellation(
        (c, a, b, e, i) in any_ctx().prop_flat_map(|c| {
            let n = c.n();
            (Just(c), word(n, 3), word(n, 3), word(n, 3), 1..=n)
        })
    ) {
        let n = c.n();
        let base = basis(c, &b, &e).trace();
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(basis(c, &ab, &e.concat(&a.rev()).unwrap()).trace(), base.clone());
        let ra_b = a.rev().concat(&b).unwrap();
        prop_assert_eq!(basis(c, &ra_b, &e.concat(&a).unwrap()).trace(), base);
        let letter = Word::letter(n, i).unwrap();
        prop_assert_eq!(
            basis(c, &a.concat(&letter).unwrap(), &letter.concat(&b).unwrap()).trace(),
            basis(c, &a, &b).trace()
        );
    }

    #[test]
    fn trace_is_symmetric(c in any_ctx(), s in any::<u64>()) {
        let a = random_element(c, 4, 4, s);
        let b = random_element(c, 4, 4, s ^ 7);
        prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
    }

    #[test]
    fn grading_is_additive(c in any_ctx(), s in any::<u64>()) {
        let a = random_element(c, 3, 3, s);
        let b = random_element(c, 3, 3, s ^ 3);
        let da: Vec<i64> = a.degree_split().into_keys().collect();
        let db: Vec<i64> = b.degree_split().into_keys().collect();
        let parts = (&a * &b).degree_split();
        for deg in parts.keys() {
            prop_assert!(da.iter().any(|x| db.contains(&(deg - x))));
        }
        let mut total = CohnElement::zero(c);
        for part in a.degree_split().into_values() {
            prop_assert!(part.is_homogeneous());
            total = &total + &part;
        }
        prop_assert_eq!(total, a);
    }

    #[test]
    fn trace_vanishes_on_ideal(c in trace_ctx(), s in any::<u64>()) {
        let m0 = ideal_generator(c);
        let a = random_element(c, 3, 3, s);
        let b = random_element(c, 3, 3, s ^ 5);
        prop_assert!((&(&a * &m0) * &b).trace().is_zero());
    }

    #[test]
    fn projection_is_a_homomorphism(c in any_ctx(), s in any::<u64>()) {
        let a = random_element(c, 3, 3, s);
        let b = random_element(c, 3, 3, s ^ 11);
        prop_assert_eq!(normal_form(&(&a * &b)), &normal_form(&a) * &normal_form(&b));
        prop_assert_eq!(normal_form(&(&a + &b)), &normal_form(&a) + &normal_form(&b));
    }

    #[test]
    fn normal_form_is_canonical(c in any_ctx(), s in any::<u64>()) {
        let e = random_element(c, 4, 6, s);
        let nf = normal_form(&e);
        prop_assert!(nf.is_normal());
        prop_assert_eq!(normal_form(nf.rep()), nf.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        prop_assert_eq!(normal_form_randomized(&e, &mut rng), nf.clone());
        let (cert_nf, steps) = normal_form_with_certificate(&e);
        prop_assert_eq!(&cert_nf, &nf);
        prop_assert_eq!(expand_certificate(c, &steps).unwrap(), nf.rep() - &e);
    }

    #[test]
    fn tau_is_symmetric(c in trace_ctx(), s in any::<u64>()) {
        let a = normal_form(&random_element(c, 3, 3, s));
        let b = normal_form(&random_element(c, 3, 3, s ^ 13));
        prop_assert_eq!((&a * &b).tau().unwrap(), (&b * &a).tau().unwrap());
    }

    #[test]
    fn ideal_elements_project_to_zero(c in any_ctx(), s in any::<u64>()) {
        let m0 = ideal_generator(c);
        let a = random_element(c, 3, 3, s);
        let b = random_element(c, 3, 3, s ^ 17);
        prop_assert!(normal_form(&(&(&a * &m0) * &b)).is_zero());
    }
}

#[test]
fn random_matrices_have_bracket_trace_zero() {
    use leavitt_core::Matrix;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let c = ctx(2, 3);
    for d in 1..=3 {
        for _ in 0..20 {
            let mut random = || {
                let rows = (0..d)
                    .map(|_| {
                        (0..d)
                            .map(|_| normal_form(&random_element(c, 2, 2, rng.gen())))
                            .collect::<Vec<LeavittElement>>()
                    })
                    .collect();
                Matrix::from_rows(rows).unwrap()
            };
            let (a, b) = (random(), random());
            assert!(a.bracket(&b).unwrap().tau_d().unwrap().is_zero());
        }
    }
}
