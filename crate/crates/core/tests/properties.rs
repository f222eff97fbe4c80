use num_rational::BigRational;
use proptest::prelude::*;
use ramyip::algebra::{parse_polyx, rat, EvalPoint, Exps, ParamRat, Poly, PolyX, Scalar, NPARAMS};
use ramyip::parallel::Exec;
use ramyip::tables::{table2, RyType};

const VARS: usize = 3;

fn coeff() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly_in(nvars: usize, max_terms: usize) -> impl Strategy<Value = Poly<BigRational>> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, nvars), coeff()), 0..max_terms)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(e, c)| (Exps::from(e), c)).collect()))
}

fn poly() -> impl Strategy<Value = Poly<BigRational>> {
    poly_in(VARS, 5)
}

/// Laurent polynomials in the parameters only, as coefficient functions.
fn param_poly() -> impl Strategy<Value = ParamRat> {
    poly_in(NPARAMS, 4).prop_map(ParamRat::from_poly)
}

fn monomial() -> impl Strategy<Value = Exps> {
    prop::collection::vec(-3i32..=3, VARS)
        .prop_filter("non-constant", |e| e.iter().any(|&v| v != 0))
        .prop_map(Exps::from)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_is_a_group(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&Poly::zero()), a.clone());
    }

    #[test]
    fn multiplication_is_commutative_and_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        let one = Poly::constant(<BigRational as Scalar>::one(), VARS);
        prop_assert_eq!(a.mul(&one), a.clone());
    }

    #[test]
    fn division_by_one_minus_monomial_round_trips(g in poly(), c in coeff(), d in monomial()) {
        prop_assume!(!Scalar::is_zero(&c));
        let f = g.sub(&g.mul_term(&d, &c));
        prop_assert_eq!(f.div_one_minus(&c, &d).unwrap(), g);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in param_poly(), b in param_poly(), seed in any::<u64>()) {
        let pt = EvalPoint::seeded(seed, 0);
        let (va, vb) = (a.evaluate(&pt).unwrap(), b.evaluate(&pt).unwrap());
        prop_assert_eq!(Scalar::add(&a, &b).evaluate(&pt).unwrap(), &va + &vb);
        prop_assert_eq!(Scalar::mul(&a, &b).evaluate(&pt).unwrap(), &va * &vb);
    }

    #[test]
    fn substitution_commutes_with_ring_operations(a in param_poly(), b in param_poly(), k in 0usize..3) {
        let images = table2(RyType::ALL[k]).images();
        let s = |x: &ParamRat| x.substitute(&images).unwrap();
        prop_assert_eq!(s(&Scalar::mul(&a, &b)), Scalar::mul(&s(&a), &s(&b)));
        prop_assert_eq!(s(&Scalar::add(&a, &b)), Scalar::add(&s(&a), &s(&b)));
    }

    #[test]
    fn quotients_evaluate_consistently(a in param_poly(), b in param_poly(), seed in any::<u64>()) {
        prop_assume!(!Scalar::is_zero(&b));
        let pt = EvalPoint::seeded(seed, 1);
        let vb = b.evaluate(&pt).unwrap();
        prop_assume!(!num_traits::Zero::is_zero(&vb));
        let q = a.div(&b).unwrap();
        prop_assert_eq!(q.evaluate(&pt).unwrap(), a.evaluate(&pt).unwrap() / vb);
    }

    #[test]
    fn polynomial_json_round_trips(
        terms in prop::collection::vec((prop::collection::vec(-2i32..=2, 2), param_poly()), 0..4)
    ) {
        let p = PolyX::from_terms(2, terms.into_iter().map(|(e, c)| (Exps::from(e), c)).collect());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(parse_polyx(&json).unwrap(), p);
    }

    #[test]
    fn ordered_map_is_worker_independent(n in 0usize..200, workers in 1usize..6) {
        let f = |i: usize| (i * i) % 97;
        prop_assert_eq!(Exec::with_workers(workers).map_ordered(n, f), Exec::Sequential.map_ordered(n, f));
    }
}
