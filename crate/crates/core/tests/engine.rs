use num_rational::BigRational;
use ramyip::algebra::{pmono, Param, ParamRat, Poly, PolyX, Scalar};
use ramyip::parallel::Exec;
use ramyip::ramyip::{RYSystem, SystemKind, DEFAULT_WALK_BUDGET};
use ramyip::tables::{table2, RyType};
use ramyip::verify::mu_box;
use ramyip::weyl::{Group, GroupElement, Word};
use ramyip::Error;

fn poly(sys: &RYSystem, mu: &[i32]) -> PolyX<ParamRat> {
    sys.nonsymmetric_poly(mu, DEFAULT_WALK_BUDGET, &Exec::Sequential).unwrap().poly
}

/// Reduced word of `w` peeling the highest-index descent first.
fn other_reduced_word(g: &Group, w: &GroupElement) -> Word {
    let mut cur = w.clone();
    let mut rev = Vec::new();
    while let Some(i) = g.indices().rev().find(|&i| g.is_descent(&cur, i)) {
        cur = cur.mul(g.s(i)).unwrap();
        rev.push(i);
    }
    rev.reverse();
    let pi = g.reduced_word(&cur).pi;
    Word { pi, letters: rev }
}

#[test]
fn zero_weight_gives_one() {
    for kind in SystemKind::ALL {
        for n in [2, 3] {
            assert_eq!(poly(&RYSystem::new(kind, n), &vec![0; n]), PolyX::one(n), "{}", kind.name());
        }
    }
}

#[test]
fn first_fundamental_weight_has_two_walks() {
    let sys = RYSystem::new(SystemKind::CC, 2);
    let plan = sys.plan(&[1, 0], DEFAULT_WALK_BUDGET).unwrap();
    assert_eq!(plan.word.letters, vec![0]);
    let e = poly(&sys, &[1, 0]);
    // the straight walk lands on x1, the folded one on the constant term
    assert_eq!(e.terms().len(), 2);
    assert!(e.coeff(&[2, 0]).is_some());
    assert!(e.coeff(&[0, 0]).is_some());
}

/// Compares the sum over the walks of `w(μ)` with the sum over a second reduced word.
fn check_word_independence(kind: SystemKind, bound: i32) {
    let sys = RYSystem::new(kind, 2);
    let exec = Exec::from_env();
    let mut tried = 0;
    for mu in mu_box(2, bound) {
        let word = sys.walk_type(&mu).unwrap();
        let w = sys.group().eval_word(&word).unwrap();
        let alt = other_reduced_word(sys.group(), &w);
        assert_eq!(alt.len(), word.len());
        if alt == word {
            continue;
        }
        tried += 1;
        let plan = sys.plan_for_word(alt, DEFAULT_WALK_BUDGET).unwrap();
        let via_alt = sys
            .walk_sum(&plan, &exec, &|p: &ParamRat| Ok(p.clone()), &|e| Ok(ParamRat::mono(e.clone())))
            .unwrap();
        let e = sys.nonsymmetric_poly(&mu, DEFAULT_WALK_BUDGET, &exec).unwrap().poly;
        assert_eq!(via_alt, e, "{} mu={mu:?}", kind.name());
    }
    assert!(tried > 0, "{}", kind.name());
}

#[test]
fn sum_does_not_depend_on_the_reduced_word() {
    for kind in [SystemKind::CRY, SystemKind::BRY, SystemKind::DRY] {
        check_word_independence(kind, 2);
    }
    check_word_independence(SystemKind::CC, 1);
}

/// Generic Koornwinder parameters with |μ_i| = 2 take a few minutes.
#[test]
#[ignore]
fn koornwinder_sum_does_not_depend_on_the_reduced_word() {
    check_word_independence(SystemKind::CC, 2);
}

#[test]
fn t_dir_factor_is_word_independent() {
    for kind in SystemKind::ALL {
        let sys = RYSystem::new(kind, 3);
        let g = sys.group();
        for &i in g.finite_indices() {
            for &j in g.finite_indices() {
                let w = g.s(i).mul(g.s(j)).unwrap().mul(g.s(i)).unwrap();
                let alt = other_reduced_word(g, &w);
                let via_alt = g.eval_word(&alt).unwrap();
                assert_eq!(sys.t_dir_factor(&w).unwrap(), sys.t_dir_factor(&via_alt).unwrap());
            }
        }
        assert_eq!(sys.t_dir_factor(&g.identity()).unwrap(), pmono(&[]));
    }
}

#[test]
fn psi_middle_generators() {
    let sys = RYSystem::new(SystemKind::CC, 3);
    let z = pmono(&[(Param::Q, 2), (Param::T, 4)]);
    let one = BigRational::from_integer(1.into());
    let num = Poly::from_terms(vec![(pmono(&[(Param::T, -1)]), one.clone()), (pmono(&[(Param::T, 1)]), -one.clone())]);
    let den = Poly::from_terms(vec![(pmono(&[]), one.clone()), (z.clone(), -one)]);
    let expected = ParamRat::new(num, [den]).unwrap();
    for j in 1..3 {
        assert_eq!(sys.psi_factor(j, true, &z).unwrap(), expected);
    }
}

#[test]
fn psi_zero_vanishes_without_u_parameters() {
    let sys = RYSystem::new(SystemKind::CC, 2);
    let z = pmono(&[(Param::Q, 2), (Param::T, 2)]);
    let images = table2(RyType::C).images();
    for sign in [true, false] {
        let psi = sys.psi_factor(0, sign, &z).unwrap().substitute(&images).unwrap();
        assert!(Scalar::is_zero(&psi));
    }
}

#[test]
fn singular_psi_argument_is_an_error() {
    let sys = RYSystem::new(SystemKind::CC, 2);
    let err = sys.psi_factor(1, true, &pmono(&[])).unwrap_err();
    assert!(matches!(err, Error::SingularFactor { .. }));
}

#[test]
fn walk_budget_is_enforced() {
    let sys = RYSystem::new(SystemKind::CC, 2);
    let err = sys.nonsymmetric_poly(&[2, 2], 3, &Exec::Sequential).unwrap_err();
    assert!(matches!(err, Error::WalkBudget { .. }));
}

#[test]
fn eval_path_matches_exact_path() {
    let sys = RYSystem::new(SystemKind::CRY, 2);
    let pt = ramyip::algebra::EvalPoint::seeded(17, 0);
    for mu in mu_box(2, 1) {
        let exact = poly(&sys, &mu).evaluate(&pt).unwrap();
        let direct = sys.nonsymmetric_poly_eval(&mu, &pt, DEFAULT_WALK_BUDGET, &Exec::Sequential).unwrap();
        assert_eq!(exact, direct, "mu={mu:?}");
    }
}

#[test]
fn parallel_and_sequential_sums_agree() {
    let sys = RYSystem::new(SystemKind::CC, 3);
    for mu in [[1, 0, -1], [-1, -1, 1]] {
        let seq = poly(&sys, &mu);
        let par = sys.nonsymmetric_poly(&mu, DEFAULT_WALK_BUDGET, &Exec::with_workers(4)).unwrap().poly;
        assert_eq!(seq, par);
        assert_eq!(serde_json::to_string(&seq).unwrap(), serde_json::to_string(&par).unwrap());
    }
}
