mod common;

use gm_hilb::groebner::{groebner_basis, initial_ideal, Direction};
use gm_hilb::monomial::{MonomialOrder, WeightVector};
use gm_hilb::torus::{is_supported_at_origin, limit_subscheme, monomial_degeneration, DEFAULT_MAX_C};
use rand::Rng;

fn positive_weights(rng: &mut impl Rng, n: usize) -> WeightVector {
    WeightVector::new((0..n).map(|_| rng.gen_range(1..=5)).collect())
}

#[test]
fn limits_conserve_degree_and_are_idempotent() {
    let mut rng = common::rng(20);
    for case in 0..200 {
        let n = rng.gen_range(1..=3);
        let s = common::random_subscheme(&mut rng, n, 6);
        let w = positive_weights(&mut rng, n);
        let lim = limit_subscheme(&s, &w).unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(lim.degree(), s.degree());
        let again = limit_subscheme(&lim, &w).unwrap();
        assert!(again.same_as(&lim), "case {case}");
        assert!(lim.is_fixed_by(&w));
    }
}

#[test]
fn limit_is_identity_exactly_on_homogeneous_ideals() {
    let mut rng = common::rng(21);
    let mut fixed = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let w = positive_weights(&mut rng, n);
        // Half the cases are limits already, hence homogeneous.
        let mut s = common::random_subscheme(&mut rng, n, 5);
        if rng.gen_bool(0.5) {
            s = limit_subscheme(&s, &w).unwrap();
        }
        let lim = limit_subscheme(&s, &w).unwrap();
        let homogeneous = groebner_basis(s.ideal(), &MonomialOrder::Weighted(w.clone()))
            .unwrap()
            .elements()
            .iter()
            .all(|g| g.is_weighted_homogeneous(&w));
        assert_eq!(lim.same_as(&s), homogeneous);
        assert_eq!(s.is_fixed_by(&w), homogeneous);
        fixed += homogeneous as usize;
    }
    assert!(fixed > 50);
}

#[test]
fn monomial_limits_are_fixed_and_at_the_origin() {
    let mut rng = common::rng(22);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let s = common::random_subscheme(&mut rng, n, 6);
        let m = monomial_degeneration(&s, DEFAULT_MAX_C).unwrap();
        assert!(m.limit.is_monomial());
        assert_eq!(m.limit.degree(), s.degree());
        assert!(is_supported_at_origin(&m.limit));
        for _ in 0..3 {
            assert!(m.limit.is_fixed_by(&positive_weights(&mut rng, n)));
        }
    }
}

#[test]
fn min_direction_is_max_of_negated_weights() {
    let mut rng = common::rng(23);
    for _ in 0..50 {
        let n = rng.gen_range(1..=3);
        let s = common::random_subscheme(&mut rng, n, 4);
        let w = WeightVector::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
        let a = initial_ideal(s.ideal(), &w, Direction::Min).unwrap();
        let b = initial_ideal(s.ideal(), &w.negated(), Direction::Max).unwrap();
        let g = MonomialOrder::Grevlex;
        assert_eq!(groebner_basis(&a, &g).unwrap(), groebner_basis(&b, &g).unwrap());
    }
}
