mod common;

use std::collections::BTreeSet;

use gm_hilb::chains::{
    collision_parameters, connect, degeneration_segment, distraction_segment, limit_of_family, motion_segments,
    verify_chain, ChainCertificate, IdealFamily,
};
use gm_hilb::distraction::{DistractionParams, MonomialIdeal};
use gm_hilb::monomial::WeightVector;
use gm_hilb::poly::Rational;
use gm_hilb::torus::{limit_subscheme, Subscheme0D, DEFAULT_MAX_C};
use rand::Rng;

#[test]
fn connect_is_symmetric_and_certificates_round_trip() {
    let mut rng = common::rng(40);
    for case in 0..12 {
        let n = rng.gen_range(2..=3);
        let a = common::random_subscheme(&mut rng, n, 4);
        let b = common::random_subscheme_of_degree(&mut rng, n, a.degree());
        let ab = connect(&a, &b, DEFAULT_MAX_C).unwrap();
        let ba = connect(&b, &a, DEFAULT_MAX_C).unwrap();
        assert_eq!(ab.segments.len(), ba.segments.len(), "case {case}");
        assert!(verify_chain(&ab, 10).unwrap().passed(), "case {case}");
        assert!(verify_chain(&ba, 10).unwrap().passed(), "case {case}");
        assert!(verify_chain(&ab.reversed().unwrap(), 3).unwrap().passed(), "case {case}");
        let back = ChainCertificate::from_json(&ab.to_json()).unwrap();
        assert_eq!(back, ab);
    }
}

#[test]
fn connect_on_the_line_verifies() {
    let mut rng = common::rng(41);
    for _ in 0..20 {
        let a = common::random_subscheme(&mut rng, 1, 5);
        let b = common::random_subscheme_of_degree(&mut rng, 1, a.degree());
        let c = connect(&a, &b, DEFAULT_MAX_C).unwrap();
        assert!(c.segments.len() <= 1);
        assert!(verify_chain(&c, 10).unwrap().passed());
    }
}

fn random_config(rng: &mut impl Rng, d: usize, n: usize, range: i64) -> Vec<Vec<Rational>> {
    let mut set = BTreeSet::new();
    while set.len() < d {
        set.insert((0..n).map(|_| Rational::from_integer(rng.gen_range(-range..=range).into())).collect::<Vec<_>>());
    }
    set.into_iter().collect()
}

#[test]
fn motions_never_collide() {
    let mut rng = common::rng(42);
    for _ in 0..200 {
        let n = rng.gen_range(2..=3);
        let d = rng.gen_range(1..=6);
        // Small ranges force many collinear triples.
        let p = random_config(&mut rng, d, n, 2);
        let q = random_config(&mut rng, d, n, 2);
        let moves = motion_segments(&p, &q).unwrap();
        let mut current: BTreeSet<Vec<Rational>> = p.iter().cloned().collect();
        for m in &moves {
            assert!(collision_parameters(m).is_empty());
            assert_eq!(m.start.iter().cloned().collect::<BTreeSet<_>>(), current);
            current = m.end.iter().cloned().collect();
        }
        assert_eq!(current, q.iter().cloned().collect());
    }
}

fn commutes_off_exceptional(seg: &IdealFamily, w: &WeightVector, rng: &mut impl Rng) {
    let lim = limit_of_family(seg, w).unwrap();
    let mut tried = 0;
    while tried < 10 {
        let s = common::nonzero_rational(rng, 30, 7);
        if lim.is_exceptional(&s) {
            continue;
        }
        let Ok(fiber) = Subscheme0D::new(seg.fiber(&s)) else { continue };
        if fiber.degree() != seg.degree {
            continue;
        }
        tried += 1;
        let expected = limit_subscheme(&fiber, w).unwrap();
        let got = Subscheme0D::new(lim.family.fiber(&s)).unwrap();
        assert!(got.same_as(&expected), "s = {s}: {got} vs {expected}");
    }
}

#[test]
fn family_limits_commute_with_specialization() {
    let mut rng = common::rng(43);
    for _ in 0..15 {
        let n = rng.gen_range(1..=3);
        let size = rng.gen_range(1..=4);
        let set = common::random_staircase(&mut rng, n, size);
        let i = MonomialIdeal::new(n, common::minimal_generators(&set, n)).unwrap();
        let mut params = BTreeSet::new();
        while params.len() < i.max_exponent() as usize {
            params.insert(common::small_rational(&mut rng, 5, 3));
        }
        let seg = distraction_segment(&i, &DistractionParams(params.into_iter().collect())).unwrap();
        let w = WeightVector::new((0..n).map(|_| rng.gen_range(1..=4)).collect());
        commutes_off_exceptional(&seg, &w, &mut rng);
    }
    for _ in 0..10 {
        let n = rng.gen_range(2..=3);
        let s = common::random_subscheme(&mut rng, n, 3);
        let orbit = WeightVector::new((0..n).map(|_| rng.gen_range(1..=3)).collect());
        let seg = degeneration_segment(&s, &orbit).unwrap();
        let w = WeightVector::new((0..n).map(|_| rng.gen_range(1..=4)).collect());
        commutes_off_exceptional(&seg, &w, &mut rng);
    }
}
