#![allow(dead_code)]

use std::collections::BTreeSet;

use gm_hilb::groebner::Ideal;
use gm_hilb::monomial::{Monomial, MonomialOrder};
use gm_hilb::newton::{ActionWeights, SeriesPoint, TruncatedSeries};
use gm_hilb::poly::{Polynomial, Rational};
use gm_hilb::torus::Subscheme0D;
use gm_hilb::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num).into(), rng.gen_range(1..=den).into())
}

pub fn nonzero_rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    loop {
        let r = small_rational(rng, num, den);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn random_monomial(rng: &mut impl Rng, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

pub fn random_polynomial(rng: &mut impl Rng, nvars: usize, terms: usize, max_exp: u32) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..terms {
        p.add_term(random_monomial(rng, nvars, max_exp), small_rational(rng, 9, 4));
    }
    p
}

/// Monomials outside `set` all of whose immediate divisors are inside.
pub fn corners(set: &BTreeSet<Vec<u32>>, nvars: usize) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for m in set {
        for j in 0..nvars {
            let mut c = m.clone();
            c[j] += 1;
            if set.contains(&c) {
                continue;
            }
            let ok = (0..nvars).all(|k| {
                if c[k] == 0 {
                    return true;
                }
                let mut p = c.clone();
                p[k] -= 1;
                set.contains(&p)
            });
            if ok {
                out.insert(c);
            }
        }
    }
    out.into_iter().collect()
}

/// Every staircase (order ideal) with `1..=max_size` elements in `nvars` variables.
pub fn all_staircases(nvars: usize, max_size: usize) -> Vec<BTreeSet<Vec<u32>>> {
    let mut level: BTreeSet<BTreeSet<Vec<u32>>> = BTreeSet::new();
    level.insert(std::iter::once(vec![0; nvars]).collect());
    let mut out: Vec<BTreeSet<Vec<u32>>> = level.iter().cloned().collect();
    for _ in 1..max_size {
        let mut next = BTreeSet::new();
        for s in &level {
            for c in corners(s, nvars) {
                let mut t = s.clone();
                t.insert(c);
                next.insert(t);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

pub fn minimal_generators(set: &BTreeSet<Vec<u32>>, nvars: usize) -> Vec<Monomial> {
    corners(set, nvars).into_iter().map(Monomial::new).collect()
}

pub fn random_staircase(rng: &mut impl Rng, nvars: usize, size: usize) -> BTreeSet<Vec<u32>> {
    let mut s: BTreeSet<Vec<u32>> = std::iter::once(vec![0; nvars]).collect();
    while s.len() < size {
        let c = corners(&s, nvars);
        s.insert(c.choose(rng).unwrap().clone());
    }
    s
}

/// A zero-dimensional ideal: each minimal generator of a random staircase
/// plus random multiples of smaller standard monomials.
pub fn random_ideal(rng: &mut impl Rng, nvars: usize, size: usize) -> Ideal {
    let s = random_staircase(rng, nvars, size);
    let standard: Vec<Monomial> = s.iter().cloned().map(Monomial::new).collect();
    let gens = minimal_generators(&s, nvars)
        .into_iter()
        .map(|g| {
            let mut p = Polynomial::monomial(g.clone(), Rational::from_integer(1.into()));
            for m in &standard {
                if MonomialOrder::Grevlex.cmp(m, &g).is_lt() && rng.gen_bool(0.35) {
                    p.add_term(m.clone(), small_rational(rng, 3, 2));
                }
            }
            p
        })
        .collect();
    Ideal::new(nvars, gens).unwrap()
}

/// A random proper zero-dimensional subscheme with degree at most `max_size`.
pub fn random_subscheme(rng: &mut impl Rng, nvars: usize, max_size: usize) -> Subscheme0D {
    loop {
        let size = rng.gen_range(1..=max_size);
        match Subscheme0D::new(random_ideal(rng, nvars, size)) {
            Ok(s) => return s,
            Err(Error::UnitIdeal) => continue,
            Err(e) => panic!("unexpected {e}"),
        }
    }
}

pub fn random_subscheme_of_degree(rng: &mut impl Rng, nvars: usize, degree: usize) -> Subscheme0D {
    loop {
        if let Ok(s) = Subscheme0D::new(random_ideal(rng, nvars, degree)) {
            if s.degree() == degree {
                return s;
            }
        }
    }
}

pub fn random_series_point(rng: &mut impl Rng, coords: usize, truncation: i64) -> (SeriesPoint, ActionWeights) {
    loop {
        let mut cs = Vec::with_capacity(coords);
        for _ in 0..coords {
            if rng.gen_bool(0.15) {
                cs.push(TruncatedSeries::zero(truncation));
                continue;
            }
            let v = rng.gen_range(0..=10);
            let mut terms = vec![(v, nonzero_rational(rng, 5, 3))];
            for k in v + 1..truncation {
                if rng.gen_bool(0.2) {
                    terms.push((k, small_rational(rng, 5, 3)));
                }
            }
            cs.push(TruncatedSeries::new(terms, truncation).unwrap());
        }
        if let Ok(z) = SeriesPoint::new(cs) {
            let a = ActionWeights((0..coords).map(|_| rng.gen_range(-5..=5)).collect());
            return (z, a);
        }
    }
}
