//! Buchberger's algorithm, normal forms, staircases and weight initial ideals.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder, WeightVector};
use crate::poly::{Polynomial, Rational};

/// A finitely generated ideal of `Q[x1..xn]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, found: g.nvars() });
            }
        }
        Ok(Ideal { nvars, generators })
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Ideal::new(nvars, crate::parse::parse_polynomial_list(text, nvars)?)
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal { nvars, generators: vec![Polynomial::one(nvars)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::parse::format_polynomial_list(&self.generators))
    }
}

/// A reduced Gröbner basis: monic elements sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Every element is a single term.
    pub fn is_monomial(&self) -> bool {
        self.elements.iter().all(Polynomial::is_monomial)
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal { nvars: self.nvars, generators: self.elements.clone() }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

impl std::fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::parse::format_polynomial_list(&self.elements))
    }
}

/// Terms sorted by decreasing monomial under a fixed order.
type Terms = Vec<(Monomial, Rational)>;

fn sorted_terms(p: &Polynomial, ord: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

fn to_poly(nvars: usize, t: &Terms) -> Polynomial {
    Polynomial::from_terms(nvars, t.iter().cloned())
}

/// `p - c * m * g`, all sorted decreasingly under `ord`.
fn sub_multiple(
    p: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    g: &[(Monomial, Rational)],
    ord: &MonomialOrder,
) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    while i < p.len() || gi.peek().is_some() {
        let take = match (p.get(i), gi.peek()) {
            (Some(a), Some(b)) => ord.cmp(&a.0, &b.0),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match take {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (bm, bc) = gi.next().unwrap();
                out.push((bm, -bc));
            }
            Ordering::Equal => {
                let (bm, bc) = gi.next().unwrap();
                let v = &p[i].1 - bc;
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
            }
        }
    }
    out
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Full reduction of `f` by monic sorted divisors. `select` picks among the
/// indices of divisors whose leading monomial divides the current term.
fn reduce_terms(f: Terms, basis: &[Terms], ord: &MonomialOrder, select: &mut dyn FnMut(&[usize]) -> usize) -> Terms {
    let mut p = f;
    let mut rem: Terms = Vec::new();
    let mut candidates = Vec::new();
    while !p.is_empty() {
        let (lm, lc) = p[0].clone();
        candidates.clear();
        for (k, g) in basis.iter().enumerate() {
            if g[0].0.divides(&lm) {
                candidates.push(k);
            }
        }
        if candidates.is_empty() {
            rem.push(p.remove(0));
            continue;
        }
        let k = if candidates.len() == 1 { candidates[0] } else { select(&candidates) };
        let g = &basis[k];
        let q = g[0].0.quotient_of(&lm).unwrap();
        p = sub_multiple(&p, &lc, &q, g, ord);
    }
    rem
}

fn first_divisor(c: &[usize]) -> usize {
    c[0]
}

fn s_polynomial(f: &Terms, g: &Terms, ord: &MonomialOrder) -> Terms {
    let l = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.quotient_of(&l).unwrap();
    let mg = g[0].0.quotient_of(&l).unwrap();
    let shifted: Terms = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_multiple(&shifted, &Rational::one(), &mg, g, ord)
}

/// The reduced Gröbner basis of `ideal` under a global order.
pub fn groebner_basis(ideal: &Ideal, ord: &MonomialOrder) -> Result<GroebnerBasis> {
    ord.check_arity(ideal.nvars)?;
    if !ord.is_global() {
        return Err(Error::NonGlobalOrder);
    }
    let n = ideal.nvars;
    let mut basis: Vec<Terms> = Vec::new();
    for g in ideal.generators.iter().filter(|g| !g.is_zero()) {
        let mut t = sorted_terms(g, ord);
        make_monic(&mut t);
        basis.push(t);
    }
    if basis.iter().any(|t| t[0].0.is_one()) {
        return Ok(unit_basis(n, ord));
    }

    // Live pairs, keyed for the normal selection strategy (smallest lcm first).
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut live: Vec<bool> = vec![true; basis.len()];
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = basis[a.0][0].0.lcm(&basis[a.1][0].0);
        let lb = basis[b.0][0].0.lcm(&basis[b.1][0].0);
        la.degree().cmp(&lb.degree()).then_with(|| ord.cmp(&la, &lb)).then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        // Chain criterion: some k with LM_k | lcm whose pairs with i and j are already handled.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let mut r = reduce_terms(s, &basis, ord, &mut first_divisor);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if r[0].0.is_one() {
            return Ok(unit_basis(n, ord));
        }
        let new = basis.len();
        for k in 0..new {
            pending.insert((k, new));
        }
        basis.push(r);
        live.push(true);
    }

    // Minimalize, then inter-reduce.
    let lms: Vec<Monomial> = basis.iter().map(|t| t[0].0.clone()).collect();
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            if a != b && live[b] && lms[b].divides(&lms[a]) && (lms[a] != lms[b] || b < a) {
                live[a] = false;
                break;
            }
        }
    }
    let minimal: Vec<Terms> = basis.into_iter().zip(live).filter(|(_, l)| *l).map(|(t, _)| t).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, t) in minimal.iter().enumerate() {
        let head = t[0].clone();
        let others: Vec<Terms> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, t)| t.clone()).collect();
        let mut tail = reduce_terms(t[1..].to_vec(), &others, ord, &mut first_divisor);
        tail.insert(0, head);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| ord.cmp(&b[0].0, &a[0].0));
    Ok(GroebnerBasis {
        nvars: n,
        order: ord.clone(),
        leading: reduced.iter().map(|t| t[0].0.clone()).collect(),
        elements: reduced.iter().map(|t| to_poly(n, t)).collect(),
    })
}

fn unit_basis(n: usize, ord: &MonomialOrder) -> GroebnerBasis {
    GroebnerBasis { nvars: n, order: ord.clone(), elements: vec![Polynomial::one(n)], leading: vec![Monomial::one(n)] }
}

/// Remainder of `f` modulo the basis; zero exactly when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    normal_form_with_strategy(f, g, &mut first_divisor)
}

/// [`normal_form`] with a caller-chosen divisor whenever several leading
/// monomials divide the current term. The result does not depend on the choice.
pub fn normal_form_with_strategy(
    f: &Polynomial,
    g: &GroebnerBasis,
    select: &mut dyn FnMut(&[usize]) -> usize,
) -> Result<Polynomial> {
    if f.nvars() != g.nvars {
        return Err(Error::ArityMismatch { expected: g.nvars, found: f.nvars() });
    }
    let basis: Vec<Terms> = g.elements.iter().map(|p| sorted_terms(p, &g.order)).collect();
    let r = reduce_terms(sorted_terms(f, &g.order), &basis, &g.order, select);
    Ok(to_poly(g.nvars, &r))
}

/// S-polynomial of two polynomials under `ord` (both nonzero).
pub fn s_poly(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let mut a = sorted_terms(f, ord);
    let mut b = sorted_terms(g, ord);
    make_monic(&mut a);
    make_monic(&mut b);
    to_poly(f.nvars(), &s_polynomial(&a, &b, ord))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Colength {
    Finite(usize),
    /// No pure power of `x_{witness}` (1-based) is a leading monomial.
    Infinite {
        witness: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub standard_monomials: Vec<Monomial>,
    pub colength: Colength,
}

impl Staircase {
    pub fn finite(&self) -> Option<usize> {
        match self.colength {
            Colength::Finite(d) => Some(d),
            Colength::Infinite { .. } => None,
        }
    }
}

/// Standard monomials of a set of leading monomials, sorted by increasing grevlex.
pub fn staircase_of(nvars: usize, leading: &[Monomial]) -> Staircase {
    let mut bounds = vec![0u32; nvars];
    for (j, bound) in bounds.iter_mut().enumerate() {
        let b =
            leading.iter().filter(|m| m.is_one() || m.pure_power_index() == Some(j)).map(|m| m.exponents()[j]).min();
        match b {
            Some(e) => *bound = e,
            None => {
                return Staircase { standard_monomials: Vec::new(), colength: Colength::Infinite { witness: j + 1 } }
            }
        }
    }
    let mut out = Vec::new();
    if leading.iter().any(Monomial::is_one) {
        return Staircase { standard_monomials: out, colength: Colength::Finite(0) };
    }
    let mut e = vec![0u32; nvars];
    loop {
        let m = Monomial::new(e.clone());
        if !leading.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the bounding box
        let mut j = 0;
        loop {
            if j == nvars {
                out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(a, b));
                let d = out.len();
                return Staircase { standard_monomials: out, colength: Colength::Finite(d) };
            }
            e[j] += 1;
            if e[j] < bounds[j] {
                break;
            }
            e[j] = 0;
            j += 1;
        }
    }
}

pub fn staircase(g: &GroebnerBasis) -> Staircase {
    staircase_of(g.nvars, &g.leading)
}

/// Equality of ideals via their reduced bases under `ord`.
pub fn ideal_equals(i: &Ideal, j: &Ideal, ord: &MonomialOrder) -> Result<bool> {
    if i.nvars != j.nvars {
        return Err(Error::ArityMismatch { expected: i.nvars, found: j.nvars });
    }
    Ok(groebner_basis(i, ord)? == groebner_basis(j, ord)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// Keep the terms of maximal weight.
    Max,
    /// Keep the terms of minimal weight.
    Min,
}

/// The ideal generated by the extremal weight forms of all elements of `ideal`.
///
/// Positive effective weights are handled with a weight-refined Gröbner basis
/// directly. Otherwise the ideal is homogenized by a new variable of weight
/// zero, all weights are shifted to be positive (which does not change the
/// initial ideal of a homogeneous ideal), and the result is dehomogenized.
pub fn initial_ideal(ideal: &Ideal, w: &WeightVector, direction: Direction) -> Result<Ideal> {
    if w.len() != ideal.nvars {
        return Err(Error::ArityMismatch { expected: ideal.nvars, found: w.len() });
    }
    let v = match direction {
        Direction::Max => w.clone(),
        Direction::Min => w.negated(),
    };
    let n = ideal.nvars;
    if v.is_positive() {
        let gb = groebner_basis(ideal, &MonomialOrder::Weighted(v.clone()))?;
        let gens = gb.elements.iter().map(|g| g.top_form(&v)).collect();
        return Ideal::new(n, gens);
    }
    let graded = groebner_basis(ideal, &MonomialOrder::Grevlex)?;
    let homog: Vec<Polynomial> = graded.elements.iter().map(Polynomial::homogenize).collect();
    let lambda = 1 - v.weights().iter().copied().min().unwrap_or(0).min(0);
    let mut shifted: Vec<i64> = v.weights().iter().map(|x| x + lambda).collect();
    shifted.push(lambda);
    let shifted = WeightVector::new(shifted);
    let gb = groebner_basis(&Ideal::new(n + 1, homog)?, &MonomialOrder::Weighted(shifted.clone()))?;
    let gens = gb.elements.iter().map(|g| g.top_form(&shifted).specialize_last(&Rational::one())).collect();
    Ideal::new(n, gens)
}
