//! `lim_{t -> 0} t(f(s))` for an ideal family `f`, computed once over the
//! function field `Q(s)` by fraction-free Buchberger with content removal.
//!
//! Every polynomial in `s` that the computation divides by (or multiplies by
//! and later relies on being a unit) is recorded; their roots form the
//! exceptional set outside which specialization commutes with the limit.

use std::cmp::Ordering;

use num_traits::Zero;

use super::IdealFamily;
use crate::error::{Error, Result};
use crate::groebner::{staircase_of, Colength, Ideal};
use crate::monomial::{Monomial, MonomialOrder, WeightVector};
use crate::poly::{Polynomial, Rational};
use crate::torus::{limit_subscheme, Subscheme0D};
use crate::unipoly::UniPoly;

/// Terms over `Q[s]`, sorted by decreasing monomial.
type FfPoly = Vec<(Monomial, UniPoly)>;

struct Context<'a> {
    order: &'a MonomialOrder,
    pivots: Vec<UniPoly>,
}

impl Context<'_> {
    fn record(&mut self, p: &UniPoly) {
        if !p.is_constant() {
            let m = p.monic();
            if !self.pivots.contains(&m) {
                self.pivots.push(m);
            }
        }
    }

    fn sort(&self, p: &mut FfPoly) {
        p.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
    }

    /// `a p - b q`.
    fn combine(&self, p: &FfPoly, a: &UniPoly, q: &FfPoly, b: &UniPoly) -> FfPoly {
        let mut out = Vec::with_capacity(p.len() + q.len());
        let (mut i, mut j) = (0, 0);
        while i < p.len() || j < q.len() {
            let ord = match (p.get(i), q.get(j)) {
                (Some(x), Some(y)) => self.order.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push((p[i].0.clone(), a.mul(&p[i].1)));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((q[j].0.clone(), b.mul(&q[j].1).scale(&-Rational::from_integer(1.into()))));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.mul(&p[i].1).sub(&b.mul(&q[j].1));
                    if !c.is_zero() {
                        out.push((p[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Divides out the `s`-content and makes the leading coefficient's top
    /// rational coefficient 1.
    fn primitive(&mut self, mut p: FfPoly) -> FfPoly {
        if p.is_empty() {
            return p;
        }
        let content = p.iter().fold(UniPoly::zero(), |g, (_, c)| g.gcd(c));
        self.record(&content);
        if !content.is_constant() {
            for (_, c) in p.iter_mut() {
                *c = c.exact_div(&content);
            }
        }
        let lead = p[0].1.leading().cloned().expect("nonzero coefficient");
        let inv = lead.recip();
        for (_, c) in p.iter_mut() {
            *c = c.scale(&inv);
        }
        p
    }

    /// Reduces the terms of `f` from position `keep` on by `basis`; earlier
    /// terms are kept (and rescaled along with everything else).
    fn reduce(&mut self, f: FfPoly, basis: &[FfPoly], keep: usize) -> FfPoly {
        let mut done: FfPoly = f[..keep.min(f.len())].to_vec();
        let mut rest: FfPoly = f[keep.min(f.len())..].to_vec();
        while let Some((m, c)) = rest.first().cloned() {
            let Some(g) = basis.iter().find(|g| g[0].0.divides(&m)) else {
                done.push(rest.remove(0));
                continue;
            };
            let lc = &g[0].1;
            self.record(lc);
            let common = lc.gcd(&c);
            let a = lc.exact_div(&common);
            let b = c.exact_div(&common);
            let q = g[0].0.quotient_of(&m).expect("divisible");
            let shifted: FfPoly = g.iter().map(|(gm, gc)| (gm.mul(&q), gc.clone())).collect();
            rest = self.combine(&rest, &a, &shifted, &b);
            if !a.is_constant() || a.coeffs()[0] != Rational::from_integer(1.into()) {
                for (_, dc) in done.iter_mut() {
                    *dc = dc.mul(&a);
                }
            }
        }
        self.primitive(done)
    }

    fn s_poly(&self, f: &FfPoly, g: &FfPoly) -> FfPoly {
        let l = f[0].0.lcm(&g[0].0);
        let qf = f[0].0.quotient_of(&l).unwrap();
        let qg = g[0].0.quotient_of(&l).unwrap();
        let sf: FfPoly = f.iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        let sg: FfPoly = g.iter().map(|(m, c)| (m.mul(&qg), c.clone())).collect();
        let common = f[0].1.gcd(&g[0].1);
        self.combine(&sf, &g[0].1.exact_div(&common), &sg, &f[0].1.exact_div(&common))
    }

    fn groebner(&mut self, gens: Vec<FfPoly>) -> Vec<FfPoly> {
        let mut basis: Vec<FfPoly> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for g in gens {
            let r = self.reduce(g, &basis, 0);
            if !r.is_empty() {
                basis.push(r);
                let k = basis.len() - 1;
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
        while !pairs.is_empty() {
            let pos = (0..pairs.len())
                .min_by_key(|&p| {
                    let (i, j) = pairs[p];
                    (basis[i][0].0.lcm(&basis[j][0].0).degree(), i, j)
                })
                .unwrap();
            let (i, j) = pairs.swap_remove(pos);
            if basis[i][0].0.is_coprime(&basis[j][0].0) {
                continue;
            }
            let s = self.s_poly(&basis[i], &basis[j]);
            let r = self.reduce(s, &basis, 0);
            if !r.is_empty() {
                basis.push(r);
                let k = basis.len() - 1;
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
        // Minimalize, then reduce tails.
        let mut minimal: Vec<FfPoly> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let redundant =
                basis.iter().enumerate().any(|(j, h)| j != i && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || j < i));
            if !redundant {
                minimal.push(g.clone());
            }
        }
        minimal.sort_by(|a, b| self.order.cmp(&b[0].0, &a[0].0));
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<FfPoly> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let r = self.reduce(minimal[i].clone(), &others, 1);
            self.record(&r[0].1);
            reduced.push(r);
        }
        reduced
    }
}

fn to_ff(g: &Polynomial, nvars: usize) -> FfPoly {
    let mut out: Vec<(Monomial, UniPoly)> = Vec::new();
    for (m, c) in g.terms() {
        let (x, e) = m.truncate_last();
        debug_assert_eq!(x.nvars(), nvars);
        let t = UniPoly::term(c.clone(), e as usize);
        match out.iter_mut().find(|(mm, _)| *mm == x) {
            Some((_, acc)) => *acc = acc.add(&t),
            None => out.push((x, t)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn from_ff(p: &FfPoly, nvars: usize) -> Polynomial {
    let mut out = Polynomial::zero(nvars + 1);
    for (m, c) in p {
        for (k, a) in c.coeffs().iter().enumerate() {
            out.add_term(m.extend(k as u32), a.clone());
        }
    }
    out
}

/// The limit family and the data describing where it is valid.
#[derive(Clone, Debug)]
pub struct FamilyLimit {
    pub family: IdealFamily,
    /// Monic polynomials in `s` whose roots form the exceptional set.
    pub exceptional_polynomials: Vec<UniPoly>,
    /// Rational points of the exceptional set.
    pub exceptional: Vec<Rational>,
    /// False when some exceptional polynomial was too large to search for
    /// rational roots; then `exceptional` may be incomplete.
    pub exceptional_complete: bool,
}

impl FamilyLimit {
    pub fn is_exceptional(&self, s: &Rational) -> bool {
        self.exceptional_polynomials.iter().any(|p| p.eval(s).is_zero())
    }

    /// Whether the limit family's fiber at `s` equals the limit of the
    /// original fiber.
    pub fn commutes_at(&self, original: &IdealFamily, w: &WeightVector, s: &Rational) -> Result<bool> {
        let fiber = Subscheme0D::new(original.fiber(s))?;
        let lim = limit_subscheme(&fiber, w)?;
        Ok(Subscheme0D::new(self.family.fiber(s)).is_ok_and(|f| f.same_as(&lim)))
    }
}

/// A rational exceptional parameter where the limit of the actual fiber
/// differs from the fiber of the limit family.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub s: Rational,
    pub family_fiber: Ideal,
    /// `None` when the original fiber is not zero-dimensional of the right degree.
    pub fiber_limit: Option<Subscheme0D>,
}

impl FamilyLimit {
    /// Compares both sides at every rational exceptional value.
    pub fn discrepancies(&self, original: &IdealFamily, w: &WeightVector) -> Result<Vec<Discrepancy>> {
        let mut out = Vec::new();
        for s in &self.exceptional {
            let fiber_limit = Subscheme0D::new(original.fiber(s))
                .ok()
                .filter(|f| f.degree() == original.degree)
                .map(|f| limit_subscheme(&f, w))
                .transpose()?;
            let family_fiber = self.family.fiber(s);
            let agrees = match (&fiber_limit, Subscheme0D::new(family_fiber.clone())) {
                (Some(l), Ok(f)) => l.same_as(&f),
                _ => false,
            };
            if !agrees {
                out.push(Discrepancy { s: s.clone(), family_fiber, fiber_limit });
            }
        }
        Ok(out)
    }
}

/// `g(s) = lim_{t -> 0} t(f(s))` over the generic point of the `s`-line.
pub fn limit_of_family(seg: &IdealFamily, w: &WeightVector) -> Result<FamilyLimit> {
    let n = seg.nvars;
    if w.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: w.len() });
    }
    if !w.is_positive() {
        return Err(Error::NonPositiveWeight(w.weights().to_vec()));
    }
    let order = MonomialOrder::Weighted(w.clone());
    let mut ctx = Context { order: &order, pivots: Vec::new() };
    let gens: Vec<FfPoly> = seg
        .generators
        .iter()
        .map(|g| {
            let mut p = to_ff(g, n);
            ctx.sort(&mut p);
            p
        })
        .collect();
    let basis = ctx.groebner(gens);
    let leading: Vec<Monomial> = basis.iter().map(|g| g[0].0.clone()).collect();
    match staircase_of(n, &leading).colength {
        Colength::Infinite { witness } => return Err(Error::NotZeroDimensional { witness }),
        Colength::Finite(k) if k != seg.degree => return Err(Error::DegreeMismatch { before: seg.degree, after: k }),
        Colength::Finite(_) => {}
    }
    let mut tops = Vec::with_capacity(basis.len());
    for g in &basis {
        let top = g.iter().map(|(m, _)| w.value_unchecked(m)).max().unwrap_or(0);
        let form: FfPoly = g.iter().filter(|(m, _)| w.value_unchecked(m) == top).cloned().collect();
        let form = ctx.primitive(form);
        tops.push(from_ff(&form, n));
    }
    let pivots = ctx.pivots;
    let mut exceptional = Vec::new();
    let mut complete = true;
    for p in &pivots {
        match p.rational_roots() {
            Some(roots) => exceptional.extend(roots),
            None => complete = false,
        }
    }
    exceptional.sort();
    exceptional.dedup();
    Ok(FamilyLimit {
        family: IdealFamily::new(n, seg.degree, "limit", tops)?,
        exceptional_polynomials: pivots,
        exceptional,
        exceptional_complete: complete,
    })
}
