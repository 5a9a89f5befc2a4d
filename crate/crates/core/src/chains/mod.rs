//! Chains of affine lines in the Hilbert scheme of points of `A^n`.
//!
//! A segment is a one-parameter family over the `s`-line: either an ideal
//! family (generators in `x1..xn, s`) or a single point of a configuration
//! moving along a straight line. A certificate is a list of segments whose
//! consecutive endpoints are glued, together with the gluing evidence.

mod document;
mod family_limit;
mod motion;
mod verify;

pub use document::CERTIFICATE_FORMAT;
pub use family_limit::{limit_of_family, Discrepancy, FamilyLimit};
pub use motion::{collision_parameters, motion_segments, standard_configuration};
pub use verify::{perturb_certificate, sample_parameters, verify_chain, ChainReport};

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::distraction::{distract_monomial, DistractionParams, MonomialIdeal, PointQ};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Ideal};
use crate::monomial::{MonomialOrder, WeightVector};
use crate::poly::{Polynomial, Rational};
use crate::torus::{monomial_degeneration, Subscheme0D};

/// An ideal family in `Q[x1..xn][s]`; `s` is the last variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    pub nvars: usize,
    pub degree: usize,
    pub label: String,
    pub generators: Vec<Polynomial>,
}

impl IdealFamily {
    pub fn new(nvars: usize, degree: usize, label: impl Into<String>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars + 1 {
                return Err(Error::ArityMismatch { expected: nvars + 1, found: g.nvars() });
            }
        }
        Ok(IdealFamily { nvars, degree, label: label.into(), generators })
    }

    pub fn fiber(&self, s: &Rational) -> Ideal {
        Ideal::new(self.nvars, self.generators.iter().map(|g| g.specialize_last(s)).collect())
            .expect("family generators have consistent arity")
    }

    /// The same family run backwards, `s -> 1 - s`.
    pub fn reversed(&self) -> IdealFamily {
        let n = self.nvars + 1;
        let flip = Polynomial::one(n).sub(&Polynomial::var(n, n - 1));
        IdealFamily {
            nvars: self.nvars,
            degree: self.degree,
            label: self.label.clone(),
            generators: self.generators.iter().map(|g| g.substitute(n - 1, &flip)).collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.generators.iter().all(|g| g.terms().all(|(m, _)| m.exponents()[self.nvars] == 0))
    }
}

/// One point of a configuration moving on the line `(1 - s) start + s end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMotion {
    pub start: Vec<PointQ>,
    pub end: Vec<PointQ>,
    pub moving: usize,
}

impl PointMotion {
    pub fn new(start: Vec<PointQ>, moving: usize, destination: PointQ) -> Result<Self> {
        if moving >= start.len() {
            return Err(Error::InvalidConfiguration(format!("moving index {moving} out of range")));
        }
        let mut end = start.clone();
        end[moving] = destination;
        Ok(PointMotion { start, end, moving })
    }

    pub fn nvars(&self) -> usize {
        self.start.first().map_or(0, |p| p.len())
    }

    pub fn position(&self, s: &Rational) -> Vec<PointQ> {
        let mut out = self.start.clone();
        out[self.moving] =
            self.start[self.moving].iter().zip(&self.end[self.moving]).map(|(a, b)| a + s * (b - a)).collect();
        out
    }

    pub fn reversed(&self) -> PointMotion {
        PointMotion { start: self.end.clone(), end: self.start.clone(), moving: self.moving }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment {
    IdealFamily(IdealFamily),
    PointMotion(PointMotion),
}

/// A segment endpoint: an ideal, or a configuration of distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Ideal(Ideal),
    Points(Vec<PointQ>),
}

impl Segment {
    pub fn at(&self, s: &Rational) -> Endpoint {
        match self {
            Segment::IdealFamily(f) => Endpoint::Ideal(f.fiber(s)),
            Segment::PointMotion(m) => Endpoint::Points(m.position(s)),
        }
    }

    pub fn start(&self) -> Endpoint {
        self.at(&Rational::zero())
    }

    pub fn end(&self) -> Endpoint {
        self.at(&Rational::one())
    }

    pub fn reversed(&self) -> Segment {
        match self {
            Segment::IdealFamily(f) => Segment::IdealFamily(f.reversed()),
            Segment::PointMotion(m) => Segment::PointMotion(m.reversed()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Segment::IdealFamily(_) => "ideal-family",
            Segment::PointMotion(_) => "point-motion",
        }
    }
}

/// Why two consecutive endpoints agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingEvidence {
    /// Both ideals have this reduced grevlex basis.
    ReducedBasis(Vec<Polynomial>),
    /// The ideal has the given colength and vanishes on the points.
    IdealOfPoints { colength: usize, points: Vec<PointQ> },
    /// Both configurations are this set of points.
    SamePoints(Vec<PointQ>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gluing {
    /// Index of the earlier of the two glued segments.
    pub after: usize,
    pub evidence: GluingEvidence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCertificate {
    pub degree: usize,
    pub ambient: usize,
    pub source: Ideal,
    pub target: Ideal,
    pub segments: Vec<Segment>,
    pub gluings: Vec<Gluing>,
}

fn power_u32(v: i128) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::InvalidConfiguration(format!("parameter exponent {v} too large")))
}

/// The torus orbit of `S` for weights `w`, closed up at `s = 0`:
/// each element `g` of the `w`-refined reduced basis becomes
/// `sum c_m s^(W - w.m) x^m` with `W` the top weight of `g`.
pub fn degeneration_segment(s: &Subscheme0D, w: &WeightVector) -> Result<IdealFamily> {
    let n = s.nvars();
    if w.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: w.len() });
    }
    if !w.is_positive() {
        return Err(Error::NonPositiveWeight(w.weights().to_vec()));
    }
    let basis = groebner_basis(s.ideal(), &MonomialOrder::Weighted(w.clone()))?;
    let mut gens = Vec::with_capacity(basis.elements().len());
    for g in basis.elements() {
        let top = g.terms().map(|(m, _)| w.value_unchecked(m)).max().unwrap_or(0);
        let mut out = Polynomial::zero(n + 1);
        for (m, c) in g.terms() {
            out.add_term(m.extend(power_u32(top - w.value_unchecked(m))?), c.clone());
        }
        gens.push(out);
    }
    IdealFamily::new(n, s.degree(), "degeneration", gens)
}

/// The distraction family with every parameter `a_l` replaced by `s a_l`.
pub fn distraction_segment(ideal: &MonomialIdeal, a: &DistractionParams) -> Result<IdealFamily> {
    let needed = ideal.max_exponent() as usize;
    if a.0.len() < needed {
        return Err(Error::InsufficientParameters { needed, given: a.0.len() });
    }
    if !a.is_distinct() {
        return Err(Error::NonDistinctParameters);
    }
    let n = ideal.nvars();
    let s = Polynomial::var(n + 1, n);
    let roots: Vec<Polynomial> = a.0.iter().map(|c| s.scale(c)).collect();
    let gens = ideal.generators().iter().map(|m| distract_monomial(m, n + 1, &roots)).collect();
    IdealFamily::new(n, ideal.colength(), "distraction", gens)
}

fn monic_degree(f: &Polynomial) -> Result<usize> {
    let not_monic = |degree| Error::NotMonic { poly: f.to_string(), degree };
    if f.nvars() != 1 {
        return Err(Error::ArityMismatch { expected: 1, found: f.nvars() });
    }
    let d = f.total_degree().ok_or_else(|| not_monic(0))? as usize;
    let lead = f.coefficient(&crate::monomial::Monomial::new(vec![d as u32]));
    if !lead.is_one() {
        return Err(not_monic(d));
    }
    Ok(d)
}

/// `(1 - s) f + s g` for monic `f, g` of the same degree in `Q[x1]`.
pub fn hilb_line_segment(f: &Polynomial, g: &Polynomial) -> Result<IdealFamily> {
    let d = monic_degree(f)?;
    let e = monic_degree(g)?;
    if d != e {
        return Err(Error::NotMonic { poly: g.to_string(), degree: d });
    }
    let s = Polynomial::var(2, 1);
    let family = Polynomial::one(2).sub(&s).mul(&f.extend_vars()).add(&s.mul(&g.extend_vars()));
    IdealFamily::new(1, d, "line", vec![family])
}

fn point_set(points: &[PointQ]) -> BTreeSet<&PointQ> {
    points.iter().collect()
}

/// Evidence that `left` (end of one segment) equals `right` (start of the next).
/// Fails when they visibly differ.
pub fn glue(left: &Endpoint, right: &Endpoint) -> Result<GluingEvidence> {
    let mismatch = || Error::VerificationFailed { check: "gluing".into(), detail: "endpoints differ".into() };
    match (left, right) {
        (Endpoint::Ideal(a), Endpoint::Ideal(b)) => {
            let ga = groebner_basis(a, &MonomialOrder::Grevlex)?;
            if ga != groebner_basis(b, &MonomialOrder::Grevlex)? {
                return Err(mismatch());
            }
            Ok(GluingEvidence::ReducedBasis(ga.elements().to_vec()))
        }
        (Endpoint::Ideal(i), Endpoint::Points(p)) | (Endpoint::Points(p), Endpoint::Ideal(i)) => {
            let gb = groebner_basis(i, &MonomialOrder::Grevlex)?;
            let colength = crate::groebner::staircase(&gb).finite().ok_or_else(mismatch)?;
            for q in p {
                for g in i.generators() {
                    if !g.eval(q)?.is_zero() {
                        return Err(mismatch());
                    }
                }
            }
            if colength != p.len() || point_set(p).len() != p.len() {
                return Err(mismatch());
            }
            let mut points = p.clone();
            points.sort();
            Ok(GluingEvidence::IdealOfPoints { colength, points })
        }
        (Endpoint::Points(a), Endpoint::Points(b)) => {
            if point_set(a) != point_set(b) {
                return Err(mismatch());
            }
            let mut points = a.clone();
            points.sort();
            Ok(GluingEvidence::SamePoints(points))
        }
    }
}

/// Segments from `S` to the standard configuration.
fn half_chain(s: &Subscheme0D, max_c: u64) -> Result<Vec<Segment>> {
    let n = s.nvars();
    let mut out = Vec::new();
    let degen = monomial_degeneration(s, max_c)?;
    if !s.is_monomial() {
        // Runs from S (s = 0) to its monomial limit (s = 1).
        out.push(Segment::IdealFamily(degeneration_segment(s, &degen.weights)?.reversed()));
    }
    let mono = MonomialIdeal::from_ideal(degen.limit.ideal())?;
    let params = DistractionParams::default_for(&mono);
    out.push(Segment::IdealFamily(distraction_segment(&mono, &params)?));
    let points = crate::distraction::standard_points(&mono, &params)?;
    let target = standard_configuration(s.degree(), n);
    out.extend(motion_segments(&points, &target)?.into_iter().map(Segment::PointMotion));
    Ok(out)
}

fn assemble(source: &Subscheme0D, target: &Subscheme0D, segments: Vec<Segment>) -> Result<ChainCertificate> {
    let mut gluings = Vec::new();
    for (i, pair) in segments.windows(2).enumerate() {
        gluings.push(Gluing { after: i, evidence: glue(&pair[0].end(), &pair[1].start())? });
    }
    Ok(ChainCertificate {
        degree: source.degree(),
        ambient: source.nvars(),
        source: source.ideal().clone(),
        target: target.ideal().clone(),
        segments,
        gluings,
    })
}

/// A chain of affine lines from `s1` to `s2`, with `max_c` bounding the
/// monomialization search.
pub fn connect(s1: &Subscheme0D, s2: &Subscheme0D, max_c: u64) -> Result<ChainCertificate> {
    if s1.nvars() != s2.nvars() {
        return Err(Error::ArityMismatch { expected: s1.nvars(), found: s2.nvars() });
    }
    if s1.degree() != s2.degree() {
        return Err(Error::DegreeMismatch { before: s1.degree(), after: s2.degree() });
    }
    if s1.same_as(s2) {
        return assemble(s1, s2, Vec::new());
    }
    if s1.nvars() == 1 {
        let f = &s1.basis().elements()[0];
        let g = &s2.basis().elements()[0];
        return assemble(s1, s2, vec![Segment::IdealFamily(hilb_line_segment(f, g)?)]);
    }
    let mut segments = half_chain(s1, max_c)?;
    let back = half_chain(s2, max_c)?;
    segments.extend(back.iter().rev().map(Segment::reversed));
    assemble(s1, s2, segments)
}

impl ChainCertificate {
    /// The same chain from target to source.
    pub fn reversed(&self) -> Result<ChainCertificate> {
        let segments: Vec<Segment> = self.segments.iter().rev().map(Segment::reversed).collect();
        let mut gluings = Vec::new();
        let k = self.segments.len();
        for g in self.gluings.iter().rev() {
            gluings.push(Gluing { after: k - 2 - g.after, evidence: g.evidence.clone() });
        }
        Ok(ChainCertificate {
            degree: self.degree,
            ambient: self.ambient,
            source: self.target.clone(),
            target: self.source.clone(),
            segments,
            gluings,
        })
    }
}
