//! Independent re-checking of a chain certificate.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{glue, ChainCertificate, Endpoint, Segment};
use crate::distraction::PointQ;
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, staircase, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{format_rational, Rational};
use crate::report::{all_passed, first_failure, Check};

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub checks: Vec<Check>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn into_result(self) -> Result<ChainReport> {
        first_failure(&self.checks)?;
        Ok(self)
    }
}

/// `0, 1` and `k / (samples + 1)` for `k = 1..=samples`.
pub fn sample_parameters(samples: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(), Rational::one()];
    let den = (samples + 1) as i64;
    out.extend((1..=samples as i64).map(|k| Rational::new(k.into(), den.into())));
    out
}

fn colength(ideal: &Ideal) -> Result<Option<usize>> {
    Ok(staircase(&groebner_basis(ideal, &MonomialOrder::Grevlex)?).finite())
}

fn describe(c: Option<usize>) -> String {
    c.map_or("infinite".to_string(), |v| v.to_string())
}

fn well_formed(c: &ChainCertificate) -> Result<()> {
    let n = c.ambient;
    for ideal in [&c.source, &c.target] {
        if ideal.nvars() != n {
            return Err(Error::ArityMismatch { expected: n, found: ideal.nvars() });
        }
    }
    for (i, seg) in c.segments.iter().enumerate() {
        match seg {
            Segment::IdealFamily(f) => {
                if f.nvars != n || f.generators.iter().any(|g| g.nvars() != n + 1) {
                    return Err(Error::Document(format!("segment {}: wrong number of variables", i + 1)));
                }
            }
            Segment::PointMotion(m) => {
                let bad_len = m.start.len() != m.end.len() || m.moving >= m.start.len();
                let bad_dim = m.start.iter().chain(&m.end).any(|p| p.len() != n);
                if bad_len || bad_dim {
                    return Err(Error::Document(format!("segment {}: malformed point motion", i + 1)));
                }
            }
        }
    }
    Ok(())
}

fn endpoints_agree(name: String, left: &Endpoint, right: &Endpoint) -> Check {
    match glue(left, right) {
        Ok(_) => Check::new(name, true, "equal"),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

fn format_point(p: &PointQ) -> String {
    format!("({})", p.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

fn check_ideal_segment(
    idx: usize,
    f: &super::IdealFamily,
    d: usize,
    samples: usize,
    checks: &mut Vec<Check>,
) -> Result<()> {
    if f.degree != d {
        checks.push(Check::new(
            format!("segment {idx} degree"),
            false,
            format!("declares {}, chain has {d}", f.degree),
        ));
    }
    for s in sample_parameters(samples) {
        let c = colength(&f.fiber(&s))?;
        checks.push(Check::new(
            format!("segment {idx} ({}) colength at s={}", f.label, format_rational(&s)),
            c == Some(d),
            format!("colength {}, expected {d}", describe(c)),
        ));
    }
    Ok(())
}

fn check_motion_segment(idx: usize, m: &super::PointMotion, d: usize, samples: usize, checks: &mut Vec<Check>) {
    checks.push(Check::new(
        format!("segment {idx} size"),
        m.start.len() == d,
        format!("{} points, expected {d}", m.start.len()),
    ));
    let others_fixed = m.start.iter().zip(&m.end).enumerate().all(|(j, (a, b))| j == m.moving || a == b);
    checks.push(Check::new(
        format!("segment {idx} single mover"),
        others_fixed,
        format!("moving point {}", m.moving + 1),
    ));
    let collisions = super::collision_parameters(m);
    let detail = if collisions.is_empty() {
        "no collision on the line".to_string()
    } else {
        collisions
            .iter()
            .map(|(j, s)| format!("meets point {} at s={}", j + 1, format_rational(s)))
            .collect::<Vec<_>>()
            .join("; ")
    };
    checks.push(Check::new(format!("segment {idx} exact collisions"), collisions.is_empty(), detail));
    for s in sample_parameters(samples) {
        let pos = m.position(&s);
        let distinct = pos.iter().collect::<BTreeSet<_>>().len() == pos.len();
        checks.push(Check::new(
            format!("segment {idx} distinct at s={}", format_rational(&s)),
            distinct,
            format!("moving point at {}", format_point(&pos[m.moving])),
        ));
    }
}

/// Re-derives every claim of the certificate: endpoint colengths, sampled
/// fiber colengths, motion distinctness (exactly and at samples), gluings.
/// `Err` only for a malformed certificate; failed checks are in the report.
pub fn verify_chain(c: &ChainCertificate, samples: usize) -> Result<ChainReport> {
    if samples == 0 {
        return Err(Error::InvalidConfiguration("need at least one sample per segment".into()));
    }
    well_formed(c)?;
    let d = c.degree;
    let mut checks = Vec::new();
    for (name, ideal) in [("source", &c.source), ("target", &c.target)] {
        let col = colength(ideal)?;
        checks.push(Check::new(
            format!("{name} colength"),
            col == Some(d),
            format!("colength {}, expected {d}", describe(col)),
        ));
    }
    let source = Endpoint::Ideal(c.source.clone());
    let target = Endpoint::Ideal(c.target.clone());
    if c.segments.is_empty() {
        checks.push(endpoints_agree("source = target".into(), &source, &target));
        checks.push(Check::new("gluing count", c.gluings.is_empty(), format!("{} gluings", c.gluings.len())));
        return Ok(ChainReport { checks });
    }
    checks.push(endpoints_agree("segment 1 start = source".into(), &c.segments[0].start(), &source));
    for (i, seg) in c.segments.iter().enumerate() {
        match seg {
            Segment::IdealFamily(f) => check_ideal_segment(i + 1, f, d, samples, &mut checks)?,
            Segment::PointMotion(m) => check_motion_segment(i + 1, m, d, samples, &mut checks),
        }
    }
    let k = c.segments.len();
    let afters: Vec<usize> = c.gluings.iter().map(|g| g.after).collect();
    checks.push(Check::new(
        "gluing count",
        afters == (0..k - 1).collect::<Vec<_>>(),
        format!("{} gluings for {k} segments", afters.len()),
    ));
    for g in &c.gluings {
        if g.after + 1 >= k {
            continue;
        }
        let name = format!("gluing {} -> {}", g.after + 1, g.after + 2);
        match glue(&c.segments[g.after].end(), &c.segments[g.after + 1].start()) {
            Ok(ev) => checks.push(Check::new(
                name,
                ev == g.evidence,
                if ev == g.evidence { "evidence matches" } else { "recorded evidence differs" },
            )),
            Err(e) => checks.push(Check::new(name, false, e.to_string())),
        }
    }
    checks.push(endpoints_agree(format!("segment {k} end = target"), &c.segments[k - 1].end(), &target));
    Ok(ChainReport { checks })
}

/// Adds 1 to the constant coefficient of the first generator of the first
/// ideal-family segment, or shifts the first moving point's destination.
/// `None` for the empty chain.
pub fn perturb_certificate(c: &ChainCertificate) -> Option<ChainCertificate> {
    let mut out = c.clone();
    if let Some(f) = out.segments.iter_mut().find_map(|s| match s {
        Segment::IdealFamily(f) if !f.generators.is_empty() => Some(f),
        _ => None,
    }) {
        let g = &mut f.generators[0];
        g.add_term(Monomial::one(g.nvars()), Rational::one());
        return Some(out);
    }
    let m = out.segments.iter_mut().find_map(|s| match s {
        Segment::PointMotion(m) => Some(m),
        _ => None,
    })?;
    m.end[m.moving][0] += Rational::one();
    Some(out)
}
