//! JSON form of chain certificates. Polynomials are strings in the input
//! grammar (`s` names the family parameter); rationals are strings such as
//! `"-3/5"`; point motions index the moving point from 0.

use serde::{Deserialize, Serialize};

use super::{ChainCertificate, Gluing, GluingEvidence, IdealFamily, PointMotion, Segment};
use crate::distraction::PointQ;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::parse::{format_polynomial, parse_family_polynomial, parse_polynomial, VarNames};
use crate::poly::{format_rational, parse_rational, Polynomial};

pub const CERTIFICATE_FORMAT: &str = "gm-hilb-chain/1";

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    format: String,
    degree: usize,
    ambient: usize,
    source: Vec<String>,
    target: Vec<String>,
    segments: Vec<SegmentDoc>,
    gluings: Vec<GluingDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum SegmentDoc {
    IdealFamily { label: String, generators: Vec<String> },
    PointMotion { moving: usize, start: Vec<Vec<String>>, end: Vec<Vec<String>> },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "evidence", rename_all = "kebab-case")]
enum GluingDoc {
    ReducedBasis { after: usize, basis: Vec<String> },
    IdealOfPoints { after: usize, colength: usize, points: Vec<Vec<String>> },
    SamePoints { after: usize, points: Vec<Vec<String>> },
}

fn points_out(ps: &[PointQ]) -> Vec<Vec<String>> {
    ps.iter().map(|p| p.iter().map(format_rational).collect()).collect()
}

fn points_in(ps: &[Vec<String>]) -> Result<Vec<PointQ>> {
    ps.iter().map(|p| p.iter().map(|c| parse_rational(c)).collect()).collect()
}

fn polys_out(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| format_polynomial(p, VarNames::plain())).collect()
}

fn polys_in(ps: &[String], n: usize) -> Result<Vec<Polynomial>> {
    ps.iter().map(|p| parse_polynomial(p, n)).collect()
}

impl ChainCertificate {
    pub fn to_json(&self) -> String {
        let doc = CertificateDoc {
            format: CERTIFICATE_FORMAT.to_string(),
            degree: self.degree,
            ambient: self.ambient,
            source: polys_out(self.source.generators()),
            target: polys_out(self.target.generators()),
            segments: self
                .segments
                .iter()
                .map(|s| match s {
                    Segment::IdealFamily(f) => SegmentDoc::IdealFamily {
                        label: f.label.clone(),
                        generators: f.generators.iter().map(|g| format_polynomial(g, VarNames::with_param())).collect(),
                    },
                    Segment::PointMotion(m) => SegmentDoc::PointMotion {
                        moving: m.moving,
                        start: points_out(&m.start),
                        end: points_out(&m.end),
                    },
                })
                .collect(),
            gluings: self
                .gluings
                .iter()
                .map(|g| match &g.evidence {
                    GluingEvidence::ReducedBasis(b) => GluingDoc::ReducedBasis { after: g.after, basis: polys_out(b) },
                    GluingEvidence::IdealOfPoints { colength, points } => {
                        GluingDoc::IdealOfPoints { after: g.after, colength: *colength, points: points_out(points) }
                    }
                    GluingEvidence::SamePoints(p) => GluingDoc::SamePoints { after: g.after, points: points_out(p) },
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertificateDoc = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != CERTIFICATE_FORMAT {
            return Err(Error::Document(format!("unknown format {:?}", doc.format)));
        }
        let n = doc.ambient;
        let mut segments = Vec::with_capacity(doc.segments.len());
        for s in &doc.segments {
            segments.push(match s {
                SegmentDoc::IdealFamily { label, generators } => {
                    let gens = generators.iter().map(|g| parse_family_polynomial(g, n)).collect::<Result<Vec<_>>>()?;
                    Segment::IdealFamily(IdealFamily::new(n, doc.degree, label.clone(), gens)?)
                }
                SegmentDoc::PointMotion { moving, start, end } => Segment::PointMotion(PointMotion {
                    start: points_in(start)?,
                    end: points_in(end)?,
                    moving: *moving,
                }),
            });
        }
        let gluings = doc
            .gluings
            .iter()
            .map(|g| {
                Ok(match g {
                    GluingDoc::ReducedBasis { after, basis } => {
                        Gluing { after: *after, evidence: GluingEvidence::ReducedBasis(polys_in(basis, n)?) }
                    }
                    GluingDoc::IdealOfPoints { after, colength, points } => Gluing {
                        after: *after,
                        evidence: GluingEvidence::IdealOfPoints { colength: *colength, points: points_in(points)? },
                    },
                    GluingDoc::SamePoints { after, points } => {
                        Gluing { after: *after, evidence: GluingEvidence::SamePoints(points_in(points)?) }
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainCertificate {
            degree: doc.degree,
            ambient: n,
            source: Ideal::new(n, polys_in(&doc.source, n)?)?,
            target: Ideal::new(n, polys_in(&doc.target, n)?)?,
            segments,
            gluings,
        })
    }
}
