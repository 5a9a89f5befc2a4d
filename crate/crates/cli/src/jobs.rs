//! One function per subcommand. Each returns text lines, a structured value
//! and a verdict; rendering is left to the caller.

use std::fs;

use serde::Serialize;
use serde_json::{json, Value};

use gm_hilb::bb::{attractor_pair_poincare, poincare_identity};
use gm_hilb::chains::{connect, verify_chain, ChainCertificate};
use gm_hilb::distraction::{verify_smoothing, DistractionParams, MonomialIdeal, PointQ};
use gm_hilb::newton::{broken_trajectory, limit_point, ActionWeights, SeriesPoint};
use gm_hilb::poly::format_rational;
use gm_hilb::report::Check;
use gm_hilb::torus::{is_supported_at_origin, limit_subscheme, monomial_degeneration, Subscheme0D};
use gm_hilb::{Polynomial, WeightVector};

use crate::inputs::{nvars, parse_integers, parse_rationals, Failure};
use crate::{Job, JobSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Ok,
    VerificationFailed { check: String, detail: String },
}

impl Verdict {
    fn from_checks(checks: &[Check]) -> Self {
        match checks.iter().find(|c| !c.passed) {
            None => Verdict::Ok,
            Some(c) => Verdict::VerificationFailed { check: c.name.clone(), detail: c.detail.clone() },
        }
    }

    fn from_flag(ok: bool, check: &str, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Ok
        } else {
            Verdict::VerificationFailed { check: check.into(), detail: detail() }
        }
    }
}

pub struct JobResult {
    pub verdict: Verdict,
    pub lines: Vec<String>,
    pub data: Value,
    /// Certificate document produced by `chain`.
    pub certificate: Option<String>,
}

impl JobResult {
    fn ok(lines: Vec<String>, data: Value) -> Self {
        JobResult { verdict: Verdict::Ok, lines, data, certificate: None }
    }
}

fn polys(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn point_text(p: &PointQ) -> String {
    format!("({})", p.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

fn subscheme(field: &'static str, text: &str, n: usize) -> Result<Subscheme0D, Failure> {
    Subscheme0D::parse(text, n).map_err(Failure::input(field, text))
}

fn weights_of(text: &str) -> Result<Vec<i64>, Failure> {
    parse_integers(text).map_err(Failure::input("weights", text))
}

pub fn execute(spec: &JobSpec) -> Result<JobResult, Failure> {
    match &spec.job {
        Job::Limit { ideal, weights, vars } => {
            let w = weights_of(weights)?;
            let n = nvars(*vars, &[ideal], w.len());
            let s = subscheme("ideal", ideal, n)?;
            let lim = limit_subscheme(&s, &WeightVector::new(w)).map_err(Failure::input("weights", weights))?;
            Ok(JobResult::ok(
                vec![lim.to_string()],
                json!({
                    "nvars": n,
                    "degree": s.degree(),
                    "basis": polys(s.basis().elements()),
                    "limit": polys(lim.basis().elements()),
                    "monomial": lim.is_monomial(),
                }),
            ))
        }
        Job::Monomialize { ideal, vars } => {
            let n = nvars(*vars, &[ideal], 0);
            let s = subscheme("ideal", ideal, n)?;
            let m = monomial_degeneration(&s, spec.max_c).map_err(Failure::input("ideal", ideal))?;
            let w = m.weights.weights().iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            Ok(JobResult::ok(
                vec![format!("c: {}", m.c), format!("weights: {w}"), format!("limit: {}", m.limit)],
                json!({
                    "nvars": n,
                    "degree": s.degree(),
                    "c": m.c,
                    "weights": m.weights.weights(),
                    "limit": polys(m.limit.basis().elements()),
                }),
            ))
        }
        Job::OriginTest { ideal, vars } => {
            let n = nvars(*vars, &[ideal], 0);
            let s = subscheme("ideal", ideal, n)?;
            let at_origin = is_supported_at_origin(&s);
            Ok(JobResult::ok(
                vec![format!("supported at origin: {at_origin}")],
                json!({ "nvars": n, "degree": s.degree(), "supported_at_origin": at_origin }),
            ))
        }
        Job::Trajectory { point, weights, truncation, at } => trajectory(point, weights, *truncation, at),
        Job::Distract { ideal, params, vars } => {
            let n = nvars(*vars, &[ideal], 0);
            let mono = MonomialIdeal::parse(ideal, n).map_err(Failure::input("ideal", ideal))?;
            let a = match params {
                Some(p) => DistractionParams(parse_rationals(p).map_err(Failure::input("params", p))?),
                None => DistractionParams::default_for(&mono),
            };
            let report =
                verify_smoothing(&mono, &a).map_err(Failure::input("params", params.as_deref().unwrap_or("")))?;
            let mut lines = vec![
                format!("distraction: {}", polys(&report.generators).join(", ")),
                format!("points: {}", report.points.iter().map(point_text).collect::<Vec<_>>().join(", ")),
            ];
            lines.extend(report.checks.iter().map(check_line));
            Ok(JobResult {
                verdict: Verdict::from_checks(&report.checks),
                lines,
                data: json!({
                    "nvars": n,
                    "degree": report.degree,
                    "params": a.0.iter().map(format_rational).collect::<Vec<_>>(),
                    "generators": polys(&report.generators),
                    "points": report.points.iter().map(|p| p.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "checks": report.checks,
                }),
                certificate: None,
            })
        }
        Job::Chain { source, target, vars } => {
            let n = nvars(*vars, &[source, target], 0);
            let s1 = subscheme("source", source, n)?;
            let s2 = subscheme("target", target, n)?;
            let cert = connect(&s1, &s2, spec.max_c).map_err(Failure::input("source, target", ""))?;
            let report = verify_chain(&cert, spec.samples).map_err(Failure::input("samples", ""))?;
            let doc = cert.to_json();
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            let mut lines = vec![
                format!("degree: {}", cert.degree),
                format!("segments: {}", cert.segments.len()),
                format!("checks: {} passed, {} failed", report.checks.len() - failed, failed),
            ];
            lines.extend(report.checks.iter().filter(|c| !c.passed).map(check_line));
            Ok(JobResult {
                verdict: Verdict::from_checks(&report.checks),
                lines,
                data: json!({
                    "degree": cert.degree,
                    "segments": cert.segments.len(),
                    "certificate": serde_json::from_str::<Value>(&doc).expect("certificate is JSON"),
                    "checks": report.checks,
                }),
                certificate: Some(doc),
            })
        }
        Job::Verify { certificate } => {
            let path = certificate.display().to_string();
            let text = fs::read_to_string(certificate).map_err(|e| Failure::Io(format!("cannot read {path}: {e}")))?;
            let cert = ChainCertificate::from_json(&text).map_err(Failure::input("certificate", &text))?;
            let report = verify_chain(&cert, spec.samples).map_err(Failure::input("certificate", &text))?;
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            let mut lines = vec![format!("checks: {} passed, {} failed", report.checks.len() - failed, failed)];
            let shown: Vec<&Check> = if spec.verbose > 0 {
                report.checks.iter().collect()
            } else {
                report.checks.iter().filter(|c| !c.passed).collect()
            };
            lines.extend(shown.into_iter().map(check_line));
            Ok(JobResult {
                verdict: Verdict::from_checks(&report.checks),
                lines,
                data: json!({
                    "certificate": serde_json::from_str::<Value>(&text).map_err(|e| Failure::Io(e.to_string()))?,
                    "checks": report.checks,
                }),
                certificate: None,
            })
        }
        Job::Bb { weights } => {
            let a = ActionWeights(weights_of(weights)?);
            let id = poincare_identity(&a).map_err(Failure::input("weights", weights))?;
            let mut lines: Vec<String> = id
                .components
                .iter()
                .map(|c| format!("weight {}: dim {}, above {}, below {}", c.weight, c.dim, c.above, c.below))
                .collect();
            lines.push(format!("poincare: {}", id.lhs));
            lines.push(format!("expected: {}", id.rhs));
            lines.push(format!("attracting form: {}", id.above_form));
            lines.push(format!("identity: {}", if id.equal { "holds" } else { "fails" }));
            Ok(JobResult {
                verdict: Verdict::from_flag(id.equal, "poincare identity", || format!("{} != {}", id.lhs, id.rhs)),
                lines,
                data: json!({
                    "components": id.components,
                    "poincare": id.lhs.to_string(),
                    "expected": id.rhs.to_string(),
                    "attracting_form": id.above_form.to_string(),
                    "identity": id.equal,
                }),
                certificate: None,
            })
        }
        Job::Attractor { weights, cut } => {
            let a = ActionWeights(weights_of(weights)?);
            let p = attractor_pair_poincare(&a, *cut).map_err(Failure::input("weights", weights))?;
            Ok(JobResult {
                verdict: Verdict::from_flag(p.equal, "attractor pair", || {
                    format!("{} != {}", p.closed_part, p.open_part)
                }),
                lines: vec![
                    format!("closed part: {}", p.closed_part),
                    format!("open part: {}", p.open_part),
                    format!("equal: {}", p.equal),
                ],
                data: json!({
                    "r_cut": p.r_cut,
                    "components": p.components,
                    "closed_part": p.closed_part.to_string(),
                    "open_part": p.open_part.to_string(),
                    "equal": p.equal,
                }),
                certificate: None,
            })
        }
    }
}

fn trajectory(point: &str, weights: &str, truncation: i64, at: &[String]) -> Result<JobResult, Failure> {
    let a = ActionWeights(weights_of(weights)?);
    let z = SeriesPoint::parse(point, truncation).map_err(Failure::input("point", point))?;
    let t = broken_trajectory(&z, &a).map_err(Failure::input("point", point))?;
    let mut lines = Vec::new();
    for (i, x) in t.fixed_points.iter().enumerate() {
        lines.push(format!("fixed {i}: {x} weight {}", t.vertex_weights[i]));
        if let Some(y) = t.orbit_reps.get(i) {
            lines.push(format!(
                "orbit {}: {y} slope {} degree {}",
                i + 1,
                format_rational(&t.critical_slopes[i]),
                t.orbit_degrees[i]
            ));
        }
    }
    let mut queries = Vec::new();
    for b_text in at {
        let b = parse_rationals(b_text)
            .and_then(|v| match v.as_slice() {
                [b] => Ok(b.clone()),
                _ => Err(gm_hilb::Error::Syntax { position: 0, message: "expected one rational".into() }),
            })
            .map_err(Failure::input("at", b_text))?;
        let x = limit_point(&z, &a, &b).map_err(Failure::input("at", b_text))?;
        lines.push(format!("limit at b={}: {x}", format_rational(&b)));
        queries.push(json!({ "b": format_rational(&b), "limit": x.to_string() }));
    }
    let show = |v: &[gm_hilb::newton::ProjectivePointQ]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    Ok(JobResult::ok(
        lines,
        json!({
            "fixed_points": show(&t.fixed_points),
            "vertex_weights": t.vertex_weights,
            "orbit_reps": show(&t.orbit_reps),
            "critical_slopes": t.critical_slopes.iter().map(format_rational).collect::<Vec<_>>(),
            "edge_supports": t.edge_supports,
            "orbit_degrees": t.orbit_degrees,
            "limit_queries": queries,
        }),
    ))
}

fn check_line(c: &Check) -> String {
    format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)
}
