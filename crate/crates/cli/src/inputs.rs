//! Reading input documents and the small list grammars used by flags.

use std::fs;

use gm_hilb::parse::max_variable_index;
use gm_hilb::poly::parse_rational;
use gm_hilb::{Error, Rational};

use crate::{Job, JobSpec};

/// Why a job could not produce a verdict.
#[derive(Debug)]
pub enum Failure {
    /// A library error tied to one named input, whose text is kept for the caret.
    Input {
        field: &'static str,
        text: String,
        error: Error,
    },
    Io(String),
}

impl Failure {
    pub fn input<'a>(field: &'static str, text: &'a str) -> impl FnOnce(Error) -> Failure + 'a {
        move |error| Failure::Input { field, text: text.to_string(), error }
    }
}

fn read_arg(text: &str) -> Result<String, Failure> {
    match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim_end().to_string())
            .map_err(|e| Failure::Io(format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

/// Replaces every `@file` argument by the file contents, so the report
/// embeds what was actually computed on.
pub fn resolve(spec: &JobSpec) -> Result<JobSpec, Failure> {
    let job = match &spec.job {
        Job::Limit { ideal, weights, vars } => {
            Job::Limit { ideal: read_arg(ideal)?, weights: read_arg(weights)?, vars: *vars }
        }
        Job::Monomialize { ideal, vars } => Job::Monomialize { ideal: read_arg(ideal)?, vars: *vars },
        Job::OriginTest { ideal, vars } => Job::OriginTest { ideal: read_arg(ideal)?, vars: *vars },
        Job::Trajectory { point, weights, truncation, at } => Job::Trajectory {
            point: read_arg(point)?,
            weights: read_arg(weights)?,
            truncation: *truncation,
            at: at.clone(),
        },
        Job::Distract { ideal, params, vars } => {
            Job::Distract { ideal: read_arg(ideal)?, params: params.as_deref().map(read_arg).transpose()?, vars: *vars }
        }
        Job::Chain { source, target, vars } => {
            Job::Chain { source: read_arg(source)?, target: read_arg(target)?, vars: *vars }
        }
        Job::Verify { certificate } => Job::Verify { certificate: certificate.clone() },
        Job::Bb { weights } => Job::Bb { weights: read_arg(weights)? },
        Job::Attractor { weights, cut } => Job::Attractor { weights: read_arg(weights)?, cut: *cut },
    };
    Ok(JobSpec { job, ..spec.clone() })
}

/// Number of variables: explicit, else the largest index in any of `texts`
/// or `floor`, whichever is bigger (at least 1).
pub fn nvars(explicit: Option<usize>, texts: &[&str], floor: usize) -> usize {
    explicit.unwrap_or_else(|| texts.iter().map(|t| max_variable_index(t)).chain([floor, 1]).max().unwrap())
}

/// Splits on commas, reporting byte offsets of each trimmed piece.
fn pieces(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((start + lead, piece.trim()));
        start += piece.len() + 1;
    }
    out
}

pub fn parse_integers(text: &str) -> Result<Vec<i64>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    pieces(text)
        .into_iter()
        .map(|(pos, p)| {
            p.parse::<i64>()
                .map_err(|_| Error::Syntax { position: pos, message: format!("expected an integer, found {p:?}") })
        })
        .collect()
}

pub fn parse_rationals(text: &str) -> Result<Vec<Rational>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    pieces(text)
        .into_iter()
        .map(|(pos, p)| {
            parse_rational(p).map_err(|e| match e {
                Error::Syntax { message, .. } => Error::Syntax { position: pos, message },
                other => other,
            })
        })
        .collect()
}
