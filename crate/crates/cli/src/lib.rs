//! Batch front end for the `gm-hilb` library.
//!
//! [`run`] parses an argument vector into a [`JobSpec`], executes it and
//! returns the exit code together with the rendered report. Nothing is read
//! from the environment and no timestamps are emitted, so identical inputs
//! give byte-identical output.

mod inputs;
mod jobs;
mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use gm_hilb::torus::DEFAULT_MAX_C;

pub use jobs::Verdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Structured,
}

/// One batch job. Text arguments starting with `@` are read from that file.
#[derive(Clone, Debug, PartialEq, Eq, Parser, Serialize, Deserialize)]
#[command(name = "gmhilb", version, about = "Exact computations with G_m-actions and Hilbert schemes of points")]
pub struct JobSpec {
    #[command(subcommand)]
    pub job: Job,

    /// Write the report (for `chain`: the certificate) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Sample parameters per segment when verifying chains.
    #[arg(long, global = true, default_value_t = 10)]
    pub samples: usize,

    /// Upper bound on `c` in the monomial degeneration search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_C)]
    pub max_c: u64,

    #[arg(short, long, global = true, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Job {
    /// Torus limit of a zero-dimensional subscheme under positive weights.
    Limit {
        /// Comma-separated generators, e.g. "x1 - x2^2, x2^3".
        ideal: String,
        /// Comma-separated positive integers, one per variable.
        #[arg(long)]
        weights: String,
        /// Number of variables (default: largest index mentioned).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Degenerate to a monomial subscheme with weights (c, c^2, ..., c^n).
    Monomialize {
        ideal: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Whether the subscheme is supported at the origin.
    OriginTest {
        ideal: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Broken trajectory of a point over Laurent series.
    Trajectory {
        /// `;`-separated series, e.g. "1; u + u^2; 3*u^-1".
        point: String,
        /// Comma-separated integer weights a_0, ..., a_r.
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 20)]
        truncation: i64,
        /// Query the limit point at this b (repeatable).
        #[arg(long = "at")]
        at: Vec<String>,
    },
    /// Distraction of a monomial ideal and its smoothing check.
    Distract {
        ideal: String,
        /// Comma-separated distinct rationals (default 0,1,2,...).
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Build a chain certificate connecting two subschemes of equal degree.
    Chain {
        source: String,
        target: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Re-check a chain certificate file.
    Verify { certificate: PathBuf },
    /// Fixed-point census and Poincaré identity for weights on P^r.
    Bb { weights: String },
    /// Poincaré polynomials of an attractor/repeller pair.
    Attractor {
        weights: String,
        /// Number of lowest fixed components kept.
        #[arg(long)]
        cut: usize,
    },
}

impl Job {
    pub fn name(&self) -> &'static str {
        match self {
            Job::Limit { .. } => "limit",
            Job::Monomialize { .. } => "monomialize",
            Job::OriginTest { .. } => "origin-test",
            Job::Trajectory { .. } => "trajectory",
            Job::Distract { .. } => "distract",
            Job::Chain { .. } => "chain",
            Job::Verify { .. } => "verify",
            Job::Bb { .. } => "bb",
            Job::Attractor { .. } => "attractor",
        }
    }
}

impl JobSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("job spec serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Exit code plus what the process writes to its two streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match JobSpec::try_parse_from(argv) {
        Ok(spec) => run_spec(&spec),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run_spec(spec: &JobSpec) -> Outcome {
    let resolved = match inputs::resolve(spec) {
        Ok(r) => r,
        Err(f) => return render::failure(spec, &f),
    };
    match jobs::execute(&resolved) {
        Ok(result) => render::success(&resolved, result),
        Err(f) => render::failure(&resolved, &f),
    }
}
