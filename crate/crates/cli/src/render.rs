//! Turning job results into the two report formats.

use std::fs;

use serde_json::{json, Map, Value};

use gm_hilb::Error;

use crate::inputs::Failure;
use crate::jobs::{JobResult, Verdict};
use crate::{Format, Job, JobSpec, Outcome, EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED};

/// `# key: value` lines echoing every input of the job.
fn header(spec: &JobSpec) -> Vec<String> {
    let mut out = vec![format!("# gmhilb {}", spec.job.name())];
    let Value::Object(fields) = serde_json::to_value(&spec.job).expect("job serializes") else { unreachable!() };
    for (k, v) in fields.iter().filter(|(k, v)| k.as_str() != "subcommand" && !v.is_null()) {
        let shown = match v {
            Value::String(s) => s.replace('\n', " "),
            other => other.to_string(),
        };
        out.push(format!("# {k}: {shown}"));
    }
    if matches!(spec.job, Job::Chain { .. } | Job::Verify { .. }) {
        out.push(format!("# samples: {}", spec.samples));
    }
    if matches!(spec.job, Job::Chain { .. } | Job::Monomialize { .. }) {
        out.push(format!("# max-c: {}", spec.max_c));
    }
    out
}

fn structured(spec: &JobSpec, status: Value, body: (&str, Value)) -> String {
    let mut doc = Map::new();
    doc.insert("job".into(), serde_json::to_value(spec).expect("job serializes"));
    if let Value::Object(s) = status {
        doc.extend(s);
    }
    doc.insert(body.0.into(), body.1);
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("report serializes");
    text.push('\n');
    text
}

fn lines(v: &[String]) -> String {
    v.iter().map(|l| format!("{l}\n")).collect()
}

fn write_file(path: &std::path::Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

pub fn success(spec: &JobSpec, result: JobResult) -> Outcome {
    let code = match result.verdict {
        Verdict::Ok => EXIT_OK,
        Verdict::VerificationFailed { .. } => EXIT_VERIFICATION_FAILED,
    };
    let stderr = match &result.verdict {
        Verdict::Ok => String::new(),
        Verdict::VerificationFailed { check, detail } => format!("verification failed: {check}: {detail}\n"),
    };
    let report = match spec.format {
        Format::Text => {
            let mut all = header(spec);
            all.extend(result.lines);
            lines(&all)
        }
        Format::Structured => structured(
            spec,
            serde_json::to_value(&result.verdict).expect("verdict serializes"),
            ("result", result.data),
        ),
    };
    // `chain` sends its certificate to --out, or to stdout in text mode.
    let (file, stdout) = match (&result.certificate, &spec.out, spec.format) {
        (Some(cert), Some(path), _) => (Some((path, format!("{cert}\n"))), report),
        (Some(cert), None, Format::Text) => (None, format!("{cert}\n")),
        (_, Some(path), _) => (Some((path, report)), String::new()),
        (_, None, _) => (None, report),
    };
    if let Some((path, text)) = file {
        if let Err(e) = write_file(path, &text) {
            return Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    }
    Outcome { code, stdout, stderr }
}

fn position(e: &Error) -> Option<usize> {
    match e {
        Error::Syntax { position, .. } | Error::ZeroDenominator { position } => Some(*position),
        _ => None,
    }
}

pub fn failure(spec: &JobSpec, f: &Failure) -> Outcome {
    let (message, detail) = match f {
        Failure::Input { field, text, error } => {
            let mut msg = format!("error: in {field}: {error}\n");
            let pos = position(error);
            if let Some(p) = pos.filter(|_| !text.contains('\n') && !text.is_empty()) {
                let col = text.get(..p.min(text.len())).map_or(p, |s| s.chars().count());
                msg.push_str(&format!("  {text}\n  {}^\n", " ".repeat(col)));
            }
            (msg, json!({ "input": field, "message": error.to_string(), "position": pos }))
        }
        Failure::Io(m) => (format!("error: {m}\n"), json!({ "message": m })),
    };
    let stdout = match spec.format {
        Format::Text => String::new(),
        Format::Structured => structured(spec, json!({ "status": "input-error" }), ("error", detail)),
    };
    Outcome { code: EXIT_INPUT_ERROR, stdout, stderr: message }
}
