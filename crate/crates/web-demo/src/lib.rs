//! Browser bindings: each function takes the same text inputs as the CLI and
//! returns a JSON string, `{"ok": true, ...}` or `{"ok": false, "error": ...}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use gm_hilb::distraction::{verify_smoothing, DistractionParams, MonomialIdeal};
use gm_hilb::newton::{broken_trajectory, ActionWeights, SeriesPoint};
use gm_hilb::parse::max_variable_index;
use gm_hilb::poly::{format_rational, parse_rational};
use gm_hilb::torus::{limit_subscheme, Subscheme0D};
use gm_hilb::{Error, WeightVector};

fn reply(r: Result<Value, Error>) -> String {
    let v = match r {
        Ok(Value::Object(mut m)) => {
            m.insert("ok".into(), Value::Bool(true));
            Value::Object(m)
        }
        Ok(other) => json!({ "ok": true, "value": other }),
        Err(e) => {
            let position = match &e {
                Error::Syntax { position, .. } | Error::ZeroDenominator { position } => Some(*position),
                _ => None,
            };
            json!({ "ok": false, "error": e.to_string(), "position": position })
        }
    };
    v.to_string()
}

fn integers(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .map(|p| {
            p.trim().parse().map_err(|_| Error::Syntax {
                position: 0,
                message: format!("expected an integer, found {:?}", p.trim()),
            })
        })
        .collect()
}

fn nvars(text: &str, floor: usize) -> usize {
    max_variable_index(text).max(floor).max(1)
}

/// Limit of a zero-dimensional subscheme under positive weights.
#[wasm_bindgen]
pub fn torus_limit(ideal: &str, weights: &str) -> String {
    reply((|| {
        let w = integers(weights)?;
        let s = Subscheme0D::parse(ideal, nvars(ideal, w.len()))?;
        let lim = limit_subscheme(&s, &WeightVector::new(w))?;
        Ok(json!({
            "degree": s.degree(),
            "basis": s.to_string(),
            "limit": lim.to_string(),
            "monomial": lim.is_monomial(),
        }))
    })())
}

/// Fixed points, connecting orbits and critical slopes of a series point.
#[wasm_bindgen]
pub fn trajectory(point: &str, weights: &str, truncation: i32) -> String {
    reply((|| {
        let a = ActionWeights(integers(weights)?);
        let z = SeriesPoint::parse(point, truncation.into())?;
        let t = broken_trajectory(&z, &a)?;
        let show = |v: &[gm_hilb::newton::ProjectivePointQ]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        Ok(json!({
            "fixed_points": show(&t.fixed_points),
            "vertex_weights": t.vertex_weights,
            "orbit_reps": show(&t.orbit_reps),
            "critical_slopes": t.critical_slopes.iter().map(format_rational).collect::<Vec<_>>(),
        }))
    })())
}

/// Distraction of a monomial ideal; empty `params` means `0, 1, 2, ...`.
#[wasm_bindgen]
pub fn distraction_points(ideal: &str, params: &str) -> String {
    reply((|| {
        let mono = MonomialIdeal::parse(ideal, nvars(ideal, 0))?;
        let a = if params.trim().is_empty() {
            DistractionParams::default_for(&mono)
        } else {
            DistractionParams(params.split(',').map(parse_rational).collect::<Result<_, _>>()?)
        };
        let r = verify_smoothing(&mono, &a)?;
        Ok(json!({
            "generators": r.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "points": r.points.iter().map(|p| p.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "passed": r.passed(),
        }))
    })())
}
