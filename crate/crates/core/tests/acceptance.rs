//! The six acceptance criteria, one PASS/FAIL line each.

mod common;

use std::time::{Duration, Instant};

use gm_hilb::bb::{attractor_pair_poincare, fixed_components, poincare_identity, PoincarePolynomial};
use gm_hilb::chains::{connect, limit_of_family, perturb_certificate, verify_chain, IdealFamily};
use gm_hilb::distraction::{verify_smoothing, DistractionParams, MonomialIdeal};
use gm_hilb::groebner::{groebner_basis, Ideal};
use gm_hilb::monomial::{MonomialOrder, WeightVector};
use gm_hilb::newton::{broken_trajectory, limit_point, orbit_limits, ActionWeights};
use gm_hilb::parse::parse_family_polynomial;
use gm_hilb::poly::{format_rational, parse_rational, Polynomial, Rational};
use gm_hilb::torus::{limit_subscheme, Subscheme0D, DEFAULT_MAX_C};
use rand::Rng;

type Outcome = Result<String, String>;

fn reduced(text: &str, n: usize) -> String {
    groebner_basis(&Ideal::parse(text, n).unwrap(), &MonomialOrder::Grevlex).unwrap().to_string()
}

fn remark_reproduction() -> Outcome {
    let w = WeightVector::new(vec![1, 1]);
    let fat = reduced("x1^2, x1*x2, x2^2", 2);
    for a in ["1", "2", "-3/5"] {
        let a = parse_rational(a).unwrap();
        let x1 = Polynomial::var(2, 0);
        let y2 = Polynomial::var(2, 1).pow(2);
        let gens = vec![x1.sub(&y2.scale(&a)), Polynomial::var(2, 1).pow(3)];
        let s = Subscheme0D::new(Ideal::new(2, gens).unwrap()).map_err(|e| e.to_string())?;
        let a = format_rational(&a);
        let lim = limit_subscheme(&s, &w).map_err(|e| e.to_string())?;
        if lim.basis().to_string() != fat || lim.to_string() != "x1^2, x1*x2, x2^2" {
            return Err(format!("a = {a}: limit {lim}"));
        }
    }
    let s0 = Subscheme0D::parse("x1, x2^3", 2).unwrap();
    let lim = limit_subscheme(&s0, &w).map_err(|e| e.to_string())?;
    if lim.basis().to_string() != reduced("x1, x2^3", 2) {
        return Err(format!("a = 0: limit {lim}"));
    }
    Ok("a in {1, 2, -3/5} -> (x1^2, x1*x2, x2^2); a = 0 fixed".into())
}

fn distraction_exhaustive() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for set in common::all_staircases(n, 6) {
            let i = MonomialIdeal::new(n, common::minimal_generators(&set, n)).map_err(|e| e.to_string())?;
            let a = DistractionParams::default_for(&i);
            let report = verify_smoothing(&i, &a).map_err(|e| e.to_string())?;
            if !report.passed() || report.points.len() != set.len() {
                return Err(format!("I = ({i}): {:?}", report.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} monomial ideals"))
}

fn trajectories() -> Outcome {
    let mut rng = common::rng(3);
    let mut checked_b = 0;
    for case in 0..200 {
        let coords = rng.gen_range(1..=6);
        let (z, a) = common::random_series_point(&mut rng, coords, 20);
        let t = broken_trajectory(&z, &a).map_err(|e| format!("case {case}: {e}"))?;
        for (i, y) in t.orbit_reps.iter().enumerate() {
            let (lo, hi) = orbit_limits(y, &a).map_err(|e| e.to_string())?;
            if lo != t.fixed_points[i] || hi != t.fixed_points[i + 1] {
                return Err(format!("case {case}: orbit {} has limits {lo}, {hi}", i + 1));
            }
        }
        if t.critical_slopes.windows(2).any(|w| w[0] <= w[1]) {
            return Err(format!("case {case}: slopes not decreasing"));
        }
        let mut tried = 0;
        while tried < 20 {
            let b = Rational::new(rng.gen_range(-120..=120).into(), rng.gen_range(1..=7).into());
            if t.critical_slopes.contains(&b) {
                continue;
            }
            tried += 1;
            let k = t.critical_slopes.iter().filter(|c| **c > b).count();
            let p = limit_point(&z, &a, &b).map_err(|e| e.to_string())?;
            if p != t.fixed_points[k] {
                return Err(format!(
                    "case {case}: b = {} gives {p}, expected {}",
                    format_rational(&b),
                    t.fixed_points[k]
                ));
            }
            checked_b += 1;
        }
    }
    Ok(format!("200 series points, {checked_b} rescalings"))
}

fn chains() -> Outcome {
    let mut rng = common::rng(4);
    let mut segments = 0;
    for case in 0..50 {
        let n = rng.gen_range(2..=3);
        let s1 = common::random_subscheme(&mut rng, n, 4);
        let s2 = loop {
            let s = common::random_subscheme_of_degree(&mut rng, n, s1.degree());
            if !s.same_as(&s1) {
                break s;
            }
        };
        let cert = connect(&s1, &s2, DEFAULT_MAX_C).map_err(|e| format!("case {case}: connect: {e}"))?;
        let report = verify_chain(&cert, 10).map_err(|e| e.to_string())?;
        if let Some(bad) = report.failures().next() {
            return Err(format!("case {case} ({s1}) -> ({s2}): {}: {}", bad.name, bad.detail));
        }
        let mutant = perturb_certificate(&cert).ok_or(format!("case {case}: nothing to perturb"))?;
        if verify_chain(&mutant, 10).map_err(|e| e.to_string())?.passed() {
            return Err(format!("case {case}: perturbed certificate verified"));
        }
        segments += cert.segments.len();
    }
    Ok(format!("50 pairs, {segments} segments, 50 mutants rejected"))
}

fn multisets(len: usize, max: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in multisets(len - 1, max) {
        let lo = m.last().copied().unwrap_or(0);
        for v in lo..=max {
            let mut x = m.clone();
            x.push(v);
            out.push(x);
        }
    }
    out
}

/// Cell by cell: coordinate `i` contributes `q^(#smaller weights + #equal weights before i)`.
fn cell_count(a: &[i64]) -> PoincarePolynomial {
    let mut coeffs = vec![0u64; a.len()];
    for (i, &w) in a.iter().enumerate() {
        let k = a.iter().filter(|&&v| v < w).count() + a[..i].iter().filter(|&&v| v == w).count();
        coeffs[k] += 1;
    }
    PoincarePolynomial::new(coeffs)
}

fn bb_exhaustive() -> Outcome {
    let mut count = 0;
    for len in 1..=7 {
        for a in multisets(len, 5) {
            let r = len - 1;
            let aw = ActionWeights(a.clone());
            let comps = fixed_components(&aw).map_err(|e| e.to_string())?;
            if comps.iter().any(|c| c.above + c.dim + c.below != r) {
                return Err(format!("{a:?}: census"));
            }
            let id = poincare_identity(&aw).map_err(|e| e.to_string())?;
            if !id.equal || id.lhs != cell_count(&a) || id.lhs.at_one() != len as u64 {
                return Err(format!("{a:?}: lhs {}", id.lhs));
            }
            for cut in 1..=comps.len() {
                let p = attractor_pair_poincare(&aw, cut).map_err(|e| e.to_string())?;
                if !p.equal || p.closed_part != p.open_part {
                    return Err(format!("{a:?}, cut {cut}: {} vs {}", p.closed_part, p.open_part));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} weight multisets"))
}

fn family_limit() -> Outcome {
    let gens = ["x1 - s*x2^2", "x2^3"].iter().map(|t| parse_family_polynomial(t, 2).unwrap()).collect();
    let seg = IdealFamily::new(2, 3, "remark", gens).unwrap();
    let w = WeightVector::new(vec![1, 1]);
    let lim = limit_of_family(&seg, &w).map_err(|e| e.to_string())?;
    if !lim.family.is_constant() {
        return Err("limit family depends on s".into());
    }
    let fat = Subscheme0D::parse("x1^2, x1*x2, x2^2", 2).unwrap();
    let generic = Subscheme0D::new(lim.family.fiber(&Rational::from_integer(1.into()))).map_err(|e| e.to_string())?;
    if !generic.same_as(&fat) {
        return Err(format!("generic fiber {generic}"));
    }
    let zero = Rational::from_integer(0.into());
    if lim.exceptional.iter().any(|z| *z != zero) || !lim.exceptional_complete {
        return Err(format!("exceptional set {:?}", lim.exceptional));
    }
    let disc = lim.discrepancies(&seg, &w).map_err(|e| e.to_string())?;
    let s0 = Subscheme0D::parse("x1, x2^3", 2).unwrap();
    match disc.as_slice() {
        [d] if d.s == zero && d.fiber_limit.as_ref().is_some_and(|l| l.same_as(&s0)) => {}
        _ => return Err(format!("{} discrepancies", disc.len())),
    }
    Ok("constant (x1^2, x1*x2, x2^2), Z = {0}, s = 0 limits to (x1, x2^3)".into())
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 remark reproduction", remark_reproduction, Duration::from_secs(1)),
        ("2 distraction exhaustive", distraction_exhaustive, Duration::from_secs(120)),
        ("3 broken trajectories", trajectories, Duration::from_secs(60)),
        ("4 chain certificates", chains, Duration::from_secs(300)),
        ("5 BB identities", bb_exhaustive, Duration::from_secs(60)),
        ("6 limit of family", family_limit, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (name, run, bound) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > bound => Err(format!("{msg}; took {took:.2?}, bound {bound:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({took:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({took:.2?})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
