//! Moving configurations of distinct points one point at a time.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::PointMotion;
use crate::distraction::PointQ;
use crate::error::{Error, Result};
use crate::poly::Rational;

/// The points `(l, 0, ..., 0)` for `l = 0..d`.
pub fn standard_configuration(d: usize, nvars: usize) -> Vec<PointQ> {
    (0..d)
        .map(|l| {
            let mut p = vec![Rational::zero(); nvars];
            if nvars > 0 {
                p[0] = Rational::from_integer((l as i64).into());
            }
            p
        })
        .collect()
}

/// Parameters `s` (anywhere on the line) at which the moving point meets
/// another point, as `(other index, s)`.
pub fn collision_parameters(m: &PointMotion) -> Vec<(usize, Rational)> {
    let a = &m.start[m.moving];
    let b = &m.end[m.moving];
    let mut out = Vec::new();
    for (j, q) in m.start.iter().enumerate() {
        if j == m.moving {
            continue;
        }
        let mut s: Option<Rational> = None;
        let mut ok = true;
        for k in 0..a.len() {
            let dir = &b[k] - &a[k];
            if dir.is_zero() {
                ok &= q[k] == a[k];
            } else {
                let t = (&q[k] - &a[k]) / dir;
                match &s {
                    Some(prev) => ok &= *prev == t,
                    None => s = Some(t),
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            // With no moving coordinate the point is static and distinct from q.
            if let Some(t) = s {
                out.push((j, t));
            }
        }
    }
    out
}

fn check_config(p: &[PointQ], nvars: usize, what: &str) -> Result<()> {
    if p.iter().any(|q| q.len() != nvars) {
        return Err(Error::InvalidConfiguration(format!("{what}: points must have {nvars} coordinates")));
    }
    let set: BTreeSet<&PointQ> = p.iter().collect();
    if set.len() != p.len() {
        return Err(Error::InvalidConfiguration(format!("{what}: points are not distinct")));
    }
    Ok(())
}

/// Straight-line moves taking configuration `from` to `to` (as sets), each
/// collision-free on the whole parameter line; a move that would collide is
/// replaced by two moves through a waypoint off the line.
pub fn motion_segments(from: &[PointQ], to: &[PointQ]) -> Result<Vec<PointMotion>> {
    if from.len() != to.len() {
        return Err(Error::InvalidConfiguration(format!("{} points cannot move to {}", from.len(), to.len())));
    }
    if from.is_empty() {
        return Ok(Vec::new());
    }
    let n = from[0].len();
    if n < 2 {
        return Err(Error::InvalidConfiguration("point motions need n >= 2; use a line segment for n = 1".into()));
    }
    check_config(from, n, "start")?;
    check_config(to, n, "target")?;

    let from_set: BTreeSet<&PointQ> = from.iter().collect();
    let to_set: BTreeSet<&PointQ> = to.iter().collect();
    let mut leaving: Vec<usize> = (0..from.len()).filter(|&i| !to_set.contains(&from[i])).collect();
    leaving.sort_by(|&i, &j| from[i].cmp(&from[j]));
    let mut arriving: Vec<&PointQ> = to.iter().filter(|q| !from_set.contains(q)).collect();
    arriving.sort();

    let bound = from.iter().chain(to).flatten().map(|c| c.abs()).max().unwrap_or_else(Rational::zero);
    let mut current = from.to_vec();
    let mut moves = Vec::new();
    for (&i, &target) in leaving.iter().zip(&arriving) {
        let direct = PointMotion::new(current.clone(), i, target.clone())?;
        if collision_parameters(&direct).is_empty() {
            current = direct.end.clone();
            moves.push(direct);
            continue;
        }
        let a = &current[i];
        let off_axis = if (0..n).any(|k| k != 1 && a[k] != target[k]) { 1 } else { 0 };
        let mut k = &bound + Rational::from_integer(1.into());
        loop {
            let mut waypoint: PointQ =
                a.iter().zip(target).map(|(x, y)| (x + y) / Rational::from_integer(2.into())).collect();
            waypoint[off_axis] += &k;
            let first = PointMotion::new(current.clone(), i, waypoint)?;
            let second = PointMotion::new(first.end.clone(), i, target.clone())?;
            if collision_parameters(&first).is_empty() && collision_parameters(&second).is_empty() {
                current = second.end.clone();
                moves.push(first);
                moves.push(second);
                break;
            }
            k += Rational::from_integer(1.into());
        }
    }
    Ok(moves)
}
