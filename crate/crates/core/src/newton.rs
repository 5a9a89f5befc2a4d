//! Limits of a curve germ in `P^r` under a diagonal `G_m`-action.
//!
//! The germ is `[z_0(u) : ... : z_r(u)]` with truncated Laurent series
//! coordinates and the action is `t . [z_i] = [t^{a_i} z_i]`. Rescaling by
//! `g(u) = u^b` and letting `u -> 0` keeps exactly the coordinates minimizing
//! `b * a_i + ord_u(z_i)`; these are read off the lower convex hull of the
//! points `(a_i, ord_u(z_i))`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

/// A Laurent series in `u` known modulo `u^truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<i64, Rational>,
    truncation: i64,
    identically_zero: bool,
}

impl TruncatedSeries {
    pub fn new<I: IntoIterator<Item = (i64, Rational)>>(terms: I, truncation: i64) -> Result<Self> {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e >= truncation {
                return Err(Error::TermBeyondTruncation { exponent: e, truncation });
            }
            let entry = map.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries { terms: map, truncation, identically_zero: false })
    }

    pub fn zero(truncation: i64) -> Self {
        TruncatedSeries { terms: BTreeMap::new(), truncation, identically_zero: true }
    }

    /// `c * u^k`.
    pub fn monomial(c: Rational, k: i64, truncation: i64) -> Result<Self> {
        Self::new([(k, c)], truncation)
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn is_identically_zero(&self) -> bool {
        self.identically_zero
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    /// Same series known to a higher order (the new range is filled with zeros).
    pub fn with_truncation(&self, truncation: i64) -> Self {
        assert!(truncation >= self.truncation);
        TruncatedSeries { truncation, ..self.clone() }
    }

    /// `None` when no term below the truncation order is known to be nonzero.
    pub fn valuation(&self) -> Option<Valuation> {
        if self.identically_zero {
            return Some(Valuation::Infinite);
        }
        self.terms.keys().next().map(|&e| Valuation::Finite(e))
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// Parses a sum of `c*u^k` terms (`k` may be negative); `"0"` is the zero series.
    pub fn parse(text: &str, truncation: i64) -> Result<Self> {
        if text.trim() == "0" {
            return Ok(Self::zero(truncation));
        }
        let terms = parse_series_terms(text)?;
        Self::new(terms, truncation)
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.identically_zero || self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            match *e {
                0 => f.write_str(&format_rational(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", format_rational(&a))?;
                    }
                    if *e == 1 {
                        f.write_str("u")?;
                    } else {
                        write!(f, "u^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn parse_series_terms(text: &str) -> Result<Vec<(i64, Rational)>> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let end = text.len();
    let mut i = 0;
    let at = |i: usize| chars.get(i).map(|x| x.1);
    let pos = |i: usize| chars.get(i).map(|x| x.0).unwrap_or(end);
    let syntax = |i: usize, m: &str| Error::Syntax { position: pos(i), message: m.into() };
    let read_nat = |i: &mut usize| -> Option<BigInt> {
        let start = *i;
        while at(*i).is_some_and(|c| c.is_ascii_digit()) {
            *i += 1;
        }
        if *i == start {
            return None;
        }
        chars[start..*i].iter().map(|x| x.1).collect::<String>().parse().ok()
    };
    if chars.is_empty() {
        return Err(syntax(0, "empty series"));
    }
    let mut out = Vec::new();
    let mut sign = BigInt::one();
    if at(i) == Some('-') {
        sign = -sign;
        i += 1;
    }
    loop {
        let mut coeff = Rational::one();
        let mut exp = 0i64;
        let mut has_u = true;
        match at(i) {
            Some(c) if c.is_ascii_digit() => {
                let n = read_nat(&mut i).unwrap();
                coeff = Rational::from_integer(n);
                if at(i) == Some('/') {
                    i += 1;
                    let dpos = pos(i);
                    let d = read_nat(&mut i).ok_or_else(|| syntax(i, "expected denominator"))?;
                    if d.is_zero() {
                        return Err(Error::ZeroDenominator { position: dpos });
                    }
                    coeff /= Rational::from_integer(d);
                }
                if at(i) == Some('*') {
                    i += 1;
                    if at(i) != Some('u') {
                        return Err(syntax(i, "expected 'u'"));
                    }
                } else {
                    has_u = false;
                }
            }
            Some('u') => {}
            _ => return Err(syntax(i, "expected term")),
        }
        if has_u {
            i += 1;
            exp = 1;
            if at(i) == Some('^') {
                i += 1;
                let neg = at(i) == Some('-');
                if neg {
                    i += 1;
                }
                let n = read_nat(&mut i).ok_or_else(|| syntax(i, "expected exponent"))?;
                let v = i64::try_from(n).map_err(|_| syntax(i, "exponent too large"))?;
                exp = if neg { -v } else { v };
            }
        }
        out.push((exp, coeff * Rational::from_integer(sign.clone())));
        match at(i) {
            None => break,
            Some('+') => sign = BigInt::one(),
            Some('-') => sign = -BigInt::one(),
            Some(_) => return Err(syntax(i, "expected '+', '-' or end of input")),
        }
        i += 1;
    }
    Ok(out)
}

/// A point of `P^r` over truncated Laurent series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPoint {
    coordinates: Vec<TruncatedSeries>,
}

impl SeriesPoint {
    pub fn new(coordinates: Vec<TruncatedSeries>) -> Result<Self> {
        if coordinates.is_empty() || coordinates.iter().all(TruncatedSeries::is_identically_zero) {
            return Err(Error::ZeroPoint);
        }
        Ok(SeriesPoint { coordinates })
    }

    /// Parses `;`-separated series literals sharing one truncation order.
    pub fn parse(text: &str, truncation: i64) -> Result<Self> {
        let coords = text.split(';').map(|s| TruncatedSeries::parse(s, truncation)).collect::<Result<Vec<_>>>()?;
        SeriesPoint::new(coords)
    }

    pub fn coordinates(&self) -> &[TruncatedSeries] {
        &self.coordinates
    }

    pub fn with_truncation(&self, truncation: i64) -> Self {
        SeriesPoint { coordinates: self.coordinates.iter().map(|c| c.with_truncation(truncation)).collect() }
    }

    fn valuations(&self) -> Result<Vec<Valuation>> {
        self.coordinates
            .iter()
            .enumerate()
            .map(|(i, z)| z.valuation().ok_or(Error::UndeterminedValuation { coordinate: i, truncation: z.truncation }))
            .collect()
    }
}

/// Weights `a_0, ..., a_r` of the diagonal action on `P^r`. Need not be sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionWeights(pub Vec<i64>);

impl ActionWeights {
    pub fn new(a: Vec<i64>) -> Self {
        ActionWeights(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check(&self, r1: usize) -> Result<()> {
        if self.0.len() != r1 {
            return Err(Error::ArityMismatch { expected: r1, found: self.0.len() });
        }
        Ok(())
    }
}

/// A rational point of `P^r`, scaled so that its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePointQ {
    coordinates: Vec<Rational>,
}

impl ProjectivePointQ {
    pub fn new(coordinates: Vec<Rational>) -> Result<Self> {
        let Some(lead) = coordinates.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::ZeroPoint);
        };
        Ok(ProjectivePointQ { coordinates: coordinates.into_iter().map(|c| c / &lead).collect() })
    }

    pub fn from_ints(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.coordinates
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coordinates.len()).filter(|&i| !self.coordinates[i].is_zero()).collect()
    }

    /// Whether all coordinates in the support share one weight.
    pub fn is_fixed(&self, a: &ActionWeights) -> bool {
        let s = self.support();
        s.iter().all(|&i| a.0[i] == a.0[s[0]])
    }
}

impl std::fmt::Display for ProjectivePointQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coordinates.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullVertex {
    pub weight: i64,
    pub valuation: i64,
    /// Coordinates whose point `(a_i, ord z_i)` is this vertex.
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullEdge {
    /// Positions of the end vertices in [`NewtonPolygon::vertices`].
    pub left: usize,
    pub right: usize,
    pub slope: Rational,
    /// Coordinates whose point lies on the closed edge.
    pub indices: Vec<usize>,
}

/// Lower convex hull of the finite points `(a_i, ord_u z_i)`, vertices by increasing weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<HullVertex>,
    pub edges: Vec<HullEdge>,
}

fn finite_points(z: &SeriesPoint, a: &ActionWeights) -> Result<Vec<(usize, i64, i64)>> {
    a.check(z.coordinates.len())?;
    let vals = z.valuations()?;
    Ok(vals
        .iter()
        .enumerate()
        .filter_map(|(i, v)| match v {
            Valuation::Finite(v) => Some((i, a.0[i], *v)),
            Valuation::Infinite => None,
        })
        .collect())
}

fn cross(o: (i64, i64), p: (i64, i64), q: (i64, i64)) -> i128 {
    (p.0 - o.0) as i128 * (q.1 - o.1) as i128 - (p.1 - o.1) as i128 * (q.0 - o.0) as i128
}

pub fn newton_polygon(z: &SeriesPoint, a: &ActionWeights) -> Result<NewtonPolygon> {
    let pts = finite_points(z, a)?;
    // lowest valuation per weight
    let mut lowest: BTreeMap<i64, i64> = BTreeMap::new();
    for &(_, w, v) in &pts {
        let e = lowest.entry(w).or_insert(v);
        *e = (*e).min(v);
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for (&w, &v) in &lowest {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], (w, v)) <= 0 {
            hull.pop();
        }
        hull.push((w, v));
    }
    let vertices: Vec<HullVertex> = hull
        .iter()
        .map(|&(w, v)| HullVertex {
            weight: w,
            valuation: v,
            indices: pts.iter().filter(|p| p.1 == w && p.2 == v).map(|p| p.0).collect(),
        })
        .collect();
    let edges = hull
        .windows(2)
        .enumerate()
        .map(|(k, pair)| {
            let (l, r) = (pair[0], pair[1]);
            HullEdge {
                left: k,
                right: k + 1,
                slope: Rational::new(BigInt::from(r.1 - l.1), BigInt::from(r.0 - l.0)),
                indices: pts
                    .iter()
                    .filter(|p| p.1 >= l.0 && p.1 <= r.0 && cross(l, r, (p.1, p.2)) == 0)
                    .map(|p| p.0)
                    .collect(),
            }
        })
        .collect();
    Ok(NewtonPolygon { vertices, edges })
}

fn point_on(z: &SeriesPoint, indices: &[usize]) -> ProjectivePointQ {
    let mut c = vec![Rational::zero(); z.coordinates.len()];
    for &i in indices {
        c[i] = z.coordinates[i].leading_coefficient().cloned().expect("finite valuation");
    }
    ProjectivePointQ::new(c).expect("nonempty index set")
}

/// `lim_{u -> 0} [u^{b a_0} z_0(u) : ... : u^{b a_r} z_r(u)]`.
pub fn limit_point(z: &SeriesPoint, a: &ActionWeights, b: &Rational) -> Result<ProjectivePointQ> {
    let pts = finite_points(z, a)?;
    let score = |w: i64, v: i64| b * Rational::from_integer(w.into()) + Rational::from_integer(v.into());
    let min = pts.iter().map(|&(_, w, v)| score(w, v)).min().ok_or(Error::ZeroPoint)?;
    let chosen: Vec<usize> = pts.iter().filter(|&&(_, w, v)| score(w, v) == min).map(|p| p.0).collect();
    Ok(point_on(z, &chosen))
}

/// Fixed points, connecting orbits and critical slopes of the limit cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenTrajectory {
    pub fixed_points: Vec<ProjectivePointQ>,
    pub orbit_reps: Vec<ProjectivePointQ>,
    /// Strictly decreasing.
    pub critical_slopes: Vec<Rational>,
    pub edge_supports: Vec<Vec<usize>>,
    /// Geometric degree of each orbit closure: weight span over the gcd of weight gaps.
    pub orbit_degrees: Vec<u64>,
    /// Weight of each fixed point.
    pub vertex_weights: Vec<i64>,
}

pub fn broken_trajectory(z: &SeriesPoint, a: &ActionWeights) -> Result<BrokenTrajectory> {
    let poly = newton_polygon(z, a)?;
    let fixed_points = poly.vertices.iter().map(|v| point_on(z, &v.indices)).collect();
    let mut orbit_reps = Vec::new();
    let mut critical_slopes = Vec::new();
    let mut edge_supports = Vec::new();
    let mut orbit_degrees = Vec::new();
    for e in &poly.edges {
        orbit_reps.push(point_on(z, &e.indices));
        critical_slopes.push(-e.slope.clone());
        let ws: Vec<i64> = e.indices.iter().map(|&i| a.0[i]).collect();
        let lo = *ws.iter().min().unwrap();
        let hi = *ws.iter().max().unwrap();
        let g = ws.iter().fold(0i64, |g, &w| g.gcd(&(w - lo)));
        orbit_degrees.push(((hi - lo) / g) as u64);
        edge_supports.push(e.indices.clone());
    }
    Ok(BrokenTrajectory {
        fixed_points,
        orbit_reps,
        critical_slopes,
        edge_supports,
        orbit_degrees,
        vertex_weights: poly.vertices.iter().map(|v| v.weight).collect(),
    })
}

/// `(lim_{t -> 0} t.p, lim_{t -> oo} t.p)`: the minimum- and maximum-weight parts of the support.
pub fn orbit_limits(p: &ProjectivePointQ, a: &ActionWeights) -> Result<(ProjectivePointQ, ProjectivePointQ)> {
    a.check(p.coordinates.len())?;
    let support = p.support();
    let lo = support.iter().map(|&i| a.0[i]).min().ok_or(Error::ZeroPoint)?;
    let hi = support.iter().map(|&i| a.0[i]).max().unwrap();
    let keep = |w: i64| {
        let c = p
            .coordinates
            .iter()
            .enumerate()
            .map(|(i, c)| if a.0[i] == w { c.clone() } else { Rational::zero() })
            .collect();
        ProjectivePointQ::new(c)
    };
    Ok((keep(lo)?, keep(hi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn series(text: &str) -> TruncatedSeries {
        TruncatedSeries::parse(text, 20).unwrap()
    }

    fn pt(texts: &[&str]) -> SeriesPoint {
        SeriesPoint::new(texts.iter().map(|t| series(t)).collect()).unwrap()
    }

    fn aw(v: &[i64]) -> ActionWeights {
        ActionWeights::new(v.to_vec())
    }

    fn pq(v: &[i64]) -> ProjectivePointQ {
        ProjectivePointQ::from_ints(v).unwrap()
    }

    #[test]
    fn series_literals() {
        let s = series("1 + 2*u^3");
        assert_eq!(s.valuation(), Some(Valuation::Finite(0)));
        assert_eq!(s.to_string(), "1 + 2*u^3");
        let s = series("-3/2*u^-2 + u");
        assert_eq!(s.valuation(), Some(Valuation::Finite(-2)));
        assert_eq!(s.leading_coefficient(), Some(&rat(-3, 2)));
        assert_eq!(series("u").valuation(), Some(Valuation::Finite(1)));
        assert!(series("0").is_identically_zero());
        assert_eq!(series("0").valuation(), Some(Valuation::Infinite));
        assert_eq!(series("u - u").valuation(), None);
        assert!(matches!(TruncatedSeries::parse("u^20", 20), Err(Error::TermBeyondTruncation { .. })));
        assert!(matches!(TruncatedSeries::parse("1 +", 20), Err(Error::Syntax { .. })));
        assert!(matches!(TruncatedSeries::parse("2*x", 20), Err(Error::Syntax { .. })));
        assert!(matches!(TruncatedSeries::parse("1/0", 20), Err(Error::ZeroDenominator { .. })));
    }

    #[test]
    fn polygon_examples() {
        let p = newton_polygon(&pt(&["1", "u"]), &aw(&[0, 1])).unwrap();
        assert_eq!(p.vertices.iter().map(|v| (v.weight, v.valuation)).collect::<Vec<_>>(), vec![(0, 0), (1, 1)]);
        assert_eq!(p.edges.len(), 1);
        assert_eq!(p.edges[0].slope, int(1));

        let p = newton_polygon(&pt(&["u^2", "u", "1"]), &aw(&[0, 1, 2])).unwrap();
        assert_eq!(p.vertices.iter().map(|v| (v.weight, v.valuation)).collect::<Vec<_>>(), vec![(0, 2), (2, 0)]);
        assert_eq!(p.edges[0].slope, int(-1));
        assert_eq!(p.edges[0].indices, vec![0, 1, 2]);

        let p = newton_polygon(&pt(&["1", "0"]), &aw(&[0, 1])).unwrap();
        assert_eq!(p.vertices.len(), 1);
        assert!(p.edges.is_empty());
    }

    #[test]
    fn undetermined_valuation_is_rejected() {
        let z = SeriesPoint::new(vec![series("1"), series("u - u")]).unwrap();
        assert!(matches!(newton_polygon(&z, &aw(&[0, 1])), Err(Error::UndeterminedValuation { coordinate: 1, .. })));
        assert!(matches!(limit_point(&z, &aw(&[0, 1]), &int(0)), Err(Error::UndeterminedValuation { .. })));
    }

    #[test]
    fn limit_point_examples() {
        let z = pt(&["1", "u"]);
        assert_eq!(limit_point(&z, &aw(&[0, 1]), &int(0)).unwrap(), pq(&[1, 0]));
        assert_eq!(limit_point(&z, &aw(&[0, 1]), &int(-1)).unwrap(), pq(&[1, 1]));
        let z = pt(&["u^2", "u", "1"]);
        assert_eq!(limit_point(&z, &aw(&[0, 1, 2]), &int(1)).unwrap(), pq(&[1, 1, 1]));
    }

    #[test]
    fn trajectory_examples() {
        let t = broken_trajectory(&pt(&["1", "u"]), &aw(&[0, 1])).unwrap();
        assert_eq!(t.fixed_points, vec![pq(&[1, 0]), pq(&[0, 1])]);
        assert_eq!(t.orbit_reps, vec![pq(&[1, 1])]);
        assert_eq!(t.critical_slopes, vec![int(-1)]);

        let t = broken_trajectory(&pt(&["u^2", "u", "1"]), &aw(&[0, 1, 2])).unwrap();
        assert_eq!(t.fixed_points, vec![pq(&[1, 0, 0]), pq(&[0, 0, 1])]);
        assert_eq!(t.orbit_reps, vec![pq(&[1, 1, 1])]);
        assert_eq!(t.orbit_degrees, vec![2]);

        let t = broken_trajectory(&pt(&["1 + u", "0"]), &aw(&[0, 1])).unwrap();
        assert_eq!(t.fixed_points, vec![pq(&[1, 0])]);
        assert!(t.orbit_reps.is_empty());
    }

    #[test]
    fn orbit_limit_examples() {
        assert_eq!(orbit_limits(&pq(&[1, 1]), &aw(&[0, 1])).unwrap(), (pq(&[1, 0]), pq(&[0, 1])));
        assert_eq!(orbit_limits(&pq(&[1, 1, 1]), &aw(&[0, 1, 2])).unwrap(), (pq(&[1, 0, 0]), pq(&[0, 0, 1])));
        assert_eq!(orbit_limits(&pq(&[0, 1, 0]), &aw(&[0, 1, 2])).unwrap(), (pq(&[0, 1, 0]), pq(&[0, 1, 0])));
    }

    #[test]
    fn orbit_limits_match_substitution() {
        // t = 1/1000 and t = 1000: the coordinates that dominate after scaling
        let p = pq(&[1, 1, 1]);
        let a = aw(&[0, 1, 2]);
        let (lo, hi) = orbit_limits(&p, &a).unwrap();
        for (t, expected) in [(rat(1, 1000), lo), (int(1000), hi)] {
            let moved: Vec<Rational> =
                p.coordinates().iter().zip(&a.0).map(|(c, &w)| c * num_traits::pow(t.clone(), w as usize)).collect();
            let big = moved.iter().map(|c| c.abs()).max().unwrap();
            let dominant: Vec<usize> = (0..moved.len()).filter(|&i| moved[i].abs() * int(100) >= big).collect();
            assert_eq!(dominant, expected.support());
        }
    }

    #[test]
    fn projective_equality_is_up_to_scalar() {
        assert_eq!(ProjectivePointQ::new(vec![int(2), int(4)]).unwrap(), pq(&[1, 2]));
        assert_eq!(ProjectivePointQ::new(vec![int(0), int(0)]), Err(Error::ZeroPoint));
    }
}
