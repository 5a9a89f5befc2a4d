//! Distraction of a zero-dimensional monomial ideal: each `x_j^e` in a
//! minimal generator becomes `(x_j - a_0)(x_j - a_1)...(x_j - a_{e-1})`.
//! For distinct parameters the result is the ideal of the points
//! `(a_{L_1}, ..., a_{L_n})`, one for each standard monomial `x^L`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, staircase, staircase_of, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Rational};
use crate::report::{all_passed, Check};

/// A zero-dimensional monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
    colength: usize,
    standard: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes the generating set and checks zero-dimensionality.
    pub fn new(nvars: usize, monomials: Vec<Monomial>) -> Result<Self> {
        for m in &monomials {
            if m.nvars() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, found: m.nvars() });
            }
        }
        let mut gens: Vec<Monomial> = Vec::new();
        let unique: BTreeSet<Monomial> = monomials.into_iter().collect();
        for m in &unique {
            if !unique.iter().any(|o| o != m && o.divides(m)) {
                gens.push(m.clone());
            }
        }
        gens.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
        let st = staircase_of(nvars, &gens);
        match st.finite() {
            None => Err(Error::NotZeroDimensional {
                witness: match st.colength {
                    crate::groebner::Colength::Infinite { witness } => witness,
                    _ => unreachable!(),
                },
            }),
            Some(0) => Err(Error::UnitIdeal),
            Some(d) => Ok(MonomialIdeal { nvars, generators: gens, colength: d, standard: st.standard_monomials }),
        }
    }

    /// Reads the monomials off an ideal whose generators are single terms.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let mut ms = Vec::new();
        for g in ideal.generators() {
            if g.is_zero() {
                continue;
            }
            if !g.is_monomial() {
                return Err(Error::NotMonomial(g.to_string()));
            }
            ms.push(g.terms().next().unwrap().0.clone());
        }
        MonomialIdeal::new(ideal.nvars(), ms)
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Self::from_ideal(&Ideal::parse(text, nvars)?)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn colength(&self) -> usize {
        self.colength
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn max_exponent(&self) -> u32 {
        self.generators.iter().flat_map(|m| m.exponents().iter().copied()).max().unwrap_or(0)
    }

    pub fn to_ideal(&self) -> Ideal {
        let gens = self.generators.iter().map(|m| Polynomial::monomial(m.clone(), num_traits::One::one())).collect();
        Ideal::new(self.nvars, gens).expect("arity")
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Parameters `a_0, ..., a_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistractionParams(pub Vec<Rational>);

impl DistractionParams {
    /// `0, 1, ..., m-1`, enough for the largest exponent of `ideal`.
    pub fn default_for(ideal: &MonomialIdeal) -> Self {
        DistractionParams((0..ideal.max_exponent() as i64).map(|l| Rational::from_integer(l.into())).collect())
    }

    pub fn is_distinct(&self) -> bool {
        let set: BTreeSet<&Rational> = self.0.iter().collect();
        set.len() == self.0.len()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        DistractionParams(self.0.iter().map(|a| a * c).collect())
    }
}

fn check_count(ideal: &MonomialIdeal, a: &DistractionParams) -> Result<()> {
    let needed = ideal.max_exponent() as usize;
    if a.0.len() < needed {
        return Err(Error::InsufficientParameters { needed, given: a.0.len() });
    }
    Ok(())
}

fn check_distinct(ideal: &MonomialIdeal, a: &DistractionParams) -> Result<()> {
    check_count(ideal, a)?;
    if !a.is_distinct() {
        return Err(Error::NonDistinctParameters);
    }
    Ok(())
}

/// `prod_j prod_{l < e_j} (x_j - roots[l])` for the exponent vector `m`.
pub(crate) fn distract_monomial(m: &Monomial, nvars: usize, roots: &[Polynomial]) -> Polynomial {
    let mut f = Polynomial::one(nvars);
    for (j, &e) in m.exponents().iter().enumerate() {
        for root in &roots[..e as usize] {
            f = f.mul(&Polynomial::var(nvars, j).sub(root));
        }
    }
    f
}

/// The generators `f_i` of `J_a`, in the order of the minimal generators.
pub fn distraction_generators(ideal: &MonomialIdeal, a: &DistractionParams) -> Result<Vec<Polynomial>> {
    check_count(ideal, a)?;
    let n = ideal.nvars;
    let roots: Vec<Polynomial> = a.0.iter().map(|c| Polynomial::constant(n, c.clone())).collect();
    Ok(ideal.generators.iter().map(|m| distract_monomial(m, n, &roots)).collect())
}

pub fn distraction_ideal(ideal: &MonomialIdeal, a: &DistractionParams) -> Result<Ideal> {
    Ideal::new(ideal.nvars, distraction_generators(ideal, a)?)
}

pub type PointQ = Vec<Rational>;

/// `(a_{L_1}, ..., a_{L_n})` for each standard monomial `x^L`, in staircase order.
pub fn standard_points(ideal: &MonomialIdeal, a: &DistractionParams) -> Result<Vec<PointQ>> {
    check_distinct(ideal, a)?;
    Ok(ideal.standard.iter().map(|l| l.exponents().iter().map(|&e| a.0[e as usize].clone()).collect()).collect())
}

#[derive(Clone, Debug)]
pub struct SmoothingReport {
    pub degree: usize,
    pub colength: Option<usize>,
    pub generators: Vec<Polynomial>,
    pub points: Vec<PointQ>,
    pub checks: Vec<Check>,
}

impl SmoothingReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Checks that `J_a` has colength `d`, grevlex initial ideal `I`, and vanishes
/// on `d` distinct standard points; together these make `J_a` their radical ideal.
pub fn verify_smoothing(ideal: &MonomialIdeal, a: &DistractionParams) -> Result<SmoothingReport> {
    check_distinct(ideal, a)?;
    let d = ideal.colength;
    let gens = distraction_generators(ideal, a)?;
    let j = Ideal::new(ideal.nvars, gens.clone())?;
    let gb = groebner_basis(&j, &MonomialOrder::Grevlex)?;
    let colength = staircase(&gb).finite();
    let points = standard_points(ideal, a)?;

    let mut checks = Vec::new();
    checks.push(Check::new(
        "colength",
        colength == Some(d),
        format!("colength {}, expected {d}", colength.map_or("infinite".to_string(), |c| c.to_string())),
    ));
    let lead: BTreeSet<&Monomial> = gb.leading_monomials().iter().collect();
    let expected: BTreeSet<&Monomial> = ideal.generators.iter().collect();
    checks.push(Check::new(
        "initial ideal",
        lead == expected,
        format!(
            "grevlex leading monomials {}",
            gb.leading_monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
        ),
    ));
    let distinct: BTreeSet<&PointQ> = points.iter().collect();
    checks.push(Check::new(
        "distinct points",
        distinct.len() == d && points.len() == d,
        format!("{} points", distinct.len()),
    ));
    let mut bad = Vec::new();
    for (pi, p) in points.iter().enumerate() {
        for (gi, g) in gens.iter().enumerate() {
            if !g.eval(p)?.is_zero() {
                bad.push(format!("f{} at point {}", gi + 1, pi + 1));
            }
        }
    }
    checks.push(Check::new(
        "vanishing",
        bad.is_empty(),
        if bad.is_empty() { "all generators vanish".to_string() } else { bad.join("; ") },
    ));
    Ok(SmoothingReport { degree: d, colength, generators: gens, points, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equals;
    use crate::poly::int;

    fn mi(text: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, n).unwrap()
    }

    fn params(v: &[i64]) -> DistractionParams {
        DistractionParams(v.iter().map(|&x| int(x)).collect())
    }

    fn pts(v: &[&[i64]]) -> Vec<PointQ> {
        v.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn minimalization() {
        let i = mi("x1^2, x1^3*x2, x1*x2, x2^2, x2^5", 2);
        assert_eq!(i.to_string(), "x1^2, x1*x2, x2^2");
        assert_eq!(i.colength(), 3);
        assert!(matches!(MonomialIdeal::parse("x2^3", 2), Err(Error::NotZeroDimensional { witness: 1 })));
        assert!(matches!(MonomialIdeal::parse("x1 - x2", 2), Err(Error::NotMonomial(_))));
    }

    #[test]
    fn distraction_examples() {
        let g = MonomialOrder::Grevlex;
        let i = mi("x1^2, x1*x2, x2^2", 2);
        let j = distraction_ideal(&i, &params(&[0, 1])).unwrap();
        assert_eq!(j.to_string(), "x1^2 - x1, x1*x2, x2^2 - x2");
        let j0 = distraction_ideal(&i, &params(&[0, 0])).unwrap();
        assert!(ideal_equals(&j0, &i.to_ideal(), &g).unwrap());
        let j = distraction_ideal(&mi("x1, x2^3", 2), &params(&[0, 1, 2])).unwrap();
        let expected = Ideal::parse("x1, x2^3 - 3*x2^2 + 2*x2", 2).unwrap();
        assert!(ideal_equals(&j, &expected, &g).unwrap());
        assert!(matches!(
            distraction_ideal(&mi("x1^3, x2", 2), &params(&[0, 1])),
            Err(Error::InsufficientParameters { needed: 3, given: 2 })
        ));
    }

    #[test]
    fn point_examples() {
        let p = standard_points(&mi("x1^2, x1*x2, x2^2", 2), &params(&[0, 1])).unwrap();
        let set: BTreeSet<PointQ> = p.into_iter().collect();
        assert_eq!(set, pts(&[&[0, 0], &[1, 0], &[0, 1]]).into_iter().collect());
        let p = standard_points(&mi("x1, x2^3", 2), &params(&[0, 1, 2])).unwrap();
        assert_eq!(p, pts(&[&[0, 0], &[0, 1], &[0, 2]]));
        let p = standard_points(&mi("x1^2", 1), &params(&[0, 1])).unwrap();
        assert_eq!(p, pts(&[&[0], &[1]]));
        assert_eq!(standard_points(&mi("x1^2, x2", 2), &params(&[0, 0])), Err(Error::NonDistinctParameters));
    }

    #[test]
    fn smoothing_examples() {
        let r = verify_smoothing(&mi("x1^2, x1*x2, x2^2", 2), &params(&[0, 1])).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.points.len(), 3);
        let r = verify_smoothing(&mi("x1, x2^3", 2), &params(&[0, 1, 2])).unwrap();
        assert!(r.passed());
        assert!(matches!(
            verify_smoothing(&mi("x1^2, x1*x2, x2^2", 2), &params(&[0, 0])),
            Err(Error::NonDistinctParameters)
        ));
    }
}
