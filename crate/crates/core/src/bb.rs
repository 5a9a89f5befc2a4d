//! Białynicki-Birula census for a diagonal `G_m`-action on `P^r` and the
//! Poincaré polynomials of the resulting cell decompositions.
//!
//! The fixed locus of `t . [x_0 : ... : x_r] = [t^{a_0} x_0 : ... : t^{a_r} x_r]`
//! has one linear component per distinct weight. Its attracting and repelling
//! cells add the coordinates of larger and smaller weight respectively.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::newton::ActionWeights;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedComponent {
    pub weight: i64,
    pub dim: usize,
    /// Coordinates of strictly larger weight.
    pub above: usize,
    /// Coordinates of strictly smaller weight.
    pub below: usize,
}

/// Components sorted by increasing weight.
pub fn fixed_components(a: &ActionWeights) -> Result<Vec<FixedComponent>> {
    if a.is_empty() {
        return Err(Error::EmptyWeights);
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &w in &a.0 {
        *counts.entry(w).or_default() += 1;
    }
    let total = a.len();
    let mut below = 0;
    let mut out = Vec::with_capacity(counts.len());
    for (&weight, &mult) in &counts {
        out.push(FixedComponent { weight, dim: mult - 1, above: total - below - mult, below });
        below += mult;
    }
    Ok(out)
}

/// A polynomial in `q` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePolynomial(Vec<u64>);

impl PoincarePolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePolynomial(coeffs)
    }

    pub fn zero() -> Self {
        PoincarePolynomial(Vec::new())
    }

    /// `[m]_q = 1 + q + ... + q^(m-1)`.
    pub fn q_integer(m: usize) -> Self {
        PoincarePolynomial(vec![1; m])
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn shifted(&self, k: usize) -> Self {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        PoincarePolynomial(v)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        PoincarePolynomial::new((0..n).map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0)).collect())
    }

    /// `q^degree P(1/q)`; requires `degree >= deg P`.
    pub fn reversed(&self, degree: usize) -> Self {
        assert!(self.0.len() <= degree + 1);
        let mut v = vec![0; degree + 1];
        for (i, &c) in self.0.iter().enumerate() {
            v[degree - i] = c;
        }
        PoincarePolynomial::new(v)
    }

    pub fn at_one(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            let power = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            let sep = if coeff.is_empty() || power.is_empty() { "" } else { "*" };
            parts.push(format!("{coeff}{sep}{power}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareIdentity {
    pub components: Vec<FixedComponent>,
    /// `sum [dim+1]_q q^below`.
    pub lhs: PoincarePolynomial,
    /// `[r+1]_q`.
    pub rhs: PoincarePolynomial,
    /// `sum [dim+1]_q q^above`, the decomposition by attracting cells.
    pub above_form: PoincarePolynomial,
    pub equal: bool,
}

/// Both cell decompositions of `P^r` against `[r+1]_q`; the attracting form
/// must be the `q`-reversal of the repelling one.
pub fn poincare_identity(a: &ActionWeights) -> Result<PoincareIdentity> {
    let components = fixed_components(a)?;
    let r = a.len() - 1;
    let mut lhs = PoincarePolynomial::zero();
    let mut above_form = PoincarePolynomial::zero();
    for c in &components {
        let cell = PoincarePolynomial::q_integer(c.dim + 1);
        lhs = lhs.add(&cell.shifted(c.below));
        above_form = above_form.add(&cell.shifted(c.above));
    }
    let rhs = PoincarePolynomial::q_integer(r + 1);
    let equal = lhs == rhs && above_form.reversed(r) == lhs;
    Ok(PoincareIdentity { components, lhs, rhs, above_form, equal })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttractorPair {
    pub r_cut: usize,
    pub components: Vec<FixedComponent>,
    /// From the repelling cells of the kept components.
    pub closed_part: PoincarePolynomial,
    /// From the attracting cells, via duality.
    pub open_part: PoincarePolynomial,
    pub equal: bool,
}

/// `Y` is the union of repelling cells of the `r_cut` lowest components and
/// `U` the union of their attracting cells. `P(Y)` sums `[dim+1]_q q^below`;
/// `P(U)` is obtained from the compactly supported classes
/// `[dim+1]_q q^above` by duality, `q^(r - above - dim) [dim+1]_q`.
pub fn attractor_pair_poincare(a: &ActionWeights, r_cut: usize) -> Result<AttractorPair> {
    let components = fixed_components(a)?;
    if r_cut == 0 || r_cut > components.len() {
        return Err(Error::CutOutOfRange { r_cut, components: components.len() });
    }
    let r = a.len() - 1;
    let kept = &components[..r_cut];
    let mut closed_part = PoincarePolynomial::zero();
    let mut open_part = PoincarePolynomial::zero();
    for c in kept {
        let cell = PoincarePolynomial::q_integer(c.dim + 1);
        closed_part = closed_part.add(&cell.shifted(c.below));
        open_part = open_part.add(&cell.shifted(r - c.above - c.dim));
    }
    let equal = closed_part == open_part;
    Ok(AttractorPair { r_cut, components: kept.to_vec(), closed_part, open_part, equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aw(v: &[i64]) -> ActionWeights {
        ActionWeights(v.to_vec())
    }

    fn fc(weight: i64, dim: usize, above: usize, below: usize) -> FixedComponent {
        FixedComponent { weight, dim, above, below }
    }

    fn pp(v: &[u64]) -> PoincarePolynomial {
        PoincarePolynomial::new(v.to_vec())
    }

    #[test]
    fn census() {
        assert_eq!(fixed_components(&aw(&[0, 1])).unwrap(), vec![fc(0, 0, 1, 0), fc(1, 0, 0, 1)]);
        assert_eq!(fixed_components(&aw(&[0, 1, 1, 2])).unwrap(), vec![fc(0, 0, 3, 0), fc(1, 1, 1, 1), fc(2, 0, 0, 3)]);
        assert_eq!(fixed_components(&aw(&[5, 5, 5])).unwrap(), vec![fc(5, 2, 0, 0)]);
        assert_eq!(fixed_components(&aw(&[])), Err(Error::EmptyWeights));
    }

    #[test]
    fn identities() {
        let p = poincare_identity(&aw(&[0, 1])).unwrap();
        assert_eq!(p.lhs, pp(&[1, 1]));
        assert!(p.equal);
        let p = poincare_identity(&aw(&[0, 1, 1, 2])).unwrap();
        assert_eq!(p.lhs, pp(&[1, 1, 1, 1]));
        assert_eq!(p.lhs.to_string(), "1 + q + q^2 + q^3");
        assert!(p.equal);
        let p = poincare_identity(&aw(&[7, 7])).unwrap();
        assert_eq!(p.lhs, pp(&[1, 1]));
        assert!(p.equal);
    }

    #[test]
    fn attractor_pairs() {
        let p = attractor_pair_poincare(&aw(&[0, 1]), 1).unwrap();
        assert_eq!((p.closed_part.clone(), p.equal), (pp(&[1]), true));
        let p = attractor_pair_poincare(&aw(&[0, 1, 1, 2]), 2).unwrap();
        assert_eq!(p.closed_part, pp(&[1, 1, 1]));
        assert_eq!(p.open_part, pp(&[1, 1, 1]));
        let p = attractor_pair_poincare(&aw(&[0, 1, 2]), 3).unwrap();
        assert_eq!(p.open_part, pp(&[1, 1, 1]));
        assert!(p.equal);
        assert_eq!(attractor_pair_poincare(&aw(&[0, 1]), 3), Err(Error::CutOutOfRange { r_cut: 3, components: 2 }));
        assert!(attractor_pair_poincare(&aw(&[0, 1]), 0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(pp(&[2, 0, 3]).to_string(), "2 + 3*q^2");
        assert_eq!(pp(&[]).to_string(), "0");
    }
}
