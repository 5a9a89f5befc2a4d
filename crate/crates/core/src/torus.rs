//! Limits of zero-dimensional subschemes of affine space under
//! `t . x_j = t^{w_j} x_j` with positive weights, as `t -> 0`.
//!
//! The limit is cut out by the `w`-maximal initial ideal: the lowest power of
//! `t` in the transformed equations belongs to the top-weight form.

use crate::error::{Error, Result};
use crate::groebner::{
    groebner_basis, initial_ideal, normal_form, staircase, Colength, Direction, GroebnerBasis, Ideal,
};
use crate::monomial::{Monomial, MonomialOrder, WeightVector};
use crate::poly::Polynomial;

/// A zero-dimensional subscheme of `A^n` of positive degree.
#[derive(Clone, Debug)]
pub struct Subscheme0D {
    ideal: Ideal,
    degree: usize,
    basis: GroebnerBasis,
}

impl Subscheme0D {
    pub fn new(ideal: Ideal) -> Result<Self> {
        let basis = groebner_basis(&ideal, &MonomialOrder::Grevlex)?;
        match staircase(&basis).colength {
            Colength::Infinite { witness } => Err(Error::NotZeroDimensional { witness }),
            Colength::Finite(0) => Err(Error::UnitIdeal),
            Colength::Finite(degree) => Ok(Subscheme0D { ideal, degree, basis }),
        }
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Subscheme0D::new(Ideal::parse(text, nvars)?)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Reduced grevlex basis.
    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn same_as(&self, other: &Subscheme0D) -> bool {
        self.basis == other.basis
    }

    pub fn is_monomial(&self) -> bool {
        self.basis.is_monomial()
    }

    /// Whether the defining ideal is `w`-homogeneous, i.e. fixed by the action.
    pub fn is_fixed_by(&self, w: &WeightVector) -> bool {
        if w.is_positive() {
            // The reduced basis under the w-refined order is w-homogeneous iff the ideal is.
            return groebner_basis(&self.ideal, &MonomialOrder::Weighted(w.clone()))
                .map(|b| b.elements().iter().all(|g| g.is_weighted_homogeneous(w)))
                .unwrap_or(false);
        }
        initial_ideal(&self.ideal, w, Direction::Max)
            .and_then(|init| groebner_basis(&init, &MonomialOrder::Grevlex))
            .map(|b| b == self.basis)
            .unwrap_or(false)
    }
}

impl PartialEq for Subscheme0D {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl std::fmt::Display for Subscheme0D {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.basis.fmt(f)
    }
}

fn check_positive(w: &WeightVector, nvars: usize) -> Result<()> {
    if w.len() != nvars {
        return Err(Error::ArityMismatch { expected: nvars, found: w.len() });
    }
    if !w.is_positive() {
        return Err(Error::NonPositiveWeight(w.weights().to_vec()));
    }
    Ok(())
}

/// `lim_{t -> 0} t(S)` for positive weights.
pub fn limit_subscheme(s: &Subscheme0D, w: &WeightVector) -> Result<Subscheme0D> {
    check_positive(w, s.nvars())?;
    let limit = Subscheme0D::new(initial_ideal(&s.ideal, w, Direction::Max)?)?;
    if limit.degree != s.degree {
        return Err(Error::DegreeMismatch { before: s.degree, after: limit.degree });
    }
    Ok(limit)
}

/// Weights `(c, c^2, ..., c^n)`, or `None` on overflow.
pub fn power_weights(c: u64, nvars: usize) -> Option<WeightVector> {
    let mut out = Vec::with_capacity(nvars);
    let mut acc: i64 = 1;
    let c = i64::try_from(c).ok()?;
    for _ in 0..nvars {
        acc = acc.checked_mul(c)?;
        out.push(acc);
    }
    Some(WeightVector::new(out))
}

pub const DEFAULT_MAX_C: u64 = 1 << 30;

#[derive(Clone, Debug)]
pub struct MonomialDegeneration {
    pub c: u64,
    pub weights: WeightVector,
    pub limit: Subscheme0D,
}

/// Finds `c` in the schedule `d+1, 2(d+1), 4(d+1), ...` (up to `max_c`) whose
/// power-weight limit is a monomial subscheme.
pub fn monomial_degeneration(s: &Subscheme0D, max_c: u64) -> Result<MonomialDegeneration> {
    let mut c = s.degree as u64 + 1;
    while c <= max_c {
        let Some(weights) = power_weights(c, s.nvars()) else { break };
        let limit = limit_subscheme(s, &weights)?;
        if limit.is_monomial() {
            return Ok(MonomialDegeneration { c, weights, limit });
        }
        c = match c.checked_mul(2) {
            Some(v) => v,
            None => break,
        };
    }
    Err(Error::SearchExhausted { cap: max_c })
}

/// Every variable is nilpotent modulo the ideal: `x_j^d` reduces to zero.
pub fn is_supported_at_origin(s: &Subscheme0D) -> bool {
    let n = s.nvars();
    (0..n).all(|j| {
        let p = Polynomial::monomial(Monomial::pure_power(n, j, s.degree as u32), num_traits::One::one());
        normal_form(&p, &s.basis).map(|r| r.is_zero()).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(text: &str, n: usize) -> Subscheme0D {
        Subscheme0D::parse(text, n).unwrap()
    }

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::new(v.to_vec())
    }

    #[test]
    fn remark_example() {
        let z = sub("x1^2, x1*x2, x2^2", 2);
        let lim = limit_subscheme(&sub("x1 - x2^2, x2^3", 2), &w(&[1, 1])).unwrap();
        assert_eq!(lim, z);
        assert_eq!(lim.degree(), 3);
        let s0 = sub("x1, x2^3", 2);
        assert_eq!(limit_subscheme(&s0, &w(&[1, 1])).unwrap(), s0);
    }

    #[test]
    fn point_moves_to_origin() {
        let lim = limit_subscheme(&sub("x1 - 1, x2", 2), &w(&[1, 1])).unwrap();
        assert_eq!(lim, sub("x1, x2", 2));
    }

    #[test]
    fn weight_errors() {
        let s = sub("x1, x2^3", 2);
        assert!(matches!(limit_subscheme(&s, &w(&[1, 0])), Err(Error::NonPositiveWeight(_))));
        assert!(matches!(limit_subscheme(&s, &w(&[1])), Err(Error::ArityMismatch { .. })));
        assert!(matches!(Subscheme0D::parse("x1", 2), Err(Error::NotZeroDimensional { witness: 2 })));
        assert!(matches!(Subscheme0D::parse("x1, x1 - 1", 1), Err(Error::UnitIdeal)));
    }

    #[test]
    fn monomialization() {
        let d = monomial_degeneration(&sub("x1 - x2^2, x2^3", 2), DEFAULT_MAX_C).unwrap();
        assert_eq!(d.c, 4);
        assert_eq!(d.limit, sub("x1^2, x1*x2, x2^2", 2));
        let m = sub("x1^2, x1*x2, x2^2", 2);
        let d = monomial_degeneration(&m, DEFAULT_MAX_C).unwrap();
        assert_eq!(d.c, 4);
        assert_eq!(d.limit, m);
        let d = monomial_degeneration(&sub("x1 - 1", 1), DEFAULT_MAX_C).unwrap();
        assert_eq!(d.c, 2);
        assert_eq!(d.limit, sub("x1", 1));
        assert!(matches!(monomial_degeneration(&m, 3), Err(Error::SearchExhausted { cap: 3 })));
    }

    #[test]
    fn weights_three_nine_also_monomialize() {
        let lim = limit_subscheme(&sub("x1 - x2^2, x2^3", 2), &power_weights(3, 2).unwrap()).unwrap();
        assert!(lim.is_monomial());
        assert_eq!(lim, sub("x1^2, x1*x2, x2^2", 2));
    }

    #[test]
    fn origin_support() {
        assert!(is_supported_at_origin(&sub("x1^2, x1*x2, x2^2", 2)));
        assert!(!is_supported_at_origin(&sub("x1 - 1, x2", 2)));
        assert!(is_supported_at_origin(&sub("x1 - x2^2, x2^3", 2)));
    }

    #[test]
    fn fixed_point_detection() {
        assert!(sub("x1, x2^3", 2).is_fixed_by(&w(&[1, 1])));
        assert!(!sub("x1 - x2^2, x2^3", 2).is_fixed_by(&w(&[1, 1])));
        assert!(sub("x1 - x2^2, x2^3", 2).is_fixed_by(&w(&[2, 1])));
    }
}
