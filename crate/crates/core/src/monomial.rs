//! Exponent vectors, integer weight vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xn^en`, stored as its exponent vector.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors and
/// only serves as a storage key; use [`MonomialOrder`] for algebraic orders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn pure_power(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Index of the single variable when this is a pure power `x_j^e` with `e > 0`.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut found = None;
        for (j, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(j);
            }
        }
        found
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops the last variable, which must have exponent zero.
    pub(crate) fn truncate_last(&self) -> (Monomial, u32) {
        let mut e = self.0.clone();
        let last = e.pop().unwrap_or(0);
        (Monomial(e), last)
    }

    pub(crate) fn extend(&self, extra: u32) -> Monomial {
        let mut e = self.0.clone();
        e.push(extra);
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::write_monomial(f, self, &crate::parse::VarNames::plain())
    }
}

/// Integer weights `(w_1, ..., w_n)`, one per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn uniform(nvars: usize, w: i64) -> Self {
        WeightVector(vec![w; nvars])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&w| w > 0)
    }

    pub fn negated(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|w| -w).collect())
    }

    pub(crate) fn value_unchecked(&self, m: &Monomial) -> i128 {
        self.0.iter().zip(m.exponents()).map(|(&w, &e)| w as i128 * e as i128).sum()
    }
}

/// `sum_j w_j * e_j`.
pub fn weight_value(m: &Monomial, w: &WeightVector) -> Result<i128> {
    if m.nvars() != w.len() {
        return Err(Error::ArityMismatch { expected: w.len(), found: m.nvars() });
    }
    Ok(w.value_unchecked(m))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x1 > x2 > ... > xn`.
    Grevlex,
    /// Higher weight sorts greater; ties broken by grevlex.
    Weighted(WeightVector),
    /// Lexicographic with `x1 > x2 > ... > xn`.
    Lex,
}

impl MonomialOrder {
    /// Whether `1` is the minimal monomial, i.e. Buchberger terminates.
    pub fn is_global(&self) -> bool {
        match self {
            MonomialOrder::Grevlex | MonomialOrder::Lex => true,
            MonomialOrder::Weighted(w) => w.is_positive(),
        }
    }

    pub(crate) fn check_arity(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Weighted(w) = self {
            if w.len() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, found: w.len() });
            }
        }
        Ok(())
    }

    /// Comparison without arity checks; callers guarantee matching lengths.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Weighted(w) => w.value_unchecked(a).cmp(&w.value_unchecked(b)).then_with(|| grevlex(a, b)),
        }
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    // Last differing exponent decides: smaller exponent there is the larger monomial.
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

pub fn compare_monomials(m1: &Monomial, m2: &Monomial, ord: &MonomialOrder) -> Result<Ordering> {
    if m1.nvars() != m2.nvars() {
        return Err(Error::ArityMismatch { expected: m1.nvars(), found: m2.nvars() });
    }
    ord.check_arity(m1.nvars())?;
    Ok(ord.cmp(m1, m2))
}
