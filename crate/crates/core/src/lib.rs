//! Exact computations around multiplicative-group actions on Hilbert schemes
//! of points: torus limits, Newton-polygon broken trajectories, distraction
//! smoothings, chain-of-lines certificates and Białynicki-Birula bookkeeping.
//!
//! All arithmetic is over `Q` with arbitrary precision.

pub mod bb;
pub mod chains;
pub mod distraction;
pub mod error;
pub mod groebner;
pub mod monomial;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod report;
pub mod torus;
pub mod unipoly;

pub use bb::{attractor_pair_poincare, fixed_components, poincare_identity, FixedComponent, PoincarePolynomial};
pub use chains::{connect, limit_of_family, verify_chain, ChainCertificate, Segment};
pub use distraction::{distraction_ideal, standard_points, verify_smoothing, DistractionParams, MonomialIdeal};
pub use error::{Error, Result};
pub use groebner::{
    groebner_basis, ideal_equals, initial_ideal, normal_form, staircase, Colength, Direction, GroebnerBasis, Ideal,
    Staircase,
};
pub use monomial::{compare_monomials, weight_value, Monomial, MonomialOrder, WeightVector};
pub use newton::{broken_trajectory, limit_point, newton_polygon, ActionWeights, BrokenTrajectory, SeriesPoint};
pub use parse::{parse_family_polynomial, parse_polynomial, parse_polynomial_list};
pub use poly::{Polynomial, Rational};
pub use torus::{limit_subscheme, monomial_degeneration, Subscheme0D};
