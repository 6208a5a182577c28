//! Exact arithmetic: rationals, dense rational polynomials, integer offset
//! sets and their Lagrange bases.

mod lagrange;
mod offsets;
mod poly;
mod rational;

pub use lagrange::{aux_polynomials, derivatives_at_zero, lagrange_basis, AuxPolynomials};
pub use offsets::OffsetSet;
pub use poly::RatPoly;
pub use rational::{binomial, factorial, int, parse_rational, rat, to_f64, Rational};
