//! Explicit finite-difference schemes for `u_t = a_m ∂ₓᵐ u` built by matching
//! a weighted sum of shifted grid values to the exact evolution operator.
//!
//! Every coefficient is exact: a scheme's weight on offset `k` is a polynomial
//! in the generalized Courant number `ν = Δt·a_m/Δxᵐ` with rational
//! coefficients, assembled from derivatives of Lagrange basis polynomials at
//! the origin. Floating point enters only in the von Neumann analysis and in
//! the periodic 1-D solvers.
//!
//! - [`exact`]: rationals, polynomials, offset sets, Lagrange bases.
//! - [`scheme`]: scheme construction, order-condition audits, local error.
//! - [`stability`]: amplification factors and critical Courant numbers.
//! - [`solver`]: periodic stepping (linear and nonlinear advection), convergence studies.

pub mod error;
pub mod exact;
pub mod scheme;
pub mod solver;
pub mod stability;

pub use error::{Error, Result};
pub use exact::{OffsetSet, RatPoly, Rational};
pub use scheme::{Scheme, SchemeSpec};
