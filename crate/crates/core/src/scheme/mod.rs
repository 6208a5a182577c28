//! Scheme construction from Lagrange-basis derivatives at the origin.
//!
//! An order-`n` scheme for `u_t = a_m ∂ₓᵐ u` on `N = nm + 1` offsets has
//! weights `c_i(ν) = Σ_{j=0..n} ν^j/j! · L_i^{(jm)}(0)`. Each scheme stores
//! both the per-offset polynomials `c_i(ν)` and the layer table
//! `w_{j,i} = L_i^{(jm)}(0)/j!` so that `c_i(ν) = Σ_j w_{j,i} ν^j`.

mod advection;
mod dump;
mod error_term;
mod first_order;

pub use advection::{advection_coefficients, default_offsets, nonlinear_layers, AdvectionFamily, LayerTable};
pub use dump::SchemeDump;
pub use error_term::{error_term, ErrorTerm};
pub use first_order::{first_order_scheme, generation_function, GenerationFunction};

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    derivatives_at_zero, factorial, int, lagrange_basis, to_f64, OffsetSet, RatPoly, Rational,
};

/// Sign of the PDE coefficient `a_m`, and hence of `ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(value: f64) -> Self {
        if value < 0.0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Positive => 1.0,
            Sign::Negative => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Derivative order `m`, time-marching order `n`, and a minimal stencil of
/// exactly `nm + 1` offsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchemeSpec {
    m: u32,
    n: u32,
    offsets: OffsetSet,
}

impl SchemeSpec {
    pub fn new(m: u32, n: u32, offsets: OffsetSet) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidOrder { m, n });
        }
        let required = Self::required_points(m, n);
        if offsets.len() != required {
            return Err(Error::StencilSize { m, n, required, got: offsets.len() });
        }
        Ok(Self { m, n, offsets })
    }

    /// Minimum (and here, exact) stencil size `nm + 1`.
    pub fn required_points(m: u32, n: u32) -> usize {
        (n as usize) * (m as usize) + 1
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn offsets(&self) -> &OffsetSet {
        &self.offsets
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} offsets={}", self.m, self.n, self.offsets)
    }
}

/// A generated scheme. Immutable once built; every constructor checks the
/// order conditions before returning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    spec: SchemeSpec,
    layers: Vec<Vec<Rational>>,
    coeffs: Vec<RatPoly>,
}

/// Builds the scheme for `spec` from the Lagrange basis on its offsets.
pub fn master_scheme(spec: &SchemeSpec) -> Result<Scheme> {
    let basis = lagrange_basis(spec.offsets());
    let layers = (0..=spec.n)
        .map(|j| {
            let inv_j_factorial = Rational::from_integer(factorial(j)).recip();
            derivatives_at_zero(&basis, j * spec.m).into_iter().map(|d| d * &inv_j_factorial).collect()
        })
        .collect();
    Scheme::from_layers(spec.clone(), layers)
}

impl Scheme {
    /// Assembles `c_i(ν) = Σ_j layers[j][i] ν^j` and verifies the order
    /// conditions.
    pub fn from_layers(spec: SchemeSpec, layers: Vec<Vec<Rational>>) -> Result<Self> {
        let points = spec.offsets.len();
        if layers.len() != spec.n as usize + 1 || layers.iter().any(|l| l.len() != points) {
            return Err(Error::Config(format!("layer table must be {} x {points} for {spec}", spec.n + 1)));
        }
        let coeffs = (0..points)
            .map(|i| RatPoly::from_coeffs(layers.iter().map(|l| l[i].clone()).collect()))
            .collect();
        let scheme = Self { spec, layers, coeffs };
        scheme.check_order_conditions()?;
        Ok(scheme)
    }

    pub fn spec(&self) -> &SchemeSpec {
        &self.spec
    }

    pub fn m(&self) -> u32 {
        self.spec.m
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    pub fn offsets(&self) -> &OffsetSet {
        &self.spec.offsets
    }

    /// `layers()[j][i]` multiplies `ν^j` on offset `i`.
    pub fn layers(&self) -> &[Vec<Rational>] {
        &self.layers
    }

    /// Per-offset polynomials `c_i(ν)`, in offset order.
    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, offset: i64) -> Option<&RatPoly> {
        self.offsets().position(offset).map(|i| &self.coeffs[i])
    }

    pub fn coefficients_at(&self, nu: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.eval(nu)).collect()
    }

    /// Coefficients at a floating-point `ν`, evaluated exactly at the binary
    /// value of `nu` and rounded once.
    pub fn float_coefficients(&self, nu: f64) -> Vec<f64> {
        match Rational::from_float(nu) {
            Some(exact) => self.coefficients_at(&exact).iter().map(to_f64).collect(),
            None => vec![f64::NAN; self.coeffs.len()],
        }
    }

    /// Layer table in floating point.
    pub fn float_layers(&self) -> Vec<Vec<f64>> {
        self.layers.iter().map(|l| l.iter().map(to_f64).collect()).collect()
    }

    /// Checks `Σ_i c_i(ν) k_i^p` for every `p ≤ nm`: `(jm)!/j! · ν^j` when
    /// `p = jm`, zero otherwise. Exact polynomial identities in `ν`.
    pub fn check_order_conditions(&self) -> Result<()> {
        let m = self.spec.m as usize;
        let top = self.spec.n as usize * m;
        for power in 0..=top {
            let found: RatPoly = self
                .offsets()
                .iter()
                .zip(&self.coeffs)
                .map(|(k, c)| c.scale(&int(k).pow(power as i32)))
                .sum();
            let expected = if power % m == 0 {
                let j = (power / m) as u32;
                let weight =
                    Rational::from_integer(factorial(power as u32)) / Rational::from_integer(factorial(j));
                RatPoly::monomial(weight, j as usize)
            } else {
                RatPoly::zero()
            };
            if found != expected {
                return Err(Error::OrderCondition {
                    power,
                    expected: expected.display_in("nu").to_string(),
                    found: found.display_in("nu").to_string(),
                });
            }
        }
        Ok(())
    }

    /// Sum of the weights in layer `j` (1 for `j = 0` when `0` is an offset,
    /// 0 for every `j ≥ 1`).
    pub fn layer_sum(&self, j: usize) -> Rational {
        self.layers[j].iter().fold(Rational::zero(), |acc, w| acc + w)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.spec)?;
        for (k, c) in self.offsets().iter().zip(&self.coeffs) {
            writeln!(f, "  c[{k:>3}] = {}", c.display_in("nu"))?;
        }
        Ok(())
    }
}
