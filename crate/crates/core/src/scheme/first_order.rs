//! First-order (`n = 1`) schemes on contiguous stencils `{−r, …, m − r}`,
//! where the weights reduce to binomial coefficients.

use num_traits::{One, Zero};

use super::{Scheme, SchemeSpec};
use crate::error::{Error, Result};
use crate::exact::{binomial, OffsetSet, RatPoly, Rational};

/// Closed-form first-order scheme: `c_k = (−1)^{m+r+k} C(m, r+k) ν`, plus 1
/// at `k = 0`.
pub fn first_order_scheme(m: u32, r: u32) -> Result<Scheme> {
    if m == 0 {
        return Err(Error::InvalidOrder { m, n: 1 });
    }
    if r > m {
        return Err(Error::OutOfRange { what: "r", value: i64::from(r), range: format!("0..={m}") });
    }
    let offsets = OffsetSet::contiguous(r, m);
    let indicator = offsets.iter().map(|k| if k == 0 { Rational::one() } else { Rational::zero() }).collect();
    let slope = offsets
        .iter()
        .map(|k| {
            let idx = (k + i64::from(r)) as u32;
            let magnitude = Rational::from_integer(binomial(m, idx));
            if (i64::from(m) + i64::from(r) + k).rem_euclid(2) == 0 {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect();
    Scheme::from_layers(SchemeSpec::new(m, 1, offsets)?, vec![indicator, slope])
}

/// Laurent polynomial `Σ_k c_k(ν) x^k`; `terms[i]` is the coefficient
/// (a polynomial in `ν`) of `x^{lowest_power + i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationFunction {
    pub lowest_power: i64,
    pub terms: Vec<RatPoly>,
}

impl GenerationFunction {
    /// `1 + ν x^{−r} (x − 1)^m`.
    pub fn closed_form(m: u32, r: u32) -> Self {
        let binomial_part = RatPoly::from_roots(std::iter::repeat_n(1, m as usize));
        let mut terms: Vec<RatPoly> =
            binomial_part.coeffs().iter().map(|c| RatPoly::monomial(c.clone(), 1)).collect();
        let r_idx = r as usize;
        terms[r_idx] = &terms[r_idx] + &RatPoly::one();
        Self { lowest_power: -i64::from(r), terms }
    }

    /// Fixes `ν` and returns `(lowest_power, polynomial in x)` so the
    /// function equals `x^{lowest_power} · polynomial`.
    pub fn at(&self, nu: &Rational) -> (i64, RatPoly) {
        let poly = RatPoly::from_coeffs(self.terms.iter().map(|t| t.eval(nu)).collect());
        (self.lowest_power, poly)
    }
}

/// Generation function of a first-order scheme on a contiguous stencil,
/// verified symbolically against `1 + ν x^{−r}(x − 1)^m`.
pub fn generation_function(scheme: &Scheme) -> Result<GenerationFunction> {
    if scheme.n() != 1 {
        return Err(Error::Unsupported(format!(
            "generation function needs a first-order scheme, got n={}",
            scheme.n()
        )));
    }
    let r = scheme.offsets().contiguous_r().ok_or_else(|| {
        Error::Unsupported(format!(
            "generation function needs a contiguous stencil containing 0, got {}",
            scheme.offsets()
        ))
    })?;
    let found =
        GenerationFunction { lowest_power: scheme.offsets().as_slice()[0], terms: scheme.coeffs().to_vec() };
    let expected = GenerationFunction::closed_form(scheme.m(), r);
    if found != expected {
        return Err(Error::IdentityViolated(format!(
            "generation function of m={} r={r} differs from 1 + nu x^-r (x-1)^m",
            scheme.m()
        )));
    }
    Ok(found)
}
