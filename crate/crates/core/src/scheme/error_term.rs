//! Leading local error of a scheme against the exact evolution operator.
//!
//! One step on smooth data leaves
//!
//! ```text
//! Δx^N (Σ_j ν^j/j! P^{(jm)}(0)) u^{(N)}/N!
//!   + Δx^{N+1} (Σ_j ν^j/j! Q^{(jm)}(0)) u^{(N+1)}/(N+1)!
//!   − (Δt a_m)^{n+1} u^{((n+1)m)}/(n+1)!
//! ```
//!
//! plus higher-order terms. Writing `Δt a_m = ν Δxᵐ`, every term has the
//! shape `coefficient(ν) · Δx^d · u^{(d)}/d!`, which is how components are
//! reported here.

use num_traits::One;

use super::Scheme;
use crate::exact::{aux_polynomials, factorial, to_f64, RatPoly, Rational};

/// `coefficient(ν) · Δx^order · u^{(order)} / order!`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorComponent {
    pub order: usize,
    pub coefficient: RatPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorTerm {
    pub m: u32,
    pub n: u32,
    /// Stencil size `N`; the P-term is `O(Δx^N)`.
    pub points: usize,
    pub p_sum: RatPoly,
    pub q_sum: RatPoly,
}

pub fn error_term(scheme: &Scheme) -> ErrorTerm {
    let (m, n) = (scheme.m(), scheme.n());
    let aux = aux_polynomials(scheme.offsets());
    let weighted_sum = |poly: &RatPoly| -> RatPoly {
        let coeffs = (0..=n)
            .map(|j| {
                let d = (j * m) as usize;
                poly.coeff(d) * Rational::from_integer(factorial(j * m))
                    / Rational::from_integer(factorial(j))
            })
            .collect();
        RatPoly::from_coeffs(coeffs)
    };
    let term = ErrorTerm {
        m,
        n,
        points: scheme.offsets().len(),
        p_sum: weighted_sum(&aux.p),
        q_sum: weighted_sum(&aux.q),
    };
    if m == 1 {
        let product = -RatPoly::from_roots(scheme.offsets().iter());
        assert_eq!(
            term.component(term.points).coefficient,
            product,
            "advection error must collapse to -prod(nu - k_i)"
        );
    }
    term
}

impl ErrorTerm {
    /// `−(Δt a_m)^{n+1} u^{((n+1)m)}/(n+1)!` rewritten in `ν` and `Δx`.
    pub fn temporal(&self) -> ErrorComponent {
        let order = ((self.n + 1) * self.m) as usize;
        let weight =
            Rational::from_integer(factorial(order as u32)) / Rational::from_integer(factorial(self.n + 1));
        ErrorComponent { order, coefficient: RatPoly::monomial(-weight, self.n as usize + 1) }
    }

    /// Sum of all tracked terms at `Δx^order`. Orders above `N + 1` are not
    /// tracked (the expansion omits their spatial contributions).
    pub fn component(&self, order: usize) -> ErrorComponent {
        let mut coefficient = RatPoly::zero();
        if order == self.points {
            coefficient = &coefficient + &self.p_sum;
        }
        if order == self.points + 1 {
            coefficient = &coefficient + &self.q_sum;
        }
        let temporal = self.temporal();
        if temporal.order == order {
            coefficient = &coefficient + &temporal.coefficient;
        }
        ErrorComponent { order, coefficient }
    }

    /// Lowest nonvanishing component at order `N` or `N + 1`.
    pub fn leading(&self) -> Option<ErrorComponent> {
        [self.points, self.points + 1]
            .into_iter()
            .map(|order| self.component(order))
            .find(|c| !c.coefficient.is_zero())
    }

    /// Predicted one-step error from the `N` and `N + 1` components, given
    /// `derivative(d) = u^{(d)}(x)`.
    pub fn predict(&self, nu: f64, dx: f64, derivative: impl Fn(usize) -> f64) -> f64 {
        [self.points, self.points + 1]
            .into_iter()
            .map(|order| {
                let c = self.component(order);
                let inv_factorial = Rational::one() / Rational::from_integer(factorial(order as u32));
                c.coefficient.eval_f64(nu)
                    * dx.powi(order as i32)
                    * derivative(order)
                    * to_f64(&inv_factorial)
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, OffsetSet};
    use crate::scheme::{master_scheme, SchemeSpec};

    fn scheme(m: u32, n: u32, offsets: &[i64]) -> Scheme {
        let spec = SchemeSpec::new(m, n, OffsetSet::new(offsets.to_vec()).unwrap()).unwrap();
        master_scheme(&spec).unwrap()
    }

    #[test]
    fn lax_wendroff_leading_error() {
        let term = error_term(&scheme(1, 2, &[-1, 0, 1]));
        let leading = term.leading().unwrap();
        assert_eq!(leading.order, 3);
        // −ν(ν − 1)(ν + 1), multiplying Δx³ u'''/3!
        assert_eq!(leading.coefficient, -RatPoly::from_roots([0, 1, -1]));
    }

    #[test]
    fn upwind_leading_error() {
        let term = error_term(&scheme(1, 1, &[-1, 0]));
        let leading = term.leading().unwrap();
        assert_eq!(leading.order, 2);
        assert_eq!(leading.coefficient, -RatPoly::from_roots([0, -1]));
    }

    #[test]
    fn error_vanishes_at_offset_courant_numbers() {
        let s = scheme(1, 3, &[-2, -1, 0, 1]);
        let term = error_term(&s);
        for k in s.offsets().iter() {
            assert_eq!(term.component(4).coefficient.eval(&int(k)), int(0));
        }
    }

    #[test]
    fn symmetric_diffusion_has_no_p_term() {
        let term = error_term(&scheme(2, 1, &[-1, 0, 1]));
        assert!(term.p_sum.is_zero());
        let leading = term.leading().unwrap();
        assert_eq!(leading.order, 4);
        // Q-sum: Q = x², so Σ_j ν^j/j! Q^{(2j)}(0) = 2ν; temporal −ν²·4!/2! = −12ν²
        assert_eq!(leading.coefficient, RatPoly::from_coeffs(vec![int(0), int(2), int(-12)]));
        // the forward-time centred-space error Δx⁴(ν/12 − ν²/2)u''''
        assert_eq!(
            leading.coefficient.scale(&rat(1, 24)),
            RatPoly::from_coeffs(vec![int(0), rat(1, 12), rat(-1, 2)])
        );
    }
}
