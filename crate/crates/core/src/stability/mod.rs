//! Von Neumann analysis of generated schemes on a periodic grid.
//!
//! A Fourier mode `e^{ipx}` is multiplied by `g(θ) = Σ_k c_k(ν) e^{ikθ}`
//! (`θ = pΔx`) per step. A scheme is stable at `ν` when `|g(θ)|² ≤ 1`
//! for every `θ`, up to a small roundoff slack.

mod audit;
mod critical;

pub use audit::{
    advection_family_stability, classify_first_order, theorem5_bound_audit, truncated_first_layer_critical,
    BoundAuditRow, Classification, StabilityInterval, STABLE_THRESHOLD,
};
pub use critical::{analyze, critical_courant, StabilityOptions, StabilityReport};

use std::f64::consts::PI;

use crate::scheme::Scheme;

/// Offsets with per-layer float weights; the weight on offset `i` at `ν` is
/// `Σ_j layers[j][i] ν^j`. Unlike [`Scheme`] this may be a truncated layer
/// table that no longer satisfies the order conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct LayerFamily {
    offsets: Vec<i64>,
    layers: Vec<Vec<f64>>,
}

impl LayerFamily {
    pub fn new(offsets: Vec<i64>, layers: Vec<Vec<f64>>) -> Self {
        assert!(!layers.is_empty() && layers.iter().all(|l| l.len() == offsets.len()));
        Self { offsets, layers }
    }

    /// Keeps layers `0..=max_layer` only.
    pub fn truncated(scheme: &Scheme, max_layer: usize) -> Self {
        let mut family = Self::from(scheme);
        family.layers.truncate(max_layer + 1);
        family
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn weights_at(&self, nu: f64) -> Vec<f64> {
        (0..self.offsets.len())
            .map(|i| self.layers.iter().rev().fold(0.0, |acc, layer| acc * nu + layer[i]))
            .collect()
    }
}

impl From<&Scheme> for LayerFamily {
    fn from(scheme: &Scheme) -> Self {
        Self { offsets: scheme.offsets().as_slice().to_vec(), layers: scheme.float_layers() }
    }
}

/// `|Σ_k w_k e^{ikθ}|²`
pub fn growth(offsets: &[i64], weights: &[f64], theta: f64) -> f64 {
    let (re, im) = offsets.iter().zip(weights).fold((0.0, 0.0), |(re, im), (&k, &w)| {
        let (s, c) = (k as f64 * theta).sin_cos();
        (re + w * c, im + w * s)
    });
    re * re + im * im
}

/// `|g(θ; ν)|²` for a scheme, with `c_k(ν)` evaluated in floating point.
pub fn amplification(scheme: &Scheme, nu: f64, theta: f64) -> f64 {
    growth(scheme.offsets().as_slice(), &scheme.float_coefficients(nu), theta)
}

/// Uniform `θ` grid over `[0, 2π)` with cached `cos(kθ)`, `sin(kθ)`.
pub(crate) struct ThetaGrid {
    offsets: Vec<i64>,
    thetas: Vec<f64>,
    cos: Vec<Vec<f64>>,
    sin: Vec<Vec<f64>>,
}

const GOLDEN: f64 = 0.618_033_988_749_894_8;

impl ThetaGrid {
    pub(crate) fn new(offsets: &[i64], samples: usize) -> Self {
        let thetas: Vec<f64> = (0..samples).map(|i| 2.0 * PI * i as f64 / samples as f64).collect();
        let table = |f: fn(f64) -> f64| -> Vec<Vec<f64>> {
            offsets.iter().map(|&k| thetas.iter().map(|&t| f(k as f64 * t)).collect()).collect()
        };
        Self { offsets: offsets.to_vec(), cos: table(f64::cos), sin: table(f64::sin), thetas }
    }

    fn sampled(&self, weights: &[f64]) -> Vec<f64> {
        (0..self.thetas.len())
            .map(|t| {
                let (mut re, mut im) = (0.0, 0.0);
                for (i, w) in weights.iter().enumerate() {
                    re += w * self.cos[i][t];
                    im += w * self.sin[i][t];
                }
                re * re + im * im
            })
            .collect()
    }

    /// Largest `|g|²` and where it occurs: grid scan, then golden-section
    /// refinement around the three largest local maxima.
    pub(crate) fn max_growth(&self, weights: &[f64]) -> (f64, f64) {
        let values = self.sampled(weights);
        let len = values.len();
        let mut peaks: Vec<usize> = (0..len)
            .filter(|&i| {
                let prev = values[(i + len - 1) % len];
                let next = values[(i + 1) % len];
                values[i] >= prev && values[i] >= next
            })
            .collect();
        peaks.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
        peaks.truncate(3);

        let step = 2.0 * PI / len as f64;
        let mut best = (values[peaks[0]], self.thetas[peaks[0]]);
        for &i in &peaks {
            let centre = self.thetas[i];
            let (value, theta) = self.golden_max(weights, centre - step, centre + step);
            if value > best.0 {
                best = (value, theta.rem_euclid(2.0 * PI));
            }
        }
        best
    }

    fn golden_max(&self, weights: &[f64], mut a: f64, mut b: f64) -> (f64, f64) {
        let f = |t: f64| growth(&self.offsets, weights, t);
        let mut x1 = b - GOLDEN * (b - a);
        let mut x2 = a + GOLDEN * (b - a);
        let (mut f1, mut f2) = (f(x1), f(x2));
        for _ in 0..40 {
            if f1 < f2 {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + GOLDEN * (b - a);
                f2 = f(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - GOLDEN * (b - a);
                f1 = f(x1);
            }
        }
        if f1 > f2 {
            (f1, x1)
        } else {
            (f2, x2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::OffsetSet;
    use crate::scheme::{first_order_scheme, master_scheme, SchemeSpec};
    use proptest::prelude::*;

    fn scheme(m: u32, n: u32, offsets: OffsetSet) -> Scheme {
        master_scheme(&SchemeSpec::new(m, n, offsets).unwrap()).unwrap()
    }

    #[test]
    fn consistency_at_theta_zero() {
        for s in [
            scheme(2, 2, OffsetSet::symmetric(2)),
            scheme(1, 3, OffsetSet::contiguous(2, 3)),
            scheme(3, 1, OffsetSet::new(vec![-2, -1, 1, 2]).unwrap()),
        ] {
            for nu in [-1.3, -0.2, 0.4, 2.0] {
                assert!((amplification(&s, nu, 0.0) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn diffusion_half_courant_at_pi() {
        let s = first_order_scheme(2, 1).unwrap();
        assert!((amplification(&s, 0.5, PI) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn upwind_unit_courant_is_translation() {
        let s = first_order_scheme(1, 1).unwrap();
        for theta in [0.3, 1.0, 2.5, PI, 5.9] {
            assert!((amplification(&s, -1.0, theta) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn truncated_family_keeps_low_layers() {
        let s = scheme(2, 2, OffsetSet::symmetric(2));
        let family = LayerFamily::truncated(&s, 1);
        let w = family.weights_at(0.25);
        let expected = [-1.0 / 48.0, 1.0 / 3.0, 1.0 - 0.625, 1.0 / 3.0, -1.0 / 48.0];
        for (a, b) in w.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn max_growth_finds_pi_for_diffusion() {
        let s = first_order_scheme(2, 1).unwrap();
        let grid = ThetaGrid::new(s.offsets().as_slice(), 4096);
        let (value, theta) = grid.max_growth(&s.float_coefficients(0.7));
        // g(π) = 1 − 4ν
        assert!((value - 1.8f64.powi(2)).abs() < 1e-12);
        assert!((theta - PI).abs() < 1e-6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10))]
        /// `|g|² = 1 + 2cos(Φ)ν[2sin(θ/2)]^m + ν²[2sin(θ/2)]^{2m}` with
        /// `Φ = θ(m − 2r)/2 + mπ/2` for first-order schemes.
        #[test]
        fn first_order_growth_closed_form(
            m in 1u32..7,
            r_frac in 0.0f64..1.0,
            theta in 0.0f64..(2.0 * PI),
            nu in -1.0f64..1.0,
        ) {
            let r = ((m + 1) as f64 * r_frac).floor().min(m as f64) as u32;
            let s = first_order_scheme(m, r).unwrap();
            let chord = (2.0 * (theta / 2.0).sin()).powi(m as i32);
            let phi = theta / 2.0 * (m as f64 - 2.0 * r as f64) + m as f64 * PI / 2.0;
            let closed = 1.0 + 2.0 * phi.cos() * nu * chord + nu * nu * chord * chord;
            prop_assert!((amplification(&s, nu, theta) - closed).abs() < 1e-12);
        }
    }
}
