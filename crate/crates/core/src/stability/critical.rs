use serde::Serialize;

use super::{LayerFamily, ThetaGrid};
use crate::scheme::{Scheme, Sign};

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityOptions {
    /// Bisection stops once the bracket on `|ν|` is narrower than this.
    pub tol: f64,
    /// `|g|² ≤ 1 + growth_slack` counts as stable.
    pub growth_slack: f64,
    pub theta_samples: usize,
    /// Smallest `|ν|` probed; instability there reports `ν_c = 0`.
    pub probe: f64,
    /// Search ceiling for `|ν|`.
    pub max_nu: f64,
    /// Uniform `|ν|` samples used to bracket the first loss of stability.
    pub sweep_samples: usize,
}

impl Default for StabilityOptions {
    fn default() -> Self {
        Self {
            tol: 1e-4,
            growth_slack: 1e-10,
            theta_samples: 4096,
            probe: 1e-7,
            max_nu: 64.0,
            sweep_samples: 256,
        }
    }
}

impl StabilityOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityReport {
    pub offsets: Vec<i64>,
    pub sign: Sign,
    /// Largest `|ν|` (within `tol`) with `|g|² ≤ 1 + slack` on all of
    /// `[0, |ν|]`; 0 when unstable for every `ν ≠ 0` of this sign.
    pub nu_critical: f64,
    /// Where `|g|²` first exceeds 1 just past `nu_critical`.
    pub worst_theta: f64,
    /// `(|ν|, max_θ |g|²)` samples up to 1.5 `nu_critical`.
    pub growth_curve: Vec<(f64, f64)>,
    /// Whether `max_θ |g|²` was nondecreasing just beyond `nu_critical`.
    pub monotone_beyond: bool,
    /// Stable all the way to `max_nu`.
    pub unbounded: bool,
}

impl StabilityReport {
    pub fn is_stable(&self, threshold: f64) -> bool {
        self.nu_critical > threshold
    }
}

/// Critical `|ν|` of a scheme for coefficients of the given sign.
pub fn critical_courant(scheme: &Scheme, sign: Sign, tol: f64) -> f64 {
    analyze(&LayerFamily::from(scheme), sign, &StabilityOptions::with_tol(tol)).nu_critical
}

struct Probe<'a> {
    family: &'a LayerFamily,
    grid: ThetaGrid,
    sign: f64,
    slack: f64,
}

impl Probe<'_> {
    fn max_growth(&self, magnitude: f64) -> (f64, f64) {
        self.grid.max_growth(&self.family.weights_at(self.sign * magnitude))
    }

    fn stable(&self, magnitude: f64) -> bool {
        self.max_growth(magnitude).0 <= 1.0 + self.slack
    }

    /// First unstable sample of a uniform sweep on `(0, hi]`, bracketed
    /// by the preceding stable sample.
    fn first_crossing(&self, hi: f64, samples: usize) -> Option<(f64, f64)> {
        let step = hi / samples as f64;
        (1..=samples).map(|i| i as f64 * step).find(|&v| !self.stable(v)).map(|v| (v - step, v))
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if self.stable(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }

    fn monotone_beyond(&self, critical: f64) -> bool {
        let values: Vec<f64> =
            (0..16).map(|i| critical * (1.0 + 1e-3 * 1.5f64.powi(i))).map(|v| self.max_growth(v).0).collect();
        values.windows(2).all(|w| w[1] >= w[0] - 1e-12 * w[0].abs())
    }
}

/// Locates the first loss of stability in `|ν|`: doubling search for an
/// unstable ceiling, uniform sweep below it, then bisection. If `max |g|²`
/// is not monotone past the result, the sweep is repeated sixteen times
/// finer before re-bisecting.
pub fn analyze(family: &LayerFamily, sign: Sign, options: &StabilityOptions) -> StabilityReport {
    let probe = Probe {
        family,
        grid: ThetaGrid::new(family.offsets(), options.theta_samples),
        sign: sign.value(),
        slack: options.growth_slack,
    };
    let report = |nu_critical: f64, beyond: f64, monotone: bool, unbounded: bool| {
        let worst_theta = probe.max_growth(beyond).1;
        let top = if nu_critical > 0.0 { 1.5 * nu_critical } else { 1.0 };
        let growth_curve =
            (0..=32).map(|i| top * i as f64 / 32.0).map(|v| (v, probe.max_growth(v).0)).collect();
        StabilityReport {
            offsets: family.offsets().to_vec(),
            sign,
            nu_critical,
            worst_theta,
            growth_curve,
            monotone_beyond: monotone,
            unbounded,
        }
    };

    if !probe.stable(options.probe) {
        return report(0.0, options.probe, true, false);
    }
    let mut ceiling = options.probe;
    while probe.stable(ceiling) {
        if ceiling >= options.max_nu {
            return report(options.max_nu, options.max_nu, true, true);
        }
        ceiling = (ceiling * 2.0).min(options.max_nu);
    }

    let locate = |samples: usize| {
        let (lo, hi) =
            probe.first_crossing(ceiling, samples).expect("ceiling is unstable, so the sweep crosses");
        let lo = lo.max(options.probe);
        probe.bisect(lo, hi, options.tol)
    };
    let (mut lo, mut hi) = locate(options.sweep_samples);
    let mut monotone = probe.monotone_beyond(lo);
    if !monotone {
        (lo, hi) = locate(options.sweep_samples * 16);
        monotone = probe.monotone_beyond(lo);
    }
    report(lo, hi, monotone, false)
}
