//! Refinement-ladder order measurement on `sin(2πx)` over the unit box.

use std::f64::consts::TAU;

use serde::Serialize;

use super::field::GridField;
use super::linear::FloatStencil;
use crate::error::{Error, Result};
use crate::exact::OffsetSet;
use crate::scheme::{default_offsets, master_scheme, Scheme, SchemeSpec, Sign};
use crate::stability::critical_courant;

/// Sign of `a_m` whose symmetric first-order scheme is stable: negative for
/// advection, positive for diffusion, alternating with `⌈m/2⌉` beyond.
pub fn default_sign(m: u32) -> Sign {
    let ell = m.div_ceil(2);
    let flip = if m.is_multiple_of(2) { ell + 1 } else { ell };
    if flip % 2 == 0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

#[derive(Clone, Debug)]
pub struct ConvergenceConfig {
    pub m: u32,
    pub n: u32,
    /// Defaults to [`default_offsets`] for the sign of `nu`.
    pub offsets: Option<OffsetSet>,
    /// Signed Courant number; `a_m` is `±1` with the same sign.
    pub nu: f64,
    pub grids: Vec<usize>,
    /// Defaults to `0.5/(2π)^{m−1}`.
    pub final_time: Option<f64>,
    pub stability_tol: f64,
}

impl ConvergenceConfig {
    /// `|nu|` is given; the sign comes from [`default_sign`].
    pub fn new(m: u32, n: u32, nu: f64) -> Self {
        Self {
            m,
            n,
            offsets: None,
            nu: default_sign(m).value() * nu.abs(),
            grids: vec![32, 64, 128, 256],
            final_time: None,
            stability_tol: 1e-4,
        }
    }

    pub fn with_grids(mut self, grids: Vec<usize>) -> Self {
        self.grids = grids;
        self
    }

    pub fn with_offsets(mut self, offsets: OffsetSet) -> Self {
        self.offsets = Some(offsets);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderRow {
    pub cells: usize,
    pub dx: f64,
    pub dt: f64,
    pub steps: usize,
    pub error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub m: u32,
    pub n: u32,
    pub offsets: Vec<i64>,
    pub nu: f64,
    pub final_time: f64,
    pub rows: Vec<LadderRow>,
    /// Least-squares slope of `log error` against `log Δt`; expected `≈ n`.
    pub time_slope: f64,
    /// Same against `log Δx`; expected `≈ nm` for symmetric stencils.
    pub space_slope: f64,
    /// Every error is below `1e−12`, so slopes carry no information.
    pub exact: bool,
}

/// `exp(a kᵐ Re(iᵐ) t) · sin(kx + a kᵐ Im(iᵐ) t)`
fn exact_solution(m: u32, a: f64, t: f64, x: f64) -> f64 {
    let k = TAU;
    let (re, im) = match m % 4 {
        0 => (1.0, 0.0),
        1 => (0.0, 1.0),
        2 => (-1.0, 0.0),
        _ => (0.0, -1.0),
    };
    let rate = a * k.powi(m as i32);
    (rate * re * t).exp() * (k * x + rate * im * t).sin()
}

fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let len = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / len;
    let my = ys.iter().sum::<f64>() / len;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

pub fn convergence_study(config: &ConvergenceConfig) -> Result<ConvergenceReport> {
    if config.grids.len() < 2 {
        return Err(Error::Config("convergence needs at least two grids".into()));
    }
    if config.nu == 0.0 || !config.nu.is_finite() {
        return Err(Error::Config(format!("Courant number must be finite and nonzero, got {}", config.nu)));
    }
    let sign = Sign::of(config.nu);
    let offsets = match &config.offsets {
        Some(o) => o.clone(),
        None => default_offsets(config.m, config.n, sign)?,
    };
    let scheme: Scheme = master_scheme(&SchemeSpec::new(config.m, config.n, offsets)?)?;
    let critical = critical_courant(&scheme, sign, config.stability_tol);
    if config.nu.abs() > critical + config.stability_tol {
        return Err(Error::Unstable { nu: config.nu, critical });
    }

    let m = config.m;
    let a = sign.value();
    let coarsest = *config.grids.iter().min().expect("nonempty");
    let dt_of = |cells: usize| config.nu.abs() * (1.0 / cells as f64).powi(m as i32);
    let target = config.final_time.unwrap_or(0.5 / TAU.powi(m as i32 - 1));
    let coarse_steps = (target / dt_of(coarsest)).round().max(1.0);
    let final_time = coarse_steps * dt_of(coarsest);

    let stencil = FloatStencil::from_scheme(&scheme, config.nu);
    let mut rows = Vec::with_capacity(config.grids.len());
    for &cells in &config.grids {
        stencil.check_fits(cells)?;
        let dt = dt_of(cells);
        let steps = (final_time / dt).round() as usize;
        let mut field = GridField::sample(cells, 1.0 / cells as f64, 0.0, |x| exact_solution(m, a, 0.0, x));
        let mut scratch = vec![0.0; cells];
        for _ in 0..steps {
            stencil.apply(&field.values, &mut scratch);
            std::mem::swap(&mut field.values, &mut scratch);
        }
        let t = steps as f64 * dt;
        let exact: Vec<f64> = field.xs().map(|x| exact_solution(m, a, t, x)).collect();
        rows.push(LadderRow { cells, dx: field.dx, dt, steps, error: field.max_abs_diff(&exact) });
    }

    let log_err: Vec<f64> = rows.iter().map(|r| r.error.max(f64::MIN_POSITIVE).ln()).collect();
    let log_dt: Vec<f64> = rows.iter().map(|r| r.dt.ln()).collect();
    let log_dx: Vec<f64> = rows.iter().map(|r| r.dx.ln()).collect();
    Ok(ConvergenceReport {
        m,
        n: config.n,
        offsets: scheme.offsets().as_slice().to_vec(),
        nu: config.nu,
        final_time,
        time_slope: fit_slope(&log_dt, &log_err),
        space_slope: fit_slope(&log_dx, &log_err),
        exact: rows.iter().all(|r| r.error < 1e-12),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_signs() {
        let signs: Vec<Sign> = (1..=6).map(default_sign).collect();
        use Sign::*;
        assert_eq!(signs, vec![Negative, Positive, Positive, Negative, Negative, Positive]);
    }

    #[test]
    fn exact_solution_solves_the_equation() {
        // centred differences in x and t at a generic point
        let (x, t, h, ht) = (0.3, 1e-4, 1e-3, 1e-7);
        for m in 1..=4u32 {
            for a in [-1.0, 1.0] {
                let u = |x: f64, t: f64| exact_solution(m, a, t, x);
                let ut = (u(x, t + ht) - u(x, t - ht)) / (2.0 * ht);
                let deriv = match m {
                    1 => (u(x + h, t) - u(x - h, t)) / (2.0 * h),
                    2 => (u(x + h, t) - 2.0 * u(x, t) + u(x - h, t)) / (h * h),
                    3 => {
                        (u(x + 2.0 * h, t) - 2.0 * u(x + h, t) + 2.0 * u(x - h, t) - u(x - 2.0 * h, t))
                            / (2.0 * h * h * h)
                    }
                    _ => {
                        (u(x + 2.0 * h, t) - 4.0 * u(x + h, t) + 6.0 * u(x, t) - 4.0 * u(x - h, t)
                            + u(x - 2.0 * h, t))
                            / (h * h * h * h)
                    }
                };
                let scale = TAU.powi(m as i32);
                assert!((ut - a * deriv).abs() < 1e-2 * scale, "m={m} a={a}: {ut} vs {}", a * deriv);
            }
        }
    }

    #[test]
    fn upwind_is_first_order() {
        let report = convergence_study(&ConvergenceConfig::new(1, 1, 0.8)).unwrap();
        assert!((report.time_slope - 1.0).abs() < 0.25, "{report:?}");
        assert_eq!(report.offsets, vec![-1, 0]);
    }

    #[test]
    fn third_order_advection() {
        let report = convergence_study(&ConvergenceConfig::new(1, 3, 0.8)).unwrap();
        assert!((report.time_slope - 3.0).abs() < 0.25, "{report:?}");
    }

    #[test]
    fn second_order_diffusion() {
        let report = convergence_study(&ConvergenceConfig::new(2, 2, 0.5)).unwrap();
        assert!((report.time_slope - 2.0).abs() < 0.25, "{report:?}");
        assert!((report.space_slope - 4.0).abs() < 0.5, "{report:?}");
    }

    #[test]
    fn integer_courant_is_exact() {
        let report = convergence_study(&ConvergenceConfig::new(1, 2, 1.0)).unwrap();
        assert!(report.exact, "{report:?}");
    }

    #[test]
    fn unstable_configuration_is_refused() {
        let err = convergence_study(&ConvergenceConfig::new(2, 1, 0.6)).unwrap_err();
        assert!(matches!(err, Error::Unstable { .. }), "{err:?}");
    }

    #[test]
    fn ladder_reaches_the_same_time() {
        let report = convergence_study(&ConvergenceConfig::new(2, 1, 0.4)).unwrap();
        for row in &report.rows {
            assert!((row.steps as f64 * row.dt - report.final_time).abs() < 1e-12);
        }
    }
}
