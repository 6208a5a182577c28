use super::field::GridField;
use crate::error::{Error, Result};
use crate::scheme::{Scheme, Sign};
use crate::stability::critical_courant;

/// Offsets with float weights, evaluated once per run.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatStencil {
    pub offsets: Vec<i64>,
    pub weights: Vec<f64>,
}

impl FloatStencil {
    pub fn from_scheme(scheme: &Scheme, nu: f64) -> Self {
        Self { offsets: scheme.offsets().as_slice().to_vec(), weights: scheme.float_coefficients(nu) }
    }

    pub fn reach(&self) -> u64 {
        self.offsets.iter().map(|k| k.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn check_fits(&self, cells: usize) -> Result<()> {
        let reach = self.reach();
        if (cells as u64) <= 2 * reach {
            return Err(Error::StencilTooWide { reach, cells });
        }
        Ok(())
    }

    /// `dst_j = Σ_i w_i src_{(j + k_i) mod G}`
    pub fn apply(&self, src: &[f64], dst: &mut [f64]) {
        let cells = src.len() as i64;
        dst.fill(0.0);
        for (&k, &w) in self.offsets.iter().zip(&self.weights) {
            let shift = k.rem_euclid(cells) as usize;
            let (head, tail) = src.split_at(shift);
            for (d, s) in dst.iter_mut().zip(tail.iter().chain(head)) {
                *d += w * s;
            }
        }
    }
}

/// One step `u'_j = Σ_i c_i(ν) u_{j+k_i}` on the periodic grid.
pub fn step_linear(field: &GridField, scheme: &Scheme, nu: f64) -> Result<GridField> {
    let stencil = FloatStencil::from_scheme(scheme, nu);
    stencil.check_fits(field.len())?;
    let mut values = vec![0.0; field.len()];
    stencil.apply(&field.values, &mut values);
    Ok(GridField { values, ..field.clone() })
}

/// One `a_m ∂ₓᵐ` term with the scheme used to advance it.
#[derive(Clone, Debug)]
pub struct LinearTerm {
    pub coefficient: f64,
    pub scheme: Scheme,
}

impl LinearTerm {
    pub fn new(coefficient: f64, scheme: Scheme) -> Self {
        Self { coefficient, scheme }
    }

    /// `ν_m = Δt·a_m/Δxᵐ`
    pub fn courant(&self, dt: f64, dx: f64) -> f64 {
        dt * self.coefficient / dx.powi(self.scheme.m() as i32)
    }
}

/// `u_t = Σ_m a_m ∂ₓᵐ u`, advanced one term at a time per step.
#[derive(Clone, Debug)]
pub struct LinearProblem {
    pub terms: Vec<LinearTerm>,
    pub dt: f64,
}

#[derive(Clone, Debug)]
pub struct LinearRun {
    pub field: GridField,
    /// Per-term Courant numbers, in term order.
    pub courant: Vec<f64>,
    pub warnings: Vec<String>,
}

/// Runs `steps` steps, calling `observe(step, field)` after every step
/// (and once with step 0 before the first). Terms whose scheme is unstable
/// at their Courant number produce a warning, not an error.
pub fn run_linear(
    problem: &LinearProblem,
    field: &GridField,
    steps: usize,
    mut observe: impl FnMut(usize, &GridField),
) -> Result<LinearRun> {
    let mut courant = Vec::with_capacity(problem.terms.len());
    let mut stencils = Vec::with_capacity(problem.terms.len());
    let mut warnings = Vec::new();
    for term in &problem.terms {
        let nu = term.courant(problem.dt, field.dx);
        let stencil = FloatStencil::from_scheme(&term.scheme, nu);
        stencil.check_fits(field.len())?;
        if nu != 0.0 {
            let critical = critical_courant(&term.scheme, Sign::of(nu), 1e-4);
            if nu.abs() > critical + 1e-4 {
                warnings.push(format!(
                    "term m={} n={} offsets={}: |nu|={} exceeds critical {:.4}",
                    term.scheme.m(),
                    term.scheme.n(),
                    term.scheme.offsets(),
                    nu.abs(),
                    critical
                ));
            }
        }
        courant.push(nu);
        stencils.push(stencil);
    }

    let mut current = field.clone();
    let mut scratch = vec![0.0; field.len()];
    observe(0, &current);
    for step in 1..=steps {
        for stencil in &stencils {
            stencil.apply(&current.values, &mut scratch);
            std::mem::swap(&mut current.values, &mut scratch);
        }
        observe(step, &current);
    }
    Ok(LinearRun { field: current, courant, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::OffsetSet;
    use crate::scheme::{first_order_scheme, master_scheme, SchemeSpec};
    use crate::solver::Profile;
    use proptest::prelude::*;

    fn scheme(m: u32, n: u32, offsets: OffsetSet) -> Scheme {
        master_scheme(&SchemeSpec::new(m, n, offsets).unwrap()).unwrap()
    }

    fn bumpy(cells: usize) -> GridField {
        GridField::on_box(-5.0, 5.0, cells, |x| Profile::Triangle.eval(x) + 0.3 * (x * 1.7).sin())
    }

    #[test]
    fn unit_courant_shifts_one_cell() {
        let s = scheme(1, 2, OffsetSet::symmetric(1));
        let field = bumpy(40);
        let next = step_linear(&field, &s, 1.0).unwrap();
        for j in 0..40 {
            assert_eq!(next.values[j], field.values[(j + 1) % 40]);
        }
    }

    #[test]
    fn constant_field_is_fixed() {
        let s = scheme(2, 3, OffsetSet::symmetric(3));
        let field = GridField::new(vec![2.5; 20], 0.1, 0.0);
        let next = step_linear(&field, &s, 0.7).unwrap();
        for v in next.values {
            assert!((v - 2.5).abs() < 1e-13);
        }
    }

    #[test]
    fn impulse_under_diffusion() {
        let s = first_order_scheme(2, 1).unwrap();
        let mut values = vec![0.0; 9];
        values[4] = 1.0;
        let next = step_linear(&GridField::new(values, 1.0, 0.0), &s, 0.25).unwrap();
        assert_eq!(next.values, vec![0.0, 0.0, 0.0, 0.25, 0.5, 0.25, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn stencil_wider_than_grid() {
        let s = scheme(2, 2, OffsetSet::symmetric(2));
        let field = GridField::new(vec![0.0; 4], 1.0, 0.0);
        assert_eq!(step_linear(&field, &s, 0.1).unwrap_err(), Error::StencilTooWide { reach: 2, cells: 4 });
        assert!(step_linear(&GridField::new(vec![0.0; 5], 1.0, 0.0), &s, 0.1).is_ok());
    }

    #[test]
    fn exact_shift_for_every_offset() {
        let s = scheme(1, 4, OffsetSet::contiguous(2, 4));
        let field = bumpy(30);
        for k in s.offsets().iter() {
            let next = step_linear(&field, &s, k as f64).unwrap();
            for j in 0..30 {
                let src = (j as i64 + k).rem_euclid(30) as usize;
                assert_eq!(next.values[j], field.values[src]);
            }
        }
    }

    #[test]
    fn terms_commute() {
        let adv = LinearTerm::new(-1.0, scheme(1, 3, OffsetSet::contiguous(2, 3)));
        let diff = LinearTerm::new(0.05, scheme(2, 2, OffsetSet::symmetric(2)));
        let field = bumpy(100);
        let dt = 0.04;
        let forward = LinearProblem { terms: vec![adv.clone(), diff.clone()], dt };
        let backward = LinearProblem { terms: vec![diff, adv], dt };
        let a = run_linear(&forward, &field, 50, |_, _| {}).unwrap();
        let b = run_linear(&backward, &field, 50, |_, _| {}).unwrap();
        assert!(a.field.max_abs_diff(&b.field.values) < 1e-10);
        assert!(a.warnings.is_empty());
        assert!((a.courant[0] + 0.4).abs() < 1e-12);
        assert!((a.courant[1] - 0.2).abs() < 1e-12);
    }

    #[test]
    fn advection_moves_right_for_negative_coefficient() {
        let problem = LinearProblem {
            terms: vec![LinearTerm::new(-1.0, scheme(1, 5, OffsetSet::contiguous(3, 5)))],
            dt: 0.08,
        };
        let field = GridField::on_box(-5.0, 5.0, 100, |x| Profile::Triangle.eval(x));
        // t = 1.6: the peak sits at x = 1.6
        let run = run_linear(&problem, &field, 20, |_, _| {}).unwrap();
        let peak = (0..100).max_by(|&a, &b| run.field.values[a].total_cmp(&run.field.values[b])).unwrap();
        assert!((run.field.x(peak) - 1.6).abs() < 0.11, "{}", run.field.x(peak));
    }

    #[test]
    fn unstable_term_warns_but_runs() {
        let problem =
            LinearProblem { terms: vec![LinearTerm::new(1.0, first_order_scheme(2, 1).unwrap())], dt: 0.6 };
        let run = run_linear(&problem, &bumpy(20), 3, |_, _| {}).unwrap();
        assert_eq!(run.warnings.len(), 1);
    }

    #[test]
    fn observer_sees_every_step() {
        let problem =
            LinearProblem { terms: vec![LinearTerm::new(-1.0, first_order_scheme(1, 1).unwrap())], dt: 0.05 };
        let mut seen = Vec::new();
        run_linear(&problem, &bumpy(20), 4, |step, _| seen.push(step)).unwrap();
        assert_eq!(seen, vec![0, 1, 2, 3, 4]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn mass_is_conserved(
            values in prop::collection::vec(-1.0f64..1.0, 12..40),
            nu in -1.0f64..1.0,
            n in 1u32..4,
        ) {
            let s = scheme(2, n, OffsetSet::symmetric(n));
            let field = GridField::new(values, 0.1, 0.0);
            let next = step_linear(&field, &s, nu.abs() * 0.5).unwrap();
            let scale = field.values.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
            prop_assert!((next.mass() - field.mass()).abs() <= 1e-10 * scale);
        }
    }
}
