//! Nonlinear advection `∂ₜu = ∂ₓu₁(u)` through conserved densities.
//!
//! With `∂ₜu_j = ∂ₓu_{j+1}`, the time series of `u` becomes
//! `Σ_j Δtʲ/j! ∂ₓʲ u_j`, so each layer of the advection table acts on its
//! own density: `u'_j = Σ_p νᵖ Σ_i w_{p,i} u_p(u_{j+k_i})` with `ν = Δt/Δx`.

use super::field::GridField;
use crate::error::{Error, Result};
use crate::scheme::LayerTable;

pub trait DensityFamily {
    fn name(&self) -> &str;
    /// Number of densities `u_0, u_1, …` available.
    fn count(&self) -> usize;
    fn density(&self, j: usize, u: f64) -> f64;
}

/// Inviscid Burgers `u_t + u u_x = 0`: `u_j = (−1)ʲ u^{j+1}/(j+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Burgers {
    pub count: usize,
}

impl DensityFamily for Burgers {
    fn name(&self) -> &str {
        "burgers"
    }

    fn count(&self) -> usize {
        self.count
    }

    fn density(&self, j: usize, u: f64) -> f64 {
        let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * u.powi(j as i32 + 1) / (j as f64 + 1.0)
    }
}

/// `u_j = u` for every `j`: linear advection with `a₁ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Identity {
    pub count: usize,
}

impl DensityFamily for Identity {
    fn name(&self) -> &str {
        "identity"
    }

    fn count(&self) -> usize {
        self.count
    }

    fn density(&self, _j: usize, u: f64) -> f64 {
        u
    }
}

/// Float layers and scratch buffers reused across steps.
pub struct NonlinearStepper<'a> {
    offsets: Vec<i64>,
    /// `νᵖ w_{p,i}`
    weights: Vec<Vec<f64>>,
    densities: &'a dyn DensityFamily,
    density_buf: Vec<f64>,
    next: Vec<f64>,
}

impl<'a> NonlinearStepper<'a> {
    pub fn new(layers: &LayerTable, densities: &'a dyn DensityFamily, nu: f64) -> Result<Self> {
        let required = layers.order() as usize + 1;
        if densities.count() < required {
            return Err(Error::DensityFamilyTooShort { available: densities.count(), required });
        }
        let weights = layers
            .float_layers()
            .into_iter()
            .enumerate()
            .map(|(p, layer)| {
                let scale = nu.powi(p as i32);
                layer.into_iter().map(|w| w * scale).collect()
            })
            .collect();
        Ok(Self {
            offsets: layers.offsets().as_slice().to_vec(),
            weights,
            densities,
            density_buf: Vec::new(),
            next: Vec::new(),
        })
    }

    pub fn step(&mut self, field: &mut GridField) -> Result<()> {
        let cells = field.len();
        let reach = self.offsets.iter().map(|k| k.unsigned_abs()).max().unwrap_or(0);
        if (cells as u64) <= 2 * reach {
            return Err(Error::StencilTooWide { reach, cells });
        }
        self.next.clear();
        self.next.resize(cells, 0.0);
        self.density_buf.resize(cells, 0.0);
        for (p, layer) in self.weights.iter().enumerate() {
            for (d, &u) in self.density_buf.iter_mut().zip(&field.values) {
                *d = self.densities.density(p, u);
            }
            for (&k, &w) in self.offsets.iter().zip(layer) {
                let shift = k.rem_euclid(cells as i64) as usize;
                let (head, tail) = self.density_buf.split_at(shift);
                for (out, d) in self.next.iter_mut().zip(tail.iter().chain(head)) {
                    *out += w * d;
                }
            }
        }
        std::mem::swap(&mut field.values, &mut self.next);
        Ok(())
    }
}

pub fn step_nonlinear(
    field: &GridField,
    layers: &LayerTable,
    densities: &dyn DensityFamily,
    nu: f64,
) -> Result<GridField> {
    let mut next = field.clone();
    NonlinearStepper::new(layers, densities, nu)?.step(&mut next)?;
    Ok(next)
}

/// Smallest `x` where `u` drops through `level` from above, linearly
/// interpolated between neighbouring cells. Upward crossings (such as a
/// rarefaction fan) are skipped.
pub fn shock_front(field: &GridField, level: f64) -> Option<f64> {
    field.values.windows(2).enumerate().find_map(|(j, pair)| {
        let (a, b) = (pair[0], pair[1]);
        (a >= level && b < level).then(|| field.x(j) + field.dx * (a - level) / (a - b))
    })
}
