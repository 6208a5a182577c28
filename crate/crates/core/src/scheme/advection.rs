//! The `m = 1` family: weights are the Lagrange basis evaluated at `ν`, and
//! the same layer table drives the nonlinear advection scheme.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{master_scheme, Scheme, SchemeSpec, Sign};
use crate::error::{Error, Result};
use crate::exact::{lagrange_basis, to_f64, OffsetSet, Rational};

/// `c_i = L_i(ν)` for an order-`n` advection scheme on `n + 1` offsets.
pub fn advection_coefficients(n: u32, offsets: &OffsetSet, nu: &Rational) -> Result<Vec<Rational>> {
    SchemeSpec::new(1, n, offsets.clone())?;
    Ok(lagrange_basis(offsets).iter().map(|l| l.eval(nu)).collect())
}

/// Weights `w_{j,i} = L_i^{(j)}(0)/j!` for `j = 0…n`, applied to the
/// densities `u_j` sampled at the offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerTable {
    offsets: OffsetSet,
    layers: Vec<Vec<Rational>>,
}

impl LayerTable {
    pub fn offsets(&self) -> &OffsetSet {
        &self.offsets
    }

    pub fn order(&self) -> u32 {
        (self.layers.len() - 1) as u32
    }

    pub fn layers(&self) -> &[Vec<Rational>] {
        &self.layers
    }

    pub fn layer(&self, j: usize) -> &[Rational] {
        &self.layers[j]
    }

    pub fn float_layers(&self) -> Vec<Vec<f64>> {
        self.layers.iter().map(|l| l.iter().map(to_f64).collect()).collect()
    }
}

impl From<&Scheme> for LayerTable {
    fn from(scheme: &Scheme) -> Self {
        Self { offsets: scheme.offsets().clone(), layers: scheme.layers().to_vec() }
    }
}

pub fn nonlinear_layers(n: u32, offsets: &OffsetSet) -> Result<LayerTable> {
    let scheme = master_scheme(&SchemeSpec::new(1, n, offsets.clone())?)?;
    Ok(LayerTable::from(&scheme))
}

/// Stable contiguous advection families on `n + 1` points (for `a₁ < 0`,
/// mirrored for `a₁ > 0`). With `s` the number of downstream points:
/// upwind-type `n = 2s + 1` uses `{−(s+1), …, s}`, Lax-Wendroff-type
/// `n = 2s` uses `{−s, …, s}`, Beam-Warming-type `n = 2s + 2` uses
/// `{−(s+2), …, s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AdvectionFamily {
    Upwind,
    LaxWendroff,
    BeamWarming,
}

impl AdvectionFamily {
    pub const ALL: [AdvectionFamily; 3] =
        [AdvectionFamily::Upwind, AdvectionFamily::LaxWendroff, AdvectionFamily::BeamWarming];

    /// Time-marching order of the family member with `s` downstream points.
    pub fn order(self, s: u32) -> u32 {
        match self {
            AdvectionFamily::Upwind => 2 * s + 1,
            AdvectionFamily::LaxWendroff => 2 * s,
            AdvectionFamily::BeamWarming => 2 * s + 2,
        }
    }

    /// Upstream point count `r` for order `n`; errors when the family has no
    /// member of that order.
    pub fn upstream_points(self, n: u32) -> Result<u32> {
        let r = match self {
            AdvectionFamily::Upwind if n % 2 == 1 => n.div_ceil(2),
            AdvectionFamily::LaxWendroff if n.is_multiple_of(2) && n >= 2 => n / 2,
            AdvectionFamily::BeamWarming if n.is_multiple_of(2) && n >= 2 => n / 2 + 1,
            _ => return Err(Error::Unsupported(format!("{self} family has no order-{n} member"))),
        };
        Ok(r)
    }

    /// Offsets of the order-`n` member for a coefficient of the given sign.
    pub fn offsets(self, n: u32, sign: Sign) -> Result<OffsetSet> {
        let upwind_side = OffsetSet::contiguous(self.upstream_points(n)?, n);
        Ok(match sign {
            Sign::Negative => upwind_side,
            Sign::Positive => upwind_side.mirrored(),
        })
    }

    /// Upwind-type for odd orders, Lax-Wendroff-type for even ones.
    pub fn natural(n: u32) -> Self {
        if n % 2 == 1 {
            AdvectionFamily::Upwind
        } else {
            AdvectionFamily::LaxWendroff
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            AdvectionFamily::Upwind => "uw",
            AdvectionFamily::LaxWendroff => "lw",
            AdvectionFamily::BeamWarming => "bw",
        }
    }
}

impl fmt::Display for AdvectionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for AdvectionFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "uw" | "upwind" => Ok(AdvectionFamily::Upwind),
            "lw" | "lax-wendroff" => Ok(AdvectionFamily::LaxWendroff),
            "bw" | "beam-warming" => Ok(AdvectionFamily::BeamWarming),
            other => Err(Error::Parse(format!("unknown advection family {other:?}"))),
        }
    }
}

/// Default stencil for `(m, n)`: symmetric `{−nm/2, …, nm/2}` when `nm` is
/// even; otherwise contiguous with one extra point on the side a stable
/// first-order scheme of that sign would use (`r = (nm+1)/2` when
/// `sign = (−1)^ℓ` with `m = 2ℓ − 1`, else `r = (nm−1)/2`).
pub fn default_offsets(m: u32, n: u32, sign: Sign) -> Result<OffsetSet> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidOrder { m, n });
    }
    let span = n * m;
    if span.is_multiple_of(2) {
        return Ok(OffsetSet::symmetric(span / 2));
    }
    let ell = m.div_ceil(2);
    let favoured = if ell.is_multiple_of(2) { Sign::Positive } else { Sign::Negative };
    let r = if sign == favoured { span.div_ceil(2) } else { span / 2 };
    Ok(OffsetSet::contiguous(r, span))
}
