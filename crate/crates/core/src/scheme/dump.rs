//! Text dump of a scheme: `m`, `n`, the offsets, and every weight as exact
//! `"p/q"` strings indexed by power of `ν`.
//!
//! ```toml
//! m = 2
//! n = 1
//! offsets = [-1, 0, 1]
//!
//! [[coefficients]]
//! offset = -1
//! by_nu_power = ["0", "1"]
//! ```

use serde::{Deserialize, Serialize};

use super::{Scheme, SchemeSpec};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, OffsetSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeDump {
    pub m: u32,
    pub n: u32,
    pub offsets: Vec<i64>,
    pub coefficients: Vec<CoefficientEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub offset: i64,
    /// Entry `j` multiplies `ν^j`; always `n + 1` entries.
    pub by_nu_power: Vec<String>,
}

impl SchemeDump {
    pub fn from_scheme(scheme: &Scheme) -> Self {
        let coefficients = scheme
            .offsets()
            .iter()
            .zip(scheme.coeffs())
            .map(|(offset, c)| CoefficientEntry {
                offset,
                by_nu_power: (0..=scheme.n() as usize).map(|j| c.coeff(j).to_string()).collect(),
            })
            .collect();
        Self { m: scheme.m(), n: scheme.n(), offsets: scheme.offsets().as_slice().to_vec(), coefficients }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scheme dump serializes")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Rebuilds the scheme, re-checking the stencil size and order
    /// conditions.
    pub fn to_scheme(&self) -> Result<Scheme> {
        let spec = SchemeSpec::new(self.m, self.n, OffsetSet::new(self.offsets.clone())?)?;
        let points = spec.offsets().len();
        let mut layers = vec![vec![num_traits::Zero::zero(); points]; self.n as usize + 1];
        if self.coefficients.len() != points {
            return Err(Error::Parse(format!(
                "expected {points} coefficient entries, found {}",
                self.coefficients.len()
            )));
        }
        for entry in &self.coefficients {
            let i = spec.offsets().position(entry.offset).ok_or_else(|| {
                Error::Parse(format!("coefficient for offset {} not in stencil", entry.offset))
            })?;
            if entry.by_nu_power.len() != self.n as usize + 1 {
                return Err(Error::Parse(format!(
                    "offset {} lists {} powers of nu, expected {}",
                    entry.offset,
                    entry.by_nu_power.len(),
                    self.n + 1
                )));
            }
            for (j, text) in entry.by_nu_power.iter().enumerate() {
                layers[j][i] = parse_rational(text)?;
            }
        }
        Scheme::from_layers(spec, layers)
    }
}
