//! Tabulated audits over scheme families.

use rayon::prelude::*;
use serde::Serialize;

use super::critical::{analyze, StabilityOptions};
use super::LayerFamily;
use crate::error::Result;
use crate::exact::OffsetSet;
use crate::scheme::{first_order_scheme, master_scheme, AdvectionFamily, SchemeSpec, Sign};

/// `ν_c` above this counts as stable when classifying.
pub const STABLE_THRESHOLD: f64 = 1e-3;

/// Critical `ν` of the order-`n` diffusion scheme on `{−n, …, n}` keeping
/// only the `ν⁰` and `ν¹` layers.
pub fn truncated_first_layer_critical(n: u32, tol: f64) -> Result<f64> {
    let scheme = master_scheme(&SchemeSpec::new(2, n, OffsetSet::symmetric(n))?)?;
    let family = LayerFamily::truncated(&scheme, 1);
    Ok(analyze(&family, Sign::Positive, &StabilityOptions::with_tol(tol)).nu_critical)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundAuditRow {
    pub m: u32,
    pub r: u32,
    pub sign: Sign,
    pub nu_critical: f64,
    /// `1/2^{m−1}`
    pub bound: f64,
    pub within: bool,
}

/// Measures `ν_c` of every first-order scheme `(m ≤ m_max, r ≤ m)` for both
/// signs and checks it against `1/2^{m−1}` (plus `slack`).
pub fn theorem5_bound_audit(m_max: u32, tol: f64, slack: f64) -> Result<Vec<BoundAuditRow>> {
    let cells: Vec<(u32, u32, Sign)> = (1..=m_max)
        .flat_map(|m| (0..=m).flat_map(move |r| [(m, r, Sign::Positive), (m, r, Sign::Negative)]))
        .collect();
    cells
        .into_par_iter()
        .map(|(m, r, sign)| {
            let scheme = first_order_scheme(m, r)?;
            let options = StabilityOptions::with_tol(tol);
            let nu_critical = analyze(&LayerFamily::from(&scheme), sign, &options).nu_critical;
            let bound = 0.5f64.powi(m as i32 - 1);
            Ok(BoundAuditRow { m, r, sign, nu_critical, bound, within: nu_critical <= bound + slack })
        })
        .collect()
}

/// Stable `r` values among the first-order schemes of order `m`, per sign
/// of `a_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub m: u32,
    pub positive: Vec<u32>,
    pub negative: Vec<u32>,
}

impl Classification {
    /// For `m = 2ℓ`: `r = ℓ` when `sgn(a) = (−1)^{ℓ−1}`, nothing otherwise.
    /// For `m = 2ℓ − 1`: `r = ℓ` when `sgn(a) = (−1)^ℓ`, `r = ℓ − 1` when
    /// `sgn(a) = (−1)^{ℓ−1}`.
    pub fn closed_form(m: u32) -> Self {
        let parity = |e: u32| if e.is_multiple_of(2) { Sign::Positive } else { Sign::Negative };
        let (mut positive, mut negative) = (Vec::new(), Vec::new());
        let mut put = |sign: Sign, r: u32| match sign {
            Sign::Positive => positive.push(r),
            Sign::Negative => negative.push(r),
        };
        if m.is_multiple_of(2) {
            let ell = m / 2;
            put(parity(ell - 1), ell);
        } else {
            let ell = m.div_ceil(2);
            put(parity(ell), ell);
            put(parity(ell - 1), ell - 1);
        }
        Self { m, positive, negative }
    }

    pub fn stable_r(&self, sign: Sign) -> &[u32] {
        match sign {
            Sign::Positive => &self.positive,
            Sign::Negative => &self.negative,
        }
    }
}

/// Scans all `r = 0…m` with both signs of `a_m`.
pub fn classify_first_order(m: u32, tol: f64) -> Result<Classification> {
    let cells: Vec<(u32, Sign)> = (0..=m).flat_map(|r| [(r, Sign::Positive), (r, Sign::Negative)]).collect();
    let verdicts: Vec<(u32, Sign, bool)> = cells
        .into_par_iter()
        .map(|(r, sign)| {
            let family = LayerFamily::from(&first_order_scheme(m, r)?);
            let report = analyze(&family, sign, &StabilityOptions::with_tol(tol));
            Ok((r, sign, report.is_stable(STABLE_THRESHOLD)))
        })
        .collect::<Result<_>>()?;
    let pick = |want: Sign| {
        verdicts.iter().filter(|&&(_, sign, stable)| sign == want && stable).map(|&(r, _, _)| r).collect()
    };
    Ok(Classification { m, positive: pick(Sign::Positive), negative: pick(Sign::Negative) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityInterval {
    pub family: AdvectionFamily,
    pub s: u32,
    pub n: u32,
    pub offsets: Vec<i64>,
    /// Smallest stable `|ν|` probed (0 when the scheme is stable near 0).
    pub lower: f64,
    pub upper: f64,
}

/// Stability interval in `|ν₁|` of the advection family member with `s`
/// downstream points, for `a₁ < 0`.
pub fn advection_family_stability(s: u32, family: AdvectionFamily, tol: f64) -> Result<StabilityInterval> {
    let n = family.order(s);
    let offsets = family.offsets(n, Sign::Negative)?;
    let scheme = master_scheme(&SchemeSpec::new(1, n, offsets.clone())?)?;
    let report = analyze(&LayerFamily::from(&scheme), Sign::Negative, &StabilityOptions::with_tol(tol));
    Ok(StabilityInterval {
        family,
        s,
        n,
        offsets: offsets.as_slice().to_vec(),
        lower: if report.nu_critical > 0.0 { 0.0 } else { f64::NAN },
        upper: report.nu_critical,
    })
}
