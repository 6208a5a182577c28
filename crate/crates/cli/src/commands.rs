use std::io::Write;

use fdscheme::scheme::{
    default_offsets, error_term, first_order_scheme, master_scheme, AdvectionFamily, Scheme, SchemeDump,
    SchemeSpec, Sign,
};
use fdscheme::solver::{convergence_study, default_sign, ConvergenceConfig};
use fdscheme::stability::{
    advection_family_stability, analyze, classify_first_order, theorem5_bound_audit, Classification,
    LayerFamily, StabilityOptions,
};
use fdscheme::{Error, OffsetSet};
use rayon::prelude::*;
use serde_json::json;

use crate::args::{
    AuditArgs, ClassifyArgs, CoeffsArgs, CoeffsFormat, ConvergeArgs, FamiliesArgs, StabilityArgs,
    StencilArgs, TableFormat,
};
use crate::CliResult;

pub fn resolve_offsets(m: u32, n: u32, stencil: &StencilArgs) -> fdscheme::Result<(OffsetSet, Sign)> {
    let sign = stencil.sign.unwrap_or_else(|| default_sign(m));
    let offsets = match (&stencil.offsets, stencil.r) {
        (Some(offsets), _) => offsets.clone(),
        (None, Some(r)) => {
            let span = m * n;
            if r > span {
                return Err(Error::OutOfRange {
                    what: "r",
                    value: i64::from(r),
                    range: format!("0..={span}"),
                });
            }
            OffsetSet::contiguous(r, span)
        }
        (None, None) => default_offsets(m, n, sign)?,
    };
    Ok((offsets, sign))
}

pub fn resolve_scheme(m: u32, n: u32, stencil: &StencilArgs) -> fdscheme::Result<(Scheme, Sign)> {
    let (offsets, sign) = resolve_offsets(m, n, stencil)?;
    Ok((master_scheme(&SchemeSpec::new(m, n, offsets)?)?, sign))
}

fn sign_label(sign: Sign) -> &'static str {
    match sign {
        Sign::Positive => "a>0",
        Sign::Negative => "a<0",
    }
}

fn print_json(out: &mut impl Write, value: &serde_json::Value) -> CliResult {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json value serializes"))?;
    Ok(())
}

pub fn coeffs(args: &CoeffsArgs, out: &mut impl Write) -> CliResult {
    let scheme = if args.first_order {
        let r = args.stencil.r.expect("clap requires --r with --first-order");
        first_order_scheme(args.m, r)?
    } else {
        let n = args.n.expect("clap requires --n without --first-order");
        resolve_scheme(args.m, n, &args.stencil)?.0
    };
    match args.format {
        CoeffsFormat::Dump => write!(out, "{}", SchemeDump::from_scheme(&scheme).to_toml())?,
        CoeffsFormat::Table => {
            write!(out, "{scheme}")?;
            writeln!(out, "layers (weight of nu^j):")?;
            for (j, layer) in scheme.layers().iter().enumerate() {
                let cells: Vec<String> = layer.iter().map(|w| w.to_string()).collect();
                writeln!(out, "  j={j}: [{}]", cells.join(", "))?;
            }
            if let Some(leading) = error_term(&scheme).leading() {
                writeln!(
                    out,
                    "leading error: ({}) dx^{} u^({})/{}!",
                    leading.coefficient.display_in("nu"),
                    leading.order,
                    leading.order,
                    leading.order
                )?;
            }
        }
    }
    Ok(())
}

pub fn stability(args: &StabilityArgs, out: &mut impl Write) -> CliResult {
    let (scheme, sign) = resolve_scheme(args.m, args.n, &args.stencil)?;
    let family = match args.truncate_layers {
        Some(keep) => LayerFamily::truncated(&scheme, keep),
        None => LayerFamily::from(&scheme),
    };
    let report = analyze(&family, sign, &StabilityOptions::with_tol(args.tol));
    match args.format {
        TableFormat::Json => print_json(out, &serde_json::to_value(&report).expect("report serializes"))?,
        TableFormat::Table => {
            writeln!(
                out,
                "m={} n={} offsets={} sign {}",
                args.m,
                args.n,
                scheme.offsets(),
                sign_label(sign)
            )?;
            if let Some(keep) = args.truncate_layers {
                writeln!(out, "layers kept: nu^0 .. nu^{keep}")?;
            }
            if report.unbounded {
                writeln!(out, "nu_critical >= {} (search ceiling)", report.nu_critical)?;
            } else {
                writeln!(out, "nu_critical = {:.6}", report.nu_critical)?;
            }
            writeln!(out, "worst theta = {:.6}", report.worst_theta)?;
            if report.nu_critical == 0.0 {
                writeln!(out, "unstable for every nu != 0")?;
            }
        }
    }
    Ok(())
}

fn r_list(rs: &[u32]) -> String {
    if rs.is_empty() {
        "none".into()
    } else {
        rs.iter().map(|r| format!("r={r}")).collect::<Vec<_>>().join(", ")
    }
}

pub fn classify(args: &ClassifyArgs, out: &mut impl Write) -> CliResult {
    let measured = classify_first_order(args.m, args.tol)?;
    let closed = Classification::closed_form(args.m);
    match args.format {
        TableFormat::Json => print_json(
            out,
            &json!({ "measured": measured, "closed_form": closed, "agree": measured == closed }),
        )?,
        TableFormat::Table => {
            writeln!(out, "m={}", args.m)?;
            for sign in [Sign::Positive, Sign::Negative] {
                writeln!(out, "  {}: {}", sign_label(sign), r_list(measured.stable_r(sign)))?;
            }
            let verdict = if measured == closed { "matches" } else { "DIFFERS FROM" };
            writeln!(out, "{verdict} the closed-form classification")?;
        }
    }
    Ok(())
}

pub fn audit(args: &AuditArgs, out: &mut impl Write) -> CliResult {
    let rows = theorem5_bound_audit(args.m_max, args.tol, args.slack)?;
    let violations = rows.iter().filter(|r| !r.within).count();
    match args.format {
        TableFormat::Json => print_json(out, &json!({ "rows": rows, "violations": violations }))?,
        TableFormat::Table => {
            writeln!(out, "{:>2} {:>2} {:>4} {:>10} {:>10}  ok", "m", "r", "sign", "nu_c", "bound")?;
            for row in &rows {
                writeln!(
                    out,
                    "{:>2} {:>2} {:>4} {:>10.6} {:>10.6}  {}",
                    row.m,
                    row.r,
                    row.sign,
                    row.nu_critical,
                    row.bound,
                    if row.within { "yes" } else { "NO" }
                )?;
            }
            writeln!(out, "{} schemes, {violations} above the bound", rows.len())?;
        }
    }
    Ok(())
}

pub fn families(args: &FamiliesArgs, out: &mut impl Write) -> CliResult {
    let cases: Vec<(AdvectionFamily, u32)> = AdvectionFamily::ALL
        .iter()
        .flat_map(|&family| {
            // Lax-Wendroff-type starts at s = 1
            let first = u32::from(family == AdvectionFamily::LaxWendroff);
            (first..=args.s_max).map(move |s| (family, s))
        })
        .collect();
    let rows = cases
        .into_par_iter()
        .map(|(family, s)| advection_family_stability(s, family, args.tol))
        .collect::<fdscheme::Result<Vec<_>>>()?;
    match args.format {
        TableFormat::Json => print_json(out, &json!(rows))?,
        TableFormat::Table => {
            for row in &rows {
                let offsets: Vec<String> = row.offsets.iter().map(i64::to_string).collect();
                writeln!(
                    out,
                    "{:<3} s={} n={} offsets={{{}}}  |nu| in [{}, {:.4}]",
                    row.family.short_name(),
                    row.s,
                    row.n,
                    offsets.join(","),
                    row.lower,
                    row.upper
                )?;
            }
        }
    }
    Ok(())
}

pub fn converge(args: &ConvergeArgs, out: &mut impl Write) -> CliResult {
    let (offsets, sign) = resolve_offsets(args.m, args.n, &args.stencil)?;
    let config = ConvergenceConfig {
        nu: sign.value() * args.nu.abs(),
        grids: args.grids.clone(),
        offsets: Some(offsets),
        ..ConvergenceConfig::new(args.m, args.n, args.nu)
    };
    let report = convergence_study(&config)?;
    match args.format {
        TableFormat::Json => print_json(out, &serde_json::to_value(&report).expect("report serializes"))?,
        TableFormat::Table => {
            let offsets: Vec<String> = report.offsets.iter().map(i64::to_string).collect();
            writeln!(
                out,
                "m={} n={} offsets={{{}}} nu={} T={}",
                report.m,
                report.n,
                offsets.join(","),
                report.nu,
                report.final_time
            )?;
            writeln!(out, "{:>6} {:>12} {:>12} {:>8} {:>12}", "cells", "dx", "dt", "steps", "max error")?;
            for row in &report.rows {
                writeln!(
                    out,
                    "{:>6} {:>12.4e} {:>12.4e} {:>8} {:>12.4e}",
                    row.cells, row.dx, row.dt, row.steps, row.error
                )?;
            }
            if report.exact {
                writeln!(out, "exact: every error is below 1e-12, slope undefined")?;
            } else {
                writeln!(out, "order in dt = {:.3}", report.time_slope)?;
                writeln!(out, "order in dx = {:.3}", report.space_slope)?;
            }
        }
    }
    Ok(())
}
