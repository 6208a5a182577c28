use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use fdscheme::scheme::{master_scheme, AdvectionFamily, LayerTable, SchemeSpec, Sign};
use fdscheme::solver::{
    run_linear, Burgers, GridField, LinearProblem, LinearTerm, NonlinearStepper, Profile,
};
use fdscheme::Error;
use rayon::prelude::*;

use crate::args::{Preset, RunArgs};
use crate::commands::resolve_scheme;
use crate::{CliError, CliResult};

const BOX: (f64, f64) = (-5.0, 5.0);
const MAX_ADVECTION_ORDER: u32 = 31;

struct Snapshot {
    file_name: String,
    header: Vec<String>,
    field: GridField,
}

impl Snapshot {
    fn render(&self) -> String {
        let mut text = String::new();
        for line in &self.header {
            writeln!(text, "# {line}").unwrap();
        }
        text.push_str("x,u\n");
        for (x, u) in self.field.xs().zip(&self.field.values) {
            writeln!(text, "{x:.6},{u}").unwrap();
        }
        text
    }
}

fn cells_for(dx: f64) -> fdscheme::Result<usize> {
    let cells = ((BOX.1 - BOX.0) / dx).round();
    if cells.is_nan() || cells < 1.0 || ((BOX.1 - BOX.0) / cells - dx).abs() > 1e-9 * dx {
        return Err(Error::Config(format!("dx = {dx} does not divide the box [-5, 5]")));
    }
    Ok(cells as usize)
}

pub fn run(args: &RunArgs, out: &mut impl Write) -> CliResult {
    let snapshots = match args.preset {
        Some(Preset::FigAdvection) => fig_advection(args)?,
        Some(Preset::FigBurgers) => fig_burgers(args)?,
        None => explicit(args)?,
    };
    fs::create_dir_all(&args.out)?;
    for snapshot in &snapshots {
        let path = Path::new(&args.out).join(&snapshot.file_name);
        fs::write(&path, snapshot.render())?;
        writeln!(out, "{}", path.display())?;
    }
    Ok(())
}

fn checked_orders(args: &RunArgs, default: &[u32]) -> Result<Vec<u32>, CliError> {
    let orders = if args.orders.is_empty() { default.to_vec() } else { args.orders.clone() };
    if let Some(&bad) = orders.iter().find(|&&n| n == 0 || n > MAX_ADVECTION_ORDER) {
        return Err(Error::OutOfRange {
            what: "order",
            value: i64::from(bad),
            range: format!("1..={MAX_ADVECTION_ORDER}"),
        }
        .into());
    }
    Ok(orders)
}

fn offsets_text(offsets: &[i64]) -> String {
    let items: Vec<String> = offsets.iter().map(i64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn fig_advection(args: &RunArgs) -> Result<Vec<Snapshot>, CliError> {
    let (dx, dt, a, steps) = (0.1, 0.08, -1.0, 6250usize);
    let family = args.family.unwrap_or(AdvectionFamily::Upwind);
    let default_orders: &[u32] = match family {
        AdvectionFamily::Upwind => &[1, 5, 9],
        _ => &[2, 6, 10],
    };
    let orders = checked_orders(args, default_orders)?;
    let cells = cells_for(dx)?;
    let jobs: Vec<(u32, Profile)> =
        orders.iter().flat_map(|&n| [Profile::Triangle, Profile::Rectangle].map(|p| (n, p))).collect();
    let results = jobs
        .into_par_iter()
        .map(|(n, profile)| -> fdscheme::Result<Vec<Snapshot>> {
            let offsets = family.offsets(n, Sign::Negative)?;
            let scheme = master_scheme(&SchemeSpec::new(1, n, offsets.clone())?)?;
            let problem = LinearProblem { terms: vec![LinearTerm::new(a, scheme)], dt };
            let initial = GridField::on_box(BOX.0, BOX.1, cells, |x| profile.eval(x));
            let run = run_linear(&problem, &initial, steps, |_, _| {})?;
            let mut snapshots = Vec::new();
            for (step, field) in [(0, initial), (steps, run.field)] {
                let t = step as f64 * dt;
                let mut header = vec![
                    "fdscheme run".to_string(),
                    format!(
                        "command: fdscheme run fig-advection --family {} --orders {n}",
                        family.short_name()
                    ),
                    format!(
                        "preset=fig-advection equation=advection m=1 n={n} family={} offsets={} profile={}",
                        family.short_name(),
                        offsets_text(offsets.as_slice()),
                        profile.name()
                    ),
                    format!(
                        "box=[-5,5) cells={cells} dx={dx} dt={dt} a={a} nu={} step={step} t={t}",
                        run.courant[0]
                    ),
                ];
                header.extend(run.warnings.iter().map(|w| format!("warning: {w}")));
                snapshots.push(Snapshot {
                    file_name: format!(
                        "fig-advection_{}_n{n:02}_{}_t{t:07.3}.csv",
                        family.short_name(),
                        profile.name()
                    ),
                    header,
                    field,
                });
            }
            Ok(snapshots)
        })
        .collect::<fdscheme::Result<Vec<_>>>()?;
    Ok(results.into_iter().flatten().collect())
}

fn fig_burgers(args: &RunArgs) -> Result<Vec<Snapshot>, CliError> {
    let (dx, dt) = (0.05, 0.025);
    let output_steps = [0usize, 20, 40, 60, 80];
    let orders = checked_orders(args, &[1, 2, 3])?;
    let cells = cells_for(dx)?;
    let nu = dt / dx;
    let results = orders
        .into_par_iter()
        .map(|n| -> fdscheme::Result<Vec<Snapshot>> {
            let family = args.family.unwrap_or_else(|| AdvectionFamily::natural(n));
            let offsets = family.offsets(n, Sign::Negative)?;
            let layers = LayerTable::from(&master_scheme(&SchemeSpec::new(1, n, offsets.clone())?)?);
            let densities = Burgers { count: n as usize + 1 };
            let mut stepper = NonlinearStepper::new(&layers, &densities, nu)?;
            let mut field = GridField::on_box(BOX.0, BOX.1, cells, |x| Profile::BurgersRamp.eval(x));
            let mut done = 0;
            let mut snapshots = Vec::new();
            for &target in &output_steps {
                while done < target {
                    stepper.step(&mut field)?;
                    done += 1;
                }
                let t = target as f64 * dt;
                snapshots.push(Snapshot {
                    file_name: format!("fig-burgers_{}_n{n:02}_t{t:05.3}.csv", family.short_name()),
                    header: vec![
                        "fdscheme run".to_string(),
                        format!(
                            "command: fdscheme run fig-burgers --family {} --orders {n}",
                            family.short_name()
                        ),
                        format!(
                            "preset=fig-burgers equation=burgers densities={} n={n} family={} offsets={} profile=ramp",
                            densities.count,
                            family.short_name(),
                            offsets_text(offsets.as_slice())
                        ),
                        format!("box=[-5,5) cells={cells} dx={dx} dt={dt} nu={nu} step={target} t={t}"),
                    ],
                    field: field.clone(),
                });
            }
            Ok(snapshots)
        })
        .collect::<fdscheme::Result<Vec<_>>>()?;
    Ok(results.into_iter().flatten().collect())
}

fn explicit(args: &RunArgs) -> Result<Vec<Snapshot>, CliError> {
    let (Some(m), Some(n), Some(steps)) = (args.m, args.n, args.steps) else {
        return Err(CliError::Usage("run needs a preset or all of --m, --n and --steps".into()));
    };
    if !args.orders.is_empty() || args.family.is_some() {
        return Err(CliError::Usage("--orders and --family only apply to presets".into()));
    }
    if !(args.nu.is_finite() && args.nu != 0.0 && args.dx > 0.0) {
        return Err(Error::Config(format!(
            "need dx > 0 and a finite nonzero nu, got dx={} nu={}",
            args.dx, args.nu
        ))
        .into());
    }
    let (scheme, sign) = resolve_scheme(m, n, &args.stencil)?;
    let cells = cells_for(args.dx)?;
    let a = sign.value();
    let dt = args.nu.abs() * args.dx.powi(m as i32);
    let offsets = scheme.offsets().as_slice().to_vec();
    let problem = LinearProblem { terms: vec![LinearTerm::new(a, scheme)], dt };
    let initial = GridField::on_box(BOX.0, BOX.1, cells, |x| args.profile.eval(x));
    let every = args.every.filter(|&k| k > 0);
    let mut kept = Vec::new();
    let run = run_linear(&problem, &initial, steps, |step, field| {
        if step == 0 || step == steps || every.is_some_and(|k| step % k == 0) {
            kept.push((step, field.clone()));
        }
    })?;
    for warning in &run.warnings {
        eprintln!("warning: {warning}");
    }
    let every_flag = every.map(|k| format!(" --every {k}")).unwrap_or_default();
    let command = format!(
        "command: fdscheme run --m {m} --n {n} --offsets={} --sign {sign} --profile {} --dx {} --nu {} --steps {steps}{every_flag}",
        offsets.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
        args.profile.name(),
        args.dx,
        args.nu.abs(),
    );
    Ok(kept
        .into_iter()
        .map(|(step, field)| {
            let t = step as f64 * dt;
            let mut header = vec![
                "fdscheme run".to_string(),
                command.clone(),
                format!("m={m} n={n} offsets={} profile={}", offsets_text(&offsets), args.profile.name()),
                format!(
                    "box=[-5,5) cells={cells} dx={} dt={dt} a={a} nu={} step={step} t={t}",
                    args.dx, run.courant[0]
                ),
            ];
            header.extend(run.warnings.iter().map(|w| format!("warning: {w}")));
            Snapshot {
                file_name: format!("run_m{m}_n{n:02}_{}_step{step:06}.csv", args.profile.name()),
                header,
                field,
            }
        })
        .collect())
}
