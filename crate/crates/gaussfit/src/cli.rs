//! Argument parsing and command dispatch.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gaussfit_core::classifier::{residual_sweep_with, SweepAxes, Verdict};
use gaussfit_core::operators::audit_closed_forms;
use gaussfit_core::registry::{SurfaceFamily, SurfaceParams, SurfaceSpec};
use gaussfit_core::GridSize;

use crate::parallel;
use crate::report::{to_json, RunReport, SweepReport};
use crate::sweep::{parse_range, to_csv};

#[derive(Debug, Parser)]
#[command(name = "gaussfit", version, about = "Fit and classify the Gauss-map relation Δn = Λn on parametric surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit Λ and report whether Δn = Λn holds.
    Classify(RunArgs),
    /// Classify, and compare closed-form operators with the generic one.
    Audit(RunArgs),
    /// Classify over parameter ranges (start:stop:count).
    Sweep(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// cylinder, anchor-ring, tube-circle, tube-helix, sphere or plane.
    #[arg(long)]
    pub surface: String,
    /// Tube or cylinder radius.
    #[arg(long = "r", allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Anchor-ring centre radius.
    #[arg(long = "a", allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Directrix (circle or helix) radius.
    #[arg(long = "R", allow_hyphen_values = true)]
    pub big_r: Option<String>,
    /// Helix pitch parameter.
    #[arg(long = "p", allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Sphere radius.
    #[arg(long = "rho", allow_hyphen_values = true)]
    pub rho: Option<String>,
    /// Sample grid as MxK.
    #[arg(long, default_value = "32x32", value_parser = parse_grid)]
    pub grid: GridSize,
    /// Relative rms residual below which the relation holds.
    #[arg(long, default_value_t = gaussfit_core::classifier::DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

pub fn parse_grid(s: &str) -> Result<GridSize, String> {
    let (m, k) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("grid {s:?} must look like 32x32"))?;
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|_| format!("grid {s:?} must look like 32x32"));
    let grid = GridSize::new(parse(m)?, parse(k)?);
    if grid.is_empty() {
        return Err(format!("grid {s:?} has no points"));
    }
    Ok(grid)
}

impl RunArgs {
    fn raw_params(&self) -> [(&'static str, Option<&String>); 5] {
        [
            ("a", self.a.as_ref()),
            ("r", self.r.as_ref()),
            ("R", self.big_r.as_ref()),
            ("p", self.p.as_ref()),
            ("rho", self.rho.as_ref()),
        ]
    }

    fn family(&self) -> Result<SurfaceFamily> {
        let family: SurfaceFamily = self.surface.parse().with_context(|| {
            format!(
                "unknown surface {:?}; expected one of {}",
                self.surface,
                SurfaceFamily::ALL.map(|f| f.tag()).join(", ")
            )
        })?;
        let used = family.parameter_names();
        for (name, value) in self.raw_params() {
            if value.is_some() && !used.contains(&name) {
                bail!("--{name} is not a parameter of {family}");
            }
        }
        for name in used {
            if self.raw_params().iter().all(|(n, v)| n != name || v.is_none()) {
                bail!("{family} requires --{name}");
            }
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            bail!("--tol must be positive, got {}", self.tol);
        }
        Ok(family)
    }

    fn spec(&self) -> Result<SurfaceSpec> {
        let family = self.family()?;
        let mut values = [None; 5];
        for (slot, (name, raw)) in values.iter_mut().zip(self.raw_params()) {
            if let Some(raw) = raw {
                let v: f64 = raw.trim().parse().with_context(|| format!("--{name} expects a number, got {raw:?}"))?;
                if !v.is_finite() {
                    bail!("--{name} must be finite");
                }
                *slot = Some(v);
            }
        }
        let [a, r, big_r, p, rho] = values;
        Ok(SurfaceSpec::new(family, SurfaceParams { a, r, big_r, p, rho }))
    }

    fn axes(&self) -> Result<(SurfaceFamily, SweepAxes)> {
        let family = self.family()?;
        let mut axes = SweepAxes::default();
        for (name, raw) in self.raw_params() {
            let Some(raw) = raw else { continue };
            let values = parse_range(raw).with_context(|| format!("--{name}"))?;
            match name {
                "a" => axes.a = values,
                "r" => axes.r = values,
                "R" => axes.big_r = values,
                "p" => axes.p = values,
                _ => axes.rho = values,
            }
        }
        Ok((family, axes))
    }
}

fn pool() -> Result<rayon::ThreadPool> {
    Ok(parallel::build_pool(parallel::thread_cap()?)?)
}

fn classify_spec(pool: &rayon::ThreadPool, spec: &SurfaceSpec, args: &RunArgs) -> Result<(Verdict, gaussfit_core::surfaces::SurfacePatch)> {
    let surface = spec.build().with_context(|| format!("invalid {} parameters", spec.family))?;
    let fit = parallel::fit_lambda(pool, &surface, args.grid);
    let verdict = Verdict::from_fit(fit, args.grid, args.tol)?;
    Ok((verdict, surface))
}

/// Runs one command and returns what should be written to standard output.
pub fn run(cli: &Cli) -> Result<String> {
    let pool = pool()?;
    match &cli.command {
        Command::Classify(args) | Command::Audit(args) => {
            if args.format == Format::Csv {
                bail!("--format csv applies to sweep only");
            }
            let spec = args.spec()?;
            let (verdict, surface) = classify_spec(&pool, &spec, args)?;
            let audit = match cli.command {
                Command::Audit(_) => Some(audit_closed_forms(&surface, args.grid)?),
                _ => None,
            };
            let mut out = to_json(&RunReport::new(&spec, &verdict, audit.as_ref()))?;
            out.push('\n');
            Ok(out)
        }
        Command::Sweep(args) => {
            let (family, axes) = args.axes()?;
            let table = residual_sweep_with(family, &axes, args.grid, args.tol, |s, g| {
                parallel::fit_lambda(&pool, s, g)
            })?;
            Ok(match args.format {
                Format::Csv => to_csv(&table),
                Format::Json => {
                    let mut out = to_json(&SweepReport::new(family.tag(), args.grid, args.tol, &table))?;
                    out.push('\n');
                    out
                }
            })
        }
    }
}
