//! Least-squares fitting of `Λ` in `Δ^I n = Λn` and the resulting verdicts.
//!
//! Each row of `Λ` is fit independently over the sample grid with design rows
//! `n(p)ᵀ` and targets `(Δ^I n_i)(p)`. The design is shared by all three rows,
//! so a single minimum-norm solve with three right-hand sides suffices.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{Mat3, Vec3};
use crate::grid::GridSize;
use crate::lstsq::{min_norm_lstsq, Matrix};
use crate::math;
use crate::operators::gauss_laplacian;
use crate::registry::{SurfaceFamily, SurfaceParams, SurfaceSpec};
use crate::surfaces::SurfacePatch;

/// Relative pivot threshold for numerical rank decisions.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// Relative rms residual below which the relation is considered satisfied.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// The Gauss map and its Laplacian at one regular grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussSample {
    pub normal: Vec3,
    pub laplacian: Vec3,
}

/// Evaluates one grid point; `Ok(None)` marks a singular point of the chart.
pub fn sample_point(surface: &SurfacePatch, t: f64, phi: f64) -> Result<Option<GaussSample>> {
    match gauss_laplacian(surface, t, phi) {
        Ok(laplacian) => Ok(Some(GaussSample { normal: surface.gauss_map(t, phi), laplacian })),
        Err(Error::DegenerateMetric { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Samples at every regular point of the grid, in grid order.
pub fn sample_gauss_map(surface: &SurfacePatch, grid: GridSize) -> Result<Vec<GaussSample>> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut out = Vec::with_capacity(grid.len());
    for (t, phi) in surface.rect().grid(grid) {
        if let Some(s) = sample_point(surface, t, phi)? {
            out.push(s);
        }
    }
    if out.is_empty() {
        return Err(Error::AllSingular);
    }
    Ok(out)
}

/// Best-fit `Λ` with residual and rank diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaFit {
    pub lambda: Mat3,
    /// `√Σ|Δn − Λn|² / √Σ|Δn|²`; the absolute value when `Δn` vanishes identically.
    pub rms_residual: f64,
    /// Absolute rms of `Δn_i − (Λn)_i` per row.
    pub per_row_residuals: [f64; 3],
    pub design_rank: usize,
    /// Set when the Gauss image spans fewer than three dimensions, so some
    /// components of `Λ` are unconstrained and set to zero.
    pub null_space_note: bool,
    pub samples: usize,
}

pub fn fit_lambda(surface: &SurfacePatch, grid: GridSize) -> Result<LambdaFit> {
    fit_lambda_from_samples(&sample_gauss_map(surface, grid)?)
}

pub fn fit_lambda_from_samples(samples: &[GaussSample]) -> Result<LambdaFit> {
    if samples.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let rows = samples.len();
    let mut design = Matrix::zeros(rows, 3);
    let mut targets = Matrix::zeros(rows, 3);
    for (p, s) in samples.iter().enumerate() {
        for j in 0..3 {
            design.set(p, j, s.normal[j]);
            targets.set(p, j, s.laplacian[j]);
        }
    }
    let solved = min_norm_lstsq(&design, &targets, RANK_TOLERANCE);
    // Column i of the solution is row i of Λ.
    let mut lambda = Mat3::ZERO;
    for i in 0..3 {
        for j in 0..3 {
            lambda.0[i][j] = solved.solution.get(j, i);
        }
    }
    Ok(assess(lambda, samples, solved.rank))
}

fn assess(lambda: Mat3, samples: &[GaussSample], design_rank: usize) -> LambdaFit {
    let mut row_sq = [0.0; 3];
    let mut target_sq = 0.0;
    for s in samples {
        let r = s.laplacian - lambda.mul_vec(s.normal);
        for (acc, v) in row_sq.iter_mut().zip(r.to_array()) {
            *acc += v * v;
        }
        target_sq += s.laplacian.norm_squared();
    }
    let total = math::sqrt(row_sq.iter().sum());
    let denom = math::sqrt(target_sq);
    let rms_residual = if denom > 0.0 { total / denom } else { total };
    let count = samples.len() as f64;
    LambdaFit {
        lambda,
        rms_residual,
        per_row_residuals: row_sq.map(|s| math::sqrt(s / count)),
        design_rank,
        null_space_note: design_rank < 3,
        samples: samples.len(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    Satisfies,
    Fails,
    Degenerate,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Satisfies => "satisfies",
            VerdictKind::Fails => "fails",
            VerdictKind::Degenerate => "degenerate",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    Satisfies(Mat3),
    Fails(f64),
    Degenerate(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub tolerance: f64,
    pub grid: GridSize,
    /// The underlying fit; absent only for degenerate grids.
    pub fit: Option<LambdaFit>,
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self.outcome {
            Outcome::Satisfies(_) => VerdictKind::Satisfies,
            Outcome::Fails(_) => VerdictKind::Fails,
            Outcome::Degenerate(_) => VerdictKind::Degenerate,
        }
    }

    /// Turns a fit attempt into a verdict. A grid without regular points is
    /// reported as degenerate; other errors propagate.
    pub fn from_fit(fit: Result<LambdaFit>, grid: GridSize, tolerance: f64) -> Result<Verdict> {
        let fit = match fit {
            Ok(f) => f,
            Err(Error::AllSingular) => {
                return Ok(Verdict {
                    outcome: Outcome::Degenerate("every grid point is singular"),
                    tolerance,
                    grid,
                    fit: None,
                })
            }
            Err(e) => return Err(e),
        };
        let outcome = if fit.design_rank == 0 {
            Outcome::Degenerate("Gauss map vanishes on the grid")
        } else if fit.rms_residual < tolerance {
            Outcome::Satisfies(fit.lambda)
        } else {
            Outcome::Fails(fit.rms_residual)
        };
        Ok(Verdict { outcome, tolerance, grid, fit: Some(fit) })
    }
}

pub fn classify(surface: &SurfacePatch, grid: GridSize, tolerance: f64) -> Result<Verdict> {
    Verdict::from_fit(fit_lambda(surface, grid), grid, tolerance)
}

/// Coefficients of `cos(kφ)` and `sin(kφ)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TrigMode {
    pub order: usize,
    pub cos: f64,
    pub sin: f64,
}

impl TrigMode {
    pub fn magnitude(&self) -> f64 {
        math::sqrt(self.cos * self.cos + self.sin * self.sin)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeScaling {
    Plain,
    /// Multiply by `δ³ = (1 − rκ cosφ)³` first; tubes only.
    DeltaCubed,
}

/// Fourier content in `φ` of one component at fixed `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModeSpectrum {
    pub t: f64,
    pub component: usize,
    /// Modes of `φ ↦ Δ^I n_i`.
    pub raw: Vec<TrigMode>,
    /// Modes of `φ ↦ Δ^I n_i − (Λn)_i`.
    pub residual: Vec<TrigMode>,
}

/// Discrete Fourier decomposition in `φ` of `Δ^I n_i` and of its residual
/// against `Λ`, for modes `0..=max_mode`.
pub fn trig_mode_decomposition(
    surface: &SurfacePatch,
    lambda: &Mat3,
    t: f64,
    component: usize,
    max_mode: usize,
    scaling: ModeScaling,
) -> Result<ModeSpectrum> {
    let rect = surface.rect();
    if !rect.phi_periodic {
        return Err(Error::NotPeriodic);
    }
    if max_mode < 3 {
        return Err(Error::InvalidMaxMode(max_mode));
    }
    if component > 2 {
        return Err(Error::InvalidParameter("component index must be 0, 1 or 2"));
    }
    rect.check(t, rect.phi.0)?;
    let curvature_radius = match scaling {
        ModeScaling::Plain => None,
        ModeScaling::DeltaCubed => {
            let (curve, r) = surface
                .tube_shape()
                .ok_or(Error::InvalidParameter("delta scaling needs a tube chart"))?;
            Some(r * curve.curvature(t))
        }
    };

    let samples = (8 * (max_mode + 1)).max(128);
    let (phi0, span) = (rect.phi.0, rect.phi.1 - rect.phi.0);
    let mut raw_vals = Vec::with_capacity(samples);
    let mut res_vals = Vec::with_capacity(samples);
    let mut angles = Vec::with_capacity(samples);
    for j in 0..samples {
        let theta = math::TAU * j as f64 / samples as f64;
        let phi = phi0 + span * j as f64 / samples as f64;
        let lap = gauss_laplacian(surface, t, phi)?;
        let n = surface.gauss_map(t, phi);
        let scale = curvature_radius.map_or(1.0, |rk| {
            let d = 1.0 - rk * math::cos(phi);
            d * d * d
        });
        raw_vals.push(lap[component] * scale);
        res_vals.push((lap[component] - lambda.row(component).dot(n)) * scale);
        angles.push(theta);
    }
    Ok(ModeSpectrum {
        t,
        component,
        raw: fourier_modes(&angles, &raw_vals, max_mode),
        residual: fourier_modes(&angles, &res_vals, max_mode),
    })
}

fn fourier_modes(angles: &[f64], values: &[f64], max_mode: usize) -> Vec<TrigMode> {
    let n = values.len() as f64;
    (0..=max_mode)
        .map(|k| {
            let (mut c, mut s) = (0.0, 0.0);
            for (&a, &v) in angles.iter().zip(values) {
                c += v * math::cos(k as f64 * a);
                s += v * math::sin(k as f64 * a);
            }
            let w = if k == 0 { 1.0 / n } else { 2.0 / n };
            TrigMode { order: k, cos: c * w, sin: if k == 0 { 0.0 } else { s * w } }
        })
        .collect()
}

/// Values to sweep for each parameter. Only the lists a family reads are used.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepAxes {
    pub a: Vec<f64>,
    pub r: Vec<f64>,
    pub big_r: Vec<f64>,
    pub p: Vec<f64>,
    pub rho: Vec<f64>,
}

impl SweepAxes {
    fn axis(&self, name: &str) -> &[f64] {
        match name {
            "a" => &self.a,
            "r" => &self.r,
            "R" => &self.big_r,
            "p" => &self.p,
            _ => &self.rho,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub spec: SurfaceSpec,
    pub rms_residual: f64,
    pub verdict: VerdictKind,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
    /// Parameter combinations rejected by the family's invariants.
    pub skipped: Vec<(SurfaceSpec, Error)>,
}

/// Every combination of the family's parameter lists, last parameter
/// varying fastest.
pub fn sweep_specs(family: SurfaceFamily, axes: &SweepAxes) -> Result<Vec<SurfaceSpec>> {
    let names = family.parameter_names();
    for &n in names {
        if axes.axis(n).is_empty() {
            return Err(Error::InvalidParameter("sweep is missing values for a required parameter"));
        }
    }
    let total: usize = names.iter().map(|n| axes.axis(n).len()).product();
    let mut specs = Vec::with_capacity(total);
    for mut index in 0..total {
        let mut params = SurfaceParams::default();
        for &n in names.iter().rev() {
            let values = axes.axis(n);
            let v = Some(values[index % values.len()]);
            index /= values.len();
            match n {
                "a" => params.a = v,
                "r" => params.r = v,
                "R" => params.big_r = v,
                "p" => params.p = v,
                _ => params.rho = v,
            }
        }
        specs.push(SurfaceSpec::new(family, params));
    }
    Ok(specs)
}

pub fn residual_sweep(
    family: SurfaceFamily,
    axes: &SweepAxes,
    grid: GridSize,
    tolerance: f64,
) -> Result<SweepTable> {
    residual_sweep_with(family, axes, grid, tolerance, fit_lambda)
}

/// [`residual_sweep`] with a caller-supplied fitting routine.
pub fn residual_sweep_with<F>(
    family: SurfaceFamily,
    axes: &SweepAxes,
    grid: GridSize,
    tolerance: f64,
    fit: F,
) -> Result<SweepTable>
where
    F: Fn(&SurfacePatch, GridSize) -> Result<LambdaFit>,
{
    let mut table = SweepTable { rows: Vec::new(), skipped: Vec::new() };
    for spec in sweep_specs(family, axes)? {
        let surface = match spec.build() {
            Ok(s) => s,
            Err(e) => {
                table.skipped.push((spec, e));
                continue;
            }
        };
        let verdict = Verdict::from_fit(fit(&surface, grid), grid, tolerance)?;
        let rms_residual = verdict.fit.map_or(f64::NAN, |f| f.rms_residual);
        table.rows.push(SweepRow { spec, rms_residual, verdict: verdict.kind() });
    }
    Ok(table)
}
