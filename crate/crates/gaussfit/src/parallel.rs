//! Grid sampling fanned out over a rayon pool.
//!
//! Samples are collected in grid order, so results are bit-identical to the
//! sequential path in `gaussfit-core` regardless of thread count.

use gaussfit_core::classifier::{fit_lambda_from_samples, sample_point, LambdaFit};
use gaussfit_core::surfaces::SurfacePatch;
use gaussfit_core::{Error as CoreError, GridSize};
use rayon::prelude::*;

pub const THREADS_ENV: &str = "GAUSSFIT_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum PoolError {
    #[error("{THREADS_ENV} must be a non-negative integer, got {0:?}")]
    BadThreadCount(String),
    #[error(transparent)]
    Build(#[from] rayon::ThreadPoolBuildError),
}

/// Thread cap from `GAUSSFIT_THREADS`; `0` or unset means automatic.
pub fn thread_cap() -> Result<usize, PoolError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if v.trim().is_empty() => Ok(0),
        Ok(v) => v.trim().parse().map_err(|_| PoolError::BadThreadCount(v)),
        Err(_) => Ok(0),
    }
}

pub fn build_pool(threads: usize) -> Result<rayon::ThreadPool, PoolError> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads).build()?)
}

/// Parallel counterpart of `gaussfit_core::classifier::fit_lambda`.
pub fn fit_lambda(
    pool: &rayon::ThreadPool,
    surface: &SurfacePatch,
    grid: GridSize,
) -> Result<LambdaFit, CoreError> {
    if grid.is_empty() {
        return Err(CoreError::EmptyGrid);
    }
    let points: Vec<(f64, f64)> = surface.rect().grid(grid).collect();
    let sampled: Result<Vec<_>, CoreError> = pool.install(|| {
        points.par_iter().map(|&(t, phi)| sample_point(surface, t, phi)).collect()
    });
    let samples: Vec<_> = sampled?.into_iter().flatten().collect();
    if samples.is_empty() {
        return Err(CoreError::AllSingular);
    }
    fit_lambda_from_samples(&samples)
}
