use core::fmt;

/// Errors raised by constructors and evaluators in this crate.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A length parameter that must be strictly positive was not.
    NonPositive { name: &'static str, value: f64 },
    /// A parameter combination outside the admissible set.
    InvalidParameter(&'static str),
    /// Tube radius does not satisfy `0 < r < 1/sup|κ|`.
    TubeRadius { radius: f64, max_curvature: f64 },
    /// A parameter outside the closed evaluation domain.
    OutOfDomain { value: f64, lo: f64, hi: f64 },
    /// `EG − F²` is not positive at the evaluation point.
    DegenerateMetric { t: f64, phi: f64, det: f64 },
    EmptyGrid,
    /// Every grid point was a degenerate point of the chart.
    AllSingular,
    /// A Fourier decomposition was requested in a non-periodic direction.
    NotPeriodic,
    InvalidMaxMode(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositive { name, value } => {
                write!(f, "parameter `{name}` must be positive, got {value}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::TubeRadius { radius, max_curvature } => write!(
                f,
                "tube radius {radius} must satisfy 0 < r < 1/max|curvature| (max|curvature| = {max_curvature})"
            ),
            Error::OutOfDomain { value, lo, hi } => {
                write!(f, "parameter {value} outside domain [{lo}, {hi}]")
            }
            Error::DegenerateMetric { t, phi, det } => {
                write!(f, "degenerate metric at ({t}, {phi}): EG - F^2 = {det}")
            }
            Error::EmptyGrid => f.write_str("sample grid is empty"),
            Error::AllSingular => f.write_str("every grid point is a singular point of the chart"),
            Error::NotPeriodic => f.write_str("chart is not periodic in the second parameter"),
            Error::InvalidMaxMode(m) => write!(f, "max_mode must be at least 3, got {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}
