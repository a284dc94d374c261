//! JSON payloads. Every float is written with 17 significant digits.

use std::collections::BTreeMap;
use std::io;

use gaussfit_core::classifier::{SweepTable, Verdict};
use gaussfit_core::operators::AuditReport;
use gaussfit_core::registry::SurfaceSpec;
use gaussfit_core::GridSize;
use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub formula: String,
    pub max_abs_discrepancy: f64,
    /// Discrepancy at or above the audit tolerance.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub surface: String,
    pub params: BTreeMap<String, f64>,
    pub grid: [usize; 2],
    pub tol: f64,
    /// Row-major Λ.
    pub lambda: [f64; 9],
    /// `None` for degenerate grids.
    pub rms_residual: Option<f64>,
    pub verdict: String,
    pub audit: Vec<AuditFinding>,
    pub version: String,
}

pub fn params_map(spec: &SurfaceSpec) -> BTreeMap<String, f64> {
    spec.used_params().map(|(k, v)| (k.to_string(), v)).collect()
}

impl RunReport {
    pub fn new(spec: &SurfaceSpec, verdict: &Verdict, audit: Option<&AuditReport>) -> Self {
        let fit = verdict.fit;
        RunReport {
            surface: spec.family.tag().to_string(),
            params: params_map(spec),
            grid: [verdict.grid.m, verdict.grid.k],
            tol: verdict.tolerance,
            lambda: fit.map_or([0.0; 9], |f| f.lambda.to_row_major()),
            rms_residual: fit.map(|f| f.rms_residual),
            verdict: verdict.kind().as_str().to_string(),
            audit: audit
                .map(|a| {
                    a.entries
                        .iter()
                        .map(|e| AuditFinding {
                            formula: e.formula.to_string(),
                            max_abs_discrepancy: e.max_abs_discrepancy,
                            flagged: e.flagged,
                        })
                        .collect()
                })
                .unwrap_or_default(),
            version: VERSION.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRowReport {
    pub params: BTreeMap<String, f64>,
    pub rms_residual: Option<f64>,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SkippedReport {
    pub params: BTreeMap<String, f64>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub surface: String,
    pub grid: [usize; 2],
    pub tol: f64,
    pub rows: Vec<SweepRowReport>,
    pub skipped: Vec<SkippedReport>,
    pub version: String,
}

impl SweepReport {
    pub fn new(surface: &str, grid: GridSize, tol: f64, table: &SweepTable) -> Self {
        SweepReport {
            surface: surface.to_string(),
            grid: [grid.m, grid.k],
            tol,
            rows: table
                .rows
                .iter()
                .map(|r| SweepRowReport {
                    params: params_map(&r.spec),
                    rms_residual: r.rms_residual.is_finite().then_some(r.rms_residual),
                    verdict: r.verdict.as_str().to_string(),
                })
                .collect(),
            skipped: table
                .skipped
                .iter()
                .map(|(spec, e)| SkippedReport { params: params_map(spec), reason: e.to_string() })
                .collect(),
            version: VERSION.to_string(),
        }
    }
}

/// Compact JSON whose floats carry 17 significant digits.
struct RoundTripFloats;

impl serde_json::ser::Formatter for RoundTripFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, RoundTripFloats);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

/// Formats a float with 17 significant digits, as in the JSON output.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}
