//! Range syntax and CSV output for parameter sweeps.

use gaussfit_core::classifier::SweepTable;

use crate::report::format_float;

pub const CSV_HEADER: &str = "surface,param_a,param_r,param_R,param_p,rms_residual,verdict";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RangeError {
    #[error("malformed range {0:?}: expected start:stop:count or a single number")]
    Malformed(String),
    #[error("range {0:?} needs a positive count")]
    ZeroCount(String),
}

/// Parses `start:stop:count` (inclusive, evenly spaced) or a single value.
pub fn parse_range(s: &str) -> Result<Vec<f64>, RangeError> {
    let bad = || RangeError::Malformed(s.to_string());
    let num = |p: &str| p.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [single] => Ok(vec![num(single)?]),
        [start, stop, count] => {
            let (start, stop) = (num(start)?, num(stop)?);
            let count: usize = count.trim().parse().map_err(|_| bad())?;
            match count {
                0 => Err(RangeError::ZeroCount(s.to_string())),
                1 => Ok(vec![start]),
                n => Ok((0..n)
                    .map(|i| if i == n - 1 { stop } else { start + (stop - start) * i as f64 / (n - 1) as f64 })
                    .collect()),
            }
        }
        _ => Err(bad()),
    }
}

/// CSV with the fixed header; parameters a family does not use are left empty.
pub fn to_csv(table: &SweepTable) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &table.rows {
        let p = row.spec.params;
        let cell = |v: Option<f64>| v.map(format_float).unwrap_or_default();
        let rms = if row.rms_residual.is_finite() { format_float(row.rms_residual) } else { String::new() };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.spec.family.tag(),
            cell(p.a),
            cell(p.r),
            cell(p.big_r),
            cell(p.p),
            rms,
            row.verdict.as_str()
        ));
    }
    out
}
