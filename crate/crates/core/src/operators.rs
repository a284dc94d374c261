//! Laplace–Beltrami evaluation on scalar fields.
//!
//! The operator is `Δ^I = −div∘grad`, so that `Δ^I x = −2Hn` and the circular
//! cylinder has positive eigenvalue `1/r²` on its Gauss map. The generic
//! metric-derived evaluator is the reference; closed-form operators for tubes,
//! anchor rings and cylinders are evaluated verbatim and audited against it.

use alloc::vec::Vec;

use crate::curves::CurveKind;
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::grid::GridSize;
use crate::math;
use crate::numdiff;
use crate::surfaces::{mean_curvature_of, regular, MetricData, PatchKind, ScalarJet, SurfacePatch};

/// A real function of the chart parameters.
pub trait ScalarField {
    fn value(&self, t: f64, phi: f64) -> f64;

    /// Exact partials up to second order, when known.
    fn jet(&self, _t: f64, _phi: f64) -> Option<ScalarJet> {
        None
    }

    /// Exact jet if available, otherwise central finite differences.
    fn resolved_jet(&self, t: f64, phi: f64) -> ScalarJet {
        self.jet(t, phi).unwrap_or_else(|| ScalarJet {
            value: self.value(t, phi),
            d_t: numdiff::central_first(|u| self.value(u, phi), t),
            d_phi: numdiff::central_first(|v| self.value(t, v), phi),
            d_tt: numdiff::central_second(|u| self.value(u, phi), t),
            d_tphi: numdiff::central_mixed(|u, v| self.value(u, v), t, phi),
            d_phiphi: numdiff::central_second(|v| self.value(t, v), phi),
        })
    }
}

/// Coordinate function `n_i` of a patch's Gauss map.
#[derive(Clone, Copy, Debug)]
pub struct GaussComponent<'a> {
    pub surface: &'a SurfacePatch,
    pub index: usize,
}

impl ScalarField for GaussComponent<'_> {
    fn value(&self, t: f64, phi: f64) -> f64 {
        self.surface.gauss_map(t, phi)[self.index]
    }

    fn jet(&self, t: f64, phi: f64) -> Option<ScalarJet> {
        Some(self.surface.jet(t, phi).n.component(self.index))
    }
}

/// Coordinate function `x_i` of a patch's position vector.
#[derive(Clone, Copy, Debug)]
pub struct PositionComponent<'a> {
    pub surface: &'a SurfacePatch,
    pub index: usize,
}

impl ScalarField for PositionComponent<'_> {
    fn value(&self, t: f64, phi: f64) -> f64 {
        self.surface.point(t, phi)[self.index]
    }

    fn jet(&self, t: f64, phi: f64) -> Option<ScalarJet> {
        Some(self.surface.jet(t, phi).x.component(self.index))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Constant(pub f64);

impl ScalarField for Constant {
    fn value(&self, _t: f64, _phi: f64) -> f64 {
        self.0
    }

    fn jet(&self, _t: f64, _phi: f64) -> Option<ScalarJet> {
        Some(ScalarJet::constant(self.0))
    }
}

/// A field given only by its values; derivatives come from finite differences.
#[derive(Clone, Copy)]
pub struct FnField<F>(pub F);

impl<F: Fn(f64, f64) -> f64> ScalarField for FnField<F> {
    fn value(&self, t: f64, phi: f64) -> f64 {
        (self.0)(t, phi)
    }
}

/// `Δ^I f = −(1/W)[∂_t((G f_t − F f_φ)/W) + ∂_φ((E f_φ − F f_t)/W)]`,
/// expanded with the exact metric partials.
pub fn laplace_beltrami_jet(m: &MetricData, f: &ScalarJet) -> f64 {
    let w = m.w;
    let p = m.g * f.d_t - m.f * f.d_phi;
    let q = m.e * f.d_phi - m.f * f.d_t;
    let p_t = m.g_t * f.d_t + m.g * f.d_tt - m.f_t * f.d_phi - m.f * f.d_tphi;
    let q_phi = m.e_phi * f.d_phi + m.e * f.d_phiphi - m.f_phi * f.d_t - m.f * f.d_tphi;
    let w_t = (m.e_t * m.g + m.e * m.g_t - 2.0 * m.f * m.f_t) / (2.0 * w);
    let w_phi = (m.e_phi * m.g + m.e * m.g_phi - 2.0 * m.f * m.f_phi) / (2.0 * w);
    -(p_t + q_phi) / (w * w) + (p * w_t + q * w_phi) / (w * w * w)
}

pub fn laplace_beltrami<F: ScalarField + ?Sized>(
    surface: &SurfacePatch,
    field: &F,
    t: f64,
    phi: f64,
) -> Result<f64> {
    let m = surface.metric(t, phi)?;
    Ok(laplace_beltrami_jet(&m, &field.resolved_jet(t, phi)))
}

/// `Δ^I` applied componentwise to the Gauss map and to the position vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VectorLaplacians {
    pub gauss: Vec3,
    pub position: Vec3,
    pub normal: Vec3,
    pub mean_curvature: f64,
}

pub fn vector_laplacians(surface: &SurfacePatch, t: f64, phi: f64) -> Result<VectorLaplacians> {
    surface.rect().check(t, phi)?;
    let jet = surface.jet(t, phi);
    let m = regular(MetricData::from_jet(&jet.x), t, phi)?;
    let apply = |j: &crate::surfaces::Jet<Vec3>| {
        Vec3::new(
            laplace_beltrami_jet(&m, &j.component(0)),
            laplace_beltrami_jet(&m, &j.component(1)),
            laplace_beltrami_jet(&m, &j.component(2)),
        )
    };
    Ok(VectorLaplacians {
        gauss: apply(&jet.n),
        position: apply(&jet.x),
        normal: jet.n.value,
        mean_curvature: mean_curvature_of(&jet, &m),
    })
}

/// `Δ^I n` at one point.
pub fn gauss_laplacian(surface: &SurfacePatch, t: f64, phi: f64) -> Result<Vec3> {
    vector_laplacians(surface, t, phi).map(|v| v.gauss)
}

/// Curve data entering the closed-form tube operator at one parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TubeLocal {
    pub curvature: f64,
    /// κ′
    pub curvature_rate: f64,
    pub torsion: f64,
    /// τ′
    pub torsion_rate: f64,
    pub radius: f64,
}

/// `Δ^I f = c_tt f_tt + c_tφ f_tφ + c_φφ f_φφ + c_t f_t + c_φ f_φ` for a tube.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TubeOperatorCoefficients {
    pub c_tt: f64,
    pub c_tphi: f64,
    pub c_phiphi: f64,
    pub c_t: f64,
    pub c_phi: f64,
    /// `δ = 1 − rκ cosφ`
    pub delta: f64,
    /// `β = κ′ cosφ + κτ sinφ`
    pub beta: f64,
}

impl TubeOperatorCoefficients {
    pub fn apply(&self, f: &ScalarJet) -> f64 {
        self.c_tt * f.d_tt
            + self.c_tphi * f.d_tphi
            + self.c_phiphi * f.d_phiphi
            + self.c_t * f.d_t
            + self.c_phi * f.d_phi
    }
}

fn delta_beta(local: &TubeLocal, phi: f64) -> Result<(f64, f64)> {
    let (s, c) = (math::sin(phi), math::cos(phi));
    let delta = 1.0 - local.radius * local.curvature * c;
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::InvalidParameter("tube factor 1 - r*kappa*cos(phi) must be positive"));
    }
    Ok((delta, local.curvature_rate * c + local.curvature * local.torsion * s))
}

/// The classical closed-form tube operator
///
/// `−δ⁻³[δ∂_tt − 2τδ∂_tφ + (δ/r²)(r²τ² + δ²)∂_φφ + rβ∂_t − (κδ² sinφ/r)∂_φ]`,
/// with the `−1/δ³` prefactor distributed onto each coefficient.
///
/// The first-order `∂_φ` coefficient of this form disagrees with the
/// divergence-form operator whenever `κ ≠ 0`; see
/// [`tube_operator_coefficients_rederived`].
pub fn tube_operator_coefficients(local: &TubeLocal, phi: f64) -> Result<TubeOperatorCoefficients> {
    let (delta, beta) = delta_beta(local, phi)?;
    let (r, kappa, tau) = (local.radius, local.curvature, local.torsion);
    let d3 = delta * delta * delta;
    Ok(TubeOperatorCoefficients {
        c_tt: -delta / d3,
        c_tphi: 2.0 * tau * delta / d3,
        c_phiphi: -(delta / (r * r)) * (r * r * tau * tau + delta * delta) / d3,
        c_t: -r * beta / d3,
        c_phi: kappa * delta * delta * math::sin(phi) / (r * d3),
        delta,
        beta,
    })
}

/// Tube operator obtained by expanding the divergence form with
/// `E = δ² + r²τ²`, `F = r²τ`, `G = r²`, `W = rδ`.
///
/// Differs from [`tube_operator_coefficients`] only in the `∂_φ` term, whose
/// bracketed coefficient is `κδ² sinφ/r − rτβ − τ′δ`.
pub fn tube_operator_coefficients_rederived(
    local: &TubeLocal,
    phi: f64,
) -> Result<TubeOperatorCoefficients> {
    let mut c = tube_operator_coefficients(local, phi)?;
    let (r, delta) = (local.radius, c.delta);
    let bracket = local.curvature * delta * delta * math::sin(phi) / r
        - r * local.torsion * c.beta
        - local.torsion_rate * delta;
    c.c_phi = -bracket / (delta * delta * delta);
    Ok(c)
}

/// Closed-form expansion of `Δ^I n` on the tube frame:
///
/// `−(β/δ³) t − δ⁻²(κ² cosφ − 2τ² cosφ + (δ²/r²) cosφ + (κδ/r) sin²φ) h
///  + (r²δ)⁻¹ sinφ (2rκ cosφ − 1) b`.
pub fn tube_gauss_laplacian_closed_form(
    local: &TubeLocal,
    frame: (Vec3, Vec3, Vec3),
    phi: f64,
) -> Result<Vec3> {
    let (delta, beta) = delta_beta(local, phi)?;
    let (s, c) = (math::sin(phi), math::cos(phi));
    let (r, k, tau) = (local.radius, local.curvature, local.torsion);
    let along_t = -beta / (delta * delta * delta);
    let along_h = -(k * k * c - 2.0 * tau * tau * c + delta * delta * c / (r * r) + k * delta * s * s / r)
        / (delta * delta);
    let along_b = s * (2.0 * r * k * c - 1.0) / (r * r * delta);
    let (tangent, normal, binormal) = frame;
    Ok(tangent * along_t + normal * along_h + binormal * along_b)
}

/// `−(1/γ²)f_φφ + (sin t/(rγ))f_t − (1/r²)f_tt` on the anchor-ring chart.
pub fn anchor_ring_operator<F: ScalarField + ?Sized>(field: &F, a: f64, r: f64, t: f64, phi: f64) -> f64 {
    anchor_ring_operator_jet(&field.resolved_jet(t, phi), a, r, t)
}

pub fn anchor_ring_operator_jet(f: &ScalarJet, a: f64, r: f64, t: f64) -> f64 {
    let gamma = a + r * math::cos(t);
    -f.d_phiphi / (gamma * gamma) + math::sin(t) / (r * gamma) * f.d_t - f.d_tt / (r * r)
}

/// Closed forms of `Δ^I n_1`, `Δ^I n_2`, `Δ^I n_3` on the anchor ring.
pub fn anchor_ring_gauss_laplacian(a: f64, r: f64, t: f64, phi: f64) -> Vec3 {
    let (st, ct) = (math::sin(t), math::cos(t));
    let gamma = a + r * ct;
    let radial = st * st / (r * gamma) - (1.0 / (r * r) + 1.0 / (gamma * gamma)) * ct;
    Vec3::new(
        radial * math::cos(phi),
        radial * math::sin(phi),
        -(st / r) * (ct / gamma + 1.0 / r),
    )
}

/// `−f_tt − (1/r²)f_φφ` on the cylinder chart.
pub fn cylinder_operator_jet(f: &ScalarJet, r: f64) -> f64 {
    -f.d_tt - f.d_phiphi / (r * r)
}

/// Discrepancy of one closed-form formula against the generic operator.
#[derive(Clone, Debug, PartialEq)]
pub struct AuditEntry {
    pub formula: &'static str,
    pub max_abs_discrepancy: f64,
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub tolerance: f64,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn get(&self, formula: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.formula == formula)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| e.flagged)
    }
}

pub const AUDIT_TOLERANCE: f64 = 1e-7;

pub mod formula {
    pub const TUBE_OPERATOR: &str = "tube_operator";
    pub const TUBE_OPERATOR_REDERIVED: &str = "tube_operator_rederived";
    pub const TUBE_GAUSS_LAPLACIAN: &str = "tube_gauss_laplacian";
    pub const ANCHOR_RING_OPERATOR: &str = "anchor_ring_operator";
    pub const ANCHOR_RING_GAUSS_1: &str = "anchor_ring_gauss_laplacian_n1";
    pub const ANCHOR_RING_GAUSS_2: &str = "anchor_ring_gauss_laplacian_n2";
    pub const ANCHOR_RING_GAUSS_3: &str = "anchor_ring_gauss_laplacian_n3";
    pub const CYLINDER_OPERATOR: &str = "cylinder_operator";
    pub const CYLINDER_EIGEN_RELATION: &str = "cylinder_gauss_eigen_relation";
    pub const TAKAHASHI: &str = "takahashi_identity";
}

#[derive(Default)]
struct Tracker {
    names: Vec<&'static str>,
    maxima: Vec<f64>,
}

impl Tracker {
    fn record(&mut self, name: &'static str, discrepancy: f64) {
        // NaN counts as an unbounded discrepancy.
        let d = if discrepancy.is_nan() { f64::INFINITY } else { math::abs(discrepancy) };
        match self.names.iter().position(|n| *n == name) {
            Some(i) => self.maxima[i] = self.maxima[i].max(d),
            None => {
                self.names.push(name);
                self.maxima.push(d);
            }
        }
    }
}

/// Compares every closed-form formula that applies to the patch's family with
/// the generic operator over the grid, plus the identity `Δ^I x = −2Hn`.
///
/// Closed forms are stated for the canonical chart, so the audit runs on
/// [`SurfacePatch::canonical`].
pub fn audit_closed_forms(surface: &SurfacePatch, grid: GridSize) -> Result<AuditReport> {
    use formula::*;
    let surface = surface.canonical();
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut tr = Tracker::default();
    for (t, phi) in surface.rect().grid(grid) {
        let jet = surface.jet(t, phi);
        let m = regular(MetricData::from_jet(&jet.x), t, phi)?;
        let fields: [ScalarJet; 6] = core::array::from_fn(|i| {
            if i < 3 { jet.n.component(i) } else { jet.x.component(i - 3) }
        });
        let generic: [f64; 6] = core::array::from_fn(|i| laplace_beltrami_jet(&m, &fields[i]));
        let gauss = Vec3::new(generic[0], generic[1], generic[2]);
        let position = Vec3::new(generic[3], generic[4], generic[5]);

        if let Some((curve, radius)) = surface.tube_shape() {
            let p = curve.point(t);
            let local = TubeLocal {
                curvature: p.curvature,
                curvature_rate: p.curvature_rate,
                torsion: p.torsion,
                torsion_rate: p.torsion_rate,
                radius,
            };
            let published = tube_operator_coefficients(&local, phi)?;
            let rederived = tube_operator_coefficients_rederived(&local, phi)?;
            for (f, g) in fields.iter().zip(generic) {
                tr.record(TUBE_OPERATOR, published.apply(f) - g);
                tr.record(TUBE_OPERATOR_REDERIVED, rederived.apply(f) - g);
            }
            let closed = tube_gauss_laplacian_closed_form(&local, (p.tangent, p.normal, p.binormal), phi)?;
            tr.record(TUBE_GAUSS_LAPLACIAN, (closed - gauss).max_abs());

            if matches!(curve.kind(), CurveKind::Line) {
                for (f, g) in fields.iter().zip(generic) {
                    tr.record(CYLINDER_OPERATOR, cylinder_operator_jet(f, radius) - g);
                }
                let eigen = jet.n.value * (1.0 / (radius * radius));
                tr.record(CYLINDER_EIGEN_RELATION, (eigen - gauss).max_abs());
            }
        }

        if let PatchKind::AnchorRing { a, r } = *surface.kind() {
            for (f, g) in fields.iter().zip(generic) {
                tr.record(ANCHOR_RING_OPERATOR, anchor_ring_operator_jet(f, a, r, t) - g);
            }
            let closed = anchor_ring_gauss_laplacian(a, r, t, phi);
            tr.record(ANCHOR_RING_GAUSS_1, closed.x - gauss.x);
            tr.record(ANCHOR_RING_GAUSS_2, closed.y - gauss.y);
            tr.record(ANCHOR_RING_GAUSS_3, closed.z - gauss.z);
        }

        let h = mean_curvature_of(&jet, &m);
        tr.record(TAKAHASHI, (position + jet.n.value * (2.0 * h)).norm());
    }
    let entries = tr
        .names
        .into_iter()
        .zip(tr.maxima)
        .map(|(formula, d)| AuditEntry {
            formula,
            max_abs_discrepancy: d,
            flagged: d.is_nan() || d >= AUDIT_TOLERANCE,
        })
        .collect();
    Ok(AuditReport { tolerance: AUDIT_TOLERANCE, entries })
}

/// Maximum over the grid of `|Δ^I x + 2Hn|`.
pub fn takahashi_residual(surface: &SurfacePatch, grid: GridSize) -> Result<f64> {
    let mut worst = 0.0f64;
    for (t, phi) in surface.rect().grid(grid) {
        let v = vector_laplacians(surface, t, phi)?;
        worst = worst.max((v.position + v.normal * (2.0 * v.mean_curvature)).norm());
    }
    Ok(worst)
}
