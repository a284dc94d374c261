//! Parametric surface patches with exact second-order jets.
//!
//! Every built-in chart evaluates the position `x(t, φ)` and the Gauss map
//! `n(t, φ)` together with all partial derivatives up to second order, so the
//! metric, its first partials and the Laplace–Beltrami operator are exact.

use crate::curves::{CurveKind, FrenetCurve};
use crate::error::{require_positive, Error, Result};
use crate::geom::{Mat3, Vec3};
use crate::grid::ParamRect;
use crate::math::{self, PI, TAU};

/// Value and partial derivatives up to second order in `(t, φ)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet<T> {
    pub value: T,
    pub d_t: T,
    pub d_phi: T,
    pub d_tt: T,
    pub d_tphi: T,
    pub d_phiphi: T,
}

pub type ScalarJet = Jet<f64>;

impl<T: Copy> Jet<T> {
    pub fn map<U>(&self, f: impl Fn(T) -> U) -> Jet<U> {
        Jet {
            value: f(self.value),
            d_t: f(self.d_t),
            d_phi: f(self.d_phi),
            d_tt: f(self.d_tt),
            d_tphi: f(self.d_tphi),
            d_phiphi: f(self.d_phiphi),
        }
    }
}

impl Jet<Vec3> {
    /// The jet of coordinate function `i`.
    pub fn component(&self, i: usize) -> ScalarJet {
        self.map(|v| v[i])
    }
}

impl ScalarJet {
    pub fn constant(value: f64) -> Self {
        Jet { value, ..Default::default() }
    }

    /// `a·self + b·other`, derivative by derivative.
    pub fn combine(&self, a: f64, other: &ScalarJet, b: f64) -> ScalarJet {
        Jet {
            value: a * self.value + b * other.value,
            d_t: a * self.d_t + b * other.d_t,
            d_phi: a * self.d_phi + b * other.d_phi,
            d_tt: a * self.d_tt + b * other.d_tt,
            d_tphi: a * self.d_tphi + b * other.d_tphi,
            d_phiphi: a * self.d_phiphi + b * other.d_phiphi,
        }
    }
}

/// Position and Gauss-map jets at one parameter point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfaceJet {
    pub x: Jet<Vec3>,
    pub n: Jet<Vec3>,
}

/// First fundamental form coefficients and their first partials.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricData {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub e_t: f64,
    pub e_phi: f64,
    pub f_t: f64,
    pub f_phi: f64,
    pub g_t: f64,
    pub g_phi: f64,
    /// `√(EG − F²)`
    pub w: f64,
}

impl MetricData {
    pub fn from_jet(x: &Jet<Vec3>) -> MetricData {
        let (xt, xp) = (x.d_t, x.d_phi);
        let e = xt.dot(xt);
        let f = xt.dot(xp);
        let g = xp.dot(xp);
        MetricData {
            e,
            f,
            g,
            e_t: 2.0 * xt.dot(x.d_tt),
            e_phi: 2.0 * xt.dot(x.d_tphi),
            f_t: x.d_tt.dot(xp) + xt.dot(x.d_tphi),
            f_phi: x.d_tphi.dot(xp) + xt.dot(x.d_phiphi),
            g_t: 2.0 * xp.dot(x.d_tphi),
            g_phi: 2.0 * xp.dot(x.d_phiphi),
            w: math::sqrt((e * g - f * f).max(0.0)),
        }
    }

    pub fn det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PatchKind {
    /// `α + r cosφ h + r sinφ b` over a Frenet curve; `t` is arclength.
    Tube { curve: FrenetCurve, radius: f64 },
    /// `(γ cosφ, γ sinφ, r sin t)` with `γ = a + r cos t`; `t` is the meridian angle.
    AnchorRing { a: f64, r: f64 },
    /// `(r cosφ, r sinφ, t)`
    Cylinder { r: f64 },
    /// Latitude `t`, longitude `φ`, outward normal.
    Sphere { rho: f64 },
    /// `(t, φ, 0)`
    Plane,
}

/// A chart together with its Gauss map and parameter rectangle.
///
/// A patch may carry an ambient similarity (rotation and uniform scale) and an
/// orientation flip; both act on the stored jets after chart evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfacePatch {
    kind: PatchKind,
    rect: ParamRect,
    rotation: Mat3,
    scale: f64,
    orientation: f64,
}

const POLE_MARGIN: f64 = 1e-3;

pub fn make_tube(curve: FrenetCurve, radius: f64) -> Result<SurfacePatch> {
    let radius = require_positive("r", radius)?;
    let max_curvature = curve.max_curvature();
    if radius * max_curvature >= 1.0 {
        return Err(Error::TubeRadius { radius, max_curvature });
    }
    let rect = ParamRect {
        t: curve.domain(),
        phi: (0.0, TAU),
        t_periodic: curve.is_closed(),
        phi_periodic: true,
    };
    Ok(SurfacePatch::new(PatchKind::Tube { curve, radius }, rect))
}

pub fn make_anchor_ring(a: f64, r: f64) -> Result<SurfacePatch> {
    let r = require_positive("r", r)?;
    if !a.is_finite() || a <= r {
        return Err(Error::InvalidParameter("anchor ring needs a > r > 0"));
    }
    let rect = ParamRect { t: (0.0, TAU), phi: (0.0, TAU), t_periodic: true, phi_periodic: true };
    Ok(SurfacePatch::new(PatchKind::AnchorRing { a, r }, rect))
}

pub fn make_cylinder(r: f64) -> Result<SurfacePatch> {
    let r = require_positive("r", r)?;
    let rect = ParamRect { t: (-1.0, 1.0), phi: (0.0, TAU), t_periodic: false, phi_periodic: true };
    Ok(SurfacePatch::new(PatchKind::Cylinder { r }, rect))
}

pub fn make_sphere(rho: f64) -> Result<SurfacePatch> {
    let rho = require_positive("rho", rho)?;
    let lat = 0.5 * PI - POLE_MARGIN;
    let rect = ParamRect { t: (-lat, lat), phi: (0.0, TAU), t_periodic: false, phi_periodic: true };
    Ok(SurfacePatch::new(PatchKind::Sphere { rho }, rect))
}

pub fn make_plane() -> SurfacePatch {
    let rect = ParamRect { t: (-1.0, 1.0), phi: (-1.0, 1.0), t_periodic: false, phi_periodic: false };
    SurfacePatch::new(PatchKind::Plane, rect)
}

impl SurfacePatch {
    fn new(kind: PatchKind, rect: ParamRect) -> Self {
        SurfacePatch { kind, rect, rotation: Mat3::IDENTITY, scale: 1.0, orientation: 1.0 }
    }

    pub fn kind(&self) -> &PatchKind {
        &self.kind
    }

    pub fn rect(&self) -> &ParamRect {
        &self.rect
    }

    pub fn tag(&self) -> &'static str {
        match self.kind {
            PatchKind::Tube { curve, .. } => match curve.kind() {
                CurveKind::Line => "tube-line",
                CurveKind::Circle { .. } => "tube-circle",
                CurveKind::Helix { .. } => "tube-helix",
            },
            PatchKind::AnchorRing { .. } => "anchor-ring",
            PatchKind::Cylinder { .. } => "cylinder",
            PatchKind::Sphere { .. } => "sphere",
            PatchKind::Plane => "plane",
        }
    }

    /// Whether any rotation, scale or orientation flip has been applied.
    pub fn is_canonical(&self) -> bool {
        self.rotation == Mat3::IDENTITY && self.scale == 1.0 && self.orientation == 1.0
    }

    /// The same chart with the ambient similarity and orientation flip removed.
    pub fn canonical(&self) -> SurfacePatch {
        SurfacePatch::new(self.kind, self.rect)
    }

    /// Applies the ambient rotation `rotation` after any existing transform.
    pub fn rotated(&self, rotation: Mat3) -> SurfacePatch {
        SurfacePatch { rotation: rotation.mul_mat(&self.rotation), ..*self }
    }

    /// Uniform ambient scaling by `s > 0`.
    pub fn scaled(&self, s: f64) -> Result<SurfacePatch> {
        let s = require_positive("scale", s)?;
        Ok(SurfacePatch { scale: self.scale * s, ..*self })
    }

    /// Replaces the Gauss map `n` by `−n`.
    pub fn with_flipped_normal(&self) -> SurfacePatch {
        SurfacePatch { orientation: -self.orientation, ..*self }
    }

    /// Position and Gauss-map jets at `(t, φ)`. No domain check.
    pub fn jet(&self, t: f64, phi: f64) -> SurfaceJet {
        let raw = match self.kind {
            PatchKind::Tube { curve, radius } => tube_jet(&curve, radius, t, phi),
            PatchKind::AnchorRing { a, r } => anchor_ring_jet(a, r, t, phi),
            PatchKind::Cylinder { r } => cylinder_jet(r, t, phi),
            PatchKind::Sphere { rho } => sphere_jet(rho, t, phi),
            PatchKind::Plane => plane_jet(t, phi),
        };
        if self.is_canonical() {
            return raw;
        }
        let (rot, s, o) = (self.rotation, self.scale, self.orientation);
        SurfaceJet {
            x: raw.x.map(|v| rot.mul_vec(v) * s),
            n: raw.n.map(|v| rot.mul_vec(v) * o),
        }
    }

    pub fn point(&self, t: f64, phi: f64) -> Vec3 {
        self.jet(t, phi).x.value
    }

    pub fn gauss_map(&self, t: f64, phi: f64) -> Vec3 {
        self.jet(t, phi).n.value
    }

    /// First fundamental form with exact partials.
    pub fn metric(&self, t: f64, phi: f64) -> Result<MetricData> {
        self.rect.check(t, phi)?;
        let m = MetricData::from_jet(&self.jet(t, phi).x);
        regular(m, t, phi)
    }

    /// `H = (EN − 2FM + GL) / (2(EG − F²))` with `L = x_tt·n`, `M = x_tφ·n`,
    /// `N = x_φφ·n` for the stored Gauss map.
    pub fn mean_curvature(&self, t: f64, phi: f64) -> Result<f64> {
        self.rect.check(t, phi)?;
        let jet = self.jet(t, phi);
        let m = regular(MetricData::from_jet(&jet.x), t, phi)?;
        Ok(mean_curvature_of(&jet, &m))
    }

    /// The tube radius and directrix, when the chart is a tube. The cylinder
    /// chart is reported as the tube over the z-axis.
    pub fn tube_shape(&self) -> Option<(FrenetCurve, f64)> {
        match self.kind {
            PatchKind::Tube { curve, radius } => Some((curve, radius)),
            PatchKind::Cylinder { r } => Some((crate::curves::make_line(), r)),
            _ => None,
        }
    }

    /// Named chart parameters, e.g. `[("a", 2.0), ("r", 0.5)]`.
    pub fn params(&self) -> alloc::vec::Vec<(&'static str, f64)> {
        use alloc::vec;
        match self.kind {
            PatchKind::Tube { curve, radius } => match curve.kind() {
                CurveKind::Line => vec![("r", radius)],
                CurveKind::Circle { radius: big } => vec![("R", big), ("r", radius)],
                CurveKind::Helix { radius: big, pitch } => {
                    vec![("R", big), ("p", pitch), ("r", radius)]
                }
            },
            PatchKind::AnchorRing { a, r } => vec![("a", a), ("r", r)],
            PatchKind::Cylinder { r } => vec![("r", r)],
            PatchKind::Sphere { rho } => vec![("rho", rho)],
            PatchKind::Plane => vec![],
        }
    }
}

pub(crate) fn regular(m: MetricData, t: f64, phi: f64) -> Result<MetricData> {
    let det = m.det();
    if det > 0.0 && m.e > 0.0 && m.g > 0.0 {
        Ok(m)
    } else {
        Err(Error::DegenerateMetric { t, phi, det })
    }
}

pub(crate) fn mean_curvature_of(jet: &SurfaceJet, m: &MetricData) -> f64 {
    let n = jet.n.value;
    let l = jet.x.d_tt.dot(n);
    let mm = jet.x.d_tphi.dot(n);
    let nn = jet.x.d_phiphi.dot(n);
    (m.e * nn - 2.0 * m.f * mm + m.g * l) / (2.0 * m.det())
}

fn tube_jet(curve: &FrenetCurve, r: f64, t: f64, phi: f64) -> SurfaceJet {
    let p = curve.point(t);
    let (s, c) = (math::sin(phi), math::cos(phi));
    let radial = p.normal * c + p.binormal * s;
    let radial_t = p.d_normal * c + p.d_binormal * s;
    let radial_tt = p.dd_normal * c + p.dd_binormal * s;
    let radial_phi = p.binormal * c - p.normal * s;
    let radial_tphi = p.d_binormal * c - p.d_normal * s;
    SurfaceJet {
        x: Jet {
            value: p.position + radial * r,
            d_t: p.tangent + radial_t * r,
            d_phi: radial_phi * r,
            d_tt: p.d_tangent + radial_tt * r,
            d_tphi: radial_tphi * r,
            d_phiphi: -radial * r,
        },
        n: Jet {
            value: -radial,
            d_t: -radial_t,
            d_phi: -radial_phi,
            d_tt: -radial_tt,
            d_tphi: -radial_tphi,
            d_phiphi: radial,
        },
    }
}

fn anchor_ring_jet(a: f64, r: f64, t: f64, phi: f64) -> SurfaceJet {
    let (st, ct) = (math::sin(t), math::cos(t));
    let (sp, cp) = (math::sin(phi), math::cos(phi));
    let gamma = a + r * ct;
    SurfaceJet {
        x: Jet {
            value: Vec3::new(gamma * cp, gamma * sp, r * st),
            d_t: Vec3::new(-r * st * cp, -r * st * sp, r * ct),
            d_phi: Vec3::new(-gamma * sp, gamma * cp, 0.0),
            d_tt: Vec3::new(-r * ct * cp, -r * ct * sp, -r * st),
            d_tphi: Vec3::new(r * st * sp, -r * st * cp, 0.0),
            d_phiphi: Vec3::new(-gamma * cp, -gamma * sp, 0.0),
        },
        n: Jet {
            value: Vec3::new(-ct * cp, -ct * sp, -st),
            d_t: Vec3::new(st * cp, st * sp, -ct),
            d_phi: Vec3::new(ct * sp, -ct * cp, 0.0),
            d_tt: Vec3::new(ct * cp, ct * sp, st),
            d_tphi: Vec3::new(-st * sp, st * cp, 0.0),
            d_phiphi: Vec3::new(ct * cp, ct * sp, 0.0),
        },
    }
}

fn cylinder_jet(r: f64, t: f64, phi: f64) -> SurfaceJet {
    let (sp, cp) = (math::sin(phi), math::cos(phi));
    SurfaceJet {
        x: Jet {
            value: Vec3::new(r * cp, r * sp, t),
            d_t: Vec3::Z,
            d_phi: Vec3::new(-r * sp, r * cp, 0.0),
            d_tt: Vec3::ZERO,
            d_tphi: Vec3::ZERO,
            d_phiphi: Vec3::new(-r * cp, -r * sp, 0.0),
        },
        n: Jet {
            value: Vec3::new(-cp, -sp, 0.0),
            d_t: Vec3::ZERO,
            d_phi: Vec3::new(sp, -cp, 0.0),
            d_tt: Vec3::ZERO,
            d_tphi: Vec3::ZERO,
            d_phiphi: Vec3::new(cp, sp, 0.0),
        },
    }
}

fn sphere_jet(rho: f64, t: f64, phi: f64) -> SurfaceJet {
    let (st, ct) = (math::sin(t), math::cos(t));
    let (sp, cp) = (math::sin(phi), math::cos(phi));
    let unit = Jet {
        value: Vec3::new(ct * cp, ct * sp, st),
        d_t: Vec3::new(-st * cp, -st * sp, ct),
        d_phi: Vec3::new(-ct * sp, ct * cp, 0.0),
        d_tt: Vec3::new(-ct * cp, -ct * sp, -st),
        d_tphi: Vec3::new(st * sp, -st * cp, 0.0),
        d_phiphi: Vec3::new(-ct * cp, -ct * sp, 0.0),
    };
    SurfaceJet { x: unit.map(|v| v * rho), n: unit }
}

fn plane_jet(t: f64, phi: f64) -> SurfaceJet {
    SurfaceJet {
        x: Jet { value: Vec3::new(t, phi, 0.0), d_t: Vec3::X, d_phi: Vec3::Y, ..Default::default() },
        n: Jet { value: Vec3::Z, ..Default::default() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{make_circle, make_helix, make_line};
    use crate::grid::GridSize;
    use crate::numdiff;

    fn builtins() -> std::vec::Vec<SurfacePatch> {
        std::vec![
            make_tube(make_line(), 1.0).unwrap(),
            make_tube(make_circle(2.0).unwrap(), 0.5).unwrap(),
            make_tube(make_helix(1.0, 1.0).unwrap(), 0.2).unwrap(),
            make_tube(make_helix(3.0, -4.0).unwrap(), 1.5).unwrap(),
            make_anchor_ring(2.0, 0.5).unwrap(),
            make_anchor_ring(3.0, 1.0).unwrap(),
            make_cylinder(2.0).unwrap(),
            make_sphere(2.0).unwrap(),
            make_plane(),
        ]
    }

    #[test]
    fn unit_normal_orthogonal_to_tangent_plane() {
        for s in builtins() {
            for (t, phi) in s.rect().grid(GridSize::new(40, 25)) {
                let j = s.jet(t, phi);
                assert!((j.n.value.norm() - 1.0).abs() < 1e-9, "{}", s.tag());
                assert!(j.n.value.dot(j.x.d_t).abs() < 1e-9, "{}", s.tag());
                assert!(j.n.value.dot(j.x.d_phi).abs() < 1e-9, "{}", s.tag());
                assert!(s.metric(t, phi).unwrap().det() > 0.0);
            }
        }
    }

    #[test]
    fn exact_partials_match_finite_differences() {
        let rel = |exact: Vec3, approx: Vec3| (exact - approx).norm() / exact.norm().max(1.0);
        for s in builtins() {
            for (t, phi) in s.rect().grid(GridSize::new(9, 7)) {
                let j = s.jet(t, phi);
                for (field, jet) in [(0, j.x), (1, j.n)] {
                    let f = |u: f64, v: f64| {
                        let sj = s.jet(u, v);
                        if field == 0 { sj.x.value } else { sj.n.value }
                    };
                    assert!(rel(jet.d_t, numdiff::central_first(|u| f(u, phi), t)) < 1e-6);
                    assert!(rel(jet.d_phi, numdiff::central_first(|v| f(t, v), phi)) < 1e-6);
                    assert!(rel(jet.d_tt, numdiff::central_second(|u| f(u, phi), t)) < 1e-4);
                    assert!(rel(jet.d_phiphi, numdiff::central_second(|v| f(t, v), phi)) < 1e-4);
                    assert!(rel(jet.d_tphi, numdiff::central_mixed(f, t, phi)) < 1e-4);
                }
            }
        }
    }

    #[test]
    fn metric_partials_match_finite_differences() {
        for s in builtins() {
            for (t, phi) in s.rect().grid(GridSize::new(5, 6)) {
                let m = MetricData::from_jet(&s.jet(t, phi).x);
                let at = |u: f64, v: f64| MetricData::from_jet(&s.jet(u, v).x);
                let pairs = [
                    (m.e_t, numdiff::central_first(|u| at(u, phi).e, t)),
                    (m.e_phi, numdiff::central_first(|v| at(t, v).e, phi)),
                    (m.f_t, numdiff::central_first(|u| at(u, phi).f, t)),
                    (m.f_phi, numdiff::central_first(|v| at(t, v).f, phi)),
                    (m.g_t, numdiff::central_first(|u| at(u, phi).g, t)),
                    (m.g_phi, numdiff::central_first(|v| at(t, v).g, phi)),
                ];
                for (exact, fd) in pairs {
                    assert!((exact - fd).abs() < 1e-6 * exact.abs().max(1.0), "{}", s.tag());
                }
            }
        }
    }

    #[test]
    fn tube_gauss_map_collinear_with_cross_product() {
        let s = make_tube(make_helix(1.0, 1.0).unwrap(), 0.2).unwrap();
        let c = make_helix(1.0, 1.0).unwrap();
        for (t, phi) in s.rect().grid(GridSize::new(13, 11)) {
            let j = s.jet(t, phi);
            let p = c.point(t);
            let expected = -(p.normal * phi.cos() + p.binormal * phi.sin());
            assert!((j.n.value - expected).max_abs() < 1e-15);
            let cross = j.x.d_t.cross(j.x.d_phi).normalized();
            assert!(cross.cross(j.n.value).norm() < 1e-12);
        }
    }

    #[test]
    fn tube_delta_at_origin() {
        let s = make_tube(make_circle(2.0).unwrap(), 0.5).unwrap();
        let m = s.metric(0.0, 0.0).unwrap();
        // E = δ² with δ = 1 − rκ cosφ = 0.75
        assert!((m.e - 0.75 * 0.75).abs() < 1e-15);
    }

    #[test]
    fn helix_tube_metric_closed_form() {
        let (r, kappa, tau) = (0.2, 0.5, 0.5);
        let s = make_tube(make_helix(1.0, 1.0).unwrap(), r).unwrap();
        let (t0, t1) = s.rect().t;
        for i in 0..20 {
            let t = t0 + (t1 - t0) * ((i * 7919) % 20) as f64 / 20.0;
            let phi = TAU * ((i * 104729) % 20) as f64 / 20.0;
            let m = s.metric(t, phi).unwrap();
            let delta = 1.0 - r * kappa * phi.cos();
            assert!((m.e - (delta * delta + r * r * tau * tau)).abs() < 1e-14);
            assert!((m.f - r * r * tau).abs() < 1e-15);
            assert!((m.f - 0.02).abs() < 1e-15);
            assert!((m.g - r * r).abs() < 1e-15);
        }
    }

    #[test]
    fn anchor_ring_metric() {
        let s = make_anchor_ring(2.0, 0.5).unwrap();
        let m = s.metric(0.0, 1.3).unwrap();
        assert!((m.e - 0.25).abs() < 1e-15);
        assert!(m.f.abs() < 1e-15);
        assert!((m.g - 6.25).abs() < 1e-14);
        let m = s.metric(PI, 0.4).unwrap();
        assert!((m.g - 2.25).abs() < 1e-14);
        for (t, phi) in s.rect().grid(GridSize::new(7, 7)) {
            assert!((s.gauss_map(t, phi).norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn cylinder_metric_and_normal() {
        let s = make_cylinder(2.0).unwrap();
        for (t, phi) in s.rect().grid(GridSize::new(5, 5)) {
            let m = s.metric(t, phi).unwrap();
            assert!((m.e - 1.0).abs() < 1e-15 && m.f.abs() < 1e-15 && (m.g - 4.0).abs() < 1e-14);
        }
        let unit = make_cylinder(1.0).unwrap();
        assert_eq!(unit.gauss_map(0.3, 0.0), Vec3::new(-1.0, -0.0, 0.0));
        assert!((unit.metric(0.1, 2.0).unwrap().det() - 1.0).abs() < 1e-15);
        assert!((make_cylinder(3.0).unwrap().metric(0.0, 1.0).unwrap().g - 9.0).abs() < 1e-14);
    }

    #[test]
    fn line_tube_coincides_with_cylinder_chart() {
        let tube = make_tube(make_line(), 1.0).unwrap();
        let cyl = make_cylinder(1.0).unwrap();
        for (t, phi) in cyl.rect().grid(GridSize::new(6, 9)) {
            assert!((tube.point(t, phi) - cyl.point(t, phi)).max_abs() < 1e-15);
            assert!((tube.gauss_map(t, phi) - cyl.gauss_map(t, phi)).max_abs() < 1e-15);
        }
    }

    #[test]
    fn sphere_and_plane_controls() {
        let plane = make_plane();
        let m = plane.metric(0.2, -0.3).unwrap();
        assert_eq!((m.e, m.f, m.g), (1.0, 0.0, 1.0));
        assert_eq!(plane.gauss_map(0.5, 0.5), Vec3::Z);
        assert_eq!(plane.mean_curvature(0.1, 0.1).unwrap(), 0.0);

        let unit = make_sphere(1.0).unwrap();
        let j = unit.jet(0.0, 0.7);
        assert!((j.n.value.norm() - 1.0).abs() < 1e-15);
        assert!(j.n.value.cross(j.x.value).norm() < 1e-15);
        assert!(j.n.value.dot(j.x.value) > 0.0);

        let s = make_sphere(2.0).unwrap();
        for (t, phi) in s.rect().grid(GridSize::new(9, 4)) {
            let det = s.metric(t, phi).unwrap().det();
            assert!((det - 16.0 * t.cos().powi(2)).abs() < 1e-12);
            assert!((s.mean_curvature(t, phi).unwrap().abs() - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn mean_curvature_signs() {
        let cyl = make_cylinder(1.0).unwrap();
        assert!((cyl.mean_curvature(0.0, 0.3).unwrap() - 0.5).abs() < 1e-15);
        let flipped = cyl.with_flipped_normal();
        assert!((flipped.mean_curvature(0.0, 0.3).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn constructor_and_domain_errors() {
        assert!(matches!(make_tube(make_circle(2.0).unwrap(), 2.0), Err(Error::TubeRadius { .. })));
        assert!(matches!(make_tube(make_line(), 0.0), Err(Error::NonPositive { .. })));
        assert!(make_tube(make_line(), 50.0).is_ok());
        assert!(matches!(make_anchor_ring(1.0, 1.0), Err(Error::InvalidParameter(_))));
        assert!(matches!(make_cylinder(0.0), Err(Error::NonPositive { .. })));
        assert!(matches!(make_sphere(-2.0), Err(Error::NonPositive { .. })));
        let cyl = make_cylinder(1.0).unwrap();
        assert!(matches!(cyl.metric(3.0, 0.0), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn transforms_act_on_jets() {
        let rot = Mat3::rotation(Vec3::new(0.3, -1.0, 0.4), 1.1);
        let base = make_anchor_ring(2.0, 0.5).unwrap();
        let moved = base.rotated(rot).scaled(3.0).unwrap().with_flipped_normal();
        assert!(!moved.is_canonical());
        assert_eq!(moved.canonical(), base);
        let (b, m) = (base.jet(0.4, 1.0), moved.jet(0.4, 1.0));
        assert!((m.x.d_tphi - rot.mul_vec(b.x.d_tphi) * 3.0).max_abs() < 1e-14);
        assert!((m.n.value + rot.mul_vec(b.n.value)).max_abs() < 1e-15);
    }
}
