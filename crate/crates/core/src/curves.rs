//! Unit-speed space curves with Frenet frames.
//!
//! Frame convention: `t' = κh`, `h' = −κt + τb`, `b' = −τh`. With it a tube
//! `α + r cosφ h + r sinφ b` has metric cross term `F = r²τ`.

use crate::error::{require_positive, Error, Result};
use crate::geom::Vec3;
use crate::math;
use crate::numdiff;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CurveKind {
    /// The z-axis, with constant frame `h = e_x`, `b = e_y`.
    Line,
    /// Planar circle in the xy-plane centred at the origin.
    Circle { radius: f64 },
    /// `(R cos u, R sin u, p u)` reparametrized by arclength.
    Helix { radius: f64, pitch: f64 },
}

/// Everything known about a curve at one arclength parameter.
#[derive(Clone, Copy, Debug)]
pub struct CurvePoint {
    pub position: Vec3,
    pub tangent: Vec3,
    pub normal: Vec3,
    pub binormal: Vec3,
    pub curvature: f64,
    /// κ′
    pub curvature_rate: f64,
    pub torsion: f64,
    /// τ′
    pub torsion_rate: f64,
    pub d_tangent: Vec3,
    pub d_normal: Vec3,
    pub d_binormal: Vec3,
    pub dd_normal: Vec3,
    pub dd_binormal: Vec3,
}

/// Arclength-parametrized curve with exact frame evaluators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrenetCurve {
    kind: CurveKind,
    domain: (f64, f64),
}

/// Norms of the three Frenet–Serret defects `t' − κh`, `h' + κt − τb`, `b' + τh`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrenetResiduals {
    pub tangent: f64,
    pub normal: f64,
    pub binormal: f64,
}

impl FrenetResiduals {
    pub fn max(&self) -> f64 {
        self.tangent.max(self.normal).max(self.binormal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivativeMode {
    Exact,
    FiniteDifference,
}

pub fn make_line() -> FrenetCurve {
    FrenetCurve { kind: CurveKind::Line, domain: (-1.0, 1.0) }
}

pub fn make_circle(radius: f64) -> Result<FrenetCurve> {
    let radius = require_positive("R", radius)?;
    Ok(FrenetCurve { kind: CurveKind::Circle { radius }, domain: (0.0, math::TAU * radius) })
}

/// One full turn of a circular helix.
pub fn make_helix(radius: f64, pitch: f64) -> Result<FrenetCurve> {
    let radius = require_positive("R", radius)?;
    if pitch == 0.0 || !pitch.is_finite() {
        return Err(Error::InvalidParameter("helix pitch must be finite and nonzero"));
    }
    let speed = math::sqrt(radius * radius + pitch * pitch);
    Ok(FrenetCurve { kind: CurveKind::Helix { radius, pitch }, domain: (0.0, math::TAU * speed) })
}

impl FrenetCurve {
    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// Whether the frame and position repeat across the domain ends.
    pub fn is_closed(&self) -> bool {
        matches!(self.kind, CurveKind::Circle { .. })
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.domain.0 && t <= self.domain.1
    }

    pub fn check_domain(&self, t: f64) -> Result<()> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { value: t, lo: self.domain.0, hi: self.domain.1 })
        }
    }

    /// Supremum of |κ| over the domain.
    pub fn max_curvature(&self) -> f64 {
        match self.kind {
            CurveKind::Line => 0.0,
            CurveKind::Circle { radius } => 1.0 / radius,
            CurveKind::Helix { radius, pitch } => radius / (radius * radius + pitch * pitch),
        }
    }

    /// Evaluates position, frame, invariants and frame derivatives at `t`.
    ///
    /// Defined for every real `t`; callers that need the domain check use
    /// [`FrenetCurve::check_domain`].
    pub fn point(&self, t: f64) -> CurvePoint {
        match self.kind {
            CurveKind::Line => CurvePoint {
                position: Vec3::Z * t,
                tangent: Vec3::Z,
                normal: Vec3::X,
                binormal: Vec3::Y,
                curvature: 0.0,
                curvature_rate: 0.0,
                torsion: 0.0,
                torsion_rate: 0.0,
                d_tangent: Vec3::ZERO,
                d_normal: Vec3::ZERO,
                d_binormal: Vec3::ZERO,
                dd_normal: Vec3::ZERO,
                dd_binormal: Vec3::ZERO,
            },
            CurveKind::Circle { radius } => helix_point(radius, 0.0, t),
            CurveKind::Helix { radius, pitch } => helix_point(radius, pitch, t),
        }
    }

    pub fn position(&self, t: f64) -> Vec3 {
        self.point(t).position
    }

    pub fn tangent(&self, t: f64) -> Vec3 {
        self.point(t).tangent
    }

    pub fn normal(&self, t: f64) -> Vec3 {
        self.point(t).normal
    }

    pub fn binormal(&self, t: f64) -> Vec3 {
        self.point(t).binormal
    }

    pub fn curvature(&self, t: f64) -> f64 {
        self.point(t).curvature
    }

    pub fn torsion(&self, t: f64) -> f64 {
        self.point(t).torsion
    }

    /// Frenet–Serret defects at `t`, with frame derivatives taken exactly or
    /// by central differences of the frame evaluators.
    pub fn frenet_residuals(&self, t: f64, mode: DerivativeMode) -> Result<FrenetResiduals> {
        self.check_domain(t)?;
        let p = self.point(t);
        let (dt, dh, db) = match mode {
            DerivativeMode::Exact => (p.d_tangent, p.d_normal, p.d_binormal),
            DerivativeMode::FiniteDifference => (
                numdiff::central_first(|s| self.tangent(s), t),
                numdiff::central_first(|s| self.normal(s), t),
                numdiff::central_first(|s| self.binormal(s), t),
            ),
        };
        let (k, tau) = (p.curvature, p.torsion);
        Ok(FrenetResiduals {
            tangent: (dt - p.normal * k).norm(),
            normal: (dh + p.tangent * k - p.binormal * tau).norm(),
            binormal: (db + p.normal * tau).norm(),
        })
    }
}

fn helix_point(radius: f64, pitch: f64, s: f64) -> CurvePoint {
    let c2 = radius * radius + pitch * pitch;
    let c = math::sqrt(c2);
    let u = s / c;
    let (su, cu) = (math::sin(u), math::cos(u));
    let curvature = radius / c2;
    let torsion = pitch / c2;
    let tangent = Vec3::new(-radius * su, radius * cu, pitch) * (1.0 / c);
    let normal = Vec3::new(-cu, -su, 0.0);
    let binormal = Vec3::new(pitch * su, -pitch * cu, radius) * (1.0 / c);
    CurvePoint {
        position: Vec3::new(radius * cu, radius * su, pitch * u),
        tangent,
        normal,
        binormal,
        curvature,
        curvature_rate: 0.0,
        torsion,
        torsion_rate: 0.0,
        d_tangent: normal * curvature,
        d_normal: Vec3::new(su, -cu, 0.0) * (1.0 / c),
        d_binormal: Vec3::new(pitch * cu, pitch * su, 0.0) * (1.0 / c2),
        dd_normal: Vec3::new(cu, su, 0.0) * (1.0 / c2),
        dd_binormal: Vec3::new(-pitch * su, pitch * cu, 0.0) * (1.0 / (c2 * c)),
    }
}
