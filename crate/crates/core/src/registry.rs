//! Named surface families and their parameter records.

use core::fmt;
use core::str::FromStr;

use crate::curves::{make_circle, make_helix};
use crate::error::{Error, Result};
use crate::surfaces::{make_anchor_ring, make_cylinder, make_plane, make_sphere, make_tube, SurfacePatch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceFamily {
    Cylinder,
    AnchorRing,
    TubeCircle,
    TubeHelix,
    Sphere,
    Plane,
}

impl SurfaceFamily {
    pub const ALL: [SurfaceFamily; 6] = [
        SurfaceFamily::Cylinder,
        SurfaceFamily::AnchorRing,
        SurfaceFamily::TubeCircle,
        SurfaceFamily::TubeHelix,
        SurfaceFamily::Sphere,
        SurfaceFamily::Plane,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SurfaceFamily::Cylinder => "cylinder",
            SurfaceFamily::AnchorRing => "anchor-ring",
            SurfaceFamily::TubeCircle => "tube-circle",
            SurfaceFamily::TubeHelix => "tube-helix",
            SurfaceFamily::Sphere => "sphere",
            SurfaceFamily::Plane => "plane",
        }
    }

    /// Parameters the family reads, in CLI spelling.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            SurfaceFamily::Cylinder => &["r"],
            SurfaceFamily::AnchorRing => &["a", "r"],
            SurfaceFamily::TubeCircle => &["R", "r"],
            SurfaceFamily::TubeHelix => &["R", "p", "r"],
            SurfaceFamily::Sphere => &["rho"],
            SurfaceFamily::Plane => &[],
        }
    }
}

impl fmt::Display for SurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SurfaceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SurfaceFamily::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or(Error::InvalidParameter("unknown surface tag"))
    }
}

/// Optional values for every parameter a family may read.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SurfaceParams {
    pub a: Option<f64>,
    pub r: Option<f64>,
    /// Directrix radius `R`.
    pub big_r: Option<f64>,
    /// Helix pitch parameter `p`.
    pub p: Option<f64>,
    pub rho: Option<f64>,
}

impl SurfaceParams {
    pub fn get(&self, name: &str) -> Option<f64> {
        match name {
            "a" => self.a,
            "r" => self.r,
            "R" => self.big_r,
            "p" => self.p,
            "rho" => self.rho,
            _ => None,
        }
    }
}

/// A family together with concrete parameter values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfaceSpec {
    pub family: SurfaceFamily,
    pub params: SurfaceParams,
}

impl SurfaceSpec {
    pub fn new(family: SurfaceFamily, params: SurfaceParams) -> Self {
        SurfaceSpec { family, params }
    }

    fn need(&self, name: &'static str) -> Result<f64> {
        self.params.get(name).ok_or(Error::InvalidParameter(match name {
            "a" => "missing parameter a",
            "r" => "missing parameter r",
            "R" => "missing parameter R",
            "p" => "missing parameter p",
            _ => "missing parameter rho",
        }))
    }

    pub fn build(&self) -> Result<SurfacePatch> {
        match self.family {
            SurfaceFamily::Cylinder => make_cylinder(self.need("r")?),
            SurfaceFamily::AnchorRing => make_anchor_ring(self.need("a")?, self.need("r")?),
            SurfaceFamily::TubeCircle => make_tube(make_circle(self.need("R")?)?, self.need("r")?),
            SurfaceFamily::TubeHelix => {
                make_tube(make_helix(self.need("R")?, self.need("p")?)?, self.need("r")?)
            }
            SurfaceFamily::Sphere => make_sphere(self.need("rho")?),
            SurfaceFamily::Plane => Ok(make_plane()),
        }
    }

    /// `(name, value)` for each parameter the family reads, in a fixed order.
    pub fn used_params(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.family
            .parameter_names()
            .iter()
            .filter_map(move |&n| self.params.get(n).map(|v| (n, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for f in SurfaceFamily::ALL {
            assert_eq!(f.tag().parse::<SurfaceFamily>().unwrap(), f);
        }
        assert!("torus".parse::<SurfaceFamily>().is_err());
    }

    #[test]
    fn build_reports_missing_and_invalid_parameters() {
        let spec = SurfaceSpec::new(SurfaceFamily::AnchorRing, SurfaceParams { a: Some(2.0), ..Default::default() });
        assert!(matches!(spec.build(), Err(Error::InvalidParameter(_))));
        let spec = SurfaceSpec::new(
            SurfaceFamily::AnchorRing,
            SurfaceParams { a: Some(1.0), r: Some(2.0), ..Default::default() },
        );
        assert!(spec.build().is_err());
        let spec = SurfaceSpec::new(
            SurfaceFamily::TubeHelix,
            SurfaceParams { big_r: Some(1.0), p: Some(1.0), r: Some(0.2), ..Default::default() },
        );
        assert_eq!(spec.build().unwrap().tag(), "tube-helix");
        assert_eq!(SurfaceSpec::new(SurfaceFamily::Plane, SurfaceParams::default()).build().unwrap().tag(), "plane");
    }
}
