//! Parameter rectangles and uniform sample grids.

use crate::error::{Error, Result};

/// Closed parameter rectangle `[t₀,t₁]×[φ₀,φ₁]`, with a periodicity flag per
/// axis. Periodic axes are sampled open at the seam.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamRect {
    pub t: (f64, f64),
    pub phi: (f64, f64),
    pub t_periodic: bool,
    pub phi_periodic: bool,
}

impl ParamRect {
    pub fn contains(&self, t: f64, phi: f64) -> bool {
        within(self.t, t) && within(self.phi, phi)
    }

    pub fn check(&self, t: f64, phi: f64) -> Result<()> {
        for (range, value) in [(self.t, t), (self.phi, phi)] {
            if !within(range, value) {
                return Err(Error::OutOfDomain { value, lo: range.0, hi: range.1 });
            }
        }
        Ok(())
    }

    /// Uniform `m×k` grid, row-major in `t`.
    pub fn grid(&self, grid: GridSize) -> impl Iterator<Item = (f64, f64)> + Clone {
        let ts = axis(self.t, grid.m, self.t_periodic);
        let ps = axis(self.phi, grid.k, self.phi_periodic);
        (0..grid.m).flat_map(move |i| {
            let t = ts.at(i);
            (0..grid.k).map(move |j| (t, ps.at(j)))
        })
    }
}

/// Number of samples along each axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSize {
    pub m: usize,
    pub k: usize,
}

impl GridSize {
    pub const DEFAULT: GridSize = GridSize { m: 32, k: 32 };

    pub const fn new(m: usize, k: usize) -> Self {
        GridSize { m, k }
    }

    pub fn len(&self) -> usize {
        self.m * self.k
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn doubled(&self) -> GridSize {
        GridSize::new(2 * self.m, 2 * self.k)
    }
}

impl Default for GridSize {
    fn default() -> Self {
        GridSize::DEFAULT
    }
}

fn within((lo, hi): (f64, f64), v: f64) -> bool {
    let slack = 1e-12 * (hi - lo).abs().max(1.0);
    v >= lo - slack && v <= hi + slack
}

#[derive(Clone, Copy)]
struct Axis {
    lo: f64,
    step: f64,
}

impl Axis {
    fn at(&self, i: usize) -> f64 {
        self.lo + self.step * i as f64
    }
}

fn axis((lo, hi): (f64, f64), n: usize, periodic: bool) -> Axis {
    let step = match (periodic, n) {
        (true, n) if n > 0 => (hi - lo) / n as f64,
        (false, n) if n > 1 => (hi - lo) / (n - 1) as f64,
        // A single non-periodic sample sits at the midpoint.
        _ => return Axis { lo: 0.5 * (lo + hi), step: 0.0 },
    };
    Axis { lo, step }
}
