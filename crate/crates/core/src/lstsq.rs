//! Minimum-norm linear least squares.
//!
//! Householder QR with column pivoting decides the numerical rank; the
//! rank-deficient case is finished with a second QR of the leading rows
//! (a complete orthogonal decomposition), which yields the solution with no
//! component in the null space of the design.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;

/// Dense column-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    /// Builds a matrix from row slices.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            for (j, v) in r.as_ref().iter().enumerate() {
                m.set(i, j, *v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[j * self.rows + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[j * self.rows + i] = v;
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    fn column_mut(&mut self, j: usize) -> &mut [f64] {
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(a * self.rows + i, b * self.rows + i);
            }
        }
    }
}

/// Result of [`min_norm_lstsq`]: one solution column per right-hand side.
#[derive(Clone, Debug, PartialEq)]
pub struct LstsqSolution {
    pub solution: Matrix,
    pub rank: usize,
}

/// A Householder reflector `I − τ v vᵀ` acting on rows `start..`.
struct Reflector {
    start: usize,
    v: Vec<f64>,
    tau: f64,
}

impl Reflector {
    /// Reflector mapping `x` onto a multiple of the first unit vector.
    /// Returns the reflector and the new leading entry.
    fn annihilate(start: usize, x: &[f64]) -> (Reflector, f64) {
        let norm = math::sqrt(x.iter().map(|v| v * v).sum());
        if norm == 0.0 {
            return (Reflector { start, v: vec![0.0; x.len()], tau: 0.0 }, 0.0);
        }
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let mut v = x.to_vec();
        v[0] -= alpha;
        let vv: f64 = v.iter().map(|a| a * a).sum();
        (Reflector { start, v, tau: 2.0 / vv }, alpha)
    }

    fn apply(&self, col: &mut [f64]) {
        if self.tau == 0.0 {
            return;
        }
        let seg = &mut col[self.start..self.start + self.v.len()];
        let s: f64 = self.v.iter().zip(seg.iter()).map(|(a, b)| a * b).sum();
        let s = s * self.tau;
        for (c, v) in seg.iter_mut().zip(&self.v) {
            *c -= s * v;
        }
    }
}

/// Solves `min ‖A X − B‖_F` column by column, returning the minimum-norm
/// minimizer.
///
/// Pivot `j` counts toward the rank when `|R_jj| > rank_tol·|R_00|`; the
/// diagonal of the pivoted `R` serves as the singular-value estimate.
pub fn min_norm_lstsq(a: &Matrix, b: &Matrix, rank_tol: f64) -> LstsqSolution {
    assert_eq!(a.rows, b.rows, "row count mismatch");
    let (m, n, nrhs) = (a.rows, a.cols, b.cols);
    let mut r = a.clone();
    let mut qtb = b.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let steps = m.min(n);
    let mut diag = Vec::with_capacity(steps);

    for k in 0..steps {
        // Full recomputation of trailing norms; n is small.
        let (best, _) = (k..n)
            .map(|j| (j, r.column(j)[k..].iter().map(|v| v * v).sum::<f64>()))
            .fold((k, -1.0), |acc, (j, s)| if s > acc.1 { (j, s) } else { acc });
        r.swap_columns(k, best);
        perm.swap(k, best);

        let (h, alpha) = Reflector::annihilate(k, &r.column(k)[k..]);
        {
            let col = r.column_mut(k);
            col[k] = alpha;
            col[k + 1..].iter_mut().for_each(|v| *v = 0.0);
        }
        for j in k + 1..n {
            h.apply(r.column_mut(j));
        }
        for j in 0..nrhs {
            h.apply(qtb.column_mut(j));
        }
        diag.push(alpha);
    }

    let lead = diag.first().map_or(0.0, |d| math::abs(*d));
    let rank = if lead == 0.0 {
        0
    } else {
        diag.iter().take_while(|d| math::abs(**d) > rank_tol * lead).count()
    };

    let mut solution = Matrix::zeros(n, nrhs);
    if rank == 0 {
        return LstsqSolution { solution, rank };
    }

    // Leading rank×n block of R, transposed (n×rank), factored as Z·[T; 0].
    let mut rt = Matrix::zeros(n, rank);
    for i in 0..rank {
        for j in 0..n {
            rt.set(j, i, r.get(i, j));
        }
    }
    let mut reflectors = Vec::with_capacity(rank);
    for k in 0..rank {
        let (h, alpha) = Reflector::annihilate(k, &rt.column(k)[k..]);
        {
            let col = rt.column_mut(k);
            col[k] = alpha;
            col[k + 1..].iter_mut().for_each(|v| *v = 0.0);
        }
        for j in k + 1..rank {
            h.apply(rt.column_mut(j));
        }
        reflectors.push(h);
    }

    // R₁ = Tᵀ Zᵀ, so Tᵀ y = (Qᵀb)[..rank] and x_perm = Z [y; 0].
    for c in 0..nrhs {
        let mut y = vec![0.0; n];
        for i in 0..rank {
            let mut s = qtb.get(i, c);
            for (j, yj) in y.iter().enumerate().take(i) {
                s -= rt.get(j, i) * yj;
            }
            y[i] = s / rt.get(i, i);
        }
        for h in reflectors.iter().rev() {
            h.apply(&mut y);
        }
        for (j, v) in y.into_iter().enumerate() {
            solution.set(perm[j], c, v);
        }
    }
    LstsqSolution { solution, rank }
}
