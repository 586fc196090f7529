//! Numerical radius `w(T) = sup_θ ‖Re(e^{iθ}T)‖` and the Crawford number of
//! Hermitian matrices.
//!
//! `‖Re(e^{iθ}T)‖` has period π in θ. Near a maximiser θ* it is bounded below
//! by `w(T)·cos(θ − θ*)`, because `λ_max(Re(e^{iθ}T))` is the support function
//! of the numerical range. A dense grid is therefore within `O(step²)` of the
//! supremum, and each promising grid peak is then zoomed until the bracket is
//! narrower than the tolerance.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, hermitian_tolerance, jacobi_in_place, ComplexMatrix};
use crate::scalar::Real;

pub const DEFAULT_RADIUS_TOL: f64 = 1e-10;

/// Sweep parameters for [`numerical_radius_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig<T> {
    /// Equispaced samples on `[0, π)`.
    pub grid: usize,
    /// Samples per zoom round.
    pub zoom_points: usize,
    /// Bracket shrink factor per zoom round.
    pub shrink: usize,
    /// Refinement stops once the bracket is narrower than this.
    pub tol: T,
    /// Upper limit on how many grid peaks get refined.
    pub max_peaks: usize,
}

impl<T: Real> SweepConfig<T> {
    pub fn with_tol(tol: T) -> Self {
        Self { grid: 720, zoom_points: 32, shrink: 16, tol, max_peaks: 8 }
    }
}

impl<T: Real> Default for SweepConfig<T> {
    fn default() -> Self {
        Self::with_tol(T::lit(DEFAULT_RADIUS_TOL))
    }
}

/// Result of a numerical radius sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusEstimate<T> {
    /// Largest `‖H_θ‖` evaluated; never exceeds the true `w(T)` beyond rounding.
    pub value: T,
    /// Maximising angle, reduced to `[0, π)`.
    pub theta_star: T,
    /// Number of `‖H_θ‖` evaluations.
    pub samples: usize,
    /// Width of the last zoom bracket.
    pub refinement_width: T,
}

/// Evaluates `‖Re(e^{iθ}T)‖ = ‖cos θ·Re(T) − sin θ·Im(T)‖` for many angles.
struct HermitianPencil<T> {
    n: usize,
    re: Vec<Complex<T>>,
    im: Vec<Complex<T>>,
    work: Vec<Complex<T>>,
    evaluations: usize,
}

impl<T: Real> HermitianPencil<T> {
    fn new(t: &ComplexMatrix<T>) -> Result<Self> {
        let re = t.hermitian_part()?;
        let im = t.skew_part()?;
        let n = t.rows();
        Ok(Self {
            n,
            re: re.as_slice().to_vec(),
            im: im.as_slice().to_vec(),
            work: vec![Complex::zero(); n * n],
            evaluations: 0,
        })
    }

    fn norm_at(&mut self, theta: T) -> Result<T> {
        let (s, c) = theta.sin_cos();
        for ((w, r), i) in self.work.iter_mut().zip(&self.re).zip(&self.im) {
            *w = r.scale(c) - i.scale(s);
        }
        self.evaluations += 1;
        Ok(jacobi_in_place(&mut self.work, self.n)?.abs_max())
    }
}

/// `‖Re(e^{iθ}T)‖` at a single angle.
pub fn rotated_hermitian_norm<T: Real>(t: &ComplexMatrix<T>, theta: T) -> Result<T> {
    HermitianPencil::new(t)?.norm_at(theta)
}

/// Numerical radius with the default grid and the given bracket tolerance.
pub fn numerical_radius<T: Real>(t: &ComplexMatrix<T>, tol: T) -> Result<RadiusEstimate<T>> {
    numerical_radius_with(t, &SweepConfig::with_tol(tol))
}

pub fn numerical_radius_with<T: Real>(
    t: &ComplexMatrix<T>,
    cfg: &SweepConfig<T>,
) -> Result<RadiusEstimate<T>> {
    if !(cfg.tol > T::zero() && cfg.tol.is_finite()) {
        return Err(Error::Domain(format!("radius tolerance must be positive, got {}", cfg.tol)));
    }
    if cfg.grid < 3 || cfg.zoom_points < 3 || cfg.shrink < 2 || cfg.max_peaks == 0 {
        return Err(Error::Domain(format!("degenerate sweep configuration {cfg:?}")));
    }
    if !t.is_square() {
        return Err(Error::Shape(format!(
            "numerical radius of non-square {}x{} matrix",
            t.rows(),
            t.cols()
        )));
    }

    let pi = T::PI();
    if t.rows() == 1 {
        // Re(e^{iθ}t) = |t|cos(θ + arg t)
        let z = t[(0, 0)];
        return Ok(RadiusEstimate {
            value: z.norm(),
            theta_star: reduce_angle(-z.arg(), pi),
            samples: 0,
            refinement_width: T::zero(),
        });
    }
    let mut pencil = HermitianPencil::new(t)?;
    let step = pi / T::from_usize(cfg.grid);
    let grid: Vec<T> = (0..cfg.grid)
        .map(|k| pencil.norm_at(step * T::from_usize(k)))
        .collect::<Result<_>>()?;

    let (best_k, best) = grid
        .iter()
        .copied()
        .enumerate()
        .fold((0, T::neg_infinity()), |acc, (k, v)| if v > acc.1 { (k, v) } else { acc });

    // A grid peak whose sample trails the best by more than best·step² cannot
    // hide the global maximum (quadratic decay around any maximiser).
    let margin = best * step * step;
    let n = cfg.grid;
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&k| {
            let v = grid[k];
            v >= best - margin && v >= grid[(k + n - 1) % n] && v >= grid[(k + 1) % n]
        })
        .collect();
    peaks.sort_by(|&a, &b| grid[b].partial_cmp(&grid[a]).expect("finite").then(a.cmp(&b)));
    peaks.truncate(cfg.max_peaks);
    if !peaks.contains(&best_k) {
        peaks.insert(0, best_k);
        peaks.truncate(cfg.max_peaks);
    }

    let mut value = best;
    let mut theta_star = step * T::from_usize(best_k);
    let mut refinement_width = step + step;
    for &k in &peaks {
        let (v, theta, width) = zoom(&mut pencil, step * T::from_usize(k), grid[k], step, cfg)?;
        refinement_width = width;
        if v > value {
            value = v;
            theta_star = theta;
        }
    }

    Ok(RadiusEstimate {
        value,
        theta_star: reduce_angle(theta_star, pi),
        samples: pencil.evaluations,
        refinement_width,
    })
}

/// Zooms in on one grid peak; returns (best value, its angle, final bracket width).
fn zoom<T: Real>(
    pencil: &mut HermitianPencil<T>,
    mut center: T,
    mut best: T,
    step: T,
    cfg: &SweepConfig<T>,
) -> Result<(T, T, T)> {
    let last = T::from_usize(cfg.zoom_points - 1);
    let shrink = T::from_usize(cfg.shrink);
    let mut width = step + step;
    while width >= cfg.tol {
        let lo = center - width / (T::one() + T::one());
        let mut round_center = center;
        for j in 0..cfg.zoom_points {
            let theta = lo + width * T::from_usize(j) / last;
            let v = pencil.norm_at(theta)?;
            if v > best {
                best = v;
                round_center = theta;
            }
        }
        center = round_center;
        width = width / shrink;
    }
    Ok((best, center, width))
}

fn reduce_angle<T: Real>(theta: T, period: T) -> T {
    let r = theta % period;
    let r = if r < T::zero() { r + period } else { r };
    if r >= period {
        T::zero()
    } else {
        r
    }
}

/// Crawford number `m(h) = min{|μ| : μ ∈ W(h)}` of a Hermitian matrix, whose
/// numerical range is the interval `[λ_min, λ_max]`.
pub fn crawford_hermitian<T: Real>(h: &ComplexMatrix<T>) -> Result<T> {
    if !h.is_hermitian(hermitian_tolerance()) {
        return Err(Error::Domain("Crawford number is only defined here for Hermitian input".into()));
    }
    let s = hermitian_eigenvalues(h)?;
    let (lo, hi) = (s.min(), s.max());
    Ok(if lo <= T::zero() && hi >= T::zero() {
        T::zero()
    } else {
        lo.abs().min(hi.abs())
    })
}
