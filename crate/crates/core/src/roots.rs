//! All roots of a monic polynomial by Aberth–Ehrlich simultaneous iteration.

use num_complex::Complex;
use num_traits::Zero;

use crate::companion::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 1000;

/// Seeding circle radius as a fraction of the Cauchy radius `1 + max|aᵢ|`.
const SEED_RADIUS_FRACTION: f64 = 0.8;
/// Angular offset of the seeds, to avoid symmetric stalls.
const SEED_PHASE: f64 = 0.3;

/// Roots with their residuals `|p(zᵢ)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<T> {
    pub roots: Vec<Complex<T>>,
    pub residuals: Vec<T>,
    pub iterations: usize,
    /// Whether the last correction fell below the step tolerance.
    pub converged: bool,
}

impl<T: Real> RootSet<T> {
    pub fn max_modulus(&self) -> T {
        max_modulus(self)
    }

    pub fn max_residual(&self) -> T {
        self.residuals.iter().fold(T::zero(), |m, &r| m.max(r))
    }
}

/// Largest `|zᵢ|` in the set.
pub fn max_modulus<T: Real>(rs: &RootSet<T>) -> T {
    rs.roots.iter().fold(T::zero(), |m, z| m.max(z.norm()))
}

/// Runs Aberth–Ehrlich until every correction is smaller than `tol` or
/// `max_iter` sweeps have been made. Non-convergence is reported through
/// [`RootSet::converged`], not as an error.
pub fn find_roots<T: Real>(p: &Polynomial<T>, tol: T, max_iter: usize) -> Result<RootSet<T>> {
    if !(tol > T::zero() && tol.is_finite()) {
        return Err(Error::Domain(format!("root tolerance must be positive, got {tol}")));
    }
    let n = p.degree();
    if n == 1 {
        let root = -p.coeffs()[0];
        return Ok(RootSet { roots: vec![root], residuals: vec![p.eval(root).norm()], iterations: 0, converged: true });
    }

    let radius = (T::one() + p.max_abs_coeff()) * T::lit(SEED_RADIUS_FRACTION);
    let two_pi = T::PI() + T::PI();
    let mut z: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let angle = two_pi * T::from_usize(k) / T::from_usize(n) + T::lit(SEED_PHASE);
            Complex::from_polar(radius, angle)
        })
        .collect();

    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        iterations += 1;
        let mut largest_step = T::zero();
        for i in 0..n {
            let (value, slope) = p.eval_with_derivative(z[i]);
            if value.is_zero() {
                continue;
            }
            let repulsion = (0..n)
                .filter(|&j| j != i)
                .fold(Complex::zero(), |s: Complex<T>, j| s + (z[i] - z[j]).inv());
            let denom = slope / value - repulsion;
            if denom.is_zero() || !(denom.re.is_finite() && denom.im.is_finite()) {
                continue;
            }
            let step = denom.inv();
            z[i] = z[i] - step;
            largest_step = largest_step.max(step.norm());
        }
        if largest_step < tol {
            converged = true;
            break;
        }
    }

    let residuals = z.iter().map(|&zi| p.eval(zi).norm()).collect();
    Ok(RootSet { roots: z, residuals, iterations, converged })
}
