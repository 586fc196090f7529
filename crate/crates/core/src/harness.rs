//! Seeded random-matrix checks of the numerical radius inequalities.
//!
//! Every check returns a [`Margin`] (`rhs − lhs`); an inequality is violated
//! when the margin falls below `−tol`. Each trial of [`run_suite`] draws its
//! randomness from its own ChaCha stream, so a trial depends only on
//! `(seed, trial index)` and can be replayed alone with [`run_trial`].
//!
//! The sweep in [`crate::radius`] approaches `w` from below. That bias is
//! harmless for `w` on the left of an inequality, but could fake a violation
//! when `w` of some other matrix sits on the right, so right-hand radii are
//! swept with a tolerance ten times finer.

use std::collections::BTreeMap;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::companion::{companion_matrix, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::{spectral_norm, ComplexMatrix};
use crate::radius::{crawford_hermitian, numerical_radius, DEFAULT_RADIUS_TOL};
use crate::roots::{find_roots, DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL};
use crate::scalar::Real;

fn lhs_radius<T: Real>(t: &ComplexMatrix<T>) -> Result<T> {
    Ok(numerical_radius(t, T::lit(DEFAULT_RADIUS_TOL))?.value)
}

fn rhs_radius<T: Real>(t: &ComplexMatrix<T>) -> Result<T> {
    Ok(numerical_radius(t, T::lit(DEFAULT_RADIUS_TOL / 10.0))?.value)
}

/// Both sides of one inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margin<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: Real> Margin<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Self { lhs, rhs }
    }

    pub fn margin(&self) -> T {
        self.rhs - self.lhs
    }

    /// False for violations and for NaN margins.
    pub fn holds(&self, tol: T) -> bool {
        self.margin() >= -tol
    }
}

/// Quantities of a square matrix used by the single-operator inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareFacts<T> {
    pub radius: T,
    /// `w(T²)`, swept finely.
    pub square_radius: T,
    pub norm: T,
    pub square_norm: T,
    pub real_part_norm: T,
    pub imag_part_norm: T,
    pub real_part_crawford: T,
    pub imag_part_crawford: T,
}

impl<T: Real> SquareFacts<T> {
    pub fn of(t: &ComplexMatrix<T>) -> Result<Self> {
        if !t.is_square() {
            return Err(Error::Shape(format!("expected a square matrix, got {}x{}", t.rows(), t.cols())));
        }
        let sq = t.square()?;
        let re = t.hermitian_part()?;
        let im = t.skew_part()?;
        Ok(Self {
            radius: lhs_radius(t)?,
            square_radius: rhs_radius(&sq)?,
            norm: spectral_norm(t)?,
            square_norm: spectral_norm(&sq)?,
            real_part_norm: spectral_norm(&re)?,
            imag_part_norm: spectral_norm(&im)?,
            real_part_crawford: crawford_hermitian(&re)?,
            imag_part_crawford: crawford_hermitian(&im)?,
        })
    }

    /// `w²(T) ≤ w(T²) + min{‖Re T‖², ‖Im T‖²}`
    pub fn square_radius_bound(&self) -> Margin<T> {
        let re = self.real_part_norm * self.real_part_norm;
        let im = self.imag_part_norm * self.imag_part_norm;
        Margin::new(self.radius * self.radius, self.square_radius + re.min(im))
    }

    /// `w²(T) ≤ ¼‖T‖‖T²‖^½ + ¼‖T²‖ + ½‖T‖²`
    pub fn norm_mix_bound(&self) -> Margin<T> {
        let q = T::lit(0.25);
        let rhs = q * self.norm * self.square_norm.sqrt() + q * self.square_norm + T::lit(0.5) * self.norm * self.norm;
        Margin::new(self.radius * self.radius, rhs)
    }

    /// `w²(T) ≤ ½‖T‖‖T²‖^½ + ¼‖T²‖ + ¼‖T‖²`
    pub fn norm_mix_bound_half(&self) -> Margin<T> {
        let q = T::lit(0.25);
        let rhs = T::lit(0.5) * self.norm * self.square_norm.sqrt() + q * self.square_norm + q * self.norm * self.norm;
        Margin::new(self.radius * self.radius, rhs)
    }

    /// `w²(T) ≤ ¾‖T²‖ + ¼‖T‖²`
    pub fn square_norm_bound(&self) -> Margin<T> {
        let rhs = T::lit(0.75) * self.square_norm + T::lit(0.25) * self.norm * self.norm;
        Margin::new(self.radius * self.radius, rhs)
    }

    /// `½‖T‖ ≤ w(T)`
    pub fn sandwich_lower(&self) -> Margin<T> {
        Margin::new(T::lit(0.5) * self.norm, self.radius)
    }

    /// `w(T) ≤ ‖T‖`
    pub fn sandwich_upper(&self) -> Margin<T> {
        Margin::new(self.radius, self.norm)
    }

    /// `max{m(Re T), m(Im T)} ≤ √w(T²)`
    pub fn crawford_bound(&self) -> Margin<T> {
        Margin::new(self.real_part_crawford.max(self.imag_part_crawford), self.square_radius.sqrt())
    }
}

/// Quantities of a 2×2 block matrix `[[A, B], [C, D]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockFacts<T> {
    /// `w(T)` of the assembled matrix.
    pub radius: T,
    pub radius_a: T,
    pub radius_d: T,
    pub radius_cb: T,
    pub radius_bc: T,
    pub norm_b: T,
    pub norm_c: T,
    /// `‖A*B‖`
    pub norm_a_adj_b: T,
    /// `‖D*C‖`
    pub norm_d_adj_c: T,
}

impl<T: Real> BlockFacts<T> {
    pub fn of(
        a: &ComplexMatrix<T>,
        b: &ComplexMatrix<T>,
        c: &ComplexMatrix<T>,
        d: &ComplexMatrix<T>,
    ) -> Result<Self> {
        let t = ComplexMatrix::from_blocks(a, b, c, d)?;
        Ok(Self {
            radius: lhs_radius(&t)?,
            radius_a: rhs_radius(a)?,
            radius_d: rhs_radius(d)?,
            radius_cb: rhs_radius(&c.multiply(b)?)?,
            radius_bc: rhs_radius(&b.multiply(c)?)?,
            norm_b: spectral_norm(b)?,
            norm_c: spectral_norm(c)?,
            norm_a_adj_b: spectral_norm(&a.adjoint().multiply(b)?)?,
            norm_d_adj_c: spectral_norm(&d.adjoint().multiply(c)?)?,
        })
    }

    fn diagonal_form(&self, s: T) -> T {
        let (wa, wd) = (self.radius_a, self.radius_d);
        T::lit(0.5) * (wa + wd + ((wa - wd) * (wa - wd) + s).sqrt())
    }

    /// `w(T) ≤ ½[w(A) + w(D) + √((w(A) − w(D))² + ‖B‖² + ‖C‖² + 2w(CB))]`
    pub fn cross_radius_bound(&self) -> Margin<T> {
        let s = self.norm_b * self.norm_b + self.norm_c * self.norm_c + T::lit(2.0) * self.radius_cb;
        Margin::new(self.radius, self.diagonal_form(s))
    }

    /// `w(T) ≤ ½[w(A) + w(D) + √((w(A) − w(D))² + 4α₁²)]` with
    /// `α₁ = [⅛ max{(‖B‖² + ‖C‖²)² + 4w²(BC), (‖B‖² + ‖C‖²)² + 4w²(CB)}]^¼`.
    pub fn cross_max_bound(&self) -> Margin<T> {
        let four = T::lit(4.0);
        let s = self.norm_b * self.norm_b + self.norm_c * self.norm_c;
        let m = (s * s + four * self.radius_bc * self.radius_bc).max(s * s + four * self.radius_cb * self.radius_cb);
        let alpha_sq = (m / T::lit(8.0)).sqrt();
        Margin::new(self.radius, self.diagonal_form(four * alpha_sq))
    }

    /// Right side of [`Self::cross_radius_bound`] (as `lhs`) against the
    /// bound with `(‖B‖ + ‖C‖)²` in place of `‖B‖² + ‖C‖² + 2w(CB)` (as `rhs`).
    pub fn cross_bound_improvement(&self) -> Margin<T> {
        let sum = self.norm_b + self.norm_c;
        Margin::new(self.cross_radius_bound().rhs, self.diagonal_form(sum * sum))
    }

    /// `w(T) ≤ √(w²(A) + ½‖B‖(w(A) + ½‖B‖)) + √(w²(D) + ½‖C‖(w(D) + ½‖C‖))`
    pub fn split_radius_bound(&self) -> Margin<T> {
        let h = T::lit(0.5);
        let term = |w: T, n: T| (w * w + h * n * (w + h * n)).sqrt();
        Margin::new(self.radius, term(self.radius_a, self.norm_b) + term(self.radius_d, self.norm_c))
    }

    /// `w(T) ≤ √(2w²(A) + ½(‖A*B‖ + ‖B‖²)) + √(2w²(D) + ½(‖D*C‖ + ‖C‖²))`
    pub fn split_adjoint_bound(&self) -> Margin<T> {
        let h = T::lit(0.5);
        let two = T::lit(2.0);
        let term = |w: T, m: T, n: T| (two * w * w + h * (m + n * n)).sqrt();
        Margin::new(
            self.radius,
            term(self.radius_a, self.norm_a_adj_b, self.norm_b) + term(self.radius_d, self.norm_d_adj_c, self.norm_c),
        )
    }

    /// `w(T) ≤ ½[w(A) + w(D) + √(w²(A) + ‖B‖²) + √(w²(D) + ‖C‖²)]`
    pub fn split_norm_bound(&self) -> Margin<T> {
        let (wa, wd) = (self.radius_a, self.radius_d);
        let rhs = T::lit(0.5)
            * (wa + wd + (wa * wa + self.norm_b * self.norm_b).sqrt() + (wd * wd + self.norm_c * self.norm_c).sqrt());
        Margin::new(self.radius, rhs)
    }
}

/// `w²(T) ≤ w(T²) + min{‖Re T‖², ‖Im T‖²}`
pub fn check_square_radius_bound<T: Real>(t: &ComplexMatrix<T>) -> Result<Margin<T>> {
    Ok(SquareFacts::of(t)?.square_radius_bound())
}

/// `w²(T) ≤ ¼‖T‖‖T²‖^½ + ¼‖T²‖ + ½‖T‖²`
pub fn check_norm_mix_bound<T: Real>(t: &ComplexMatrix<T>) -> Result<Margin<T>> {
    Ok(SquareFacts::of(t)?.norm_mix_bound())
}

/// `w²(T) ≤ ½‖T‖‖T²‖^½ + ¼‖T²‖ + ¼‖T‖²`
pub fn check_norm_mix_bound_half<T: Real>(t: &ComplexMatrix<T>) -> Result<Margin<T>> {
    Ok(SquareFacts::of(t)?.norm_mix_bound_half())
}

/// `w²(T) ≤ ¾‖T²‖ + ¼‖T‖²`
pub fn check_square_norm_bound<T: Real>(t: &ComplexMatrix<T>) -> Result<Margin<T>> {
    Ok(SquareFacts::of(t)?.square_norm_bound())
}

pub fn check_cross_radius_bound<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    c: &ComplexMatrix<T>,
    d: &ComplexMatrix<T>,
) -> Result<Margin<T>> {
    Ok(BlockFacts::of(a, b, c, d)?.cross_radius_bound())
}

pub fn check_cross_max_bound<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    c: &ComplexMatrix<T>,
    d: &ComplexMatrix<T>,
) -> Result<Margin<T>> {
    Ok(BlockFacts::of(a, b, c, d)?.cross_max_bound())
}

pub fn check_split_radius_bound<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    c: &ComplexMatrix<T>,
    d: &ComplexMatrix<T>,
) -> Result<Margin<T>> {
    Ok(BlockFacts::of(a, b, c, d)?.split_radius_bound())
}

pub fn check_split_adjoint_bound<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    c: &ComplexMatrix<T>,
    d: &ComplexMatrix<T>,
) -> Result<Margin<T>> {
    Ok(BlockFacts::of(a, b, c, d)?.split_adjoint_bound())
}

pub fn check_split_norm_bound<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    c: &ComplexMatrix<T>,
    d: &ComplexMatrix<T>,
) -> Result<Margin<T>> {
    Ok(BlockFacts::of(a, b, c, d)?.split_norm_bound())
}

/// Equalities forced by `T² = 0`, for `T = [[0, X], [0, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareZeroMargins<T> {
    /// `|w(T) − ‖Re T‖|`
    pub real_part_gap: T,
    /// `|w(T) − ‖Im T‖|`
    pub imag_part_gap: T,
    /// `max{m(Re T), m(Im T)}`
    pub crawford: T,
}

impl<T: Real> SquareZeroMargins<T> {
    pub fn from_facts(f: &SquareFacts<T>) -> Self {
        Self {
            real_part_gap: (f.radius - f.real_part_norm).abs(),
            imag_part_gap: (f.radius - f.imag_part_norm).abs(),
            crawford: f.real_part_crawford.max(f.imag_part_crawford),
        }
    }

    pub fn holds(&self, tol: T) -> bool {
        self.real_part_gap <= tol && self.imag_part_gap <= tol && self.crawford <= tol
    }
}

/// Builds `[[0, X], [0, 0]]` and measures how far its radius, real and
/// imaginary part norms and Crawford numbers are from the forced equalities.
pub fn check_square_zero_equalities<T: Real>(x: &ComplexMatrix<T>) -> Result<SquareZeroMargins<T>> {
    let t = square_zero_block(x)?;
    Ok(SquareZeroMargins::from_facts(&SquareFacts::of(&t)?))
}

fn square_zero_block<T: Real>(x: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let (k, m) = (x.rows(), x.cols());
    ComplexMatrix::from_blocks(
        &ComplexMatrix::zeros(k, k),
        x,
        &ComplexMatrix::zeros(m, k),
        &ComplexMatrix::zeros(m, m),
    )
}

/// Identifier of one checked inequality in a [`ViolationReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InequalityId {
    /// `w²(T) ≤ w(T²) + min{‖Re T‖², ‖Im T‖²}`
    SquareRadius,
    /// `w(T) ≤ ½[w(A) + w(D) + √((w(A) − w(D))² + ‖B‖² + ‖C‖² + 2w(CB))]`
    CrossRadius,
    /// Same shape with `4α₁²`, `α₁` built from `w(BC)` and `w(CB)`.
    CrossMax,
    /// `w²(T) ≤ ¼‖T‖‖T²‖^½ + ¼‖T²‖ + ½‖T‖²`
    NormMix,
    /// `w²(T) ≤ ½‖T‖‖T²‖^½ + ¼‖T²‖ + ¼‖T‖²`
    NormMixHalf,
    /// `w²(T) ≤ ¾‖T²‖ + ¼‖T‖²`
    SquareNorm,
    SplitRadius,
    SplitAdjoint,
    SplitNorm,
    /// `w(T) = ‖Re T‖` when `T² = 0`.
    SquareZeroRealPart,
    /// `w(T) = ‖Im T‖` when `T² = 0`.
    SquareZeroImagPart,
    /// `m(Re T) = m(Im T) = 0` when `T² = 0`.
    SquareZeroCrawford,
    /// `m(Re T), m(Im T) ≤ √w(T²)`
    CrawfordSquareRadius,
    /// `½‖T‖ ≤ w(T)`
    SandwichLower,
    /// `w(T) ≤ ‖T‖`
    SandwichUpper,
    /// The cross-radius bound never exceeds the `(‖B‖ + ‖C‖)²` bound.
    CrossImprovesNormSum,
    /// `r(C(p)) ≤ w(C(p))`, with `r` from the root finder.
    SpectralRadius,
}

impl InequalityId {
    pub const ALL: [InequalityId; 17] = [
        InequalityId::SquareRadius,
        InequalityId::CrossRadius,
        InequalityId::CrossMax,
        InequalityId::NormMix,
        InequalityId::NormMixHalf,
        InequalityId::SquareNorm,
        InequalityId::SplitRadius,
        InequalityId::SplitAdjoint,
        InequalityId::SplitNorm,
        InequalityId::SquareZeroRealPart,
        InequalityId::SquareZeroImagPart,
        InequalityId::SquareZeroCrawford,
        InequalityId::CrawfordSquareRadius,
        InequalityId::SandwichLower,
        InequalityId::SandwichUpper,
        InequalityId::CrossImprovesNormSum,
        InequalityId::SpectralRadius,
    ];

    /// Equalities are judged against [`TrialConfig::equality_tol`].
    pub fn is_equality(self) -> bool {
        matches!(
            self,
            InequalityId::SquareZeroRealPart | InequalityId::SquareZeroImagPart | InequalityId::SquareZeroCrawford
        )
    }

    pub fn name(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default()
    }
}

/// Parameters of a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: u64,
    /// Largest square matrix drawn, in `1..=8`.
    pub max_dim: usize,
    /// Real and imaginary parts are uniform on `[−magnitude, magnitude]`.
    pub magnitude: f64,
    /// Slack before an inequality counts as violated.
    pub tol: f64,
    /// Slack for the `T² = 0` equalities.
    pub equality_tol: f64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self { seed: 42, trials: 1000, max_dim: 6, magnitude: 2.0, tol: 1e-9, equality_tol: 1e-8 }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=8).contains(&self.max_dim) {
            return Err(Error::Input(format!("max_dim must be in 1..=8, got {}", self.max_dim)));
        }
        if !(self.magnitude > 0.0 && self.magnitude.is_finite()) {
            return Err(Error::Input(format!("magnitude must be positive, got {}", self.magnitude)));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Input(format!("tol must be positive, got {}", self.tol)));
        }
        if !(self.equality_tol > 0.0 && self.equality_tol.is_finite()) {
            return Err(Error::Input(format!("equality_tol must be positive, got {}", self.equality_tol)));
        }
        Ok(())
    }
}

/// One observed margin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    pub id: InequalityId,
    pub margin: f64,
}

/// Aggregate for one inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityStats {
    pub id: InequalityId,
    pub trials: u64,
    pub violations: u64,
    /// Smallest `rhs − lhs` seen (for equalities, minus the gap).
    pub worst_margin: Option<f64>,
    /// Trial index that produced `worst_margin`; replay with [`run_trial`].
    pub worst_trial: Option<u64>,
}

/// Per-inequality counts for a suite run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub config: TrialConfig,
    /// Trials that failed with a numerical error, with the message.
    pub failed_trials: Vec<(u64, String)>,
    pub inequalities: Vec<InequalityStats>,
}

impl ViolationReport {
    pub fn total_violations(&self) -> u64 {
        self.inequalities.iter().map(|s| s.violations).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0 && self.failed_trials.is_empty()
    }

    pub fn stats(&self, id: InequalityId) -> Option<&InequalityStats> {
        self.inequalities.iter().find(|s| s.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Structured family exercised alongside the generic draws of a trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    SquareZero,
    Hermitian,
    UnitaryDiagonal,
    Companion,
}

impl Family {
    pub fn of_trial(trial: u64) -> Self {
        match trial % 4 {
            0 => Family::SquareZero,
            1 => Family::Hermitian,
            2 => Family::UnitaryDiagonal,
            _ => Family::Companion,
        }
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    magnitude: f64,
}

impl Sampler {
    fn new(cfg: &TrialConfig, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(trial);
        Self { rng, magnitude: cfg.magnitude }
    }

    fn dim(&mut self, hi: usize) -> usize {
        self.rng.gen_range(1..=hi.max(1))
    }

    fn scalar<T: Real>(&mut self) -> Complex<T> {
        let m = self.magnitude;
        Complex::new(T::lit(self.rng.gen_range(-m..=m)), T::lit(self.rng.gen_range(-m..=m)))
    }

    fn matrix<T: Real>(&mut self, rows: usize, cols: usize) -> ComplexMatrix<T> {
        ComplexMatrix::from_fn(rows, cols, |_, _| self.scalar())
    }

    fn angle<T: Real>(&mut self) -> T {
        T::lit(self.rng.gen_range(0.0..std::f64::consts::TAU))
    }
}

/// Observations of one trial, in a fixed order.
///
/// Each trial checks the single-operator inequalities on a random square
/// matrix, the block inequalities on random blocks (each side at most
/// `max_dim / 2`), and one structured family chosen by the trial index.
pub fn run_trial<T: Real>(cfg: &TrialConfig, trial: u64) -> Result<Vec<Observation>> {
    let mut s = Sampler::new(cfg, trial);
    let mut out = Vec::new();

    let n = s.dim(cfg.max_dim);
    let t: ComplexMatrix<T> = s.matrix(n, n);
    observe_square(&mut out, &SquareFacts::of(&t)?);

    let half = (cfg.max_dim / 2).max(1);
    let (k, m) = (s.dim(half), s.dim(half));
    let (a, b, c, d) = (s.matrix::<T>(k, k), s.matrix(k, m), s.matrix(m, k), s.matrix(m, m));
    observe_blocks(&mut out, &BlockFacts::of(&a, &b, &c, &d)?);

    match Family::of_trial(trial) {
        Family::SquareZero => {
            // Alternate the block form with a rank-one uv* where v*u = 0.
            let t = if (trial / 4) % 2 == 0 {
                let k = s.dim(half);
                let m = s.dim(half);
                square_zero_block(&s.matrix::<T>(k, m))?
            } else {
                let n = s.dim(cfg.max_dim.max(2)).max(2);
                rank_one_square_zero(&mut s, n)
            };
            let f = SquareFacts::of(&t)?;
            let z = SquareZeroMargins::from_facts(&f);
            out.push(Observation { id: InequalityId::SquareZeroRealPart, margin: -z.real_part_gap.as_f64() });
            out.push(Observation { id: InequalityId::SquareZeroImagPart, margin: -z.imag_part_gap.as_f64() });
            out.push(Observation { id: InequalityId::SquareZeroCrawford, margin: -z.crawford.as_f64() });
            observe_square(&mut out, &f);
        }
        Family::Hermitian => {
            let n = s.dim(cfg.max_dim);
            let h = s.matrix::<T>(n, n).hermitian_part()?;
            observe_square(&mut out, &SquareFacts::of(&h)?);
        }
        Family::UnitaryDiagonal => {
            let n = s.dim(cfg.max_dim);
            let diag: Vec<Complex<T>> = (0..n).map(|_| Complex::from_polar(T::one(), s.angle())).collect();
            observe_square(&mut out, &SquareFacts::of(&ComplexMatrix::diagonal(&diag))?);
        }
        Family::Companion => {
            let degree = s.dim(cfg.max_dim.max(2)).max(2);
            let coeffs: Vec<Complex<T>> = (0..degree).map(|_| s.scalar()).collect();
            let p = Polynomial::monic(coeffs)?;
            let cm = companion_matrix(&p)?.matrix;
            let f = SquareFacts::of(&cm)?;
            let roots = find_roots(&p, T::lit(DEFAULT_ROOT_TOL), DEFAULT_MAX_ITER)?;
            out.push(Observation {
                id: InequalityId::SpectralRadius,
                margin: Margin::new(roots.max_modulus(), f.radius).margin().as_f64(),
            });
            observe_square(&mut out, &f);
            let top = cm.submatrix(0, 0, 1, 1)?;
            let row = cm.submatrix(0, 1, 1, degree - 1)?;
            let col = cm.submatrix(1, 0, degree - 1, 1)?;
            let shift = cm.submatrix(1, 1, degree - 1, degree - 1)?;
            observe_blocks(&mut out, &BlockFacts::of(&top, &row, &col, &shift)?);
        }
    }
    Ok(out)
}

/// `u v*` with `v ⟂ u`, a square-zero matrix not in block form.
fn rank_one_square_zero<T: Real>(s: &mut Sampler, n: usize) -> ComplexMatrix<T> {
    let u: Vec<Complex<T>> = (0..n).map(|_| s.scalar()).collect();
    let w: Vec<Complex<T>> = (0..n).map(|_| s.scalar()).collect();
    // v = w − (u*w / u*u) u
    let uu = u.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr());
    let uw = u.iter().zip(&w).fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b);
    let v: Vec<Complex<T>> = w.iter().zip(&u).map(|(b, a)| b - a * uw.unscale(uu)).collect();
    ComplexMatrix::from_fn(n, n, |i, j| u[i] * v[j].conj())
}

fn observe_square<T: Real>(out: &mut Vec<Observation>, f: &SquareFacts<T>) {
    let pairs = [
        (InequalityId::SquareRadius, f.square_radius_bound()),
        (InequalityId::NormMix, f.norm_mix_bound()),
        (InequalityId::NormMixHalf, f.norm_mix_bound_half()),
        (InequalityId::SquareNorm, f.square_norm_bound()),
        (InequalityId::SandwichLower, f.sandwich_lower()),
        (InequalityId::SandwichUpper, f.sandwich_upper()),
        (InequalityId::CrawfordSquareRadius, f.crawford_bound()),
    ];
    out.extend(pairs.into_iter().map(|(id, m)| Observation { id, margin: m.margin().as_f64() }));
}

fn observe_blocks<T: Real>(out: &mut Vec<Observation>, f: &BlockFacts<T>) {
    let pairs = [
        (InequalityId::CrossRadius, f.cross_radius_bound()),
        (InequalityId::CrossMax, f.cross_max_bound()),
        (InequalityId::SplitRadius, f.split_radius_bound()),
        (InequalityId::SplitAdjoint, f.split_adjoint_bound()),
        (InequalityId::SplitNorm, f.split_norm_bound()),
        (InequalityId::CrossImprovesNormSum, f.cross_bound_improvement()),
    ];
    out.extend(pairs.into_iter().map(|(id, m)| Observation { id, margin: m.margin().as_f64() }));
}

/// Runs `cfg.trials` trials in `f64` and aggregates them.
pub fn run_suite(cfg: &TrialConfig) -> Result<ViolationReport> {
    cfg.validate()?;
    let mut agg: BTreeMap<InequalityId, InequalityStats> = BTreeMap::new();
    let mut failed_trials = Vec::new();
    for trial in 0..cfg.trials {
        match run_trial::<f64>(cfg, trial) {
            Ok(obs) => {
                for o in obs {
                    record(&mut agg, cfg, trial, o);
                }
            }
            Err(e) => failed_trials.push((trial, e.to_string())),
        }
    }
    Ok(ViolationReport { config: *cfg, failed_trials, inequalities: agg.into_values().collect() })
}

fn record(agg: &mut BTreeMap<InequalityId, InequalityStats>, cfg: &TrialConfig, trial: u64, o: Observation) {
    let tol = if o.id.is_equality() { cfg.equality_tol } else { cfg.tol };
    let s = agg.entry(o.id).or_insert(InequalityStats {
        id: o.id,
        trials: 0,
        violations: 0,
        worst_margin: None,
        worst_trial: None,
    });
    s.trials += 1;
    // NaN compares false, so it lands here as a violation.
    if !(o.margin >= -tol) {
        s.violations += 1;
    }
    let worse = match (s.worst_margin, s.worst_trial) {
        (Some(m), Some(t)) => o.margin.total_cmp(&m).then(trial.cmp(&t)).is_lt(),
        _ => true,
    };
    if worse {
        s.worst_margin = Some(o.margin);
        s.worst_trial = Some(trial);
    }
}
