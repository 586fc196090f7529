//! Dense complex matrices, Hermitian eigenvalues and the norms built on them.
//!
//! Matrices are stored row-major and are immutable once built; every
//! operation returns a fresh value. Entries are checked for finiteness at
//! construction so downstream routines never see NaN or infinity.

use std::fmt;
use std::ops::Index;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Sweep cap for the Jacobi eigensolver.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Relative off-diagonal mass at which a Jacobi run is considered converged.
pub fn jacobi_tolerance<T: Real>() -> T {
    T::tol_floor(1e-14, 8.0)
}

/// Relative anti-Hermitian mass tolerated on input to the eigensolver.
pub fn hermitian_tolerance<T: Real>() -> T {
    T::tol_floor(1e-12, 64.0)
}

/// Dense complex matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain(format!(
                "non-finite entry at ({}, {})",
                pos / cols,
                pos % cols
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from a generator. Panics on zero dimensions or non-finite output.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self::new(rows, cols, data).expect("from_fn: invalid matrix")
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.concat())
    }

    /// Real-valued rows; convenient in tests and examples.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<Complex<T>>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex::new(T::lit(x), T::zero())).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Complex::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Complex::one() } else { Complex::zero() })
    }

    pub fn diagonal(diag: &[Complex<T>]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i] } else { Complex::zero() })
    }

    /// Lower shift matrix `L_n`: ones on the subdiagonal, zeros elsewhere.
    pub fn lower_shift(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j + 1 { Complex::one() } else { Complex::zero() })
    }

    /// Assembles the 2×2 block matrix `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if !a.is_square() || !d.is_square() {
            return Err(Error::Shape("diagonal blocks must be square".into()));
        }
        let (k, m) = (a.rows, d.rows);
        if b.rows != k || b.cols != m || c.rows != m || c.cols != k {
            return Err(Error::Shape(format!(
                "off-diagonal blocks {}x{} and {}x{} do not fit diagonal blocks {k}x{k}, {m}x{m}",
                b.rows, b.cols, c.rows, c.cols
            )));
        }
        Ok(Self::from_fn(k + m, k + m, |i, j| match (i < k, j < k) {
            (true, true) => a[(i, j)],
            (true, false) => b[(i, j - k)],
            (false, true) => c[(i - k, j)],
            (false, false) => d[(i - k, j - k)],
        }))
    }

    /// Copies the `rows × cols` block whose top-left corner is `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 || r0 + rows > self.rows || c0 + cols > self.cols {
            return Err(Error::Shape(format!(
                "block {rows}x{cols} at ({r0}, {c0}) outside {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)]))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).fold(Complex::zero(), |s, z| s + z)
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        self.map(|z| z * factor)
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| f(self[(i, j)]))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x - y)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "elementwise operation on {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| f(self[(i, j)], other[(i, j)])))
    }

    /// Matrix product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = vec![Complex::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut data[i * other.cols..(i + 1) * other.cols];
            for (k, &lhs) in self.row(i).iter().enumerate() {
                if lhs.is_zero() {
                    continue;
                }
                for (o, &rhs) in out.iter_mut().zip(other.row(k)) {
                    *o += lhs * rhs;
                }
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, data })
    }

    /// `self · self`.
    pub fn square(&self) -> Result<Self> {
        self.multiply(self)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// `Re(e^{iθ}T) = (e^{iθ}T + e^{-iθ}T*)/2`, exactly Hermitian by construction.
    pub fn rotated_hermitian_part(&self, theta: T) -> Result<Self> {
        self.require_square("hermitian part")?;
        let rot = Complex::from_polar(T::one(), theta);
        Ok(hermitian_from(self.rows, |i, j| rot * self[(i, j)]))
    }

    /// `Re(T) = (T + T*)/2`.
    pub fn hermitian_part(&self) -> Result<Self> {
        self.require_square("hermitian part")?;
        Ok(hermitian_from(self.rows, |i, j| self[(i, j)]))
    }

    /// `Im(T) = (T − T*)/(2i)`, so that `T = Re(T) + i·Im(T)`.
    pub fn skew_part(&self) -> Result<Self> {
        self.require_square("skew part")?;
        let minus_i = Complex::new(T::zero(), -T::one());
        Ok(hermitian_from(self.rows, |i, j| minus_i * self[(i, j)]))
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Shape(format!("{what} of non-square {}x{} matrix", self.rows, self.cols)))
        }
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt()
    }

    /// Frobenius norm of `self − self*`.
    pub fn anti_hermitian_mass(&self) -> T {
        let n = self.rows;
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                s += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        s.sqrt()
    }

    /// True when square and `‖h − h*‖_F ≤ tol·‖h‖_F`.
    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && self.anti_hermitian_mass() <= tol * self.frobenius_norm()
    }

    pub fn max_abs_diff(&self, other: &Self) -> Option<T> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(&other.data)
                .fold(T::zero(), |m, (x, y)| m.max((*x - *y).norm())),
        )
    }
}

/// Builds `(f + f*)/2` for an `n × n` generator, mirroring the upper triangle.
fn hermitian_from<T: Real>(n: usize, f: impl Fn(usize, usize) -> Complex<T>) -> ComplexMatrix<T> {
    let half = T::lit(0.5);
    let mut data = vec![Complex::zero(); n * n];
    for i in 0..n {
        data[i * n + i] = Complex::new(f(i, i).re, T::zero());
        for j in i + 1..n {
            let z = (f(i, j) + f(j, i).conj()).scale(half);
            data[i * n + j] = z;
            data[j * n + i] = z.conj();
        }
    }
    ComplexMatrix { rows: n, cols: n, data }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols) {
            write!(f, "  ")?;
            for z in row {
                write!(f, "({:?}, {:?})  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigenvalues of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianSpectrum<T> {
    /// Ascending.
    pub eigenvalues: Vec<T>,
    /// Off-diagonal Frobenius mass left when the iteration stopped.
    pub residual: T,
}

impl<T: Real> HermitianSpectrum<T> {
    pub fn min(&self) -> T {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> T {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// Operator norm of the underlying Hermitian matrix.
    pub fn abs_max(&self) -> T {
        self.min().abs().max(self.max().abs())
    }
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is checked against [`hermitian_tolerance`] and then replaced by
/// its exact Hermitian part before iterating.
pub fn hermitian_eigenvalues<T: Real>(h: &ComplexMatrix<T>) -> Result<HermitianSpectrum<T>> {
    if !h.is_square() {
        return Err(Error::Shape(format!(
            "eigenvalues of non-square {}x{} matrix",
            h.rows, h.cols
        )));
    }
    let scale = h.frobenius_norm();
    let skew = h.anti_hermitian_mass();
    if skew > hermitian_tolerance::<T>() * scale {
        return Err(Error::Domain(format!(
            "matrix is not Hermitian: ‖h − h*‖_F = {:e}, ‖h‖_F = {:e}",
            skew.as_f64(),
            scale.as_f64()
        )));
    }
    let sym = h.hermitian_part()?;
    let mut work = sym.data;
    jacobi_in_place(&mut work, h.rows)
}

/// Jacobi iteration on an exactly Hermitian row-major buffer; the buffer is
/// overwritten with the (nearly) diagonalised matrix.
pub(crate) fn jacobi_in_place<T: Real>(a: &mut [Complex<T>], n: usize) -> Result<HermitianSpectrum<T>> {
    let off_mass = |a: &[Complex<T>]| -> T {
        let mut s = T::zero();
        for i in 0..n {
            for j in i + 1..n {
                s += a[i * n + j].norm_sqr();
            }
        }
        (s + s).sqrt()
    };
    let total = a.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
    let threshold = jacobi_tolerance::<T>() * total;
    let one = T::one();

    let mut residual = off_mass(a);
    let mut sweeps = 0;
    while residual > threshold {
        if sweeps == MAX_JACOBI_SWEEPS {
            return Err(Error::Convergence { sweeps, residual: residual.as_f64() });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let mag = apq.norm();
                if mag.is_zero() {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (mag + mag);
                let t = if tau.is_zero() {
                    one
                } else {
                    tau.signum() / (tau.abs() + (one + tau * tau).sqrt())
                };
                let c = one / (one + t * t).sqrt();
                let s = t * c;
                // Phase e^{-iφ} with a_pq = |a_pq| e^{iφ}.
                let phase = apq.conj().unscale(mag);
                let s_phase = phase.scale(s);
                let c_phase = phase.scale(c);
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp.scale(c) - arq * s_phase;
                    let new_rq = arp.scale(s) + arq * c_phase;
                    a[r * n + p] = new_rp;
                    a[r * n + q] = new_rq;
                    a[p * n + r] = new_rp.conj();
                    a[q * n + r] = new_rq.conj();
                }
                a[p * n + p] = Complex::new(app - t * mag, T::zero());
                a[q * n + q] = Complex::new(aqq + t * mag, T::zero());
                a[p * n + q] = Complex::zero();
                a[q * n + p] = Complex::zero();
            }
        }
        residual = off_mass(a);
    }

    let mut eigenvalues: Vec<T> = (0..n).map(|i| a[i * n + i].re).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(HermitianSpectrum { eigenvalues, residual })
}

/// Largest singular value, `sqrt(λ_max(T*T))` (or of `TT*` when smaller).
pub fn spectral_norm<T: Real>(t: &ComplexMatrix<T>) -> Result<T> {
    let gram = if t.cols <= t.rows {
        t.adjoint().multiply(t)?
    } else {
        t.multiply(&t.adjoint())?
    };
    let n = gram.rows;
    let mut work = hermitian_from(n, |i, j| gram[(i, j)]).data;
    let spectrum = jacobi_in_place(&mut work, n)?;
    Ok(spectrum.max().max(T::zero()).sqrt())
}

/// Free-function form of [`ComplexMatrix::frobenius_norm`].
pub fn frobenius_norm<T: Real>(t: &ComplexMatrix<T>) -> T {
    t.frobenius_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let m = M::from_fn(3, 3, |i, j| c(i as f64 - 2.0 * j as f64, 0.5 * (i * j) as f64));
        assert_eq!(M::identity(3).multiply(&m).unwrap(), m);
        assert_eq!(m.multiply(&M::identity(3)).unwrap(), m);
    }

    #[test]
    fn nilpotent_square_vanishes() {
        let n = M::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(n.square().unwrap(), M::zeros(2, 2));
    }

    #[test]
    fn shift_composition() {
        let l3 = M::lower_shift(3);
        let sq = l3.square().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if (i, j) == (2, 0) { 1.0 } else { 0.0 };
                assert_eq!(sq[(i, j)], c(expect, 0.0));
            }
        }
    }

    #[test]
    fn multiply_rejects_mismatch() {
        let a = M::zeros(2, 3);
        assert!(matches!(a.multiply(&a), Err(Error::Shape(_))));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(M::new(0, 1, vec![]), Err(Error::Shape(_))));
        assert!(matches!(M::new(1, 2, vec![c(1.0, 0.0)]), Err(Error::Shape(_))));
        assert!(matches!(M::new(1, 1, vec![c(f64::NAN, 0.0)]), Err(Error::Domain(_))));
        assert!(matches!(M::new(1, 1, vec![c(0.0, f64::INFINITY)]), Err(Error::Domain(_))));
    }

    #[test]
    fn adjoint_examples() {
        let d = M::diagonal(&[c(0.0, 1.0), c(2.0, 0.0)]);
        assert_eq!(d.adjoint(), M::diagonal(&[c(0.0, -1.0), c(2.0, 0.0)]));
        let h = M::from_rows(&[vec![c(2.0, 0.0), c(1.0, -1.0)], vec![c(1.0, 1.0), c(-3.0, 0.0)]]).unwrap();
        assert_eq!(h.adjoint(), h);
        let l3t = M::lower_shift(3).adjoint();
        assert_eq!(l3t[(0, 1)], c(1.0, 0.0));
        assert_eq!(l3t[(1, 2)], c(1.0, 0.0));
        assert_eq!(l3t[(1, 0)], c(0.0, 0.0));
    }

    #[test]
    fn hermitian_part_examples() {
        let h = M::from_rows(&[vec![c(2.0, 0.0), c(1.0, -1.0)], vec![c(1.0, 1.0), c(-3.0, 0.0)]]).unwrap();
        assert_eq!(h.hermitian_part().unwrap(), h);
        let t = M::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(t.hermitian_part().unwrap(), M::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap());
        let it = M::identity(3).scale(c(0.0, 1.0));
        assert_eq!(it.hermitian_part().unwrap(), M::zeros(3, 3));
        assert!(matches!(M::zeros(2, 3).hermitian_part(), Err(Error::Shape(_))));
    }

    #[test]
    fn real_and_imaginary_parts_reconstruct() {
        let t = M::from_fn(3, 3, |i, j| c((i + 2 * j) as f64 - 1.5, (i * i) as f64 - j as f64));
        let re = t.hermitian_part().unwrap();
        let im = t.skew_part().unwrap();
        assert!(re.is_hermitian(1e-15) && im.is_hermitian(1e-15));
        let back = re.add(&im.scale(c(0.0, 1.0))).unwrap();
        assert!(back.max_abs_diff(&t).unwrap() < 1e-14);
    }

    #[test]
    fn eigenvalues_of_diagonal_are_sorted_diagonal() {
        let d = M::diagonal(&[c(3.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]);
        let s = hermitian_eigenvalues(&d).unwrap();
        assert_eq!(s.eigenvalues, vec![1.0, 2.0, 3.0]);
        assert_eq!(s.residual, 0.0);
    }

    #[test]
    fn pauli_x_spectrum() {
        let x = M::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let s = hermitian_eigenvalues(&x).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues[1], 1.0, epsilon = 1e-15);
    }

    /// Largest root of det(xI − J) for the n×n tridiagonal J with `off` on
    /// both off-diagonals, by bisection on the three-term recurrence.
    fn tridiagonal_lambda_max(n: usize, off: f64) -> f64 {
        let charpoly = |x: f64| {
            let (mut prev, mut cur) = (1.0, x);
            for _ in 1..n {
                let next = x * cur - off * off * prev;
                prev = cur;
                cur = next;
            }
            cur
        };
        // Every eigenvalue lies in [-2|off|, 2|off|]; the largest root is where
        // the monic characteristic polynomial last changes sign.
        let (mut lo, mut hi) = (-2.0 * off, 2.0 * off);
        let samples = 4000;
        for k in (0..samples).rev() {
            let x = -2.0 * off + 4.0 * off * k as f64 / samples as f64;
            if charpoly(x).signum() != charpoly(2.0 * off).signum() {
                lo = x;
                hi = x + 4.0 * off / samples as f64;
                break;
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if charpoly(mid).signum() == charpoly(hi).signum() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn real_part_of_l4_has_cos_pi_over_5_on_top() {
        let oracle = tridiagonal_lambda_max(4, 0.5);
        assert_abs_diff_eq!(oracle, 0.809_016_994_374_947_5, epsilon = 1e-12);
        let re = M::lower_shift(4).rotated_hermitian_part(0.0).unwrap();
        let s = hermitian_eigenvalues(&re).unwrap();
        assert_abs_diff_eq!(s.max(), oracle, epsilon = 1e-13);
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        let t = M::from_fn(6, 6, |i, j| c(((3 * i + 5 * j) % 7) as f64 - 3.0, ((i * j) % 5) as f64 - 2.0));
        let h = t.hermitian_part().unwrap();
        let s = hermitian_eigenvalues(&h).unwrap();
        let sum: f64 = s.eigenvalues.iter().sum();
        assert!((sum - h.trace().re).abs() < 1e-10 * h.frobenius_norm());
        assert!(s.residual <= 1e-14 * h.frobenius_norm());
        assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn eigensolver_rejects_non_hermitian() {
        let t = M::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eigenvalues(&t), Err(Error::Domain(_))));
        assert!(matches!(hermitian_eigenvalues(&M::zeros(2, 3)), Err(Error::Shape(_))));
    }

    #[test]
    fn eigensolver_accepts_rounding_level_asymmetry() {
        let mut rows = vec![vec![c(1.0, 0.0), c(2.0, 1.0)], vec![c(2.0, -1.0), c(0.5, 0.0)]];
        rows[1][0].re += 1e-15;
        let h = M::from_rows(&rows).unwrap();
        assert!(hermitian_eigenvalues(&h).is_ok());
    }

    #[test]
    fn one_by_one_and_zero_matrices() {
        let s = hermitian_eigenvalues(&M::diagonal(&[c(-4.0, 0.0)])).unwrap();
        assert_eq!(s.eigenvalues, vec![-4.0]);
        let z = hermitian_eigenvalues(&M::zeros(3, 3)).unwrap();
        assert_eq!(z.eigenvalues, vec![0.0; 3]);
        assert_eq!(spectral_norm(&M::zeros(2, 2)).unwrap(), 0.0);
    }

    #[test]
    fn spectral_norm_examples() {
        assert_abs_diff_eq!(spectral_norm(&M::identity(4)).unwrap(), 1.0, epsilon = 1e-15);
        let d = M::diagonal(&[c(-3.0, 0.0), c(0.0, 2.0)]);
        assert_abs_diff_eq!(spectral_norm(&d).unwrap(), 3.0, epsilon = 1e-14);
        // Rectangular: a row vector's norm is its Euclidean length.
        let row = M::from_real_rows(&[&[1.0, 2.0, 2.0]]).unwrap();
        assert_abs_diff_eq!(spectral_norm(&row).unwrap(), 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(spectral_norm(&row.adjoint()).unwrap(), 3.0, epsilon = 1e-14);
    }

    #[test]
    fn frobenius_norm_examples() {
        assert_eq!(frobenius_norm(&M::zeros(3, 2)), 0.0);
        assert_eq!(frobenius_norm(&M::identity(4)), 2.0);
        assert_eq!(frobenius_norm(&M::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap()), 2.0);
    }

    #[test]
    fn block_assembly_and_extraction() {
        let a = M::diagonal(&[c(1.0, 0.0)]);
        let b = M::from_real_rows(&[&[2.0, 3.0]]).unwrap();
        let cc = M::from_real_rows(&[&[4.0], &[5.0]]).unwrap();
        let d = M::lower_shift(2);
        let t = M::from_blocks(&a, &b, &cc, &d).unwrap();
        assert_eq!(t.rows(), 3);
        assert_eq!(t[(0, 2)], c(3.0, 0.0));
        assert_eq!(t[(2, 0)], c(5.0, 0.0));
        assert_eq!(t[(2, 1)], c(1.0, 0.0));
        assert_eq!(t.submatrix(1, 1, 2, 2).unwrap(), d);
        assert!(M::from_blocks(&a, &cc, &b, &d).is_err());
    }

    #[test]
    fn single_precision_eigensolver() {
        let x = ComplexMatrix::<f32>::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let s = hermitian_eigenvalues(&x).unwrap();
        assert!((s.eigenvalues[0] - 1.0).abs() < 1e-6);
        assert!((s.eigenvalues[1] - 3.0).abs() < 1e-6);
    }
}
