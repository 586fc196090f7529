//! Monic polynomials and their Frobenius companion matrices.

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;

/// Order in which raw coefficients are listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientOrder {
    /// Constant term first.
    Ascending,
    /// Leading coefficient first, the way polynomials are usually written.
    #[default]
    Descending,
}

/// Monic polynomial `zⁿ + a_{n−1}z^{n−1} + … + a₁z + a₀`.
///
/// Only `a₀ … a_{n−1}` are stored, in ascending order; the leading one is implicit.
#[derive(Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> Polynomial<T> {
    /// Builds a monic polynomial from its lower coefficients `a₀ … a_{n−1}`.
    pub fn monic(coeffs: Vec<Complex<T>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Input("polynomial must have degree at least 1".into()));
        }
        check_finite(&coeffs)?;
        Ok(Self { coeffs })
    }

    /// Parses a full coefficient list (including the leading one) and divides
    /// through by the leading coefficient.
    pub fn from_coefficients(raw: &[Complex<T>], order: CoefficientOrder) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Input("empty coefficient list".into()));
        }
        check_finite(raw)?;
        let mut ascending = raw.to_vec();
        if order == CoefficientOrder::Descending {
            ascending.reverse();
        }
        let lead = ascending.pop().expect("non-empty");
        if lead.is_zero() {
            return Err(Error::Input("leading coefficient is zero".into()));
        }
        if ascending.is_empty() {
            return Err(Error::Input("constant polynomial has degree 0".into()));
        }
        if !lead.is_one() {
            for a in &mut ascending {
                *a = *a / lead;
            }
        }
        Self::monic(ascending)
    }

    /// Real coefficients, leading first.
    pub fn from_real_descending(raw: &[f64]) -> Result<Self> {
        let raw: Vec<_> = raw.iter().map(|&x| Complex::new(T::lit(x), T::zero())).collect();
        Self::from_coefficients(&raw, CoefficientOrder::Descending)
    }

    /// `zⁿ`.
    pub fn power(n: usize) -> Result<Self> {
        Self::monic(vec![Complex::zero(); n])
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a₀ … a_{n−1}`.
    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// `a_k` with the conventions `a_n = 1` and `a_k = 0` outside `0..=n`.
    pub fn coeff(&self, k: isize) -> Complex<T> {
        let n = self.degree() as isize;
        match k {
            k if k == n => Complex::one(),
            k if (0..n).contains(&k) => self.coeffs[k as usize],
            _ => Complex::zero(),
        }
    }

    /// `|a_k|`, zero outside the stored range.
    pub fn abs_coeff(&self, k: isize) -> T {
        self.coeff(k).norm()
    }

    /// `Σ_{r=lo}^{hi} |a_r|²`, empty when `hi < lo`.
    pub fn sum_sq(&self, lo: usize, hi: isize) -> T {
        if hi < lo as isize {
            return T::zero();
        }
        self.coeffs[lo..=hi as usize].iter().fold(T::zero(), |s, a| s + a.norm_sqr())
    }

    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, a| m.max(a.norm()))
    }

    /// Full coefficient list, leading `1` first.
    pub fn descending(&self) -> Vec<Complex<T>> {
        std::iter::once(Complex::one()).chain(self.coeffs.iter().rev().copied()).collect()
    }

    /// `p(z)` by Horner's rule.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs.iter().rev().fold(Complex::one(), |acc, &a| acc * z + a)
    }

    /// `(p(z), p'(z))` in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex<T>) -> (Complex<T>, Complex<T>) {
        let mut p = Complex::one();
        let mut dp = Complex::zero();
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }
}

fn check_finite<T: Real>(coeffs: &[Complex<T>]) -> Result<()> {
    match coeffs.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        Some(i) => Err(Error::Input(format!("coefficient {i} is not finite"))),
        None => Ok(()),
    }
}

impl<T: Real> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        if n == 1 {
            write!(f, "z")?;
        } else {
            write!(f, "z^{n}")?;
        }
        for k in (0..n).rev() {
            // Adding zero turns −0 into +0.
            let a = self.coeffs[k] + Complex::zero();
            if a.is_zero() {
                continue;
            }
            let (sign, coef) = if a.im.is_zero() {
                let sign = if a.re < T::zero() { '-' } else { '+' };
                let mag = a.re.abs();
                (sign, if mag.is_one() && k > 0 { String::new() } else { format!("{mag}") })
            } else {
                ('+', format!("({}{:+}i)", a.re, a.im))
            };
            match k {
                0 => write!(f, " {sign} {coef}")?,
                1 => write!(f, " {sign} {coef}z")?,
                _ => write!(f, " {sign} {coef}z^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|a| (&a.re, &a.im))).finish()
    }
}

/// Frobenius companion matrix together with the polynomial it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct CompanionMatrix<T> {
    pub matrix: ComplexMatrix<T>,
    pub source: Polynomial<T>,
}

/// First row `(−a_{n−1}, …, −a₀)`, ones on the subdiagonal.
pub fn companion_matrix<T: Real>(p: &Polynomial<T>) -> Result<CompanionMatrix<T>> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::Domain(format!("companion matrix needs degree ≥ 2, got {n}")));
    }
    let matrix = ComplexMatrix::from_fn(n, n, |i, j| match i {
        0 => -p.coeffs[n - 1 - j],
        _ if i == j + 1 => Complex::one(),
        _ => Complex::zero(),
    });
    Ok(CompanionMatrix { matrix, source: p.clone() })
}

fn require_degree<T: Real>(p: &Polynomial<T>, min: usize, what: &str) -> Result<()> {
    if p.degree() < min {
        Err(Error::Domain(format!("{what} needs degree ≥ {min}, got {}", p.degree())))
    } else {
        Ok(())
    }
}

/// Closed form of `‖C(p)‖`:
/// `[½(1 + Σ|a_r|² + √((1 + Σ|a_r|²)² − 4|a₀|²))]^{1/2}`.
pub fn exact_companion_norm<T: Real>(p: &Polynomial<T>) -> Result<T> {
    require_degree(p, 2, "companion norm")?;
    let one = T::one();
    let two = one + one;
    let s = one + p.sum_sq(0, p.degree() as isize - 1);
    let a0 = p.abs_coeff(0);
    // (1+S)² − 4|a₀|² factored; both factors are ≥ 0 since 1 + |a₀|² ≥ 2|a₀|.
    let disc = ((s - two * a0).max(T::zero()) * (s + two * a0)).sqrt();
    Ok(((s + disc) / two).sqrt())
}

/// `b_r = a_{n−1}a_r − a_{r−1}` for `r = 0 … n−1`, with `a_{−1} = 0`.
pub fn square_coefficients<T: Real>(p: &Polynomial<T>) -> Vec<Complex<T>> {
    let top = p.coeff(p.degree() as isize - 1);
    (0..p.degree() as isize).map(|r| top * p.coeff(r) - p.coeff(r - 1)).collect()
}

/// Upper bound on `‖C(p)²‖`: `(1 + Σ(|a_r|² + |b_r|²))^{1/2}`.
pub fn companion_square_norm_bound<T: Real>(p: &Polynomial<T>) -> Result<T> {
    require_degree(p, 2, "companion square bound")?;
    let b = square_coefficients(p);
    let sum = p.sum_sq(0, p.degree() as isize - 1) + b.iter().fold(T::zero(), |s, z| s + z.norm_sqr());
    Ok((T::one() + sum).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::spectral_norm;
    use approx::assert_abs_diff_eq;

    type P = Polynomial<f64>;

    fn desc(xs: &[f64]) -> P {
        let raw: Vec<_> = xs.iter().map(|&x| Complex::new(x, 0.0)).collect();
        P::from_coefficients(&raw, CoefficientOrder::Descending).unwrap()
    }

    fn re(xs: &[f64]) -> Vec<Complex<f64>> {
        xs.iter().map(|&x| Complex::new(x, 0.0)).collect()
    }

    #[test]
    fn monic_normalisation() {
        let p = desc(&[2.0, 0.0, 2.0]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeffs(), re(&[1.0, 0.0]).as_slice());
    }

    #[test]
    fn ascending_and_descending_agree() {
        let a = P::from_coefficients(&re(&[1.0, 1.0, 1.0, 1.0, 4.0, 1.0]), CoefficientOrder::Ascending).unwrap();
        let d = desc(&[1.0, 4.0, 1.0, 1.0, 1.0, 1.0]);
        assert_eq!(a, d);
        assert_eq!(d.degree(), 5);
        assert_eq!(d.coeff(4), Complex::new(4.0, 0.0));
        assert_eq!(d.coeff(5), Complex::new(1.0, 0.0));
        assert_eq!(d.coeff(-1), Complex::new(0.0, 0.0));
    }

    #[test]
    fn input_errors() {
        assert!(matches!(P::from_coefficients(&re(&[1.0]), CoefficientOrder::Descending), Err(Error::Input(_))));
        assert!(matches!(P::from_coefficients(&re(&[0.0, 1.0, 2.0]), CoefficientOrder::Descending), Err(Error::Input(_))));
        assert!(matches!(P::from_coefficients(&[], CoefficientOrder::Descending), Err(Error::Input(_))));
        assert!(matches!(P::from_coefficients(&re(&[1.0, f64::NAN]), CoefficientOrder::Descending), Err(Error::Input(_))));
    }

    #[test]
    fn horner_with_derivative() {
        let p = desc(&[1.0, -5.0, 6.0]);
        let (v, d) = p.eval_with_derivative(Complex::new(2.0, 0.0));
        assert_eq!(v, Complex::new(0.0, 0.0));
        assert_eq!(d, Complex::new(-1.0, 0.0));
        assert_eq!(p.eval(Complex::new(0.0, 1.0)), Complex::new(5.0, -5.0));
    }

    #[test]
    fn companion_of_power_is_lower_shift() {
        for n in 2..6 {
            let c = companion_matrix(&P::power(n).unwrap()).unwrap();
            assert_eq!(c.matrix, ComplexMatrix::lower_shift(n));
        }
    }

    #[test]
    fn companion_layout() {
        let c = companion_matrix(&desc(&[1.0, -5.0, 6.0])).unwrap();
        assert_eq!(c.matrix, ComplexMatrix::from_real_rows(&[&[5.0, -6.0], &[1.0, 0.0]]).unwrap());
        let c = companion_matrix(&desc(&[1.0, 4.0, 1.0, 1.0, 1.0, 1.0])).unwrap();
        assert_eq!(c.matrix.row(0), re(&[-4.0, -1.0, -1.0, -1.0, -1.0]).as_slice());
        assert!(matches!(companion_matrix(&desc(&[1.0, 3.0])), Err(Error::Domain(_))));
    }

    #[test]
    fn exact_norm_examples() {
        assert_abs_diff_eq!(exact_companion_norm(&P::power(5).unwrap()).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(exact_companion_norm(&P::power(2).unwrap()).unwrap(), 1.0, epsilon = 1e-15);
        let p = desc(&[1.0, 2.0, 1.0, 1.0, 1.0, 1.0]);
        let closed = (0.5 * (9.0 + 77f64.sqrt())).sqrt();
        assert_abs_diff_eq!(exact_companion_norm(&p).unwrap(), closed, epsilon = 1e-14);
        let numeric = spectral_norm(&companion_matrix(&p).unwrap().matrix).unwrap();
        assert_abs_diff_eq!(numeric, closed, epsilon = 1e-10);
        assert_abs_diff_eq!(closed, 2.981_188, epsilon = 1e-6);
    }

    #[test]
    fn square_bound_examples() {
        assert_eq!(companion_square_norm_bound(&P::power(4).unwrap()).unwrap(), 1.0);

        let p = desc(&[1.0, 2.0, 1.0, 1.0, 1.0, 1.0]);
        assert_eq!(square_coefficients(&p), re(&[2.0, 1.0, 1.0, 1.0, 3.0]));
        assert_abs_diff_eq!(companion_square_norm_bound(&p).unwrap(), 5.0, epsilon = 1e-14);

        let q = desc(&[1.0, 1.0, 1.0]);
        assert_eq!(square_coefficients(&q), re(&[1.0, 0.0]));
        assert_abs_diff_eq!(companion_square_norm_bound(&q).unwrap(), 2.0, epsilon = 1e-15);
        let c = companion_matrix(&q).unwrap().matrix;
        assert!(spectral_norm(&c.square().unwrap()).unwrap() <= 2.0 + 1e-9);
    }

    #[test]
    fn display() {
        assert_eq!(desc(&[1.0, -5.0, 6.0]).to_string(), "z^2 - 5z + 6");
        assert_eq!(desc(&[1.0, 0.0, 1.0, 0.0, 1.0, 2.0]).to_string(), "z^5 + z^3 + z + 2");
    }
}
