//! Numerical radius estimation and zero-inclusion radii for complex monic
//! polynomials.
//!
//! The numerical radius `w(T) = sup{|⟨Tx, x⟩| : ‖x‖ = 1}` of the companion
//! matrix bounds every root modulus of its polynomial, and several operator
//! inequalities turn that into closed-form radii computed from the
//! coefficients alone. This crate provides:
//!
//! * [`linalg`]: dense complex matrices, Jacobi eigenvalues, spectral norm;
//! * [`radius`]: `w(T)` by a Hermitian-part sweep, Crawford numbers;
//! * [`companion`]: monic polynomials, companion matrices and their norms;
//! * [`bounds`]: seventeen zero-inclusion radii and comparison reports;
//! * [`roots`]: Aberth–Ehrlich root finding, used as ground truth;
//! * [`harness`]: a seeded random-matrix suite for the inequalities.
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix the scalar for the common cases.
//!
//! ```
//! use polybound::{compute_all, BoundId, Polynomial64};
//!
//! let p = Polynomial64::from_real_descending(&[1.0, 0.0, 1.0, 0.0, 1.0, 2.0]).unwrap();
//! let report = compute_all(&p, true).unwrap();
//! let actual = report.actual_max_modulus.unwrap();
//! assert!(report.entries.iter().all(|e| e.value >= actual - 1e-9));
//! assert_eq!(report.best, BoundId::K2);
//! ```

pub mod bounds;
pub mod companion;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod radius;
pub mod roots;
pub mod scalar;

pub use bounds::{
    bbp_bound, compute_all, compute_bound, format_4dp, numerical_radius_of_companion, BbpGrouping, BoundEntry,
    BoundId, BoundReport,
};
pub use companion::{
    companion_matrix, companion_square_norm_bound, exact_companion_norm, CoefficientOrder, CompanionMatrix, Polynomial,
};
pub use error::{Error, Result};
pub use harness::{run_suite, run_trial, InequalityId, TrialConfig, ViolationReport};
pub use linalg::{hermitian_eigenvalues, spectral_norm, ComplexMatrix, HermitianSpectrum};
pub use radius::{crawford_hermitian, numerical_radius, numerical_radius_with, RadiusEstimate, SweepConfig};
pub use roots::{find_roots, max_modulus, RootSet};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;
pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type Polynomial64 = Polynomial<f64>;
pub type Polynomial32 = Polynomial<f32>;
pub type RootSet64 = RootSet<f64>;
pub type RootSet32 = RootSet<f32>;
pub type BoundReport64 = BoundReport<f64>;
pub type BoundReport32 = BoundReport<f32>;
pub type RadiusEstimate64 = RadiusEstimate<f64>;
pub type RadiusEstimate32 = RadiusEstimate<f32>;
