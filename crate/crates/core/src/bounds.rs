//! Radii of origin-centred disks that contain every zero of a monic polynomial.
//!
//! Nine classical radii are provided (`A`, `AK`, `BBP`, `C`, `CM`, `FK`,
//! `K1`, `K2`, `M`). There are also eight radii `R1`–`R8` that bound the numerical
//! radius of the companion matrix. Those come from splitting `C(p)` as
//!
//! ```text
//! C(p) = [ A  B ]   A = (−a_{n−1}),  B = (−a_{n−2} … −a₀),
//!        [ C  D ]   C = e₁,          D = L_{n−1},
//! ```
//!
//! with `w(A) = |a_{n−1}|`, `‖B‖² = Σ_{r≤n−2}|a_r|²`, `‖C‖ = 1` and
//! `w(D) = cos(π/n)`. `R6`–`R8` use the exact `‖C(p)‖` and the bound on
//! `‖C(p)²‖` from [`crate::companion`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use crate::companion::{companion_matrix, companion_square_norm_bound, exact_companion_norm, Polynomial};
use crate::error::{Error, Result};
use crate::radius::numerical_radius;
use crate::roots::{find_roots, DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL};
use crate::scalar::Real;

/// Identifier of a zero-inclusion radius. Declaration order is the canonical
/// tie-breaking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    A,
    AK,
    BBP,
    C,
    CM,
    FK,
    K1,
    K2,
    M,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
}

impl BoundId {
    pub const ALL: [BoundId; 17] = [
        BoundId::A,
        BoundId::AK,
        BoundId::BBP,
        BoundId::C,
        BoundId::CM,
        BoundId::FK,
        BoundId::K1,
        BoundId::K2,
        BoundId::M,
        BoundId::R1,
        BoundId::R2,
        BoundId::R3,
        BoundId::R4,
        BoundId::R5,
        BoundId::R6,
        BoundId::R7,
        BoundId::R8,
    ];

    pub const CLASSICAL: [BoundId; 9] = [
        BoundId::A,
        BoundId::AK,
        BoundId::BBP,
        BoundId::C,
        BoundId::CM,
        BoundId::FK,
        BoundId::K1,
        BoundId::K2,
        BoundId::M,
    ];

    /// The radii derived from numerical radius inequalities for `C(p)`; each
    /// one is an upper bound on `w(C(p))`, not only on the root moduli.
    pub const COMPANION_RADIUS: [BoundId; 8] = [
        BoundId::R1,
        BoundId::R2,
        BoundId::R3,
        BoundId::R4,
        BoundId::R5,
        BoundId::R6,
        BoundId::R7,
        BoundId::R8,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BoundId::A => "A",
            BoundId::AK => "AK",
            BoundId::BBP => "BBP",
            BoundId::C => "C",
            BoundId::CM => "CM",
            BoundId::FK => "FK",
            BoundId::K1 => "K1",
            BoundId::K2 => "K2",
            BoundId::M => "M",
            BoundId::R1 => "R1",
            BoundId::R2 => "R2",
            BoundId::R3 => "R3",
            BoundId::R4 => "R4",
            BoundId::R5 => "R5",
            BoundId::R6 => "R6",
            BoundId::R7 => "R7",
            BoundId::R8 => "R8",
        }
    }

    /// Smallest degree the formula is defined for.
    pub fn min_degree(self) -> usize {
        match self {
            BoundId::K2 => 3,
            _ => 2,
        }
    }

    pub fn bounds_companion_radius(self) -> bool {
        Self::COMPANION_RADIUS.contains(&self)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().trim_start_matches("R_").to_ascii_uppercase();
        BoundId::ALL
            .into_iter()
            .find(|id| id.label() == key)
            .ok_or_else(|| Error::Input(format!("unknown bound id {s:?}")))
    }
}

/// Reading of the fourth-root bracket in the `BBP` radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbpGrouping {
    /// `(1+α)² + 4α + 4·√α·(1+α)`, the form the underlying inequality chain produces.
    SqrtTimesSum,
    /// `(1+α)² + 4α + 4·√(α(1+α))`.
    SqrtOfProduct,
}

/// Quantities shared by several formulas.
struct Terms<T> {
    n: usize,
    top: T,
    next: T,
    /// `Σ_{r=0}^{n−1} |a_r|²`
    all_sq: T,
    /// `Σ_{r=0}^{n−2} |a_r|² = ‖B‖²`
    tail_sq: T,
    /// `cos(π/n) = w(L_{n−1})`
    cos_n: T,
    /// `cos(π/(n+1)) = w(L_n)`
    cos_n1: T,
}

impl<T: Real> Terms<T> {
    fn new(p: &Polynomial<T>) -> Self {
        let n = p.degree();
        let ni = n as isize;
        Terms {
            n,
            top: p.abs_coeff(ni - 1),
            next: p.abs_coeff(ni - 2),
            all_sq: p.sum_sq(0, ni - 1),
            tail_sq: p.sum_sq(0, ni - 2),
            cos_n: (T::PI() / T::from_usize(n)).cos(),
            cos_n1: (T::PI() / T::from_usize(n + 1)).cos(),
        }
    }
}

#[inline]
fn c<T: Real>(x: f64) -> T {
    T::lit(x)
}

/// `½(x + y + √((x − y)² + s))`, the shape shared by the block-matrix bounds.
fn block_form<T: Real>(x: T, y: T, s: T) -> T {
    c::<T>(0.5) * (x + y + ((x - y) * (x - y) + s).sqrt())
}

/// Evaluates one radius for `p`.
pub fn compute_bound<T: Real>(id: BoundId, p: &Polynomial<T>) -> Result<T> {
    if p.degree() < id.min_degree() {
        return Err(Error::Domain(format!(
            "bound {id} needs degree ≥ {}, got {}",
            id.min_degree(),
            p.degree()
        )));
    }
    let t = Terms::new(p);
    let one = T::one();
    let half = c::<T>(0.5);
    let quarter = c::<T>(0.25);
    let value = match id {
        BoundId::A => {
            let s = one + t.tail_sq.sqrt();
            block_form(t.top, t.cos_n, s * s)
        }
        BoundId::AK => {
            let alpha = t.all_sq.sqrt();
            let u = t.top + alpha;
            (quarter * u * u + alpha + t.cos_n1 * t.cos_n1).sqrt()
        }
        BoundId::BBP => bbp_bound(p, BbpGrouping::SqrtTimesSum)?,
        BoundId::C => one + p.max_abs_coeff(),
        BoundId::CM => (one + t.all_sq).sqrt(),
        BoundId::FK => t.cos_n1 + half * (t.all_sq.sqrt() + t.top),
        BoundId::K1 => block_form(t.top, one, c::<T>(4.0) * t.tail_sq.sqrt()),
        BoundId::K2 => {
            let u = t.next + one;
            block_form(t.top, t.cos_n, u * u + p.sum_sq(0, t.n as isize - 3))
        }
        BoundId::M => {
            let sum = p.coeffs().iter().fold(T::zero(), |s, a| s + a.norm());
            one.max(sum)
        }
        BoundId::R1 => {
            // ‖B‖² + ‖C‖² + 2w(CB), with w(CB) = ½(|a_{n−2}| + ‖B‖).
            let alpha = t.next + t.tail_sq.sqrt();
            block_form(t.top, t.cos_n, t.tail_sq + one + alpha)
        }
        BoundId::R2 => {
            let beta1 = t.tail_sq + one;
            let delta = t.next + t.tail_sq.sqrt();
            let m = (beta1 * beta1 + c::<T>(4.0) * t.next * t.next).max(beta1 * beta1 + delta * delta);
            let alpha = (m / c::<T>(8.0)).sqrt().sqrt();
            block_form(t.top, t.cos_n, c::<T>(4.0) * alpha * alpha)
        }
        BoundId::R3 => {
            let alpha = t.tail_sq.sqrt();
            (t.top * t.top + half * alpha * (t.top + half * alpha)).sqrt()
                + (t.cos_n * t.cos_n + half * (t.cos_n + half)).sqrt()
        }
        BoundId::R4 => {
            // ‖A*B‖ = |a_{n−1}|·‖B‖ and D*C = L_{n−1}ᵀe₁ = 0.
            let alpha = t.top * t.tail_sq.sqrt();
            (c::<T>(2.0) * t.top * t.top + half * (alpha + t.tail_sq)).sqrt()
                + (c::<T>(2.0) * t.cos_n * t.cos_n + half).sqrt()
        }
        BoundId::R5 => {
            // ½[w(A) + w(D) + √(w²(A) + ‖B‖²) + √(w²(D) + ‖C‖²)]
            half * (t.top + t.cos_n + (t.top * t.top + t.tail_sq).sqrt() + (t.cos_n * t.cos_n + one).sqrt())
        }
        BoundId::R6 | BoundId::R7 | BoundId::R8 => {
            let alpha = companion_square_norm_bound(p)?;
            let beta = exact_companion_norm(p)?;
            let mixed = beta * alpha.sqrt();
            let sq = match id {
                BoundId::R6 => quarter * mixed + quarter * alpha + half * beta * beta,
                BoundId::R7 => half * mixed + quarter * alpha + quarter * beta * beta,
                _ => c::<T>(0.75) * alpha + quarter * beta * beta,
            };
            sq.sqrt()
        }
    };
    Ok(value)
}

/// Coefficients `α₀ … α_n` of `p(w + s)` for the shift `s = −a_{n−1}/n`,
/// which removes the `w^{n−1}` term:
/// `α_r = Σ_{k=r}^{n} C(k, r)·s^{k−r}·a_k` with `a_n = 1`.
pub fn shifted_coefficients<T: Real>(p: &Polynomial<T>) -> Vec<Complex<T>> {
    let n = p.degree();
    let shift = -p.coeff(n as isize - 1) / T::from_usize(n);
    // Pascal rows, built by the additive recurrence.
    let mut binom = vec![vec![T::one()]];
    for k in 1..=n {
        let prev = &binom[k - 1];
        let row = (0..=k)
            .map(|r| {
                let left = if r > 0 { prev[r - 1] } else { T::zero() };
                let right = if r < k { prev[r] } else { T::zero() };
                left + right
            })
            .collect();
        binom.push(row);
    }
    (0..=n)
        .map(|r| {
            let mut acc = Complex::zero();
            let mut power = Complex::new(T::one(), T::zero());
            for k in r..=n {
                acc = acc + p.coeff(k as isize) * power.scale(binom[k][r]);
                power = power * shift;
            }
            acc
        })
        .collect()
}

/// The `BBP` radius under either reading of its fourth-root bracket.
pub fn bbp_bound<T: Real>(p: &Polynomial<T>, grouping: BbpGrouping) -> Result<T> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::Domain(format!("bound BBP needs degree ≥ 2, got {n}")));
    }
    let alphas = shifted_coefficients(p);
    let alpha = alphas[..=n - 2].iter().fold(T::zero(), |s, z| s + z.norm_sqr());
    let one = T::one();
    let four = c::<T>(4.0);
    let cross = match grouping {
        BbpGrouping::SqrtTimesSum => four * alpha.sqrt() * (one + alpha),
        BbpGrouping::SqrtOfProduct => four * (alpha * (one + alpha)).sqrt(),
    };
    let bracket = (one + alpha) * (one + alpha) + four * alpha + cross;
    let shift = p.abs_coeff(n as isize - 1) / T::from_usize(n);
    let cos_n = (T::PI() / T::from_usize(n)).cos();
    Ok(shift + cos_n + c::<T>(0.5) * bracket.sqrt().sqrt())
}

/// `w(C(p))`, which every root modulus is bounded by.
pub fn numerical_radius_of_companion<T: Real>(p: &Polynomial<T>, tol: T) -> Result<T> {
    let cm = companion_matrix(p)?;
    Ok(numerical_radius(&cm.matrix, tol)?.value)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundEntry<T> {
    pub id: BoundId,
    pub value: T,
}

/// All radii for one polynomial, with the smallest singled out.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub polynomial: Polynomial<T>,
    /// Canonical order.
    pub entries: Vec<BoundEntry<T>>,
    /// Radii whose preconditions `polynomial` does not meet, with the reason.
    pub skipped: Vec<(BoundId, String)>,
    pub best: BoundId,
    /// Largest root modulus from the Aberth–Ehrlich oracle, when requested.
    pub actual_max_modulus: Option<T>,
    /// Whether that oracle converged.
    pub roots_converged: Option<bool>,
}

impl<T: Real> BoundReport<T> {
    pub fn value(&self, id: BoundId) -> Option<T> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.value)
    }

    pub fn best_value(&self) -> T {
        self.value(self.best).expect("best is always an entry")
    }

    /// Smallest radius among `ids`; ties go to the canonical order.
    pub fn best_among(&self, ids: &[BoundId]) -> Option<BoundEntry<T>> {
        select_best(self.entries.iter().copied().filter(|e| ids.contains(&e.id)))
    }

    /// `value / actual max modulus`; `None` without roots or when the roots are all zero.
    pub fn tightness(&self, id: BoundId) -> Option<T> {
        let actual = self.actual_max_modulus?;
        if actual.is_zero() {
            return None;
        }
        Some(self.value(id)? / actual)
    }

    /// Entries that fall below the actual max modulus by more than `slack`.
    pub fn unsound_entries(&self, slack: T) -> Vec<BoundEntry<T>> {
        match self.actual_max_modulus {
            Some(actual) => self.entries.iter().copied().filter(|e| e.value < actual - slack).collect(),
            None => Vec::new(),
        }
    }
}

fn select_best<T: Real>(entries: impl Iterator<Item = BoundEntry<T>>) -> Option<BoundEntry<T>> {
    entries.fold(None, |best: Option<BoundEntry<T>>, e| match best {
        Some(b) if b.value < e.value || (b.value == e.value && b.id < e.id) => Some(b),
        _ => Some(e),
    })
}

/// Evaluates every radius whose degree requirement `p` meets.
pub fn compute_all<T: Real>(p: &Polynomial<T>, with_roots: bool) -> Result<BoundReport<T>> {
    if p.degree() < 2 {
        return Err(Error::Domain(format!("bound report needs degree ≥ 2, got {}", p.degree())));
    }
    let mut entries = Vec::with_capacity(BoundId::ALL.len());
    let mut skipped = Vec::new();
    for id in BoundId::ALL {
        match compute_bound(id, p) {
            Ok(value) => entries.push(BoundEntry { id, value }),
            Err(e) => skipped.push((id, e.to_string())),
        }
    }
    let best = select_best(entries.iter().copied()).expect("degree ≥ 2 admits every bound but K2").id;
    let (actual_max_modulus, roots_converged) = if with_roots {
        let rs = find_roots(p, T::lit(DEFAULT_ROOT_TOL), DEFAULT_MAX_ITER)?;
        (Some(rs.max_modulus()), Some(rs.converged))
    } else {
        (None, None)
    };
    Ok(BoundReport { polynomial: p.clone(), entries, skipped, best, actual_max_modulus, roots_converged })
}

/// Four decimals, ties to even on the exact binary value.
pub fn format_4dp(x: f64) -> String {
    let scaled = x * 1e4;
    let floor = scaled.floor();
    let frac = scaled - floor;
    // `x * 1e4` is exact only for some inputs; fall back to the formatter
    // unless this is a genuine binary tie.
    if frac == 0.5 && (floor + 0.5) / 1e4 == x {
        let even = if floor % 2.0 == 0.0 { floor } else { floor + 1.0 };
        return format!("{:.4}", even / 1e4);
    }
    format!("{x:.4}")
}
