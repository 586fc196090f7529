use num_complex::Complex64 as C;
use polybound::{hermitian_eigenvalues, spectral_norm, ComplexMatrix64 as M};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = M> {
    prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), rows * cols)
        .prop_map(move |v| M::new(rows, cols, v.into_iter().map(|(r, i)| C::new(r, i)).collect()).unwrap())
}

fn square() -> impl Strategy<Value = M> {
    (1usize..=6).prop_flat_map(|n| matrix(n, n))
}

fn pair() -> impl Strategy<Value = (M, M)> {
    (1usize..=5).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

/// Power iteration on `T*T`; independent of the Jacobi route.
fn power_norm(t: &M) -> f64 {
    let g = t.adjoint().multiply(t).unwrap();
    let n = g.rows();
    let mut x: Vec<C> = (0..n).map(|i| C::new(1.0 + i as f64 * 0.37, 0.1 * i as f64)).collect();
    let mut lambda = 0.0;
    for _ in 0..3000 {
        let y: Vec<C> = (0..n).map(|i| (0..n).map(|j| g[(i, j)] * x[j]).sum()).collect();
        let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        lambda = norm;
        x = y.into_iter().map(|z| z / norm).collect();
    }
    lambda.sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn norm_lies_between_frobenius_bounds(t in square()) {
        let s = spectral_norm(&t).unwrap();
        let f = t.frobenius_norm();
        prop_assert!(s <= f * (1.0 + 1e-12) + 1e-12);
        prop_assert!(f <= s * (t.rows() as f64).sqrt() * (1.0 + 1e-12) + 1e-12);
    }

    #[test]
    fn norm_matches_power_iteration(t in square()) {
        let s = spectral_norm(&t).unwrap();
        // Power iteration approaches from below.
        let p = power_norm(&t);
        prop_assert!(p <= s * (1.0 + 1e-10) + 1e-10);
        prop_assert!(s - p <= 1e-3 * s.max(1.0), "jacobi {s} vs power {p}");
    }

    #[test]
    fn norm_of_adjoint_and_rectangular(r in 1usize..=5, c in 1usize..=5, seed in any::<u64>()) {
        let t = M::from_fn(r, c, |i, j| {
            let h = seed.wrapping_mul(31 + i as u64).wrapping_add(17 * j as u64 + 5) % 1000;
            C::new(h as f64 / 250.0 - 2.0, (h % 7) as f64 / 3.0)
        });
        let a = spectral_norm(&t).unwrap();
        let b = spectral_norm(&t.adjoint()).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a.max(1.0));
    }

    #[test]
    fn norm_is_submultiplicative((a, b) in pair()) {
        let ab = spectral_norm(&a.multiply(&b).unwrap()).unwrap();
        prop_assert!(ab <= spectral_norm(&a).unwrap() * spectral_norm(&b).unwrap() * (1.0 + 1e-10) + 1e-10);
    }

    #[test]
    fn adjoint_reverses_products((a, b) in pair()) {
        let lhs = a.multiply(&b).unwrap().adjoint();
        let rhs = b.adjoint().multiply(&a.adjoint()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() <= 1e-12);
        prop_assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn eigenvalues_preserve_trace_and_frobenius(t in square()) {
        let h = t.hermitian_part().unwrap();
        let s = hermitian_eigenvalues(&h).unwrap();
        let sum: f64 = s.eigenvalues.iter().sum();
        prop_assert!((sum - h.trace().re).abs() <= 1e-10 * h.frobenius_norm().max(1.0));
        let sq: f64 = s.eigenvalues.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assert!((sq - h.frobenius_norm()).abs() <= 1e-10 * h.frobenius_norm().max(1.0));
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn two_by_two_eigenvalues_match_closed_form(a in -5.0..5.0f64, d in -5.0..5.0f64, br in -5.0..5.0f64, bi in -5.0..5.0f64) {
        let h = M::from_rows(&[vec![C::new(a, 0.0), C::new(br, bi)], vec![C::new(br, -bi), C::new(d, 0.0)]]).unwrap();
        let s = hermitian_eigenvalues(&h).unwrap();
        let mid = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + br * br + bi * bi).sqrt();
        prop_assert!((s.min() - (mid - rad)).abs() <= 1e-12 * (1.0 + rad));
        prop_assert!((s.max() - (mid + rad)).abs() <= 1e-12 * (1.0 + rad));
    }

    #[test]
    fn hermitian_parts_recombine(t in square()) {
        let re = t.hermitian_part().unwrap();
        let im = t.skew_part().unwrap();
        let back = re.add(&im.scale(C::new(0.0, 1.0))).unwrap();
        prop_assert!(back.max_abs_diff(&t).unwrap() <= 1e-12);
        prop_assert!(re.is_hermitian(0.0) && im.is_hermitian(0.0));
    }
}

#[test]
fn rejects_non_hermitian_input() {
    let t = M::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
    assert!(hermitian_eigenvalues(&t).is_err());
}

#[test]
fn f32_norm_of_shift() {
    let l = polybound::ComplexMatrix32::lower_shift(4);
    assert!((spectral_norm(&l).unwrap() - 1.0).abs() < 1e-6);
}
