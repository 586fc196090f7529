use num_complex::Complex64 as C;
use polybound::{
    companion_matrix, companion_square_norm_bound, exact_companion_norm, find_roots, spectral_norm, Polynomial64 as P,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly() -> impl Strategy<Value = P> {
    prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 2..=10)
        .prop_map(|v| P::monic(v.into_iter().map(|(a, b)| C::new(a, b)).collect()).unwrap())
}

fn corpus(count: usize, seed: u64) -> Vec<P> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=10);
            let coeffs = (0..n).map(|_| C::new(rng.gen_range(-5.0..=5.0), rng.gen_range(-5.0..=5.0))).collect();
            P::monic(coeffs).unwrap()
        })
        .collect()
}

#[test]
fn exact_norm_matches_eigensolver_on_corpus() {
    for p in corpus(500, 7) {
        let cm = companion_matrix(&p).unwrap().matrix;
        let exact = exact_companion_norm(&p).unwrap();
        let numeric = spectral_norm(&cm).unwrap();
        assert!((exact - numeric).abs() < 1e-8, "{p}: {exact} vs {numeric}");
        let sq = spectral_norm(&cm.square().unwrap()).unwrap();
        assert!(sq <= companion_square_norm_bound(&p).unwrap() + 1e-9, "{p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn companion_eigenvalues_are_roots(p in poly()) {
        // (λ^{n−1}, …, λ, 1) is an eigenvector of C(p) exactly when p(λ) = 0.
        let cm = companion_matrix(&p).unwrap().matrix;
        let rs = find_roots(&p, 1e-12, 1000).unwrap();
        let n = p.degree();
        for &z in &rs.roots {
            let v: Vec<C> = (0..n).map(|k| z.powu((n - 1 - k) as u32)).collect();
            let scale = v.iter().map(|x| x.norm()).fold(1.0, f64::max);
            for i in 0..n {
                let cv: C = (0..n).map(|j| cm[(i, j)] * v[j]).sum();
                prop_assert!((cv - z * v[i]).norm() <= 1e-6 * scale * (1.0 + z.norm()), "{}", p);
            }
        }
    }

    #[test]
    fn square_bound_is_at_least_the_square_norm(p in poly()) {
        let cm = companion_matrix(&p).unwrap().matrix;
        let sq = spectral_norm(&cm.square().unwrap()).unwrap();
        prop_assert!(sq <= companion_square_norm_bound(&p).unwrap() + 1e-9);
        let norm = exact_companion_norm(&p).unwrap();
        prop_assert!(sq <= norm * norm * (1.0 + 1e-12) + 1e-9);
    }

    #[test]
    fn norm_lies_between_row_norm_and_carmichael_mason(p in poly()) {
        let norm = exact_companion_norm(&p).unwrap();
        prop_assert!(norm >= 1.0 - 1e-12);
        let s = p.sum_sq(0, p.degree() as isize - 1);
        prop_assert!(norm + 1e-12 >= s.sqrt());
        prop_assert!(norm <= (1.0 + s).sqrt() + 1e-9);
    }
}
