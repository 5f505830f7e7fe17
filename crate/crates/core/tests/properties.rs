//! Property tests for the exact core and circulant layers.

mod common;

use helmlab::circulant::{
    circulant_eigenvalues, circulant_product, delta_closure_check, is_delta, CirculantSpec,
    DeltaVector,
};
use helmlab::exact::{
    determinant, inertia, inverse, penrose_check, pseudoinverse, rank, rat, RatMatrix, Rational,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(rational(), rows * cols)
        .prop_map(move |v| RatMatrix::from_vec(rows, cols, v).unwrap())
}

fn any_matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square(max: usize) -> impl Strategy<Value = RatMatrix> {
    (1usize..=max).prop_flat_map(|n| matrix(n, n))
}

/// Symmetric, often singular: `F G F'` with a thin `F`, or `M + M'`.
fn symmetric() -> impl Strategy<Value = RatMatrix> {
    (1usize..=6, 0usize..=6, any::<bool>()).prop_flat_map(|(n, r, thin)| {
        let r = r.min(n);
        (matrix(n, r), matrix(r, r), matrix(n, n)).prop_map(move |(f, g, m)| {
            if thin {
                &(&f * &(&g + &g.transpose())) * &f.transpose()
            } else {
                &m + &m.transpose()
            }
        })
    })
}

fn spec_pair() -> impl Strategy<Value = (CirculantSpec, CirculantSpec)> {
    (1usize..=8).prop_flat_map(|k| {
        (
            prop::collection::vec(rational(), k),
            prop::collection::vec(rational(), k),
        )
            .prop_map(|(a, b)| {
                (
                    CirculantSpec::new(a).unwrap(),
                    CirculantSpec::new(b).unwrap(),
                )
            })
    })
}

fn delta_vector() -> impl Strategy<Value = Vec<Rational>> {
    (1usize..=9).prop_flat_map(|k| {
        prop::collection::vec(rational(), k).prop_map(move |mut z| {
            for i in 1..k {
                if k - i < i {
                    z[i] = z[k - i].clone();
                }
            }
            z
        })
    })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 64,
        rng_seed: proptest::test_runner::RngSeed::Fixed(common::seed()),
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn pseudoinverse_satisfies_penrose(m in any_matrix()) {
        let x = pseudoinverse(&m);
        prop_assert_eq!((x.rows(), x.cols()), (m.cols(), m.rows()));
        prop_assert!(penrose_check(&m, &x).unwrap());
    }

    #[test]
    fn pseudoinverse_is_inverse_when_nonsingular(m in square(5)) {
        let det = determinant(&m).unwrap();
        prop_assume!(det != rat(0, 1));
        prop_assert_eq!(pseudoinverse(&m), inverse(&m).unwrap());
    }

    #[test]
    fn pseudoinverse_is_involution(m in symmetric()) {
        prop_assert_eq!(pseudoinverse(&pseudoinverse(&m)), m);
    }

    #[test]
    fn transpose_preserves_rank(m in any_matrix()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        prop_assert_eq!(rank(&pseudoinverse(&m)), rank(&m));
    }

    #[test]
    fn inertia_counts_rank(m in symmetric()) {
        let t = inertia(&m).unwrap();
        prop_assert_eq!(t.order(), m.rows());
        prop_assert_eq!(t.i_plus + t.i_minus, rank(&m));
        let neg = inertia(&-&m).unwrap();
        prop_assert_eq!((neg.i_plus, neg.i_minus, neg.i_zero), (t.i_minus, t.i_plus, t.i_zero));
    }

    #[test]
    fn congruence_preserves_inertia(m in symmetric(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_invertible(&mut rng, m.rows());
        let c = &(&p.transpose() * &m) * &p;
        prop_assert_eq!(inertia(&m).unwrap(), inertia(&c).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(n in 1usize..=4, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_matrix(&mut rng, n, n);
        let b = common::random_matrix(&mut rng, n, n);
        prop_assert_eq!(determinant(&(&a * &b)).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn circulant_product_matches_dense((a, b) in spec_pair()) {
        let dense = &a.materialize() * &b.materialize();
        prop_assert_eq!(circulant_product(&a, &b).unwrap().materialize(), dense);
    }

    #[test]
    fn circulants_commute((a, b) in spec_pair()) {
        prop_assert_eq!(circulant_product(&a, &b).unwrap(), circulant_product(&b, &a).unwrap());
    }

    #[test]
    fn materialize_is_linear((a, b) in spec_pair(), s in rational(), t in rational()) {
        let lhs = a.linear_combination(&s, &b, &t).unwrap().materialize();
        let rhs = &a.materialize().scale(&s) + &b.materialize().scale(&t);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_vectors_give_symmetric_circulants(z in delta_vector()) {
        prop_assert!(is_delta(&z));
        prop_assert!(CirculantSpec::new(z).unwrap().materialize().is_symmetric());
    }

    #[test]
    fn symmetric_circulant_has_delta_row((a, _) in spec_pair()) {
        let m = a.materialize();
        prop_assert_eq!(m.is_symmetric(), is_delta(a.first_row()));
    }

    #[test]
    fn delta_closure(z in delta_vector(), alpha in rational(), beta in rational()) {
        let k = z.len();
        prop_assume!(k >= 3);
        let mut g = vec![rat(0, 1); k];
        g[0] = alpha;
        g[1] = beta.clone();
        g[k - 1] = beta;
        let z = DeltaVector::new(z).unwrap();
        prop_assert!(delta_closure_check(&z, &CirculantSpec::new(g).unwrap()).unwrap());
    }

    #[test]
    fn eigenvalues_match_dense_solver((a, _) in spec_pair()) {
        let fast = circulant_eigenvalues(&a);
        let dense = common::dense_eigenvalues(&a.materialize());
        let scale = 1.0 + a.first_row().iter().map(|x| helmlab::exact::to_f64(x).abs()).sum::<f64>();
        prop_assert!(common::multiset_distance(&fast, &dense) < 1e-9 * scale);
    }
}
