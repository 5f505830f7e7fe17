#![allow(dead_code)]

use helmlab::exact::{determinant, rat, RatMatrix, Rational};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed for the random suites; override with `HELMLAB_SEED`.
pub fn seed() -> u64 {
    std::env::var("HELMLAB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_4e1f)
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed())
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

/// Random symmetric matrix of order `n`; about half of them are built as
/// `F G F'` with a thin `F` so that rank deficiency is common.
pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> RatMatrix {
    if rng.gen_bool(0.5) && n > 1 {
        let r = rng.gen_range(0..n);
        let f = random_matrix(rng, n, r);
        let g = random_matrix(rng, r, r);
        let g = &g + &g.transpose();
        &(&f * &g) * &f.transpose()
    } else {
        let m = random_matrix(rng, n, n);
        &m + &m.transpose()
    }
}

pub fn random_invertible(rng: &mut impl Rng, n: usize) -> RatMatrix {
    loop {
        let p = random_matrix(rng, n, n);
        if !determinant(&p).unwrap().eq(&rat(0, 1)) {
            return p;
        }
    }
}

pub fn random_vector(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small_rational(rng)).collect()
}

/// Random trailing-symmetric vector of length `len`.
pub fn random_delta(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    let mut z = random_vector(rng, len);
    for i in 1..len {
        let j = len - i;
        if j < i {
            z[i] = z[j].clone();
        }
    }
    z
}

/// Eigenvalues of a dense real matrix through nalgebra's Schur form.
pub fn dense_eigenvalues(m: &RatMatrix) -> Vec<Complex64> {
    let rows = m.to_f64_rows();
    let n = rows.len();
    let dm = nalgebra::DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    dm.complex_eigenvalues()
        .iter()
        .map(|z| Complex64::new(z.re, z.im))
        .collect()
}

/// Largest distance in a greedy nearest-neighbour matching of two multisets.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (k, d) = b
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, y)| (k, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .expect("same length");
        used[k] = true;
        worst = worst.max(d);
    }
    worst
}
