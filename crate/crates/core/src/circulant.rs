//! Circulant matrices `cir(a')`, the trailing-symmetry subspace of vectors
//! whose circulant is symmetric, circulant spectra by root-of-unity
//! evaluation, and the special matrices `S = cir(2, 1, 0, ..., 0, 1)` and the
//! tridiagonal `T_k(2, 1, 1)`.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{HelmError, Result};
use crate::exact::{determinant, int, one, to_f64, zero, RatMatrix, RatVector, Rational};

/// First row of a circulant matrix. Row `i` of the materialized matrix is
/// the first row cyclically shifted right by `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    first_row: RatVector,
}

impl CirculantSpec {
    pub fn new(first_row: RatVector) -> Result<Self> {
        if first_row.is_empty() {
            return Err(HelmError::EmptySpec);
        }
        Ok(Self { first_row })
    }

    /// `(1, 0, ..., 0)`, the spec of the identity.
    pub fn identity(len: usize) -> Result<Self> {
        let mut row = vec![zero(); len];
        if let Some(first) = row.first_mut() {
            *first = one();
        }
        Self::new(row)
    }

    pub fn first_row(&self) -> &[Rational] {
        &self.first_row
    }

    pub fn len(&self) -> usize {
        self.first_row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first_row.is_empty()
    }

    pub fn materialize(&self) -> RatMatrix {
        let k = self.len();
        RatMatrix::from_fn(k, k, |i, j| self.first_row[(j + k - i) % k].clone())
    }

    /// `a * x + b * y` for specs of equal length.
    pub fn linear_combination(&self, a: &Rational, other: &Self, b: &Rational) -> Result<Self> {
        if self.len() != other.len() {
            return Err(HelmError::LengthMismatch(self.len(), other.len()));
        }
        Self::new(
            self.first_row
                .iter()
                .zip(&other.first_row)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        )
    }
}

/// Materializes `cir(a')`. Errors with `EmptySpec` on an empty row.
pub fn materialize(first_row: &[Rational]) -> Result<RatMatrix> {
    Ok(CirculantSpec::new(first_row.to_vec())?.materialize())
}

/// Spec of the product `cir(a') cir(b')`.
///
/// The first row of the product is `a' cir(b')`, which is the cyclic
/// convolution `c_j = sum_i a_i b_{(j - i) mod k}`. Circulants of one order
/// commute, so the result is symmetric in `a` and `b`.
pub fn circulant_product(a: &CirculantSpec, b: &CirculantSpec) -> Result<CirculantSpec> {
    let k = a.len();
    if b.len() != k {
        return Err(HelmError::LengthMismatch(k, b.len()));
    }
    let mut c = vec![zero(); k];
    for (i, ai) in a.first_row.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, cj) in c.iter_mut().enumerate() {
            *cj += ai * &b.first_row[(j + k - i) % k];
        }
    }
    CirculantSpec::new(c)
}

/// Eigenvalues `f(w^j)`, `j = 0..k-1`, of `cir(a')` where `f` is the
/// polynomial with coefficients `a` and `w = exp(2 pi i / k)`.
///
/// Direct evaluation, O(k^2). Exponents are reduced mod `k` before the angle
/// is formed, which keeps the result within about 1e-12 of a dense
/// eigensolver at the orders used here.
pub fn circulant_eigenvalues(spec: &CirculantSpec) -> Vec<Complex64> {
    let k = spec.len();
    let coeffs: Vec<f64> = spec.first_row.iter().map(to_f64).collect();
    (0..k)
        .map(|j| {
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0.0)
                .map(|(p, c)| {
                    let angle = 2.0 * std::f64::consts::PI * ((j * p) % k) as f64 / k as f64;
                    Complex64::from_polar(*c, angle)
                })
                .sum()
        })
        .collect()
}

/// Vector symmetric in its trailing coordinates: `z_i = z_{N+2-i}` for
/// `i = 2..N` (1-based, `N` the length). Its circulant is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    coords: RatVector,
}

impl DeltaVector {
    pub fn new(coords: RatVector) -> Result<Self> {
        if !is_delta(&coords) {
            return Err(HelmError::NotDelta);
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_inner(self) -> RatVector {
        self.coords
    }

    pub fn to_spec(&self) -> CirculantSpec {
        CirculantSpec {
            first_row: self.coords.clone(),
        }
    }
}

/// True iff `z` has trailing symmetry. With `N = z.len()` this reads
/// `z[i] == z[N - i]` for 0-based `i = 1..N-1`.
pub fn is_delta(z: &[Rational]) -> bool {
    let n = z.len();
    (1..n).all(|i| z[i] == z[n - i])
}

/// Checks that `(z' G)'` again has trailing symmetry, where
/// `G = cir(g')` and `g = (alpha, beta, 0, ..., 0, beta)`.
pub fn delta_closure_check(z: &DeltaVector, g: &CirculantSpec) -> Result<bool> {
    let k = g.len();
    if z.coords.len() != k {
        return Err(HelmError::LengthMismatch(z.coords.len(), k));
    }
    if k < 2 {
        return Err(HelmError::BadPattern);
    }
    let row = g.first_row();
    let banded = row[1] == row[k - 1] && row[2..k - 1].iter().all(Zero::is_zero);
    if !banded {
        return Err(HelmError::BadPattern);
    }
    let zg = g.materialize().vec_mul(&z.coords);
    Ok(is_delta(&zg))
}

/// `s = (2, 1, 0, ..., 0, 1)` of length `n - 1`.
pub fn s_vector(n: usize) -> RatVector {
    let k = n - 1;
    let mut s = vec![zero(); k];
    s[0] = int(2);
    s[1] += one();
    s[k - 1] += one();
    s
}

/// `S = cir(s')`.
pub fn s_matrix(n: usize) -> RatMatrix {
    CirculantSpec {
        first_row: s_vector(n),
    }
    .materialize()
}

/// `u = (0, 1, 2, ..., 2, 1)` of length `n - 1`; `cir(u')` holds rim-to-rim
/// distances in the wheel.
pub fn u_vector(n: usize) -> RatVector {
    let k = n - 1;
    (0..k)
        .map(|i| match i {
            0 => zero(),
            _ if i == 1 || i == k - 1 => one(),
            _ => int(2),
        })
        .collect()
}

/// `v = (1, -1, 1, -1, ...)` of length `n - 1`.
pub fn alternating(n: usize) -> RatVector {
    (0..n - 1)
        .map(|i| if i % 2 == 0 { one() } else { int(-1) })
        .collect()
}

/// `T_k(2, 1, 1)`: tridiagonal with 2 on the diagonal and 1 off it.
pub fn tridiagonal_211(k: usize) -> RatMatrix {
    RatMatrix::from_fn(k, k, |i, j| match i.abs_diff(j) {
        0 => int(2),
        1 => one(),
        _ => zero(),
    })
}

/// `det T_k(2, 1, 1)`, which equals `k + 1`.
pub fn tridiagonal_211_det(k: i64) -> Result<Rational> {
    if k < 1 {
        return Err(HelmError::KTooSmall(k));
    }
    determinant(&tridiagonal_211(k as usize))
}

/// Analytic spectrum of `S` for helm order `n`: `4 cos^2(pi j / (n - 1))`.
pub fn s_spectrum_analytic(n: usize) -> Vec<f64> {
    let k = (n - 1) as f64;
    (0..n - 1)
        .map(|j| {
            let c = (std::f64::consts::PI * j as f64 / k).cos();
            4.0 * c * c
        })
        .collect()
}
