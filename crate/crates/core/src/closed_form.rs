//! Closed-form objects attached to `D(H_n)`: the vector `w` and scalar
//! `alpha`, the even-order Laplacian-like matrix built from `z`, the
//! odd-order Laplacian-like matrix built from `x` and `y`, and the resulting
//! inverse and Moore-Penrose inverse `-1/2 L + alpha w w'`.
//!
//! Formulas are stated with 1-based positions; the only translation to
//! 0-based storage is in the vector builders below.

use num_traits::Zero;

use crate::circulant::{alternating, s_matrix, s_vector, CirculantSpec, DeltaVector};
use crate::error::{HelmError, Result};
use crate::exact::{
    int, inverse, penrose_check, pseudoinverse, rat, zero, RatMatrix, RatVector, Rational,
};
use crate::graphs::{check_n, helm_distance_block};

/// `w`, `alpha`, the alternating vector `v`, and (odd `n` only) the kernel
/// vector `z0 = (0, v', 0')'` of `D(H_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HelmVectors {
    pub n: usize,
    /// `(n - 1) / 2` for odd `n`.
    pub m: Option<usize>,
    pub w: RatVector,
    pub alpha: Rational,
    pub v: RatVector,
    pub z0: Option<RatVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCaseData {
    pub n: usize,
    pub m: usize,
    /// `alpha_k` for `k = 1..=m` (index 0 holds `alpha_1`).
    pub alpha_k: Vec<Rational>,
    pub x: DeltaVector,
    pub y: DeltaVector,
    pub a: RatMatrix,
    pub b: RatMatrix,
    pub l: RatMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCaseData {
    pub n: usize,
    /// `beta_k` for `k = 1..=n/2 - 1` (index 0 holds `beta_1`).
    pub beta_k: Vec<Rational>,
    pub z: DeltaVector,
    pub a: RatMatrix,
    pub curly_l: RatMatrix,
}

/// `alpha = 4 / (3(n - 1))`.
pub fn alpha_for(n: usize) -> Rational {
    rat(4, 3 * (n as i64 - 1))
}

/// `w = 1/4 (5 - n, -e', 2e')'`.
pub fn w_vector(n: usize) -> RatVector {
    let quarter = rat(1, 4);
    std::iter::once(int(5 - n as i64))
        .chain(std::iter::repeat_n(int(-1), n - 1))
        .chain(std::iter::repeat_n(int(2), n - 1))
        .map(|x| x * &quarter)
        .collect()
}

fn embed_middle(n: usize, v: &[Rational]) -> RatVector {
    let mut out = vec![zero(); 2 * n - 1];
    out[1..n].clone_from_slice(v);
    out
}

/// Builds `w` and `alpha` and checks `D(H_n) w = (1/alpha) e` exactly.
pub fn make_w_alpha(n: usize) -> Result<HelmVectors> {
    check_n(n)?;
    let w = w_vector(n);
    let alpha = alpha_for(n);
    let d = helm_distance_block(n)?;
    let target = vec![alpha.recip(); 2 * n - 1];
    if d.mul_vec(&w) != target {
        return Err(HelmError::IdentityViolated("D w = (1/alpha) e".into()));
    }
    let v = alternating(n);
    let odd = n % 2 == 1;
    let z0 = odd.then(|| embed_middle(n, &v));
    if let Some(z0) = &z0 {
        if !d.mul_vec(z0).iter().all(Zero::is_zero) {
            return Err(HelmError::IdentityViolated("D z0 = 0".into()));
        }
    }
    Ok(HelmVectors {
        n,
        m: odd.then_some((n - 1) / 2),
        w,
        alpha,
        v,
        z0,
    })
}

/// `alpha_k = (-1)^(k+1) [2m^2 - 6(m - k)^2 + 7]`.
pub fn odd_alpha_k(m: usize, k: usize) -> Rational {
    let (m, k) = (m as i64, k as i64);
    let magnitude = 2 * m * m - 6 * (m - k) * (m - k) + 7;
    int(if k % 2 == 1 { magnitude } else { -magnitude })
}

/// `x = 1/(6(n-1)) (n^2 + 4n - 12, alpha_1, ..., alpha_m, ..., alpha_1)'`.
pub fn odd_x(n: usize) -> RatVector {
    let m = (n - 1) / 2;
    let ni = n as i64;
    let scale = rat(1, 6 * (ni - 1));
    let head = int(ni * ni + 4 * ni - 12);
    let rising = (1..=m).map(|k| odd_alpha_k(m, k));
    let falling = (1..m).rev().map(|k| odd_alpha_k(m, k));
    std::iter::once(head)
        .chain(rising)
        .chain(falling)
        .map(|x| x * &scale)
        .collect()
}

/// `y = 1/(n-1) (2 - n, -1, 1, -1, ..., 1, -1)'`. The tail entry at 0-based
/// position `i >= 1` is `(-1)^i`.
pub fn odd_y(n: usize) -> RatVector {
    let scale = rat(1, n as i64 - 1);
    (0..n - 1)
        .map(|i| match i {
            0 => int(2 - n as i64),
            _ if i % 2 == 1 => int(-1),
            _ => int(1),
        })
        .map(|x| x * &scale)
        .collect()
}

/// `beta_k = (-1)^k [(n - 1) - 2k]`.
pub fn even_beta_k(n: usize, k: usize) -> Rational {
    let magnitude = (n as i64 - 1) - 2 * k as i64;
    int(if k.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    })
}

/// `z = 1/2 (n + 1, beta_1, ..., beta_{n/2-1}, beta_{n/2-1}, ..., beta_1)'`.
pub fn even_z(n: usize) -> RatVector {
    let top = n / 2 - 1;
    let half = rat(1, 2);
    std::iter::once(int(n as i64 + 1))
        .chain((1..=top).map(|k| even_beta_k(n, k)))
        .chain((1..=top).rev().map(|k| even_beta_k(n, k)))
        .map(|x| x * &half)
        .collect()
}

/// `[[(n-1)/2, -1/2 e', 0'], [-1/2 e, A, B], [0, B, I]]`.
fn laplacian_like(n: usize, a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    let k = n - 1;
    let corner = RatMatrix::from_fn(1, 1, |_, _| rat(n as i64 - 1, 2));
    let border_row = RatMatrix::ones(1, k).scale(&rat(-1, 2));
    let border_col = border_row.transpose();
    RatMatrix::from_blocks(&[
        &[&corner, &border_row, &RatMatrix::zeros(1, k)],
        &[&border_col, a, b],
        &[
            &RatMatrix::zeros(k, 1),
            &b.transpose(),
            &RatMatrix::identity(k),
        ],
    ])
}

fn check_odd(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(HelmError::NotOdd(n as i64));
    }
    if n < 5 {
        return Err(HelmError::NTooSmall(n as i64, 5));
    }
    Ok(())
}

fn check_even(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(HelmError::NotEven(n as i64));
    }
    check_n(n)
}

pub fn make_odd_case(n: usize) -> Result<OddCaseData> {
    check_odd(n)?;
    let m = (n - 1) / 2;
    let x = DeltaVector::new(odd_x(n))?;
    let y = DeltaVector::new(odd_y(n))?;
    let a = x.to_spec().materialize();
    let b = y.to_spec().materialize();
    let l = laplacian_like(n, &a, &b)?;
    Ok(OddCaseData {
        n,
        m,
        alpha_k: (1..=m).map(|k| odd_alpha_k(m, k)).collect(),
        x,
        y,
        a,
        b,
        l,
    })
}

pub fn make_even_case(n: usize) -> Result<EvenCaseData> {
    check_even(n)?;
    let z = DeltaVector::new(even_z(n))?;
    let a = z.to_spec().materialize();
    let neg_i = -&RatMatrix::identity(n - 1);
    let curly_l = laplacian_like(n, &a, &neg_i)?;
    Ok(EvenCaseData {
        n,
        beta_k: (1..n / 2).map(|k| even_beta_k(n, k)).collect(),
        z,
        a,
        curly_l,
    })
}

/// `-1/2 L + alpha w w'`.
pub fn decomposition_value(l: &RatMatrix, w: &[Rational], alpha: &Rational) -> RatMatrix {
    &l.scale(&rat(-1, 2)) + &RatMatrix::outer(w, w).scale(alpha)
}

/// `D(H_n)^-1` for even `n`, checked against exact elimination.
pub fn closed_form_inverse(n: usize) -> Result<RatMatrix> {
    check_even(n)?;
    let even = make_even_case(n)?;
    let value = decomposition_value(&even.curly_l, &w_vector(n), &alpha_for(n));
    let d = helm_distance_block(n)?;
    if value != inverse(&d)? {
        return Err(HelmError::IdentityViolated(format!(
            "closed-form inverse differs from elimination for n = {n}"
        )));
    }
    Ok(value)
}

/// Moore-Penrose inverse of `D(H_n)` for odd `n`, checked against the four
/// Penrose conditions and the full-rank-factorization pseudoinverse.
pub fn closed_form_mp_inverse(n: usize) -> Result<RatMatrix> {
    check_odd(n)?;
    let odd = make_odd_case(n)?;
    let value = decomposition_value(&odd.l, &w_vector(n), &alpha_for(n));
    let d = helm_distance_block(n)?;
    if !penrose_check(&d, &value)? {
        return Err(HelmError::IdentityViolated(format!(
            "Penrose conditions fail for n = {n}"
        )));
    }
    if value != pseudoinverse(&d) {
        return Err(HelmError::IdentityViolated(format!(
            "closed form differs from the factorization pseudoinverse for n = {n}"
        )));
    }
    Ok(value)
}

/// `x' S` for odd `n`, computed as a circulant product.
pub fn x_dot_s_row(n: usize) -> Result<RatVector> {
    check_odd(n)?;
    let x = CirculantSpec::new(odd_x(n))?;
    let s = CirculantSpec::new(s_vector(n))?;
    Ok(crate::circulant::circulant_product(&x, &s)?
        .first_row()
        .to_vec())
}

/// Closed pattern of `x' S`: `1/(n-1) (4n-6, n+1, -2, 2, ..., 2, -2, n+1)`.
pub fn x_dot_s_pattern(n: usize) -> RatVector {
    let ni = n as i64;
    let scale = rat(1, ni - 1);
    (0..n - 1)
        .map(|i| match i {
            0 => int(4 * ni - 6),
            _ if i == 1 || i == n - 2 => int(ni + 1),
            _ if i % 2 == 0 => int(-2),
            _ => int(2),
        })
        .map(|x| x * &scale)
        .collect()
}

/// `z' S` for even `n`.
pub fn z_dot_s_row(n: usize) -> Result<RatVector> {
    check_even(n)?;
    Ok(s_matrix(n).vec_mul(&even_z(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ones, scale_vec, sum as e_sum};

    fn scaled_ones(len: usize, c: &Rational) -> RatVector {
        scale_vec(&ones(len), c)
    }

    fn q(v: &[(i64, i64)]) -> RatVector {
        v.iter().map(|&(p, d)| rat(p, d)).collect()
    }

    #[test]
    fn w_and_alpha_for_seven() {
        let hv = make_w_alpha(7).unwrap();
        let mut expected = vec![rat(-2, 4)];
        expected.extend(std::iter::repeat_n(rat(-1, 4), 6));
        expected.extend(std::iter::repeat_n(rat(2, 4), 6));
        assert_eq!(hv.w, expected);
        assert_eq!(hv.alpha, rat(2, 9));
        assert_eq!(hv.m, Some(3));
        assert_eq!(make_w_alpha(5).unwrap().alpha, rat(1, 3));
        for n in 4..14 {
            assert_eq!(e_sum(&w_vector(n)), int(1));
        }
    }

    #[test]
    fn odd_vectors_for_five() {
        let odd = make_odd_case(5).unwrap();
        assert_eq!(odd.alpha_k, vec![int(9), int(-15)]);
        assert_eq!(
            odd.x.coords(),
            q(&[(33, 24), (9, 24), (-15, 24), (9, 24)]).as_slice()
        );
        assert_eq!(
            odd.y.coords(),
            q(&[(-3, 4), (-1, 4), (1, 4), (-1, 4)]).as_slice()
        );
        assert_eq!(e_sum(odd.x.coords()), rat(3, 2));
        assert_eq!(e_sum(odd.y.coords()), int(-1));
    }

    #[test]
    fn odd_row_sums() {
        for n in (5..=15).step_by(2) {
            assert_eq!(e_sum(&odd_x(n)), rat(3, 2), "n = {n}");
            let odd = make_odd_case(n).unwrap();
            assert_eq!(odd.a.row_sums(), scaled_ones(n - 1, &rat(3, 2)));
            assert_eq!(odd.b.row_sums(), scaled_ones(n - 1, &int(-1)));
            assert!(odd.l.is_symmetric());
        }
    }

    #[test]
    fn even_vectors_for_six() {
        let even = make_even_case(6).unwrap();
        assert_eq!(even.beta_k, vec![int(-3), int(1)]);
        assert_eq!(
            even.z.coords(),
            q(&[(7, 2), (-3, 2), (1, 2), (1, 2), (-3, 2)]).as_slice()
        );
        assert_eq!(e_sum(even.z.coords()), rat(3, 2));
        assert_eq!(
            z_dot_s_row(6).unwrap(),
            vec![int(4), int(1), int(0), int(0), int(1)]
        );
    }

    #[test]
    fn parity_errors() {
        assert_eq!(make_odd_case(6), Err(HelmError::NotOdd(6)));
        assert_eq!(make_odd_case(3), Err(HelmError::NTooSmall(3, 5)));
        assert_eq!(make_even_case(7), Err(HelmError::NotEven(7)));
        assert_eq!(make_even_case(2), Err(HelmError::NTooSmall(2, 4)));
        assert_eq!(closed_form_inverse(5), Err(HelmError::NotEven(5)));
        assert_eq!(closed_form_mp_inverse(8), Err(HelmError::NotOdd(8)));
        assert_eq!(x_dot_s_row(8), Err(HelmError::NotOdd(8)));
    }

    #[test]
    fn curly_l_rows_sum_to_zero() {
        for n in (4..=14).step_by(2) {
            let even = make_even_case(n).unwrap();
            assert!(even.curly_l.row_sums().iter().all(Zero::is_zero), "n = {n}");
            assert!(even.curly_l.is_symmetric());
        }
    }

    #[test]
    fn x_s_pattern_for_seven() {
        let expected = q(&[(22, 6), (8, 6), (-2, 6), (2, 6), (-2, 6), (8, 6)]);
        assert_eq!(x_dot_s_row(7).unwrap(), expected);
        assert_eq!(x_dot_s_pattern(7), expected);
    }

    #[test]
    fn small_inverses() {
        let inv = closed_form_inverse(4).unwrap();
        let d = helm_distance_block(4).unwrap();
        assert_eq!(&inv * &d, RatMatrix::identity(7));
        let mp = closed_form_mp_inverse(5).unwrap();
        assert_eq!(mp, pseudoinverse(&helm_distance_block(5).unwrap()));
    }
}
