use num_traits::Zero;

use super::{one, zero, RatMatrix, RatVector, Rational};
use crate::error::{HelmError, Result};

/// Fraction-free (Bareiss) forward elimination.
///
/// Every update is `a[i][j] <- (p * a[i][j] - a[i][k] * a[r][j]) / p_prev`,
/// where the division is exact. Returns the rank, the number of row swaps
/// and the last pivot. For a nonsingular square input the last pivot equals
/// the determinant up to the swap sign.
fn bareiss(m: &RatMatrix) -> (usize, usize, Rational) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut prev = one();
    let mut r = 0;
    let mut swaps = 0;
    for k in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, k)].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            swaps += 1;
        }
        let pivot = a[(r, k)].clone();
        for i in r + 1..rows {
            let factor = a[(i, k)].clone();
            for j in k + 1..cols {
                let v = (&pivot * &a[(i, j)] - &factor * &a[(r, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, k)] = zero();
        }
        prev = pivot;
        r += 1;
    }
    (r, swaps, prev)
}

/// Rank by fraction-free Gaussian elimination.
pub fn rank(m: &RatMatrix) -> usize {
    bareiss(m).0
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(m: &RatMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(HelmError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() == 0 {
        return Ok(one());
    }
    let (r, swaps, last) = bareiss(m);
    if r < m.rows() {
        return Ok(zero());
    }
    Ok(if swaps % 2 == 0 { last } else { -last })
}

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for k in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, k)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, k)].recip();
        for j in k..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, k)].is_zero() {
                continue;
            }
            let factor = a[(i, k)].clone();
            for j in k..cols {
                let v = &a[(i, j)] - &factor * &a[(r, j)];
                a[(i, j)] = v;
            }
        }
        pivots.push(k);
        r += 1;
    }
    (a, pivots)
}

/// Exact inverse by Gauss-Jordan on `[M | I]`.
pub fn inverse(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(HelmError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let id = RatMatrix::identity(n);
    let aug = RatMatrix::from_blocks(&[&[m, &id]])?;
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(HelmError::Singular);
    }
    Ok(red.submatrix(0, n, n, n))
}

/// One exact solution of `M x = b` (free variables set to zero), or `None`
/// when the system is inconsistent.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Option<RatVector>> {
    if b.len() != m.rows() {
        return Err(HelmError::ShapeMismatch(format!(
            "rhs of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let aug = RatMatrix::from_blocks(&[&[m, &RatMatrix::column(b)]])?;
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red[(i, n)].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn rank_of_identity_and_all_ones() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&RatMatrix::ones(4, 4)), 1);
        assert_eq!(rank(&RatMatrix::zeros(3, 2)), 0);
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(determinant(&RatMatrix::identity(4)).unwrap(), int(1));
        let m = RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), int(-1));
        let m = RatMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), int(4));
        assert!(matches!(
            determinant(&RatMatrix::zeros(2, 3)),
            Err(HelmError::NonSquare { .. })
        ));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        // Cofactor expansion is an independent route for small orders.
        fn cofactor(m: &RatMatrix) -> Rational {
            let n = m.rows();
            if n == 1 {
                return m[(0, 0)].clone();
            }
            let mut acc = zero();
            for j in 0..n {
                let minor = RatMatrix::from_fn(n - 1, n - 1, |r, c| {
                    m[(r + 1, if c < j { c } else { c + 1 })].clone()
                });
                let term = &m[(0, j)] * cofactor(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let m = RatMatrix::from_fn(5, 5, |i, j| {
            rat(((i * 7 + j * 3) % 5) as i64 - 2, (j + 1) as i64)
        });
        assert_eq!(determinant(&m).unwrap(), cofactor(&m));
    }

    #[test]
    fn inverse_small_cases() {
        assert_eq!(
            inverse(&RatMatrix::identity(5)).unwrap(),
            RatMatrix::identity(5)
        );
        let two = RatMatrix::identity(3).scale(&int(2));
        assert_eq!(
            inverse(&two).unwrap(),
            RatMatrix::identity(3).scale(&rat(1, 2))
        );
        assert_eq!(inverse(&RatMatrix::ones(3, 3)), Err(HelmError::Singular));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(solve(&m, &[int(1), int(2)]).unwrap(), None);
        let x = solve(&m, &[int(3), int(3)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vec![int(3), int(3)]);
    }
}
