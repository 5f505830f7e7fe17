use num_traits::Zero;

use super::{elim, one, zero, RatMatrix, RatVector};
use crate::error::{HelmError, Result};

/// Moore-Penrose inverse through a full-rank factorization `M = F G`.
///
/// `F` holds the pivot columns of `M` and `G` the nonzero rows of its reduced
/// row echelon form, so `M+ = G' (G G')^-1 (F' F)^-1 F'`. Purely rational and
/// independent of any closed form.
pub fn pseudoinverse(m: &RatMatrix) -> RatMatrix {
    let (red, pivots) = elim::rref(m);
    let r = pivots.len();
    if r == 0 {
        return RatMatrix::zeros(m.cols(), m.rows());
    }
    let f = m.select_cols(&pivots);
    let g = red.submatrix(0, 0, r, m.cols());
    let ft = f.transpose();
    let gt = g.transpose();
    // Both Gram matrices are r x r and nonsingular by construction.
    let ggt_inv = elim::inverse(&(&g * &gt)).expect("G G' is nonsingular");
    let ftf_inv = elim::inverse(&(&ft * &f)).expect("F' F is nonsingular");
    &(&(&gt * &ggt_inv) * &ftf_inv) * &ft
}

/// True iff `X` satisfies all four Penrose conditions for `M` exactly:
/// `MXM = M`, `XMX = X`, `(MX)' = MX`, `(XM)' = XM`.
pub fn penrose_check(m: &RatMatrix, x: &RatMatrix) -> Result<bool> {
    if x.rows() != m.cols() || x.cols() != m.rows() {
        return Err(HelmError::ShapeMismatch(format!(
            "candidate is {}x{}, expected {}x{}",
            x.rows(),
            x.cols(),
            m.cols(),
            m.rows()
        )));
    }
    let mx = m * x;
    let xm = x * m;
    Ok(&mx * m == *m && &xm * x == *x && mx.is_symmetric() && xm.is_symmetric())
}

/// Basis of the kernel read off the reduced row echelon form, one vector per
/// free column.
pub fn null_space_basis(m: &RatMatrix) -> Vec<RatVector> {
    let (red, pivots) = elim::rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![zero(); n];
            v[f] = one();
            for (i, &p) in pivots.iter().enumerate() {
                let c = &red[(i, f)];
                if !c.is_zero() {
                    v[p] = -c;
                }
            }
            v
        })
        .collect()
}
