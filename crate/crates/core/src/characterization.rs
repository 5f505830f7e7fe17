//! Characterization of symmetric matrices whose Moore-Penrose inverse is a
//! Laplacian-like matrix plus a rank-one term, specialised to `D(H_n)`.
//!
//! `X_D = -1/2 L + alpha w w'` is the Moore-Penrose inverse of a symmetric
//! `D` with `e` in its range exactly when `D w = (1/alpha) e` and
//! `L D + 2I = 2 w e' + V~` for a symmetric `V~` with `D V~ = O` and
//! `V~ X_D = O`. For helm graphs the blocks of `L` are pinned down by six
//! matrix conditions on `A` and `B`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::closed_form::{decomposition_value, make_odd_case, w_vector};
use crate::error::{HelmError, Result};
use crate::exact::{
    inertia, int, inverse, ones, rank, rat, solve, sum, RatMatrix, RatVector, Rational,
};
use crate::graphs::helm_distance_block;

/// Candidate `-1/2 L + alpha w w'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub laplacian_like: RatMatrix,
    pub w: RatVector,
    pub alpha: Rational,
}

impl Decomposition {
    pub fn new(laplacian_like: RatMatrix, w: RatVector, alpha: Rational) -> Result<Self> {
        let dec = Self {
            laplacian_like,
            w,
            alpha,
        };
        dec.validate()?;
        Ok(dec)
    }

    /// `L` symmetric with zero row sums, `e'w = 1`, `alpha != 0`.
    pub fn validate(&self) -> Result<()> {
        let l = &self.laplacian_like;
        let invalid = |why: &str| Err(HelmError::DecompositionInvalid(why.into()));
        if !l.is_symmetric() {
            return invalid("L is not symmetric");
        }
        if l.rows() != self.w.len() {
            return invalid("w length differs from the order of L");
        }
        if !l.row_sums().iter().all(Zero::is_zero) {
            return invalid("L e != 0");
        }
        if sum(&self.w) != int(1) {
            return invalid("e'w != 1");
        }
        if self.alpha.is_zero() {
            return invalid("alpha = 0");
        }
        Ok(())
    }

    pub fn value(&self) -> RatMatrix {
        decomposition_value(&self.laplacian_like, &self.w, &self.alpha)
    }
}

/// Decomposition of `D(H_n)+` from the closed forms (odd `n`) or of
/// `D(H_n)^-1` (even `n`).
pub fn helm_decomposition(n: usize) -> Result<Decomposition> {
    let l = if n % 2 == 1 {
        make_odd_case(n)?.l
    } else {
        crate::closed_form::make_even_case(n)?.curly_l
    };
    Decomposition::new(l, w_vector(n), crate::closed_form::alpha_for(n))
}

/// Evaluates both sides of the equivalence for `(D, dec)`.
///
/// Returns `true` iff `D w = (1/alpha) e` and, with `X_D` the value of the
/// decomposition and `V~ = 2(I - X_D D)`: `V~` is symmetric,
/// `L D + 2I = 2 w e' + V~`, `D V~ = O` and `V~ X_D = O`. When it returns
/// `true`, `X_D` is the Moore-Penrose inverse of `D`.
pub fn check_equiv_formulation(d: &RatMatrix, dec: &Decomposition) -> Result<bool> {
    if !d.is_symmetric() {
        return Err(HelmError::NotSymmetric);
    }
    dec.validate()?;
    let order = d.rows();
    if dec.w.len() != order {
        return Err(HelmError::ShapeMismatch(format!(
            "decomposition of order {} for D of order {order}",
            dec.w.len()
        )));
    }
    let e = ones(order);
    if solve(d, &e)?.is_none() {
        return Err(HelmError::ENotInRange);
    }
    if d.mul_vec(&dec.w) != vec![dec.alpha.recip(); order] {
        return Ok(false);
    }
    let x = dec.value();
    let id = RatMatrix::identity(order);
    let v_tilde = (&id - &(&x * d)).scale(&int(2));
    if !v_tilde.is_symmetric() {
        return Ok(false);
    }
    let lhs = &(&dec.laplacian_like * d) + &id.scale(&int(2));
    let rhs = &RatMatrix::outer(&dec.w, &e).scale(&int(2)) + &v_tilde;
    Ok(lhs == rhs && (d * &v_tilde).is_zero() && (&v_tilde * &x).is_zero())
}

/// Recovers `alpha = e' X_D e` and `w = X_D e / alpha` from the value of the
/// decomposition alone and checks they reproduce `dec`.
pub fn check_uniqueness(d: &RatMatrix, dec: &Decomposition) -> Result<(Rational, RatVector)> {
    dec.validate()?;
    if !check_equiv_formulation(d, dec)? {
        return Err(HelmError::DecompositionInvalid(
            "decomposition is not the Moore-Penrose inverse of D".into(),
        ));
    }
    let x = dec.value();
    let xe = x.mul_vec(&ones(x.rows()));
    let alpha = sum(&xe);
    if alpha.is_zero() {
        return Err(HelmError::DecompositionInvalid("e' X e = 0".into()));
    }
    let w: RatVector = xe.iter().map(|v| v / &alpha).collect();
    if alpha != dec.alpha || w != dec.w {
        return Err(HelmError::DecompositionInvalid(
            "recovered (alpha, w) differ from the decomposition".into(),
        ));
    }
    Ok((alpha, w))
}

/// Outcome of conditions (i)-(vi) on the blocks `A`, `B` of `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionsReport {
    /// `A e = 3/2 e`
    pub ae: bool,
    /// `B e = -e`
    pub be: bool,
    /// `B S = -S`
    pub bs: bool,
    /// `(B + I) A = O`
    pub bi_a: bool,
    /// `(B + I) B = O`
    pub bi_b: bool,
    /// `(A + B) S + 2B = O`
    pub abs: bool,
}

impl ConditionsReport {
    pub fn as_array(&self) -> [bool; 6] {
        [self.ae, self.be, self.bs, self.bi_a, self.bi_b, self.abs]
    }

    pub fn all(&self) -> bool {
        self.as_array().iter().all(|&b| b)
    }
}

/// Evaluates conditions (i)-(vi) exactly. For even orders pass `B = -I`.
pub fn check_conditions_i_vi(
    a: &RatMatrix,
    b: &RatMatrix,
    s: &RatMatrix,
) -> Result<ConditionsReport> {
    let k = a.rows();
    for (name, m) in [("A", a), ("B", b), ("S", s)] {
        if m.rows() != k || m.cols() != k {
            return Err(HelmError::ShapeMismatch(format!(
                "{name} is {}x{}, expected {k}x{k}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let e = ones(k);
    let id = RatMatrix::identity(k);
    let b_plus_i = b + &id;
    Ok(ConditionsReport {
        ae: a.mul_vec(&e) == vec![rat(3, 2); k],
        be: b.mul_vec(&e) == vec![int(-1); k],
        bs: b * s == -s,
        bi_a: (&b_plus_i * a).is_zero(),
        bi_b: (&b_plus_i * b).is_zero(),
        abs: (&(&(a + b) * s) + &b.scale(&int(2))).is_zero(),
    })
}

/// `V~ = [[0, 0', 0'], [0, X, O], [0, O, O]]` with `X = 2(B + I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VTilde {
    pub matrix: RatMatrix,
}

/// `V~` from the middle block `B` of a Laplacian-like matrix of helm type.
/// Vanishes when `B = -I`.
pub fn v_tilde_from_block(b: &RatMatrix) -> Result<RatMatrix> {
    let k = b.rows();
    let x = (b + &RatMatrix::identity(k)).scale(&int(2));
    let zk = RatMatrix::zeros(k, k);
    RatMatrix::from_blocks(&[
        &[
            &RatMatrix::zeros(1, 1),
            &RatMatrix::zeros(1, k),
            &RatMatrix::zeros(1, k),
        ],
        &[&RatMatrix::zeros(k, 1), &x, &zk],
        &[&RatMatrix::zeros(k, 1), &zk, &zk],
    ])
}

/// `V~` for odd `n`, with `D V~ = O`, `V~ L = O` and `V~ w = 0` checked.
pub fn build_v_tilde(n: usize) -> Result<VTilde> {
    if n.is_multiple_of(2) {
        return Err(HelmError::NotOdd(n as i64));
    }
    let odd = make_odd_case(n)?;
    let matrix = v_tilde_from_block(&odd.b)?;
    let d = helm_distance_block(n)?;
    if !(&d * &matrix).is_zero() {
        return Err(HelmError::IdentityViolated("D V~ = O".into()));
    }
    if !(&matrix * &odd.l).is_zero() {
        return Err(HelmError::IdentityViolated("V~ L = O".into()));
    }
    if !matrix.mul_vec(&w_vector(n)).iter().all(Zero::is_zero) {
        return Err(HelmError::IdentityViolated("V~ w = 0".into()));
    }
    Ok(VTilde { matrix })
}

fn no_negative(m: &RatMatrix) -> Result<bool> {
    Ok(inertia(m)?.i_minus == 0)
}

/// Positive semidefiniteness of `L` by exact inertia, together with the
/// Schur-complement chain: the complement of the leading scalar equals
/// `[[A - J/(2(n-1)), B], [B, I]]`, whose complement of the `I` block equals
/// `A + B - J/(2(n-1))`. Returns `true` only if the chain matches and every
/// matrix in it has no negative eigenvalue.
pub fn schur_psd_check(l: &RatMatrix, n: usize) -> Result<bool> {
    let order = 2 * n - 1;
    if l.rows() != order || l.cols() != order {
        return Err(HelmError::ShapeMismatch(format!(
            "L is {}x{}, expected {order}x{order}",
            l.rows(),
            l.cols()
        )));
    }
    if !no_negative(l)? {
        return Ok(false);
    }
    let k = n - 1;
    let lead = l[(0, 0)].clone();
    if !lead.is_positive() {
        return Ok(false);
    }
    let border = l.submatrix(0, 1, 1, order - 1);
    let trailing = l.submatrix(1, 1, order - 1, order - 1);
    let first = &trailing - &(&border.transpose() * &border).scale(&lead.recip());

    let a = l.submatrix(1, 1, k, k);
    let b = l.submatrix(1, n, k, k);
    let j_shift = RatMatrix::ones(k, k).scale(&rat(1, 2 * (n as i64 - 1)));
    let a_shift = &a - &j_shift;
    let expected_first =
        RatMatrix::from_blocks(&[&[&a_shift, &b], &[&b.transpose(), &RatMatrix::identity(k)]])?;
    if first != expected_first || !no_negative(&first)? {
        return Ok(false);
    }

    let m1 = first.submatrix(0, 0, k, k);
    let m2 = first.submatrix(0, k, k, k);
    let m3_inv = inverse(&first.submatrix(k, k, k, k))?;
    let second = &m1 - &(&(&m2 * &m3_inv) * &m2.transpose());
    let expected_second = &(&a + &b) - &j_shift;
    Ok(second == expected_second && no_negative(&second)?)
}

/// `rank(L) = 2n - 3` for odd `n`, with the mechanism checked: `L z = w` is
/// inconsistent and `rank(-1/2 L + alpha w w') = rank(L) + 1`.
pub fn rank_l_check(n: usize) -> Result<usize> {
    if n.is_multiple_of(2) {
        return Err(HelmError::NotOdd(n as i64));
    }
    let odd = make_odd_case(n)?;
    let w = w_vector(n);
    let r = rank(&odd.l);
    if solve(&odd.l, &w)?.is_some() {
        return Err(HelmError::IdentityViolated(
            "w lies in the range of L".into(),
        ));
    }
    let value = decomposition_value(&odd.l, &w, &crate::closed_form::alpha_for(n));
    if rank(&value) != r + 1 {
        return Err(HelmError::IdentityViolated(
            "rank(-1/2 L + alpha w w') != rank(L) + 1".into(),
        ));
    }
    if r != 2 * n - 3 {
        return Err(HelmError::IdentityViolated(format!(
            "rank(L) = {r}, expected {}",
            2 * n - 3
        )));
    }
    Ok(r)
}

/// `M = B - J/(2(n-1))` for odd `n`.
pub fn shifted_b(n: usize) -> Result<RatMatrix> {
    let odd = make_odd_case(n)?;
    let k = n - 1;
    Ok(&odd.b - &RatMatrix::ones(k, k).scale(&rat(1, 2 * (n as i64 - 1))))
}
