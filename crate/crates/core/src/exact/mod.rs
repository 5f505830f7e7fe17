//! Exact rational scalars, dense rational matrices and the generic
//! linear-algebra oracles (rank, determinant, inverse, pseudoinverse,
//! inertia) that every closed-form result is checked against.

mod elim;
mod inertia;
mod matrix;
mod pinv;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use elim::{determinant, inverse, rank, rref, solve};
pub use inertia::{inertia, InertiaTriple};
pub use matrix::RatMatrix;
pub use pinv::{null_space_basis, penrose_check, pseudoinverse};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Column vector of rationals.
pub type RatVector = Vec<Rational>;

/// `p / q` as a reduced rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// The all-ones vector of length `len`.
pub fn ones(len: usize) -> RatVector {
    vec![one(); len]
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    a.iter().zip(b).fold(zero(), |acc, (x, y)| acc + x * y)
}

pub fn sum(v: &[Rational]) -> Rational {
    v.iter().fold(zero(), |acc, x| acc + x)
}

pub fn scale_vec(v: &[Rational], c: &Rational) -> RatVector {
    v.iter().map(|x| x * c).collect()
}

/// True if `a` is a rational multiple of `b` with a nonzero factor (both nonzero).
pub fn is_proportional(a: &[Rational], b: &[Rational]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(k) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if a[k].is_zero() {
        return false;
    }
    let c = &a[k] / &b[k];
    a.iter().zip(b).all(|(x, y)| *x == &c * y)
}

/// Lossy conversion used only for display and float spectra.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division when numerator or denominator overflow f64.
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub(crate) fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
