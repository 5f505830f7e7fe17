use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{sign, RatMatrix};
use crate::error::{HelmError, Result};

/// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InertiaTriple {
    pub i_plus: usize,
    pub i_minus: usize,
    pub i_zero: usize,
}

impl InertiaTriple {
    pub fn new(i_plus: usize, i_minus: usize, i_zero: usize) -> Self {
        Self {
            i_plus,
            i_minus,
            i_zero,
        }
    }

    pub fn order(&self) -> usize {
        self.i_plus + self.i_minus + self.i_zero
    }

    pub fn rank(&self) -> usize {
        self.i_plus + self.i_minus
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.i_plus, self.i_minus, self.i_zero]
    }
}

impl std::fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.i_plus, self.i_minus, self.i_zero)
    }
}

/// Exact inertia by symmetric congruence reduction.
///
/// A nonzero diagonal entry is eliminated as a 1x1 pivot. When the remaining
/// block has a zero diagonal but a nonzero off-diagonal entry `b`, the 2x2
/// pivot `[[0, b], [b, 0]]` contributes one positive and one negative
/// eigenvalue. Inertia is additive over the pivot and its Schur complement.
pub fn inertia(m: &RatMatrix) -> Result<InertiaTriple> {
    if !m.is_symmetric() {
        return Err(HelmError::NotSymmetric);
    }
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..a.rows()).collect();
    let mut out = InertiaTriple::new(0, 0, 0);

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&k| !a[(k, k)].is_zero()) {
            let k = active.swap_remove(pos);
            let d = a[(k, k)].clone();
            if sign(&d) > 0 {
                out.i_plus += 1;
            } else {
                out.i_minus += 1;
            }
            for &i in &active {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &d;
                for &j in &active {
                    let v = &a[(i, j)] - &f * &a[(k, j)];
                    a[(i, j)] = v;
                }
            }
            continue;
        }

        let pair = active.iter().enumerate().find_map(|(p, &k)| {
            active[p + 1..]
                .iter()
                .find(|&&l| !a[(k, l)].is_zero())
                .map(|&l| (k, l))
        });
        let Some((k, l)) = pair else {
            out.i_zero += active.len();
            break;
        };
        active.retain(|&i| i != k && i != l);
        out.i_plus += 1;
        out.i_minus += 1;
        // Schur complement of [[0, b], [b, 0]]:
        // a_ij -= (a_ik a_lj + a_il a_kj) / b.
        let b = a[(k, l)].clone();
        let updates: Vec<_> = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .map(|(i, j)| {
                let delta = (&a[(i, k)] * &a[(l, j)] + &a[(i, l)] * &a[(k, j)]) / &b;
                (i, j, delta)
            })
            .collect();
        for (i, j, delta) in updates {
            let v = &a[(i, j)] - delta;
            a[(i, j)] = v;
        }
    }
    Ok(out)
}
