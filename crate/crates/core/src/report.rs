//! Per-`n` verification suites and the reports the command-line front end
//! prints. Every check name is the name of the library operation it runs.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characterization::{
    build_v_tilde, check_conditions_i_vi, check_equiv_formulation, check_uniqueness,
    helm_decomposition, rank_l_check, schur_psd_check, shifted_b,
};
use crate::circulant::{
    alternating, circulant_eigenvalues, is_delta, s_matrix, s_spectrum_analytic, s_vector,
    tridiagonal_211_det, CirculantSpec,
};
use crate::closed_form::{
    alpha_for, closed_form_inverse, closed_form_mp_inverse, make_even_case, make_odd_case,
    make_w_alpha, odd_x, odd_y, w_vector, x_dot_s_pattern, x_dot_s_row, z_dot_s_row,
};
use crate::error::{HelmError, Result};
use crate::exact::{
    determinant, inertia, int, is_proportional, null_space_basis, ones, rank, rat, sum,
    InertiaTriple, RatMatrix, Rational,
};
use crate::graphs::{
    bfs_distance_matrix, build_helm, check_n, helm_distance_block, helm_distance_split,
};

/// Tolerance for float spectra against their analytic values.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Exact determinant as `p/q` (even `n` only).
    pub det: Option<String>,
    pub rank: usize,
    /// `[i_plus, i_minus, i_zero]`.
    pub inertia: [usize; 3],
    /// Rank of the odd-order Laplacian-like matrix.
    #[serde(rename = "rank_L")]
    pub rank_l: Option<usize>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub parity: Parity,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "H_{} ({}), order {}",
            self.n,
            self.parity,
            2 * self.n - 1
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  [{tag}] {:<width$}  {}", c.name, c.detail);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "  det = {}, rank = {}, inertia = ({}, {}, {}), rank_L = {}, {} ms",
            s.det.as_deref().unwrap_or("0"),
            s.rank,
            s.inertia[0],
            s.inertia[1],
            s.inertia[2],
            s.rank_l.map_or_else(|| "-".to_string(), |r| r.to_string()),
            s.elapsed_ms
        );
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "  {passed}/{} checks passed", self.checks.len());
        out
    }
}

/// `3(n - 1) 2^(n - 1)`.
pub fn expected_det_even(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(3 * (n as i64 - 1)) << (n - 1))
}

pub fn expected_rank(n: usize) -> usize {
    match Parity::of(n) {
        Parity::Even => 2 * n - 1,
        Parity::Odd => 2 * n - 2,
    }
}

pub fn expected_inertia(n: usize) -> InertiaTriple {
    match Parity::of(n) {
        Parity::Even => InertiaTriple::new(1, 2 * n - 2, 0),
        Parity::Odd => InertiaTriple::new(1, 2 * n - 3, 1),
    }
}

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let (pass, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail,
        });
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Runs the full verification suite for one `n`.
pub fn verify(n: usize) -> Result<VerificationReport> {
    check_n(n)?;
    let started = Stopwatch::start();
    let parity = Parity::of(n);
    let d = helm_distance_block(n)?;
    let mut suite = Suite { checks: Vec::new() };

    suite.run("build_helm", || {
        let g = build_helm(n)?;
        let degrees_ok = g.degree(g.hub()) == n - 1
            && (1..n).all(|i| g.degree(g.rim(i)) == 4 && g.degree(g.pendant(i)) == 1);
        let ok = g.vertex_count() == 2 * n - 1 && g.edge_count() == 3 * (n - 1) && degrees_ok;
        Ok((
            ok,
            format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()),
        ))
    });

    suite.run("helm_distance_block", || {
        let bfs = bfs_distance_matrix(&build_helm(n)?);
        let (da, db) = helm_distance_split(n)?;
        let ok = d == bfs && d == &da + &db;
        Ok((ok, "block form = BFS distances = D_a + D_b".into()))
    });

    let det = determinant(&d)?;
    suite.run("determinant", || {
        let expected = match parity {
            Parity::Even => expected_det_even(n),
            Parity::Odd => Rational::zero(),
        };
        Ok((det == expected, format!("det = {det}, expected {expected}")))
    });

    let r = rank(&d);
    suite.run("rank", || {
        let expected = expected_rank(n);
        Ok((r == expected, format!("rank = {r}, expected {expected}")))
    });

    let inert = inertia(&d)?;
    suite.run("inertia", || {
        let expected = expected_inertia(n);
        Ok((
            inert == expected,
            format!("inertia = {inert}, expected {expected}"),
        ))
    });

    suite.run("make_w_alpha", || {
        let hv = make_w_alpha(n)?;
        let ok = sum(&hv.w) == int(1) && hv.alpha == alpha_for(n);
        Ok((
            ok,
            format!("alpha = {}, D w = (1/alpha) e, e'w = 1", hv.alpha),
        ))
    });

    suite.run("tridiagonal_211_det", || {
        let det_t = tridiagonal_211_det(n as i64 - 2)?;
        Ok((
            det_t == int(n as i64 - 1),
            format!("det T_{}(2,1,1) = {det_t}", n - 2),
        ))
    });

    suite.run("circulant_eigenvalues", || {
        let table = eig_table(EigMatrix::S, n)?;
        let dev = table.max_deviation.unwrap_or(f64::INFINITY);
        Ok((
            dev < SPECTRUM_TOLERANCE,
            format!("S spectrum max deviation {dev:.3e}"),
        ))
    });

    let mut rank_l = None;
    match parity {
        Parity::Even => {
            suite.run("make_even_case", || {
                let even = make_even_case(n)?;
                let mut s_plus = s_vector(n);
                s_plus[0] += int(2);
                let ok = sum(even.z.coords()) == rat(3, 2)
                    && even.curly_l.is_symmetric()
                    && even.curly_l.row_sums().iter().all(Zero::is_zero)
                    && z_dot_s_row(n)? == s_plus;
                Ok((ok, format!("z'S = {}", fmt_vec(&z_dot_s_row(n)?))))
            });
            suite.run("closed_form_inverse", || {
                let inv = closed_form_inverse(n)?;
                let ok = &inv * &d == RatMatrix::identity(2 * n - 1);
                Ok((
                    ok,
                    "(-1/2 L + alpha w w') D = I, equals elimination inverse".into(),
                ))
            });
        }
        Parity::Odd => {
            suite.run("make_odd_case", || {
                let odd = make_odd_case(n)?;
                let ok = sum(odd.x.coords()) == rat(3, 2)
                    && sum(odd.y.coords()) == int(-1)
                    && odd.a.is_symmetric()
                    && odd.b.is_symmetric()
                    && odd.l.row_sums().iter().all(Zero::is_zero);
                Ok((ok, "e'x = 3/2, e'y = -1, A and B symmetric, L e = 0".into()))
            });
            suite.run("closed_form_mp_inverse", || {
                let mp = closed_form_mp_inverse(n)?;
                let ok = mp.mul_vec(&ones(2 * n - 1))
                    == w_vector(n)
                        .iter()
                        .map(|x| x * alpha_for(n))
                        .collect::<Vec<_>>();
                Ok((
                    ok,
                    "Penrose conditions hold, equals factorization pseudoinverse, D+ e = alpha w"
                        .into(),
                ))
            });
            suite.run("null_space_basis", || {
                let hv = make_w_alpha(n)?;
                let z0 = hv.z0.clone().expect("odd n has a kernel vector");
                let kd = null_space_basis(&d);
                let ks = null_space_basis(&s_matrix(n));
                let ok = kd.len() == 1
                    && is_proportional(&kd[0], &z0)
                    && ks.len() == 1
                    && is_proportional(&ks[0], &hv.v)
                    && closed_form_mp_inverse(n)?
                        .mul_vec(&z0)
                        .iter()
                        .all(Zero::is_zero);
                Ok((ok, "N(D) = span{z0}, N(S) = span{v}, D+ z0 = 0".into()))
            });
            suite.run("x_dot_s_row", || {
                let xs = x_dot_s_row(n)?;
                let y = odd_y(n);
                let combined: Vec<Rational> =
                    xs.iter().zip(&y).map(|(a, b)| a + b * int(2)).collect();
                let ok = xs == x_dot_s_pattern(n) && combined == s_vector(n) && is_delta(&xs);
                Ok((ok, format!("x'S = {}", fmt_vec(&xs))))
            });
            suite.run("b_spectrum_identities", || {
                let odd = make_odd_case(n)?;
                let k = n - 1;
                let id = RatMatrix::identity(k);
                let b = &odd.b;
                let v = alternating(n);
                let m = shifted_b(n)?;
                let cubic = &(&m * &(&m + &id)) * &(&m + &id.scale(&rat(3, 2)));
                let a_minus_i = &odd.a - &id;
                let ok = (b * b) == -b
                    && rank(b) == k - 1
                    && b.mul_vec(&v).iter().all(Zero::is_zero)
                    && cubic.is_zero()
                    && rank(&m) == k - 1
                    && m.mul_vec(&v).iter().all(Zero::is_zero)
                    && odd
                        .x
                        .coords()
                        .iter()
                        .zip(&v)
                        .fold(int(0), |acc, (a, b)| acc + a * b)
                        .is_zero()
                    && &a_minus_i * &s_matrix(n) == b.scale(&int(-2));
                Ok((
                    ok,
                    "B^2 = -B, rank B = n-2, M(M+I)(M+3/2 I) = O, (A-I)S = -2B".into(),
                ))
            });
            suite.run("build_v_tilde", || {
                build_v_tilde(n)?;
                Ok((true, "D V~ = O, V~ L = O, V~ w = 0".into()))
            });
            suite.run("schur_psd_check", || {
                let l = make_odd_case(n)?.l;
                let psd = schur_psd_check(&l, n)?;
                let inert_l = inertia(&l)?;
                let ok = psd && inert_l == InertiaTriple::new(2 * n - 3, 0, 2);
                Ok((ok, format!("L psd, inertia(L) = {inert_l}")))
            });
            suite.run("rank_l_check", || {
                let r = rank_l_check(n)?;
                rank_l = Some(r);
                Ok((r == 2 * n - 3, format!("rank(L) = {r}, w not in R(L)")))
            });
        }
    }

    suite.run("check_conditions_i_vi", || {
        let (a, b) = match parity {
            Parity::Even => (make_even_case(n)?.a, -&RatMatrix::identity(n - 1)),
            Parity::Odd => {
                let odd = make_odd_case(n)?;
                (odd.a, odd.b)
            }
        };
        let report = check_conditions_i_vi(&a, &b, &s_matrix(n))?;
        let flags: Vec<&str> = report
            .as_array()
            .iter()
            .map(|&f| if f { "ok" } else { "FAIL" })
            .collect();
        Ok((report.all(), format!("(i)-(vi): {}", flags.join(" "))))
    });

    suite.run("check_equiv_formulation", || {
        let dec = helm_decomposition(n)?;
        Ok((
            check_equiv_formulation(&d, &dec)?,
            "D w = e/alpha, L D + 2I = 2 w e' + V~".into(),
        ))
    });

    suite.run("check_uniqueness", || {
        let (alpha, w) = check_uniqueness(&d, &helm_decomposition(n)?)?;
        let ok = alpha == alpha_for(n) && w == w_vector(n);
        Ok((ok, format!("recovered alpha = {alpha}")))
    });

    let summary = Summary {
        det: (parity == Parity::Even).then(|| det.to_string()),
        rank: r,
        inertia: inert.as_array(),
        rank_l,
        elapsed_ms: started.elapsed_ms(),
    };
    Ok(VerificationReport {
        n,
        parity,
        checks: suite.checks,
        summary,
    })
}

/// One report per `n` in `n_min..=n_max`, in ascending order.
pub fn sweep(n_min: usize, n_max: usize, parallel: bool) -> Result<Vec<VerificationReport>> {
    check_n(n_min)?;
    if n_max < n_min {
        return Err(HelmError::ShapeMismatch(format!(
            "empty range {n_min}..={n_max}"
        )));
    }
    if parallel {
        (n_min..=n_max).into_par_iter().map(verify).collect()
    } else {
        (n_min..=n_max).map(verify).collect()
    }
}

/// Table comparing sweep results with the predicted det, rank and inertia.
pub fn sweep_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3} {:>6} {:>14} {:>10} {:>16} {:>6} {:>7} {:>6}",
        "n", "parity", "det", "rank", "inertia", "rank_L", "checks", "status"
    );
    for r in reports {
        let s = &r.summary;
        let rank = format!("{}/{}", s.rank, expected_rank(r.n));
        let inertia = format!("({},{},{})", s.inertia[0], s.inertia[1], s.inertia[2]);
        let passed = r.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(
            out,
            "{:>3} {:>6} {:>14} {:>10} {:>16} {:>6} {:>7} {:>6}",
            r.n,
            r.parity.to_string(),
            s.det.as_deref().unwrap_or("0"),
            rank,
            inertia,
            s.rank_l.map_or_else(|| "-".into(), |x| x.to_string()),
            format!("{passed}/{}", r.checks.len()),
            if r.all_pass() { "PASS" } else { "FAIL" }
        );
    }
    out
}

/// Wall-clock timer. `std::time::Instant` is unavailable on
/// `wasm32-unknown-unknown`, where elapsed time reads as 0.
struct Stopwatch(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Stopwatch {
    fn start() -> Self {
        Self(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed_ms(&self) -> u64 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed().as_millis() as u64;
        #[cfg(target_arch = "wasm32")]
        0
    }
}

/// Circulant whose spectrum `eig` prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum EigMatrix {
    #[value(name = "S")]
    S,
    #[value(name = "B")]
    B,
    #[value(name = "A")]
    A,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigRow {
    pub j: usize,
    pub re: f64,
    pub im: f64,
    pub analytic: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigTable {
    pub matrix: EigMatrix,
    pub n: usize,
    pub rows: Vec<EigRow>,
    pub max_deviation: Option<f64>,
}

impl EigTable {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "spectrum of {:?} for n = {} (f(w^j), w = exp(2 pi i/{}))",
            self.matrix,
            self.n,
            self.n - 1
        );
        let _ = writeln!(
            out,
            "{:>3} {:>17} {:>17} {:>17} {:>10}",
            "j", "re", "im", "analytic", "|diff|"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>3} {:>17.12} {:>17.12} {:>17.12} {:>10.2e}",
                r.j, r.re, r.im, r.analytic, r.deviation
            );
        }
        if let Some(dev) = self.max_deviation {
            let _ = writeln!(
                out,
                "max deviation {dev:.3e} (tolerance {SPECTRUM_TOLERANCE:e})"
            );
        }
        out
    }
}

/// Analytic eigenvalue at index `j`: `4 cos^2(pi j/(n-1))` for `S`; for odd
/// `n`, `B` has `0` at `j = (n-1)/2` and `-1` elsewhere, and `A` has `0` at
/// `j = (n-1)/2` and `1 + 2 / (4 cos^2(pi j/(n-1)))` elsewhere.
fn analytic_eigenvalue(matrix: EigMatrix, n: usize, j: usize) -> f64 {
    let s = s_spectrum_analytic(n)[j];
    let m = (n - 1) / 2;
    match matrix {
        EigMatrix::S => s,
        EigMatrix::B if j == m => 0.0,
        EigMatrix::B => -1.0,
        EigMatrix::A if j == m => 0.0,
        EigMatrix::A => 1.0 + 2.0 / s,
    }
}

pub fn eig_table(matrix: EigMatrix, n: usize) -> Result<EigTable> {
    check_n(n)?;
    let first_row = match matrix {
        EigMatrix::S => s_vector(n),
        EigMatrix::B | EigMatrix::A if n.is_multiple_of(2) => {
            return Err(HelmError::NotOdd(n as i64))
        }
        EigMatrix::B => odd_y(n),
        EigMatrix::A => odd_x(n),
    };
    let eig = circulant_eigenvalues(&CirculantSpec::new(first_row)?);
    let rows: Vec<EigRow> = eig
        .iter()
        .enumerate()
        .map(|(j, z)| {
            let analytic = analytic_eigenvalue(matrix, n, j);
            EigRow {
                j,
                re: z.re,
                im: z.im,
                analytic,
                deviation: (z - num_complex::Complex64::new(analytic, 0.0)).norm(),
            }
        })
        .collect();
    let max_deviation = rows.iter().map(|r| r.deviation).reduce(f64::max);
    Ok(EigTable {
        matrix,
        n,
        rows,
        max_deviation,
    })
}
