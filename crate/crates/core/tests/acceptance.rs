//! Acceptance criteria for the helm distance-matrix library. Runs without the
//! libtest harness so that every criterion prints one PASS/FAIL line.
//! Random sections are seeded from `HELMLAB_SEED`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use helmlab::characterization::{
    build_v_tilde, check_conditions_i_vi, check_uniqueness, helm_decomposition, shifted_b,
};
use helmlab::circulant::{
    circulant_eigenvalues, circulant_product, delta_closure_check, s_matrix, s_spectrum_analytic,
    s_vector, CirculantSpec, DeltaVector,
};
use helmlab::closed_form::{
    alpha_for, closed_form_inverse, closed_form_mp_inverse, make_even_case, make_odd_case, w_vector,
};
use helmlab::exact::{
    determinant, inertia, int, penrose_check, pseudoinverse, rank, rat, InertiaTriple, RatMatrix,
};
use helmlab::graphs::{bfs_distance_matrix, build_helm, helm_distance_block};
use num_bigint::BigInt;
use rand::Rng;

/// Float tolerance for circulant spectra.
const SPECTRUM_TOL: f64 = 1e-9;
const RANDOM_TRIALS: usize = 100;
const RANDOM_SPECS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn d(n: usize) -> Result<RatMatrix, String> {
    helm_distance_block(n).map_err(|e| e.to_string())
}

fn ac1_inverse_even() -> Outcome {
    let start = Instant::now();
    for n in [4, 6, 8, 10, 12] {
        let inv = closed_form_inverse(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(&inv * &d(n)? == RatMatrix::identity(2 * n - 1), || {
            format!("n={n}: product is not I")
        })?;
    }
    Ok(format!("n = 4,6,8,10,12 exact; {:.2?}", start.elapsed()))
}

fn ac2_mp_odd() -> Outcome {
    let start = Instant::now();
    for n in [5, 7, 9, 11, 13] {
        let dm = d(n)?;
        let x = closed_form_mp_inverse(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(penrose_check(&dm, &x).map_err(|e| e.to_string())?, || {
            format!("n={n}: Penrose conditions fail")
        })?;
        ensure(x == pseudoinverse(&dm), || {
            format!("n={n}: differs from pseudoinverse")
        })?;
    }
    Ok(format!("n = 5,7,9,11,13 exact; {:.2?}", start.elapsed()))
}

fn ac3_determinant() -> Outcome {
    for n in 4..=13usize {
        let det = determinant(&d(n)?).map_err(|e| e.to_string())?;
        let expected = if n % 2 == 0 {
            int(3 * (n as i64 - 1))
                * helmlab::Rational::from_integer(BigInt::from(2).pow(n as u32 - 1))
        } else {
            int(0)
        };
        ensure(det == expected, || {
            format!("n={n}: det {det}, expected {expected}")
        })?;
    }
    Ok("3(n-1)2^(n-1) for even n, 0 for odd n, n = 4..13".into())
}

fn ac4_rank_inertia() -> Outcome {
    for n in 4..=13usize {
        let dm = d(n)?;
        let (r, expected_in) = if n % 2 == 0 {
            (2 * n - 1, InertiaTriple::new(1, 2 * n - 2, 0))
        } else {
            (2 * n - 2, InertiaTriple::new(1, 2 * n - 3, 1))
        };
        let got_r = rank(&dm);
        ensure(got_r == r, || format!("n={n}: rank {got_r}, expected {r}"))?;
        let got = inertia(&dm).map_err(|e| e.to_string())?;
        ensure(got == expected_in, || {
            format!("n={n}: inertia {got}, expected {expected_in}")
        })?;
    }
    Ok("n = 4..13".into())
}

fn ac5_l_inertia() -> Outcome {
    for n in (5..=13).step_by(2) {
        let odd = make_odd_case(n).map_err(|e| e.to_string())?;
        let got = inertia(&odd.l).map_err(|e| e.to_string())?;
        let expected = InertiaTriple::new(2 * n - 3, 0, 2);
        ensure(got == expected, || {
            format!("n={n}: inertia(L) {got}, expected {expected}")
        })?;
    }
    Ok("(2n-3, 0, 2) for n = 5,7,9,11,13".into())
}

fn ac6_characterization() -> Outcome {
    for n in 4..=13usize {
        let dm = d(n)?;
        let s = s_matrix(n);
        let k = n - 1;
        let (a, b) = if n % 2 == 1 {
            let odd = make_odd_case(n).map_err(|e| e.to_string())?;
            (odd.a, odd.b)
        } else {
            let even = make_even_case(n).map_err(|e| e.to_string())?;
            (even.a, -&RatMatrix::identity(k))
        };
        let cond = check_conditions_i_vi(&a, &b, &s).map_err(|e| e.to_string())?;
        ensure(cond.all(), || {
            format!("n={n}: conditions {:?}", cond.as_array())
        })?;

        let dec = helm_decomposition(n).map_err(|e| e.to_string())?;
        let order = 2 * n - 1;
        let v_tilde = (&RatMatrix::identity(order) - &(&dec.value() * &dm)).scale(&int(2));
        ensure((&dm * &v_tilde).is_zero(), || format!("n={n}: D V~ != O"))?;
        ensure((&v_tilde * &dec.laplacian_like).is_zero(), || {
            format!("n={n}: V~ L != O")
        })?;
        ensure(v_tilde.mul_vec(&dec.w).iter().all(|x| *x == int(0)), || {
            format!("n={n}: V~ w != 0")
        })?;
        if n % 2 == 1 {
            let built = build_v_tilde(n).map_err(|e| e.to_string())?;
            ensure(built.matrix == v_tilde, || {
                format!("n={n}: block V~ disagrees")
            })?;
        } else {
            ensure(v_tilde.is_zero(), || format!("n={n}: V~ != O for even n"))?;
        }

        let (alpha, w) = check_uniqueness(&dm, &dec).map_err(|e| format!("n={n}: {e}"))?;
        ensure(
            alpha == rat(4, 3 * (n as i64 - 1)) && alpha == alpha_for(n),
            || format!("n={n}: alpha = {alpha}"),
        )?;
        let mut expected_w = vec![rat(5 - n as i64, 4)];
        expected_w.extend(std::iter::repeat_n(rat(-1, 4), k));
        expected_w.extend(std::iter::repeat_n(rat(1, 2), k));
        ensure(w == expected_w && w == w_vector(n), || {
            format!("n={n}: w mismatch")
        })?;
    }
    Ok("conditions (i)-(vi), V~ identities, uniqueness for n = 4..13".into())
}

fn ac7_oracles() -> Outcome {
    for n in 4..=13usize {
        let g = build_helm(n).map_err(|e| e.to_string())?;
        ensure(bfs_distance_matrix(&g) == d(n)?, || {
            format!("n={n}: block form != BFS")
        })?;
    }
    let mut rng = common::rng();
    for t in 0..RANDOM_SPECS {
        let len = rng.gen_range(1..=8);
        let a = CirculantSpec::new(common::random_vector(&mut rng, len)).unwrap();
        let b = CirculantSpec::new(common::random_vector(&mut rng, len)).unwrap();
        let dense = &a.materialize() * &b.materialize();
        let spec = circulant_product(&a, &b).map_err(|e| e.to_string())?;
        ensure(spec.materialize() == dense, || {
            format!("random spec #{t} (len {len}) disagrees")
        })?;
    }
    Ok(format!(
        "BFS n = 4..13; {RANDOM_SPECS} random specs (seed {})",
        common::seed()
    ))
}

fn ac8_spectra() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 5..=13usize {
        let eig = circulant_eigenvalues(&CirculantSpec::new(s_vector(n)).unwrap());
        for (z, a) in eig.iter().zip(s_spectrum_analytic(n)) {
            worst = worst.max((z.re - a).abs()).max(z.im.abs());
        }
    }
    ensure(worst < SPECTRUM_TOL, || {
        format!("max deviation {worst:e} >= {SPECTRUM_TOL:e}")
    })?;
    for n in (5..=13).step_by(2) {
        let k = n - 1;
        let b = make_odd_case(n).map_err(|e| e.to_string())?.b;
        ensure(&b * &b == -&b, || format!("n={n}: B^2 != -B"))?;
        ensure(rank(&b) == n - 2, || {
            format!("n={n}: rank B = {}", rank(&b))
        })?;
        let m = shifted_b(n).map_err(|e| e.to_string())?;
        let id = RatMatrix::identity(k);
        let cubic = &(&m * &(&m + &id)) * &(&m + &id.scale(&rat(3, 2)));
        ensure(cubic.is_zero(), || format!("n={n}: M(M+I)(M+3/2 I) != O"))?;
    }
    Ok(format!(
        "S spectrum max deviation {worst:.1e}; B identities exact"
    ))
}

fn ac9_properties() -> Outcome {
    let mut rng = common::rng();
    for t in 0..RANDOM_TRIALS {
        let n = rng.gen_range(1..=6);
        let m = common::random_symmetric(&mut rng, n);
        ensure(
            penrose_check(&m, &pseudoinverse(&m)).map_err(|e| e.to_string())?,
            || format!("symmetric #{t}: Penrose conditions fail\n{m}"),
        )?;
    }
    for t in 0..RANDOM_TRIALS {
        let n = rng.gen_range(1..=6);
        let m = common::random_symmetric(&mut rng, n);
        let p = common::random_invertible(&mut rng, n);
        let c = &(&p.transpose() * &m) * &p;
        let (a, b) = (inertia(&m).unwrap(), inertia(&c).unwrap());
        ensure(a == b, || format!("congruence #{t}: {a} vs {b}"))?;
    }
    for t in 0..RANDOM_TRIALS {
        let len = rng.gen_range(3..=9);
        let z = DeltaVector::new(common::random_delta(&mut rng, len)).unwrap();
        let mut g = vec![int(0); len];
        g[0] = common::small_rational(&mut rng);
        g[1] = common::small_rational(&mut rng);
        g[len - 1] = g[1].clone();
        let g = CirculantSpec::new(g).unwrap();
        ensure(
            delta_closure_check(&z, &g).map_err(|e| e.to_string())?,
            || format!("closure pair #{t} fails"),
        )?;
    }
    Ok(format!(
        "{RANDOM_TRIALS} trials each (seed {})",
        common::seed()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 inverse reproduction (even n)", ac1_inverse_even),
        ("AC2 Moore-Penrose reproduction (odd n)", ac2_mp_odd),
        ("AC3 determinant", ac3_determinant),
        ("AC4 rank and inertia of D", ac4_rank_inertia),
        ("AC5 inertia of L", ac5_l_inertia),
        ("AC6 characterization suite", ac6_characterization),
        ("AC7 oracle cross-checks", ac7_oracles),
        ("AC8 spectra", ac8_spectra),
        ("AC9 random property suite", ac9_properties),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
