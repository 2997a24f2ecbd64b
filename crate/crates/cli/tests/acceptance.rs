//! End-to-end acceptance gate: one test per shipped guarantee, each
//! printing a single PASS line (visible with `--nocapture`). Tolerances
//! are pinned inline; every closed form is checked against an
//! independent numeric route.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::process::Command;
use tim_core::{
    dynamics, entangle, linalg, model, spectrum3, Complex64, DensityMatrix, MixingAngles,
    ModelParams, StateVector,
};

/// The 50x50 coupling grid (j, b) in (0, 3]^2 shared by several criteria.
fn coupling_grid() -> Vec<(f64, f64)> {
    let mut grid = Vec::with_capacity(2500);
    for i in 0..50 {
        for k in 0..50 {
            grid.push((3.0 * (i + 1) as f64 / 50.0, 3.0 * (k + 1) as f64 / 50.0));
        }
    }
    grid
}

fn numeric_ground(p: &ModelParams) -> StateVector {
    let eig = linalg::eig_hermitian(&model::hamiltonian(p).unwrap()).unwrap();
    StateVector::from_unit((0..8).map(|r| eig.eigenvectors[(r, 0)]).collect())
}

fn reduced_pair(p: &ModelParams) -> DensityMatrix {
    let rho = DensityMatrix::from_pure(&spectrum3::ground_state(p).unwrap());
    entangle::partial_trace(&rho, 3, &[1, 2]).unwrap()
}

#[test]
fn criterion_01_spectrum_equivalence() {
    let mut worst = 0.0_f64;
    for (j, b) in coupling_grid() {
        let p = ModelParams::new(3, j, b).unwrap();
        let analytic = spectrum3::eigenvalues(&p).unwrap().sorted();
        let numeric = linalg::eig_hermitian(&model::hamiltonian(&p).unwrap())
            .unwrap()
            .eigenvalues;
        for (a, n) in analytic.iter().zip(&numeric) {
            worst = worst.max((a - n).abs());
        }
    }
    assert!(worst <= 1e-10, "max spectrum deviation {worst:.3e}");
    println!("criterion 01 spectrum equivalence: PASS (max deviation {worst:.3e})");
}

#[test]
fn criterion_02_ground_state_fidelity() {
    let mut worst = 1.0_f64;
    for (j, b) in coupling_grid() {
        let p = ModelParams::new(3, j, b).unwrap();
        let overlap = spectrum3::ground_state(&p)
            .unwrap()
            .inner(&numeric_ground(&p))
            .norm();
        worst = worst.min(overlap);
    }
    assert!(worst >= 1.0 - 1e-10, "worst ground overlap {worst}");
    println!("criterion 02 ground-state fidelity: PASS (worst overlap {worst})");
}

#[test]
fn criterion_03_landmark_values() {
    let w = MixingAngles::new(std::f64::consts::FRAC_PI_2, 0.0);
    assert!((entangle::concurrence_mixing(&w) - 2.0 / 3.0).abs() <= 1e-12);
    assert!((entangle::squeezing_mixing(&w) - 7.0 / 3.0).abs() <= 1e-12);

    for theta in [
        std::f64::consts::FRAC_PI_3,
        2.0 * std::f64::consts::FRAC_PI_3,
    ] {
        let m = MixingAngles::new(theta, 0.0);
        assert!(entangle::concurrence_mixing(&m) <= 1e-12);
        assert!((entangle::squeezing_mixing(&m) - 1.0).abs() <= 1e-12);
    }

    let weak = entangle::ground_report(&ModelParams::new(3, 1.0, 1e-6).unwrap()).unwrap();
    assert!((weak.concurrence - 1.0 / 3.0).abs() <= 1e-5);
    assert!((weak.xi_squared - 1.0 / 3.0).abs() <= 1e-5);

    let strong = entangle::ground_report(&ModelParams::new(3, 1.0, 1e3).unwrap()).unwrap();
    assert!(strong.concurrence <= 1e-2);
    assert!((strong.xi_squared - 1.0).abs() <= 1e-2);
    println!("criterion 03 landmark values: PASS");
}

#[test]
fn criterion_04_concurrence_squeezing_relation() {
    let mut worst = 0.0_f64;
    for i in 0..1000 {
        let m = MixingAngles::new(std::f64::consts::PI * i as f64 / 999.0, 0.0);
        worst = worst.max(entangle::relation_check(&m).residual);
    }
    assert!(worst <= 1e-12, "max relation residual {worst:.3e}");

    let mut worst_ground = 0.0_f64;
    for (j, b) in coupling_grid() {
        let report = entangle::ground_report(&ModelParams::new(3, j, b).unwrap()).unwrap();
        worst_ground =
            worst_ground.max((report.xi_squared - (1.0 - 2.0 * report.concurrence)).abs());
    }
    assert!(
        worst_ground <= 1e-12,
        "max ground residual {worst_ground:.3e}"
    );
    println!(
        "criterion 04 concurrence-squeezing relation: PASS (residuals {worst:.3e}, {worst_ground:.3e})"
    );
}

#[test]
fn criterion_05_concurrence_oracle_equivalence() {
    let mut worst = 0.0_f64;
    for (j, b) in coupling_grid() {
        let reduced = reduced_pair(&ModelParams::new(3, j, b).unwrap());
        let shortcut = entangle::concurrence_x(&entangle::x_elements(&reduced).unwrap());
        let generic = entangle::concurrence_wootters(&reduced).unwrap();
        worst = worst.max((shortcut - generic).abs());
    }
    assert!(worst <= 1e-9, "reduced-state oracle gap {worst:.3e}");

    // Random X-states: diagonal (u, w, w, v) plus coherences inside the
    // positivity disks |y| <= sqrt(u v), |z| <= w.
    let mut rng = StdRng::seed_from_u64(0x51a7e5);
    let mut worst_random = 0.0_f64;
    for _ in 0..1000 {
        let raw: [f64; 3] = [
            rng.gen_range(0.01..1.0),
            rng.gen_range(0.01..1.0),
            rng.gen_range(0.01..1.0),
        ];
        let total = raw[0] + 2.0 * raw[1] + raw[2];
        let (u, w, v) = (raw[0] / total, raw[1] / total, raw[2] / total);
        let y = Complex64::from_polar(
            rng.gen_range(0.0..1.0) * (u * v).sqrt(),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let z = Complex64::from_polar(
            rng.gen_range(0.0..1.0) * w,
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let zero = Complex64::new(0.0, 0.0);
        let rho = DensityMatrix::new(tim_core::ComplexMatrix::from_entries(
            4,
            4,
            vec![
                Complex64::new(u, 0.0),
                zero,
                zero,
                y,
                zero,
                Complex64::new(w, 0.0),
                z,
                zero,
                zero,
                z.conj(),
                Complex64::new(w, 0.0),
                zero,
                y.conj(),
                zero,
                zero,
                Complex64::new(v, 0.0),
            ],
        ))
        .unwrap();
        let shortcut = entangle::concurrence_x(&entangle::x_elements(&rho).unwrap());
        let generic = entangle::concurrence_wootters(&rho).unwrap();
        worst_random = worst_random.max((shortcut - generic).abs());
    }
    assert!(
        worst_random <= 1e-9,
        "random X-state oracle gap {worst_random:.3e}"
    );
    println!(
        "criterion 05 concurrence oracle equivalence: PASS (gaps {worst:.3e}, {worst_random:.3e})"
    );
}

#[test]
fn criterion_06_squeezing_operator_vs_closed_form() {
    let mut worst = 0.0_f64;
    for i in 0..100 {
        let theta = std::f64::consts::PI * i as f64 / 99.0;
        for k in 0..16 {
            let m = MixingAngles::new(theta, std::f64::consts::TAU * k as f64 / 16.0);
            let operator = entangle::squeezing_parity(&entangle::mixing_state(&m)).unwrap();
            worst = worst.max((operator - entangle::squeezing_mixing(&m)).abs());
        }
    }
    assert!(worst <= 1e-12, "squeezing route gap {worst:.3e}");
    println!("criterion 06 squeezing operator vs closed form: PASS (gap {worst:.3e})");
}

#[test]
fn criterion_07_ground_state_monotonicity() {
    let (ln_lo, ln_hi) = (0.01_f64.ln(), 10.0_f64.ln());
    let mut previous: Option<(f64, f64)> = None;
    for i in 0..1000 {
        let b = ((ln_lo * (999 - i) as f64 + ln_hi * i as f64) / 999.0).exp();
        let report = entangle::ground_report(&ModelParams::new(3, 1.0, b).unwrap()).unwrap();
        assert!(
            report.xi_squared <= 1.0 + 1e-12,
            "squeezing bound at b = {b}"
        );
        if let Some((c_prev, xi_prev)) = previous {
            assert!(
                report.concurrence < c_prev,
                "concurrence not decreasing at b = {b}"
            );
            assert!(
                report.xi_squared > xi_prev,
                "squeezing not increasing at b = {b}"
            );
        }
        previous = Some((report.concurrence, report.xi_squared));
    }
    println!("criterion 07 ground-state monotonicity: PASS");
}

#[test]
fn criterion_08_w_state_generation() {
    let w = spectrum3::w_state();
    let excited = StateVector::basis(8, 7);
    for j in [1.0, -2.0, 0.3] {
        let schedule = dynamics::w_schedule(j).unwrap();
        let p = ModelParams::new(3, j, schedule.b).unwrap();
        let generated = dynamics::evolve_full(&p, &excited, schedule.t_star).unwrap();
        assert!(
            w.fidelity(&generated) >= 1.0 - 1e-10,
            "schedule failed at j = {j}"
        );
    }

    let mut rng = StdRng::seed_from_u64(0xd1ce);
    let mut worst = 1.0_f64;
    for _ in 0..100 {
        let j = rng.gen_range(-2.0..2.0);
        let b = rng.gen_range(-2.0..2.0);
        let t = rng.gen_range(0.0..5.0);
        let closed = match dynamics::evolve_closed(j, b, t) {
            Ok(pair) => pair,
            Err(_) => continue,
        };
        let evolved =
            dynamics::evolve_full(&ModelParams::new(3, j, b).unwrap(), &excited, t).unwrap();
        let projected = (excited.inner(&evolved), w.inner(&evolved));
        let overlap = (closed.0.conj() * projected.0 + closed.1.conj() * projected.1).norm();
        worst = worst.min(overlap);
    }
    assert!(worst >= 1.0 - 1e-10, "closed-vs-full overlap {worst}");
    println!("criterion 08 W-state generation: PASS (worst overlap {worst})");
}

#[test]
fn criterion_09_symmetry_suite() {
    let couplings = [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0];
    let mut worst = 0.0_f64;
    for n in [3, 4, 5] {
        for &j in &couplings {
            for &b in &couplings {
                let report = model::symmetry_report(&ModelParams::new(n, j, b).unwrap()).unwrap();
                worst = worst
                    .max(report.commutator_norm_parity)
                    .max(report.commutator_norm_translation)
                    .max(report.commutator_norm_reflection)
                    .max(report.field_flip_norm);
            }
        }
    }
    assert!(worst <= 1e-12, "symmetry norm {worst:.3e}");

    let w = spectrum3::w_state();
    let excited = StateVector::basis(8, 7);
    let mut worst_leak = 0.0_f64;
    for &j in &couplings {
        for &b in &couplings {
            let p = ModelParams::new(3, j, b).unwrap();
            let omega = dynamics::rabi_params(j, b).unwrap().omega;
            for step in 0..20 {
                let t = 2.0 * std::f64::consts::PI / omega * step as f64 / 19.0;
                let evolved = dynamics::evolve_full(&p, &excited, t).unwrap();
                let leak = 1.0 - excited.fidelity(&evolved) - w.fidelity(&evolved);
                worst_leak = worst_leak.max(leak.abs());
            }
        }
    }
    assert!(worst_leak <= 1e-10, "subspace leakage {worst_leak:.3e}");
    println!("criterion 09 symmetry suite: PASS (norms {worst:.3e}, leakage {worst_leak:.3e})");
}

#[test]
fn criterion_10_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_tim");
    let cases: [(&str, &[&str]); 7] = [
        ("spectrum_j1_b1.csv", &["spectrum", "--j", "1", "--b", "1"]),
        ("ground_j1_b1.csv", &["ground", "--j", "1", "--b", "1"]),
        ("sweep_theta_7.csv", &["sweep-theta", "--steps", "7"]),
        (
            "sweep_field_5.csv",
            &[
                "sweep-field",
                "--start",
                "0.5",
                "--stop",
                "2",
                "--steps",
                "5",
            ],
        ),
        (
            "evolve_resonant_5.csv",
            &[
                "evolve",
                "--j",
                "1",
                "--b",
                "-0.5",
                "--t-max",
                "1.8137993642342178",
                "--steps",
                "5",
            ],
        ),
        ("make_w_j1_5.csv", &["make-w", "--j", "1", "--steps", "5"]),
        (
            "sweep_theta_3.json",
            &["sweep-theta", "--steps", "3", "--format", "json"],
        ),
    ];
    for (golden, args) in cases {
        let output = Command::new(bin).args(args).output().unwrap();
        assert!(output.status.success(), "{golden}: command failed");
        let expected = std::fs::read(format!(
            "{}/tests/golden/{golden}",
            env!("CARGO_MANIFEST_DIR")
        ))
        .unwrap();
        assert_eq!(
            output.stdout, expected,
            "{golden}: stdout differs from golden bytes"
        );
    }

    let exit_code = |args: &[&str]| -> i32 {
        Command::new(bin)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(exit_code(&["spectrum", "--j", "1", "--b", "1"]), 0);
    assert_eq!(exit_code(&["spectrum", "--j", "abc", "--b", "1"]), 2);
    assert_eq!(exit_code(&["sweep-theta", "--steps", "1"]), 2);
    assert_eq!(exit_code(&["ground", "--j", "-1", "--b", "1"]), 3);
    assert_eq!(exit_code(&["sweep-field", "--start", "-1"]), 3);
    assert_eq!(exit_code(&["make-w", "--j", "0"]), 4);
    println!("criterion 10 CLI contract: PASS");
}
