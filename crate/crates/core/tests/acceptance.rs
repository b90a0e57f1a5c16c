// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance checks. Runs as a plain binary and prints one line per
//! criterion; exits non-zero if any fails.

mod common;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use nalgebra::Vector3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rindler_spin::correlator::{rates_closed, rates_numeric, EpsilonSchedule};
use rindler_spin::dynamics::{
    bell_state, density_from_coefficients, evolve_analytic, evolve_numeric_grid, steady_state, LindbladSpec,
};
use rindler_spin::entanglement::{
    concurrence, concurrence_closed, disentanglement_time, exponent_constant, relaxation_times, tau0_asymptotic,
    tau0_scaled_asymptote,
};
use rindler_spin::kinematics::{rindler_event, thomas_omega, worldline, AccelerationProfile};
use rindler_spin::linalg::{kron, max_abs, trace};
use rindler_spin::params::{alpha_of, gamma0, PhysicalConstants};

use common::{bell_density, linspace, log_grid, random_state, random_unitary};

type Criterion = (&'static str, fn() -> Check, Duration);

struct Check {
    pass: bool,
    detail: String,
}

impl Check {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Check { pass, detail: detail.into() }
    }
}

fn detailed_balance() -> Check {
    let mut worst: f64 = 0.0;
    for alpha in log_grid(0.01, 100.0, 50) {
        let r = rates_closed(alpha);
        let expected = (-2.0 * PI / alpha).exp();
        worst = worst.max((r.g_plus / r.g_minus / expected - 1.0).abs());
    }
    Check::new(worst <= 1e-12, format!("max relative error {worst:.2e} (tol 1e-12)"))
}

fn rate_oracle() -> Check {
    let mut worst: f64 = 0.0;
    for alpha in [0.5, 1.0, 2.0, 5.0, 10.0] {
        let closed = rates_closed(alpha);
        let num = match rates_numeric(alpha, &EpsilonSchedule::for_alpha(alpha)) {
            Ok(n) => n.rates,
            Err(e) => return Check::new(false, format!("alpha {alpha}: {e}")),
        };
        for (n, c) in [(num.g_plus, closed.g_plus), (num.g_minus, closed.g_minus), (num.g_z, closed.g_z)] {
            worst = worst.max((n / c - 1.0).abs());
        }
    }
    Check::new(worst <= 1e-4, format!("max relative deviation {worst:.2e} (tol 1e-4)"))
}

fn master_equation() -> Check {
    let taus = [0.1, 1.0, 5.0];
    let rho0 = bell_density();
    let (mut dev, mut drift, mut min_eig): (f64, f64, f64) = (0.0, 0.0, f64::INFINITY);
    for alpha in [0.5, 1.0, 5.0] {
        let rates = rates_closed(alpha);
        let spec = LindbladSpec::new(rates, 0.02 / rates.stiffness()).unwrap();
        let states = match evolve_numeric_grid(&rho0, &spec, &taus) {
            Ok(s) => s,
            Err(e) => return Check::new(false, format!("alpha {alpha}: {e}")),
        };
        for (&tau, rho) in taus.iter().zip(&states) {
            let c = evolve_analytic(&bell_state(), &rates, tau);
            let exact = density_from_coefficients(&c).unwrap().density;
            dev = dev.max(max_abs(&(rho.matrix() - exact.matrix())));
            drift = drift.max((trace(rho.matrix()).re - 1.0).abs());
            min_eig = min_eig.min(rho.min_eigenvalue());
        }
    }
    Check::new(
        dev <= 1e-8 && drift < 1e-10 && min_eig >= -1e-8,
        format!("max-norm {dev:.2e} (tol 1e-8), trace drift {drift:.2e} (tol 1e-10), min eigenvalue {min_eig:.2e}"),
    )
}

fn relaxation_order() -> Check {
    let ordered = log_grid(0.01, 100.0, 100).into_iter().all(|a| {
        let t = relaxation_times(a);
        t.t1 < t.t2 && t.t2 <= 2.0 * t.t1
    });
    let ratios: Vec<f64> = [1.0, 0.1, 0.01, 1e-3]
        .iter()
        .map(|&a| {
            let t = relaxation_times(a);
            t.t2 / t.t1
        })
        .collect();
    let approaching = ratios.windows(2).all(|w| w[1] > w[0]) && (2.0 - ratios[3]).abs() < 1e-8;
    Check::new(
        ordered && approaching,
        format!("T1 < T2 <= 2 T1 on 100 points: {ordered}; T2/T1 at alpha = 1e-3: {:.12}", ratios[3]),
    )
}

fn concurrence_closed_form() -> Check {
    let mut worst: f64 = 0.0;
    for alpha in [0.5, 1.0, 2.0, 5.0] {
        let rates = rates_closed(alpha);
        for tau in linspace(0.0, 4.0, 20) {
            let c = evolve_analytic(&bell_state(), &rates, tau);
            let rho = density_from_coefficients(&c).unwrap().density;
            worst = worst.max((concurrence(&rho).unwrap() - concurrence_closed(alpha, tau)).abs());
        }
    }
    let start = [0.5, 1.0, 2.0, 5.0].iter().all(|&a| concurrence_closed(a, 0.0) == 1.0);
    let late = concurrence_closed(1.0, 50.0);
    let ss = steady_state(&bell_state(), 1.0);
    let rho = density_from_coefficients(&ss).unwrap().density;
    let product = max_abs(&(kron(&rho.reduced_first(), &rho.reduced_second()) - rho.matrix()));
    let c_ss = concurrence(&rho).unwrap();
    Check::new(
        worst <= 1e-8 && start && late == 0.0 && product < 1e-14 && c_ss == 0.0,
        format!(
            "max deviation {worst:.2e} (tol 1e-8), C(0) = 1: {start}, C(50) = {late}, steady-state product defect {product:.1e}, C = {c_ss}"
        ),
    )
}

fn disentanglement_asymptote() -> Check {
    let alpha = 100.0;
    let root = disentanglement_time(alpha).unwrap();
    let scaled = tau0_scaled_asymptote(alpha);
    // the same asymptote through physical units: electron moment, 1 T splitting
    let k = PhysicalConstants::default();
    let mu = k.bohr_magneton;
    let gap = 2.0 * mu * 1e4;
    let accel = alpha * k.c * gap / k.hbar;
    let physical = gamma0(mu, gap, &k).unwrap() * tau0_asymptotic(accel, &k, mu).unwrap();
    let units = (alpha_of(accel, gap, &k).unwrap() / alpha - 1.0).abs() < 1e-12 && (physical / scaled - 1.0).abs() < 1e-12;
    let rel = (root / physical - 1.0).abs();
    Check::new(
        rel < 1e-3 && units,
        format!("gamma0 tau0: root {root:.9e}, asymptote {physical:.9e}, relative gap {rel:.2e} (tol 1e-3); unit round trip: {units}"),
    )
}

fn paper_constant() -> Check {
    let k = PhysicalConstants::default();
    let si = exponent_constant(&k, k.bohr_magneton) * 1e-4;
    let rel = si / 3.8e61 - 1.0;
    Check::new(rel.abs() < 0.03, format!("{si:.4e} m^2 s^-4, {:+.2}% from 3.8e61 (tol 3%)", 100.0 * rel))
}

fn kinematics() -> Check {
    let mut worst: f64 = 0.0;
    for (a, c) in [(1.0, 1.0), (2.5e20, PhysicalConstants::default().c)] {
        let grid = linspace(0.0, 10.0 * c / a, 401);
        let events = worldline(&AccelerationProfile::constant(a), &grid, c).unwrap();
        for e in events.iter().skip(1) {
            let exact = rindler_event(a, e.tau, c).unwrap();
            worst = worst.max((e.t / exact.t - 1.0).abs()).max((e.z / exact.z - 1.0).abs());
        }
    }
    let ev = worldline(&AccelerationProfile::sinusoid(1.0, 1.3), &linspace(0.0, 3.0, 3001), 1.0).unwrap();
    let line = ev
        .windows(3)
        .map(|w| {
            let h = w[2].tau - w[0].tau;
            let (dt, dz) = ((w[2].t - w[0].t) / h, (w[2].z - w[0].z) / h);
            (dt * dt - dz * dz - 1.0).abs()
        })
        .fold(0.0, f64::max);
    let beta = Vector3::new(0.3, -0.2, 0.5);
    let thomas = thomas_omega(beta, beta * 0.7).unwrap().norm() / (beta.norm() * beta.norm() * 0.7);
    Check::new(
        worst <= 1e-8 && line < 1e-6 && thomas < 1e-14,
        format!("closed-form deviation {worst:.2e} (tol 1e-8), line element {line:.2e} (tol 1e-6), collinear Thomas |omega| relative {thomas:.1e} (tol 1e-14)"),
    )
}

fn local_unitary_invariance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let rho = random_state(&mut rng, false);
        let u = kron(&random_unitary(&mut rng), &random_unitary(&mut rng));
        let before = concurrence(&rho).unwrap();
        let after = concurrence(&rho.conjugated(&u)).unwrap();
        worst = worst.max((before - after).abs());
    }
    Check::new(worst <= 1e-9, format!("max change {worst:.2e} over 100 pairs (tol 1e-9)"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("detailed balance", detailed_balance, Duration::from_secs(1)),
        ("rate-integral oracle", rate_oracle, Duration::from_secs(30)),
        ("master-equation oracle", master_equation, Duration::from_secs(10)),
        ("relaxation-time ordering", relaxation_order, Duration::from_secs(1)),
        ("concurrence closed form", concurrence_closed_form, Duration::from_secs(5)),
        ("disentanglement asymptote", disentanglement_asymptote, Duration::from_secs(1)),
        ("lab-frame exponent constant", paper_constant, Duration::from_secs(1)),
        ("worldline kinematics", kinematics, Duration::from_secs(5)),
        ("local-unitary invariance", local_unitary_invariance, Duration::from_secs(5)),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let check = run();
        let elapsed = start.elapsed();
        let pass = check.pass && elapsed <= *budget;
        if !pass {
            failures += 1;
        }
        println!(
            "{} {}. {name}: {} [{:.3}s of {}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            check.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failures > 0 {
        println!("{failures} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
