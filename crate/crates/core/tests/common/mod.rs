// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use nalgebra::Vector4;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rindler_spin::dynamics::{bell_state, density_from_coefficients, DensityMatrix};
use rindler_spin::linalg::{Mat2, Mat4};

pub fn bell_density() -> DensityMatrix {
    density_from_coefficients(&bell_state()).unwrap().density
}

/// Random pure state mixed with white noise, so the result has full rank.
pub fn random_state(rng: &mut ChaCha8Rng, real: bool) -> DensityMatrix {
    let psi = Vector4::from_fn(|_, _| {
        let im = if real { 0.0 } else { rng.gen_range(-1.0..1.0) };
        Complex64::new(rng.gen_range(-1.0..1.0), im)
    });
    let psi = psi / Complex64::new(psi.norm(), 0.0);
    let p: f64 = rng.gen_range(0.3..0.95);
    let m = psi * psi.adjoint() * Complex64::new(p, 0.0)
        + Mat4::identity() * Complex64::new((1.0 - p) / 4.0, 0.0);
    DensityMatrix::new(m).unwrap()
}

/// Haar-like single-qubit unitary from Euler angles.
pub fn random_unitary(rng: &mut ChaCha8Rng) -> Mat2 {
    let [a, b, c, d]: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::TAU));
    let e = |x: f64| Complex64::from_polar(1.0, x);
    let (cs, sn) = (Complex64::new(b.cos(), 0.0), Complex64::new(b.sin(), 0.0));
    Mat2::new(e(a + c) * cs, e(a + d) * sn, -e(a - d) * sn, e(a - c) * cs)
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| (lo.ln() + (hi.ln() - lo.ln()) * k as f64 / (n - 1) as f64).exp())
        .collect()
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}
