// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Small dense helpers for 4x4 complex matrices.

use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;

pub type Mat4 = Matrix4<Complex64>;
pub type Mat2 = Matrix2<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

/// Identity and the three Pauli matrices, indexed 0..=3.
pub fn pauli(i: usize) -> Mat2 {
    match i {
        0 => Mat2::new(ONE, ZERO, ZERO, ONE),
        1 => Mat2::new(ZERO, ONE, ONE, ZERO),
        2 => Mat2::new(ZERO, -I, I, ZERO),
        3 => Mat2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("Pauli index {i} out of range"),
    }
}

/// Kronecker product of two 2x2 matrices; the first factor acts on the
/// first qubit (row index `2 a + b`).
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

pub fn trace(m: &Mat4) -> Complex64 {
    (0..4).map(|i| m[(i, i)]).sum()
}

/// Largest entry of `|m - m^dagger|`.
pub fn hermiticity_defect(m: &Mat4) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs(m: &Mat4) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn off_diagonal_norm(m: &Mat4) -> f64 {
    let mut s = 0.0;
    for r in 0..4 {
        for c in 0..4 {
            if r != c {
                s += m[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the unitary whose columns
/// are the matching eigenvectors. Only the Hermitian part of `m` is used.
pub fn hermitian_eigen(m: &Mat4) -> (Vector4<f64>, Mat4) {
    const TOL: f64 = 1e-15;
    const MAX_SWEEPS: usize = 60;

    let mut a = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let mut v = Mat4::identity();
    let scale = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if scale == 0.0 {
        return (Vector4::zeros(), v);
    }

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= TOL * scale {
            break;
        }
        for p in 0..3 {
            for q in p + 1..4 {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag < 1e-300 {
                    continue;
                }
                // Phase the pivot real, then apply a real Jacobi rotation.
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let cos = 1.0 / (t * t + 1.0).sqrt();
                let sin = t * cos;

                let mut u = Mat4::identity();
                u[(p, p)] = Complex64::new(cos, 0.0);
                u[(q, q)] = phase.conj() * cos;
                u[(p, q)] = Complex64::new(sin, 0.0);
                u[(q, p)] = -phase.conj() * sin;
                a = u.adjoint() * a * u;
                // Clean the annihilated pivot and keep the diagonal real.
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                v *= u;
            }
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = Vector4::from_fn(|k, _| a[(order[k], order[k])].re);
    let vectors = Mat4::from_fn(|r, k| v[(r, order[k])]);
    (values, vectors)
}

/// Square root of a positive semidefinite Hermitian matrix; eigenvalues
/// below zero are clamped.
pub fn psd_sqrt(m: &Mat4) -> Mat4 {
    let (values, vectors) = hermitian_eigen(m);
    let d = Mat4::from_diagonal(&values.map(|x| Complex64::new(x.max(0.0).sqrt(), 0.0)));
    vectors * d * vectors.adjoint()
}
