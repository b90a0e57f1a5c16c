// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Concurrence, relaxation times and disentanglement times.

use std::f64::consts::PI;

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use serde::Serialize;

use crate::correlator::rates_closed;
use crate::dynamics::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, kron, pauli, psd_sqrt, Mat4};
use crate::params::PhysicalConstants;

/// Numerical noise allowed below zero before a spectrum is declared invalid.
pub const NEGATIVE_CLAMP: f64 = 1e-10;

/// 3 pi ln 3 / 8.
pub fn disentanglement_prefactor() -> f64 {
    3.0 * PI * 3f64.ln() / 8.0
}

/// T1 and T2 in units of the spontaneous decay time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelaxationTimes {
    pub t1: f64,
    pub t2: f64,
}

/// Relaxation and dephasing times at dimensionless acceleration `alpha`.
///
/// Non-positive `alpha` gives the inertial limit `t1 = 1`, `t2 = 2`.
pub fn relaxation_times(alpha: f64) -> RelaxationTimes {
    if !(alpha > 0.0) {
        return RelaxationTimes { t1: 1.0, t2: 2.0 };
    }
    let r = rates_closed(alpha);
    RelaxationTimes {
        t1: 1.0 / r.gamma1(),
        t2: 1.0 / r.gamma2(),
    }
}

fn spin_flip() -> Mat4 {
    kron(&pauli(2), &pauli(2))
}

fn wootters(mut lambda: [f64; 4]) -> Result<f64> {
    for l in lambda.iter_mut() {
        if !l.is_finite() {
            return Err(Error::Numeric("non-finite concurrence eigenvalue".into()));
        }
        if *l < 0.0 {
            if *l < -NEGATIVE_CLAMP {
                return Err(Error::Numeric(format!("negative concurrence eigenvalue {l:e}")));
            }
            *l = 0.0;
        }
    }
    lambda.sort_by(|a, b| b.total_cmp(a));
    Ok((lambda[0] - lambda[1] - lambda[2] - lambda[3]).clamp(0.0, 1.0))
}

/// Wootters concurrence of a two-qubit state.
///
/// The square roots of the spectrum of `rho Y rho* Y` are the singular
/// values of `sqrt(rho) Y conj(sqrt(rho))`, which avoids solving a quartic
/// with clustered roots.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    let s = psd_sqrt(rho.matrix());
    let a = s * spin_flip() * s.map(|z| z.conj());
    let sv = a.svd(false, false).singular_values;
    wootters([sv[0], sv[1], sv[2], sv[3]])
}

/// Concurrence of a real state from `|eig(rho Y)|`.
pub fn concurrence_real(rho: &DensityMatrix) -> Result<f64> {
    let imag = rho.max_imag();
    if imag >= 1e-12 {
        return Err(Error::argument(format!(
            "state is not real: largest imaginary entry {imag:e}"
        )));
    }
    // rho Y is similar to the real symmetric sqrt(rho) Y sqrt(rho).
    let s = psd_sqrt(rho.matrix()).map(|z| Complex64::new(z.re, 0.0));
    let sym = s * spin_flip() * s;
    let (values, _) = hermitian_eigen(&sym);
    wootters([values[0].abs(), values[1].abs(), values[2].abs(), values[3].abs()])
}

fn sech_pi_over(alpha: f64) -> f64 {
    1.0 / (PI / alpha).cosh()
}

/// Concurrence of a pair that starts in the Bell state, in closed form.
pub fn concurrence_closed(alpha: f64, tau: f64) -> f64 {
    let r = rates_closed(alpha);
    let c = (-tau * r.gamma2()).exp() + 0.5 * (-tau * r.gamma1()).exp_m1() * sech_pi_over(alpha);
    c.max(0.0)
}

/// `e^{-tau G2} - (1 - e^{-tau G1}) sech(pi/alpha) / 2`.
pub fn disentanglement_residual(alpha: f64, tau: f64) -> f64 {
    let r = rates_closed(alpha);
    (-tau * r.gamma2()).exp() + 0.5 * (-tau * r.gamma1()).exp_m1() * sech_pi_over(alpha)
}

fn ln_cosh(x: f64) -> f64 {
    let x = x.abs();
    x + (-2.0 * x).exp().ln_1p() - std::f64::consts::LN_2
}

/// Proper time at which the Bell-state concurrence first vanishes.
pub fn disentanglement_time(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!("alpha must be positive and finite, got {alpha}")));
    }
    let r = rates_closed(alpha);
    let (g1, g2) = (r.gamma1(), r.gamma2());
    let lc = ln_cosh(PI / alpha);
    // log of LHS/RHS; same root, no underflow when sech is tiny
    let g = |tau: f64| -tau * g2 - (-0.5 * (-tau * g1).exp_m1()).ln() + lc;

    let mut lo = 0.0;
    let mut hi = 10.0 * 3f64.ln() / g2;
    let mut expansions = 0;
    while g(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        expansions += 1;
        if expansions > 200 || !hi.is_finite() {
            return Err(Error::Numeric(format!("no bracket for the disentanglement time at alpha = {alpha}")));
        }
    }
    for _ in 0..400 {
        if hi - lo <= 1e-12 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Large-alpha limit of the scaled disentanglement time, `pi ln 3 / alpha^3`.
pub fn tau0_scaled_asymptote(alpha: f64) -> f64 {
    PI * 3f64.ln() / alpha.powi(3)
}

/// Proper-time disentanglement asymptote in seconds.
pub fn tau0_asymptotic(accel: f64, k: &PhysicalConstants, mu: f64) -> Result<f64> {
    check_accel(accel)?;
    Ok(disentanglement_prefactor() * k.hbar * k.c.powi(6) / (mu * mu * accel.powi(3)))
}

/// `(3 pi ln 3 / 8) hbar c^5 / mu^2`, in cm^2 s^-4.
pub fn exponent_constant(k: &PhysicalConstants, mu: f64) -> f64 {
    disentanglement_prefactor() * k.hbar * k.c.powi(5) / (mu * mu)
}

/// Lab-frame disentanglement time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LabTime {
    /// Seconds; `+inf` once the exponential overflows.
    pub t0: f64,
    /// Natural log of `t0` in seconds, always finite.
    pub log_t0: f64,
    /// `ln(2 a t0 / c)`.
    pub exponent: f64,
}

pub fn t0_lab(accel: f64, k: &PhysicalConstants, mu: f64) -> Result<LabTime> {
    check_accel(accel)?;
    let exponent = exponent_constant(k, mu) / (accel * accel);
    let log_t0 = (k.c / (2.0 * accel)).ln() + exponent;
    Ok(LabTime {
        t0: log_t0.exp(),
        log_t0,
        exponent,
    })
}

/// Acceleration whose lab-frame disentanglement time equals `target` seconds.
pub fn accel_for_t0(target: f64, k: &PhysicalConstants, mu: f64) -> Result<f64> {
    if !(target > 0.0) || !target.is_finite() {
        return Err(Error::domain(format!("target time must be positive and finite, got {target}")));
    }
    let goal = target.ln();
    let kk = exponent_constant(k, mu);
    // ln t0 is strictly decreasing in ln a
    let f = |ln_a: f64| (k.c / 2.0).ln() - ln_a + kk * (-2.0 * ln_a).exp() - goal;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while f(lo) < 0.0 {
        lo -= 16.0;
    }
    while f(hi) > 0.0 {
        hi += 16.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 * hi.abs().max(1.0) {
            break;
        }
    }
    Ok((0.5 * (lo + hi)).exp())
}

fn check_accel(accel: f64) -> Result<()> {
    if accel > 0.0 && accel.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("acceleration must be positive and finite, got {accel}")))
    }
}

/// Concurrence samples at a fixed alpha.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConcurrenceCurve {
    pub alpha: f64,
    pub samples: Vec<(f64, f64)>,
    pub tau0: Option<f64>,
}

impl ConcurrenceCurve {
    /// Closed-form Bell-state curve on `taus`, with the zero crossing attached.
    pub fn closed(alpha: f64, taus: &[f64]) -> Result<Self> {
        let tau0 = disentanglement_time(alpha)?;
        let samples = taus
            .iter()
            .map(|&t| {
                let c = if t >= tau0 { 0.0 } else { concurrence_closed(alpha, t) };
                (t, c)
            })
            .collect();
        Ok(Self {
            alpha,
            samples,
            tau0: Some(tau0),
        })
    }

    pub fn is_non_increasing(&self, tol: f64) -> bool {
        self.samples.windows(2).all(|w| w[1].1 <= w[0].1 + tol)
    }
}

/// Reference eigenvalue route for tests: `sqrt |eig(rho Y rho* Y)|` via Schur.
#[doc(hidden)]
pub fn concurrence_schur(rho: &Mat4) -> Option<f64> {
    let y = spin_flip();
    let m: Matrix4<Complex64> = rho * y * rho.map(|z| z.conj()) * y;
    let ev: Vector4<Complex64> = m.schur().eigenvalues()?;
    let mut l: Vec<f64> = ev.iter().map(|z| z.re.max(0.0).sqrt()).collect();
    l.sort_by(|a, b| b.total_cmp(a));
    Some((l[0] - l[1] - l[2] - l[3]).max(0.0))
}
