// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Magnetic-field Wightman functions and the Markovian rates built from them.
//!
//! Rates are reported in units of `gamma0` as functions of the dimensionless
//! acceleration `alpha`. The closed forms are
//!
//! ```text
//! g_plus  = (1 + alpha^2) n
//! g_minus = (1 + alpha^2) (n + 1)
//! g_z     = alpha^3 / (4 pi)
//! n       = 1 / (exp(2 pi / alpha) - 1)
//! ```
//!
//! [`rates_numeric`] recomputes them without contour integration: it
//! integrates the iε-regulated correlator along the real line and
//! extrapolates the regulator to zero.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::PhysicalConstants;
use crate::quadrature::{extrapolate_to_zero, integrate, QuadConfig};

/// Free-field correlator `4 hbar c / pi * (x - x')^{-4}` for a (regulated)
/// squared Minkowski interval `(x - x')^2 = c^2 dt^2 - |dx|^2`.
pub fn wightman_flat(interval_sq: Complex64, k: &PhysicalConstants) -> Result<Complex64> {
    if interval_sq == Complex64::new(0.0, 0.0) {
        return Err(Error::Singularity("flat-space correlator at zero interval".into()));
    }
    Ok(4.0 * k.hbar * k.c / PI / (interval_sq * interval_sq))
}

/// Correlator along the uniformly accelerated path at proper-time
/// separation `s - i eps`: `hbar a^4 / (4 pi c^7) sinh^{-4}[a (s - i eps) / 2c]`.
pub fn wightman_rindler(accel: f64, s: f64, eps: f64, k: &PhysicalConstants) -> Result<Complex64> {
    if !(accel > 0.0) {
        return Err(Error::domain(format!("acceleration must be positive, got {accel}")));
    }
    if s == 0.0 && eps == 0.0 {
        return Err(Error::Singularity("Rindler correlator on the diagonal without a regulator".into()));
    }
    let x = Complex64::new(s, -eps) * (accel / (2.0 * k.c));
    let sh = x.sinh();
    let sh2 = sh * sh;
    let prefactor = k.hbar * accel.powi(4) / (4.0 * PI * k.c.powi(7));
    Ok(prefactor / (sh2 * sh2))
}

/// Bose occupation `1 / (exp(2 pi / alpha) - 1)` at the Unruh temperature.
///
/// Non-positive `alpha` is the inertial vacuum and returns 0.
pub fn bose_occupation(alpha: f64) -> f64 {
    if !(alpha > 0.0) {
        return 0.0;
    }
    1.0 / (2.0 * PI / alpha).exp_m1()
}

/// Transition and dephasing rates at one operating point, in `gamma0` units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateSet {
    pub alpha: f64,
    /// Bose occupation.
    pub n: f64,
    /// Upward (absorption) rate.
    pub g_plus: f64,
    /// Downward (emission) rate.
    pub g_minus: f64,
    /// Pure dephasing rate.
    pub g_z: f64,
}

impl RateSet {
    /// Zero-acceleration rates: spontaneous emission only.
    pub const VACUUM: RateSet = RateSet { alpha: 0.0, n: 0.0, g_plus: 0.0, g_minus: 1.0, g_z: 0.0 };

    /// Population relaxation rate `1/T1 = g_minus + g_plus`.
    pub fn gamma1(&self) -> f64 {
        self.g_minus + self.g_plus
    }

    /// Coherence decay rate `1/T2 = (g_minus + g_plus)/2 + 2 g_z`.
    pub fn gamma2(&self) -> f64 {
        0.5 * self.gamma1() + 2.0 * self.g_z
    }

    /// Equilibrium polarization `(g_minus - g_plus)/(g_minus + g_plus)`.
    pub fn polarization(&self) -> f64 {
        let total = self.gamma1();
        if total == 0.0 {
            0.0
        } else {
            (self.g_minus - self.g_plus) / total
        }
    }

    /// Largest rate entering the master equation, used for step-size guards.
    pub fn stiffness(&self) -> f64 {
        self.g_minus.max(self.g_plus).max(4.0 * self.g_z)
    }
}

/// Closed-form rates. Non-positive `alpha` gives [`RateSet::VACUUM`].
pub fn rates_closed(alpha: f64) -> RateSet {
    if !(alpha > 0.0) {
        return RateSet::VACUUM;
    }
    let n = bose_occupation(alpha);
    let w = 1.0 + alpha * alpha;
    RateSet { alpha, n, g_plus: w * n, g_minus: w * (n + 1.0), g_z: alpha.powi(3) / (4.0 * PI) }
}

/// Regulator values (in units of c/a) and the half-width of the
/// integration window for [`rates_numeric`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsilonSchedule {
    epsilons: Vec<f64>,
    window: f64,
}

impl Default for EpsilonSchedule {
    fn default() -> Self {
        Self { epsilons: vec![0.2, 0.1, 0.05, 0.025], window: 40.0 }
    }
}

impl EpsilonSchedule {
    pub fn new(epsilons: Vec<f64>, window: f64) -> Result<Self> {
        if epsilons.len() < 2 {
            return Err(Error::argument("epsilon schedule needs at least two regulators"));
        }
        if epsilons.iter().any(|&e| !(e > 0.0)) {
            return Err(Error::argument("epsilon regulators must be strictly positive"));
        }
        if epsilons.windows(2).any(|w| !(w[1] < w[0])) {
            return Err(Error::argument("epsilon regulators must be strictly decreasing"));
        }
        if !(window > 0.0 && window.is_finite()) {
            return Err(Error::argument(format!("integration window must be positive, got {window}")));
        }
        Ok(Self { epsilons, window })
    }

    /// Default regulators shrunk by `alpha` below 1, keeping `eps/alpha`
    /// small so the `exp(eps/alpha)` regulator factor stays near-polynomial.
    pub fn for_alpha(alpha: f64) -> Self {
        let d = Self::default();
        let f = alpha.clamp(MIN_NUMERIC_ALPHA, 1.0);
        Self { epsilons: d.epsilons.iter().map(|e| e * f).collect(), window: d.window }
    }

    pub fn epsilons(&self) -> &[f64] {
        &self.epsilons
    }

    pub fn window(&self) -> f64 {
        self.window
    }
}

/// Quadrature rates with their extrapolation residuals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericRates {
    pub rates: RateSet,
    /// Absolute residuals of the extrapolation for (g_plus, g_minus, g_z).
    pub residual: [f64; 3],
}

impl NumericRates {
    /// Largest residual relative to its scale: the total flip rate for
    /// `g_plus` and `g_minus` (`g_plus` is exponentially small at low
    /// alpha), `g_z` for itself.
    pub fn relative_residual(&self) -> f64 {
        let r = &self.rates;
        let flip = (r.g_plus + r.g_minus).abs();
        [(self.residual[0], flip), (self.residual[1], flip), (self.residual[2], r.g_z.abs())]
            .iter()
            .map(|&(e, v)| if v == 0.0 { e } else { e / v })
            .fold(0.0, f64::max)
    }
}

/// Below this alpha the phase `exp(-i s / alpha)` oscillates too fast for
/// the fixed window and regulator schedule.
pub const MIN_NUMERIC_ALPHA: f64 = 0.1;

/// Relative extrapolation residual above which [`rates_numeric`] fails.
pub const EXTRAPOLATION_TOLERANCE: f64 = 1e-3;

// int_{-S}^{S} exp(-i omega s) / sinh^4((s - i eps)/2) ds
fn regulated_integral(omega: f64, eps: f64, window: f64) -> Result<Complex64> {
    let integrand = |s: f64| {
        let sh = (Complex64::new(s, -eps) * 0.5).sinh();
        let sh2 = sh * sh;
        Complex64::new(0.0, -omega * s).exp() / (sh2 * sh2)
    };
    let mut breaks = vec![0.0];
    for m in [1.0, 4.0, 16.0] {
        breaks.push(m * eps);
        breaks.push(-m * eps);
    }
    breaks.extend([1.0, -1.0]);
    let cfg = QuadConfig { abs_tol: 1e-13, rel_tol: 1e-13, max_panels: 50_000 };
    Ok(integrate(integrand, -window, window, &breaks, &cfg)?.value)
}

/// Rates from direct quadrature of the iε-regulated correlator.
///
/// For each regulator the three rate integrals are evaluated over
/// `|s| <= window` (s in units of c/a), then Neville-extrapolated to
/// `eps -> 0`. Refuses `alpha < 0.1`.
pub fn rates_numeric(alpha: f64, schedule: &EpsilonSchedule) -> Result<NumericRates> {
    if !(alpha >= MIN_NUMERIC_ALPHA) {
        return Err(Error::domain(format!(
            "numeric rates need alpha >= {MIN_NUMERIC_ALPHA}; use rates_closed for alpha = {alpha}"
        )));
    }
    // g_pm = 3 alpha^3/(16 pi) Re int e^{-+ i s/alpha} sinh^-4((s - i eps)/2) ds
    // g_z  = half the zero-frequency value
    let scale = 3.0 * alpha.powi(3) / (16.0 * PI);
    let omegas = [1.0 / alpha, -1.0 / alpha, 0.0];
    let jobs: Vec<(usize, f64)> =
        schedule.epsilons.iter().flat_map(|&e| (0..3).map(move |j| (j, e))).collect();
    let values: Vec<f64> = jobs
        .par_iter()
        .map(|&(j, eps)| regulated_integral(omegas[j], eps, schedule.window).map(|v| v.re * scale))
        .collect::<Result<_>>()?;

    let mut extrapolated = [0.0; 3];
    let mut residual = [0.0; 3];
    for j in 0..3 {
        let ys: Vec<f64> = values.iter().skip(j).step_by(3).copied().collect();
        let (v, r) = extrapolate_to_zero(&schedule.epsilons, &ys)?;
        extrapolated[j] = v;
        residual[j] = r;
    }
    extrapolated[2] *= 0.5;
    residual[2] *= 0.5;

    let out = NumericRates {
        rates: RateSet {
            alpha,
            n: bose_occupation(alpha),
            g_plus: extrapolated[0],
            g_minus: extrapolated[1],
            g_z: extrapolated[2],
        },
        residual,
    };
    let rel = out.relative_residual();
    if !(rel <= EXTRAPOLATION_TOLERANCE) {
        return Err(Error::Extrapolation { residual: rel, tolerance: EXTRAPOLATION_TOLERANCE });
    }
    Ok(out)
}
