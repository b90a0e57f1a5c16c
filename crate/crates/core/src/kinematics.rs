// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Proper-time worldlines for motion along z.
//!
//! A worldline is built from the rest-frame acceleration `a(tau)`:
//! rapidity `r = (1/c) int a dtau`, then `t = int cosh r dtau` and
//! `z = z0 + c int sinh r dtau`. For `a(0) > 0` the origin is
//! `z0 = c^2 / a(0)` so a constant profile lands exactly on the Rindler
//! hyperbola; otherwise `z0 = 0`.

use std::fmt;
use std::sync::Arc;

use nalgebra::Vector3;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadConfig};

/// Rest-frame acceleration as a function of proper time.
#[derive(Clone)]
pub struct AccelerationProfile {
    a_of_tau: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    description: String,
}

impl fmt::Debug for AccelerationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AccelerationProfile").field("description", &self.description).finish()
    }
}

impl AccelerationProfile {
    pub fn new(description: impl Into<String>, a_of_tau: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self { a_of_tau: Arc::new(a_of_tau), description: description.into() }
    }

    pub fn constant(accel: f64) -> Self {
        Self::new(format!("constant:{accel}"), move |_| accel)
    }

    /// `a0 sin(omega tau)`.
    pub fn sinusoid(a0: f64, omega: f64) -> Self {
        Self::new(format!("sinusoid:{a0},{omega}"), move |tau| a0 * (omega * tau).sin())
    }

    pub fn zero() -> Self {
        Self::new("zero", |_| 0.0)
    }

    pub fn accel(&self, tau: f64) -> f64 {
        (self.a_of_tau)(tau)
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WorldlineEvent {
    pub tau: f64,
    pub t: f64,
    pub z: f64,
    pub rapidity: f64,
    pub beta: f64,
}

fn quad_config(scale: f64) -> QuadConfig {
    QuadConfig { abs_tol: 1e-12 * scale, rel_tol: 1e-13, ..QuadConfig::default() }
}

/// Rapidity accumulated between proper times `from` and `to`.
pub fn rapidity_between(profile: &AccelerationProfile, from: f64, to: f64, c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::domain(format!("speed of light must be positive, got {c}")));
    }
    // 1e-12 absolute in rapidity.
    let est = integrate(|s| profile.accel(s), from, to, &[], &quad_config(c))?;
    if !est.value.is_finite() {
        return Err(Error::domain(format!(
            "acceleration profile '{}' is not finite on [{from}, {to}]",
            profile.description()
        )));
    }
    Ok(est.value / c)
}

/// Rapidity `r(tau) = (1/c) int_0^tau a(s) ds`.
pub fn rapidity(profile: &AccelerationProfile, tau: f64, c: f64) -> Result<f64> {
    if !(tau >= 0.0) {
        return Err(Error::domain(format!("proper time must be non-negative, got {tau}")));
    }
    rapidity_between(profile, 0.0, tau, c)
}

/// Cached rapidity on a uniform mesh, interpolated with cubic Hermite
/// segments using the exact slope `a(tau)/c` at the nodes.
struct RapidityTable {
    step: f64,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl RapidityTable {
    const MIN_PANELS: usize = 4096;

    fn build(profile: &AccelerationProfile, tau_max: f64, c: f64, grid_len: usize) -> Result<Self> {
        let panels = Self::MIN_PANELS.max(8 * grid_len);
        let step = tau_max / panels as f64;
        let mut values = Vec::with_capacity(panels + 1);
        let mut slopes = Vec::with_capacity(panels + 1);
        let mut r = 0.0;
        for k in 0..=panels {
            let tau = k as f64 * step;
            let a = profile.accel(tau);
            if !a.is_finite() {
                return Err(Error::domain(format!(
                    "acceleration profile '{}' is not finite at tau = {tau}",
                    profile.description()
                )));
            }
            if k > 0 {
                r += rapidity_between(profile, tau - step, tau, c)?;
            }
            values.push(r);
            slopes.push(a / c);
        }
        Ok(Self { step, values, slopes })
    }

    fn eval(&self, tau: f64) -> f64 {
        let last = self.values.len() - 1;
        let k = ((tau / self.step).floor() as usize).min(last - 1);
        let h = self.step;
        let s = (tau - k as f64 * h) / h;
        let (y0, y1) = (self.values[k], self.values[k + 1]);
        let (m0, m1) = (self.slopes[k] * h, self.slopes[k + 1] * h);
        let s2 = s * s;
        let s3 = s2 * s;
        (2.0 * s3 - 3.0 * s2 + 1.0) * y0
            + (s3 - 2.0 * s2 + s) * m0
            + (-2.0 * s3 + 3.0 * s2) * y1
            + (s3 - s2) * m1
    }
}

/// Events along the worldline at each proper time of `tau_grid`.
///
/// The grid must start at 0 and increase strictly.
pub fn worldline(profile: &AccelerationProfile, tau_grid: &[f64], c: f64) -> Result<Vec<WorldlineEvent>> {
    if !(c > 0.0) {
        return Err(Error::domain(format!("speed of light must be positive, got {c}")));
    }
    match tau_grid.first() {
        None => return Err(Error::argument("proper-time grid is empty")),
        Some(&first) if first != 0.0 => {
            return Err(Error::argument(format!("proper-time grid must start at 0, got {first}")))
        }
        _ => {}
    }
    if let Some(w) = tau_grid.windows(2).find(|w| !(w[1] > w[0])) {
        return Err(Error::argument(format!(
            "proper-time grid must be strictly ascending ({} then {})",
            w[0], w[1]
        )));
    }

    let a0 = profile.accel(0.0);
    if !a0.is_finite() {
        return Err(Error::domain("acceleration is not finite at tau = 0"));
    }
    let z0 = if a0 > 0.0 { c * c / a0 } else { 0.0 };
    let mut events = vec![WorldlineEvent { tau: 0.0, t: 0.0, z: z0, rapidity: 0.0, beta: 0.0 }];
    let tau_max = *tau_grid.last().expect("non-empty");
    if tau_max == 0.0 {
        return Ok(events);
    }

    let table = RapidityTable::build(profile, tau_max, c, tau_grid.len())?;
    // t is accumulated as tau + int (cosh r - 1), which is exact for free motion.
    let mut excess_t = 0.0;
    let mut z = z0;
    let mut r = 0.0;
    for w in tau_grid.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let span = hi - lo;
        let dt = integrate(
            |s| {
                let h = (0.5 * table.eval(s)).sinh();
                2.0 * h * h
            },
            lo,
            hi,
            &[],
            &quad_config(span),
        )?;
        let dz = integrate(|s| table.eval(s).sinh(), lo, hi, &[], &quad_config(span))?;
        excess_t += dt.value;
        z += c * dz.value;
        r += rapidity_between(profile, lo, hi, c)?;
        events.push(WorldlineEvent { tau: hi, t: hi + excess_t, z, rapidity: r, beta: r.tanh() });
    }
    Ok(events)
}

/// Closed-form event on the hyperbola of constant proper acceleration.
pub fn rindler_event(accel: f64, tau: f64, c: f64) -> Result<WorldlineEvent> {
    if !(accel > 0.0) {
        return Err(Error::domain(format!(
            "Rindler closed form needs positive acceleration, got {accel}; use worldline for free motion"
        )));
    }
    if !(c > 0.0) {
        return Err(Error::domain(format!("speed of light must be positive, got {c}")));
    }
    let r = accel * tau / c;
    Ok(WorldlineEvent {
        tau,
        t: c / accel * r.sinh(),
        z: c * c / accel * r.cosh(),
        rapidity: r,
        beta: r.tanh(),
    })
}

/// Thomas precession angular velocity `gamma^2/(gamma+1) (dbeta/dt x beta)`.
pub fn thomas_omega(beta: Vector3<f64>, dbeta_dt: Vector3<f64>) -> Result<Vector3<f64>> {
    let b2 = beta.norm_squared();
    if !(b2 < 1.0) {
        return Err(Error::domain(format!("|beta| must be below 1, got {}", b2.sqrt())));
    }
    let gamma = 1.0 / (1.0 - b2).sqrt();
    Ok(dbeta_dt.cross(&beta) * (gamma * gamma / (gamma + 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn rapidity_of_simple_profiles() {
        let c = 3.0;
        assert_relative_eq!(rapidity(&AccelerationProfile::constant(2.0), 1.5, c).unwrap(), 1.0, max_relative = 1e-14);
        assert_eq!(rapidity(&AccelerationProfile::zero(), 4.0, c).unwrap(), 0.0);
        let (a0, w) = (1.7, 2.3);
        let p = AccelerationProfile::sinusoid(a0, w);
        for &tau in &[0.1, 1.0, 3.7, 12.0] {
            let exact = a0 / (c * w) * (1.0 - (w * tau).cos());
            assert!((rapidity(&p, tau, c).unwrap() - exact).abs() < 1e-10);
        }
        assert!(rapidity(&p, -1.0, c).is_err());
    }

    #[test]
    fn rindler_closed_form() {
        let e = rindler_event(1.0, 0.0, 1.0).unwrap();
        assert_eq!((e.t, e.z), (0.0, 1.0));
        let e = rindler_event(1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(e.t, 1.175_201_193_643_801_4, max_relative = 1e-15);
        assert_relative_eq!(e.z, 1.543_080_634_815_243_7, max_relative = 1e-15);
        assert!(rindler_event(0.0, 1.0, 1.0).is_err());
        assert!(rindler_event(-2.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn hyperbola_invariant_holds() {
        let (a, c): (f64, f64) = (2.5e20, 2.997_924_58e10);
        let target = c.powi(4) / (a * a);
        for tau in linspace(0.0, 5.0 * c / a, 100) {
            let e = rindler_event(a, tau, c).unwrap();
            let lhs = e.z * e.z - c * c * e.t * e.t;
            assert_relative_eq!(lhs, target, max_relative = 1e-10);
        }
    }

    #[test]
    fn constant_profile_matches_rindler() {
        let (a, c) = (1.0, 1.0);
        let grid = linspace(0.0, 10.0 * c / a, 201);
        let events = worldline(&AccelerationProfile::constant(a), &grid, c).unwrap();
        for e in &events {
            let exact = rindler_event(a, e.tau, c).unwrap();
            assert_relative_eq!(e.z, exact.z, max_relative = 1e-8);
            if e.tau > 0.0 {
                assert_relative_eq!(e.t, exact.t, max_relative = 1e-8);
            }
            assert!((e.beta.abs()) < 1.0);
        }
    }

    #[test]
    fn zero_profile_is_at_rest() {
        let grid = linspace(0.0, 7.0, 15);
        let events = worldline(&AccelerationProfile::zero(), &grid, 1.0).unwrap();
        for e in events {
            assert_eq!(e.t, e.tau);
            assert_eq!(e.z, 0.0);
            assert_eq!(e.beta, 0.0);
        }
    }

    #[test]
    fn line_element_residual_is_small() {
        let p = AccelerationProfile::sinusoid(1.0, 1.3);
        let grid = linspace(0.0, 3.0, 3001);
        let ev = worldline(&p, &grid, 1.0).unwrap();
        for w in ev.windows(3) {
            let h = w[2].tau - w[0].tau;
            let dt = (w[2].t - w[0].t) / h;
            let dz = (w[2].z - w[0].z) / h;
            assert!((dt * dt - dz * dz - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn bad_grids_are_rejected() {
        let p = AccelerationProfile::constant(1.0);
        assert!(matches!(worldline(&p, &[], 1.0), Err(Error::Argument(_))));
        assert!(matches!(worldline(&p, &[0.5, 1.0], 1.0), Err(Error::Argument(_))));
        assert!(matches!(worldline(&p, &[0.0, 2.0, 1.0], 1.0), Err(Error::Argument(_))));
        let nan = AccelerationProfile::new("bad", |t| if t > 0.5 { f64::NAN } else { 1.0 });
        assert!(matches!(worldline(&nan, &[0.0, 1.0], 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn thomas_examples() {
        let w = thomas_omega(Vector3::new(0.6, 0.0, 0.0), Vector3::new(0.0, 0.1, 0.0)).unwrap();
        // gamma = 1.25, gamma^2/(gamma+1) = 25/36; (0,0.1,0) x (0.6,0,0) = (0,0,-0.06)
        assert_relative_eq!(w.z, -25.0 / 36.0 * 0.06, max_relative = 1e-15);
        assert_eq!((w.x, w.y), (0.0, 0.0));
        assert_eq!(thomas_omega(Vector3::zeros(), Vector3::new(1.0, 2.0, 3.0)).unwrap(), Vector3::zeros());
        assert!(thomas_omega(Vector3::new(0.8, 0.6, 0.0), Vector3::zeros()).is_err());
    }

    proptest! {
        #[test]
        fn thomas_vanishes_for_collinear_motion(
            bx in -0.5f64..0.5, by in -0.5f64..0.5, bz in -0.5f64..0.5, lambda in -10f64..10.0
        ) {
            let beta = Vector3::new(bx, by, bz);
            let w = thomas_omega(beta, beta * lambda).unwrap();
            prop_assert!(w.norm() < 1e-14);
        }

        #[test]
        fn rapidity_is_additive(t1 in 0.0f64..5.0, t2 in 0.0f64..5.0, a0 in 0.1f64..3.0, w in 0.1f64..4.0) {
            let p = AccelerationProfile::sinusoid(a0, w);
            let whole = rapidity(&p, t1 + t2, 1.0).unwrap();
            let split = rapidity(&p, t1, 1.0).unwrap() + rapidity_between(&p, t1, t1 + t2, 1.0).unwrap();
            prop_assert!((whole - split).abs() < 1e-11);
        }
    }
}
