// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Globally adaptive 21-point Gauss-Kronrod quadrature and polynomial
//! extrapolation to zero.
//!
//! The integrator keeps a list of panels and always bisects the panel with
//! the largest refinable error. The final sum runs over panels sorted by
//! their left endpoint, so the result does not depend on refinement order.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

// Abscissae and weights of the 21-point Kronrod rule and its embedded
// 10-point Gauss rule (QUADPACK qk21).
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_399_858,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Values that can be integrated: real or complex scalars.
pub trait Integrand: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    const ZERO: Self;
    fn magnitude(self) -> f64;
}

impl Integrand for f64 {
    const ZERO: Self = 0.0;
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Integrand for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { abs_tol: 1e-12, rel_tol: 1e-13, max_panels: 20_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    /// Sum of the per-panel error estimates.
    pub error: f64,
    /// Set when refinement stopped because every panel reached its
    /// floating-point floor before the requested tolerance.
    pub roundoff_limited: bool,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    lo: f64,
    hi: f64,
    value: T,
    error: f64,
    floor: f64,
}

impl<T> Panel<T> {
    fn refinable(&self) -> f64 {
        self.error - self.floor
    }
}

fn gk21<T: Integrand, F: Fn(f64) -> T>(f: &F, lo: f64, hi: f64) -> Panel<T> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = f(center);

    let mut kronrod = f_center * WGK[10];
    let mut gauss = T::ZERO;
    let mut res_abs = f_center.magnitude() * WGK[10];
    let mut values = [(T::ZERO, T::ZERO); 10];

    for (j, (&x, &w)) in XGK[..10].iter().zip(&WGK[..10]).enumerate() {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[j] = (f1, f2);
        kronrod = kronrod + (f1 + f2) * w;
        res_abs += w * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[j / 2];
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK[10] * (f_center - mean).magnitude();
    for (j, (f1, f2)) in values.iter().enumerate() {
        res_asc += WGK[j] * ((*f1 - mean).magnitude() + (*f2 - mean).magnitude());
    }

    let scale = half.abs();
    let res_abs = res_abs * scale;
    let res_asc = res_asc * scale;
    let mut error = ((kronrod - gauss) * half).magnitude();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * res_abs;

    Panel { lo, hi, value: kronrod * half, error: error.max(floor), floor }
}

/// Integrates `f` over `[lo, hi]`, pre-splitting at the interior `breaks`.
pub fn integrate<T, F>(f: F, lo: f64, hi: f64, breaks: &[f64], cfg: &QuadConfig) -> Result<Estimate<T>>
where
    T: Integrand,
    F: Fn(f64) -> T,
{
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::argument(format!("integration limits must be finite, got [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(Estimate { value: T::ZERO, error: 0.0, roundoff_limited: false, panels: 0 });
    }
    if lo > hi {
        let e = integrate(f, hi, lo, breaks, cfg)?;
        return Ok(Estimate { value: e.value * -1.0, ..e });
    }

    let mut edges = vec![lo];
    let mut interior: Vec<f64> = breaks.iter().copied().filter(|&b| b > lo && b < hi).collect();
    interior.sort_by(f64::total_cmp);
    interior.dedup();
    edges.extend(interior);
    edges.push(hi);

    let mut panels: Vec<Panel<T>> = edges.windows(2).map(|w| gk21(&f, w[0], w[1])).collect();

    loop {
        let (value, error) = total(&panels);
        let tol = cfg.abs_tol.max(cfg.rel_tol * value.magnitude());
        if error <= tol {
            return Ok(finish(panels, false));
        }

        let (worst, refinable) = panels
            .iter()
            .enumerate()
            .map(|(i, p)| (i, p.refinable()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least one panel");
        if refinable <= 0.0 {
            return Ok(finish(panels, true));
        }
        if panels.len() >= cfg.max_panels {
            return Err(Error::Quadrature { lo, hi, residual: error });
        }

        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.lo + p.hi);
        if mid <= p.lo || mid >= p.hi {
            // Panel is down to adjacent floats; nothing left to refine.
            panels.push(Panel { floor: p.error, ..p });
            continue;
        }
        panels.push(gk21(&f, p.lo, mid));
        panels.push(gk21(&f, mid, p.hi));
    }
}

fn total<T: Integrand>(panels: &[Panel<T>]) -> (T, f64) {
    panels.iter().fold((T::ZERO, 0.0), |(v, e), p| (v + p.value, e + p.error))
}

fn finish<T: Integrand>(mut panels: Vec<Panel<T>>, roundoff_limited: bool) -> Estimate<T> {
    panels.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let (value, error) = total(&panels);
    Estimate { value, error, roundoff_limited, panels: panels.len() }
}

/// Neville extrapolation of `(x_i, y_i)` to `x = 0`.
///
/// Returns the extrapolant through all points and the absolute difference
/// between it and the extrapolant through all points but the first.
pub fn extrapolate_to_zero<T: Integrand>(xs: &[f64], ys: &[T]) -> Result<(T, f64)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::argument("extrapolation needs at least two matched samples"));
    }
    let n = xs.len();
    // table[i] holds P_{i..i+k} evaluated at zero after round k.
    let mut table: Vec<T> = ys.to_vec();
    let mut second_best = ys[n - 1];
    for k in 1..n {
        for i in 0..n - k {
            let (xi, xk) = (xs[i], xs[i + k]);
            if xi == xk {
                return Err(Error::argument("extrapolation abscissae must be distinct"));
            }
            table[i] = (table[i] * -xk - table[i + 1] * -xi) * (1.0 / (xi - xk));
        }
        if k == n - 2 {
            second_best = table[1];
        }
    }
    if n == 2 {
        second_best = ys[1];
    }
    Ok((table[0], (table[0] - second_best).magnitude()))
}
