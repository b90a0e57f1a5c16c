// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Physical constants and the dimensionless parameterization.
//!
//! Everything physical is Gaussian-cgs: erg, cm, s, gauss, statcoulomb.
//! Downstream modules never see these units. They work with the
//! dimensionless acceleration `alpha = a hbar / (c Delta)`, rates in units
//! of the zero-acceleration spin-flip rate `gamma0` and times in units of
//! `1 / gamma0`. [`OperatingPoint`] converts back.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// A snapshot of the constants used throughout, in Gaussian-cgs units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, erg s.
    pub hbar: f64,
    /// Speed of light, cm/s.
    pub c: f64,
    /// Magnitude of the electron charge, statC.
    pub electron_charge: f64,
    /// Electron mass, g.
    pub electron_mass: f64,
    /// Bohr magneton `e hbar / (2 m c)` (g = 2), erg/G.
    pub bohr_magneton: f64,
    /// Boltzmann constant, erg/K.
    pub boltzmann: f64,
}

/// CODATA 2018 recommended values converted to Gaussian-cgs.
///
/// | constant | value | source |
/// |----------|-------|--------|
/// | hbar | 1.054571817e-27 erg s | exact (h fixed by SI 2019) |
/// | c | 2.99792458e10 cm/s | exact |
/// | e | 4.803204712570263e-10 statC | exact e times 10 c (cgs) |
/// | m_e | 9.1093837015e-28 g | CODATA 2018 |
/// | mu_B | 9.2740100783e-21 erg/G | CODATA 2018 |
/// | k_B | 1.380649e-16 erg/K | exact |
pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    hbar: 1.054_571_817e-27,
    c: 2.997_924_58e10,
    electron_charge: 4.803_204_712_570_263e-10,
    electron_mass: 9.109_383_701_5e-28,
    bohr_magneton: 9.274_010_078_3e-21,
    boltzmann: 1.380_649e-16,
};

impl Default for PhysicalConstants {
    fn default() -> Self {
        CODATA_2018
    }
}

impl PhysicalConstants {
    pub fn new(
        hbar: f64,
        c: f64,
        electron_charge: f64,
        electron_mass: f64,
        bohr_magneton: f64,
        boltzmann: f64,
    ) -> Result<Self> {
        let values = [
            ("hbar", hbar),
            ("c", c),
            ("electron_charge", electron_charge),
            ("electron_mass", electron_mass),
            ("bohr_magneton", bohr_magneton),
            ("boltzmann", boltzmann),
        ];
        for (name, v) in values {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(Self { hbar, c, electron_charge, electron_mass, bohr_magneton, boltzmann })
    }
}

/// Dimensionless acceleration `a hbar / (c Delta)`.
pub fn alpha_of(accel: f64, gap: f64, k: &PhysicalConstants) -> Result<f64> {
    if !(gap > 0.0) {
        return Err(Error::domain(format!("energy gap must be positive, got {gap}")));
    }
    if !(accel >= 0.0) {
        return Err(Error::domain(format!("acceleration must be non-negative, got {accel}")));
    }
    Ok(accel * k.hbar / (k.c * gap))
}

/// Zeeman gap `2 mu B_z` of a spin in a field along z.
pub fn energy_gap(mu: f64, b_z: f64) -> Result<f64> {
    if !(mu > 0.0) || !(b_z > 0.0) {
        return Err(Error::domain(format!(
            "magnetic moment and field must be positive, got mu = {mu}, B_z = {b_z}"
        )));
    }
    Ok(2.0 * mu * b_z)
}

/// Rest-frame acceleration of an electron in the field `E = (0, 0, -E_z)`.
///
/// The electron charge is negative, so `a = -(q/m) E_z = (|e|/m) E_z`
/// and a positive `e_z` (field along -z) pushes the electron along +z.
pub fn acceleration_from_field(e_z: f64, k: &PhysicalConstants) -> f64 {
    let q = -k.electron_charge;
    -(q / k.electron_mass) * e_z
}

/// Spontaneous spin-flip rate at zero acceleration, `(8/3) mu^2 Delta^3 / (hbar^4 c^3)`, in 1/s.
pub fn gamma0(mu: f64, gap: f64, k: &PhysicalConstants) -> Result<f64> {
    if !(mu > 0.0) || !(gap > 0.0) {
        return Err(Error::domain(format!(
            "magnetic moment and gap must be positive, got mu = {mu}, gap = {gap}"
        )));
    }
    let ratio = gap / k.hbar;
    Ok(8.0 / 3.0 * mu * mu * ratio * ratio * ratio / (k.hbar * k.c * k.c * k.c))
}

/// Unruh temperature `hbar |a| / (2 pi c k_B)` in kelvin.
pub fn unruh_temperature(accel: f64, k: &PhysicalConstants) -> f64 {
    k.hbar * accel.abs() / (2.0 * PI * k.c * k.boltzmann)
}

/// One physical configuration: acceleration, gap and moment, together with
/// the dimensionless `alpha` they imply.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OperatingPoint {
    alpha: f64,
    gap: f64,
    mu: f64,
    accel: f64,
    #[serde(skip)]
    constants: PhysicalConstants,
}

impl OperatingPoint {
    pub fn new(accel: f64, gap: f64, mu: f64, constants: PhysicalConstants) -> Result<Self> {
        if !(mu > 0.0) {
            return Err(Error::domain(format!("magnetic moment must be positive, got {mu}")));
        }
        let alpha = alpha_of(accel, gap, &constants)?;
        Ok(Self { alpha, gap, mu, accel, constants })
    }

    /// Builds the point with the acceleration implied by `alpha`.
    pub fn from_alpha(alpha: f64, gap: f64, mu: f64, constants: PhysicalConstants) -> Result<Self> {
        if !(alpha >= 0.0) {
            return Err(Error::domain(format!("alpha must be non-negative, got {alpha}")));
        }
        if !(gap > 0.0) || !(mu > 0.0) {
            return Err(Error::domain(format!(
                "gap and magnetic moment must be positive, got gap = {gap}, mu = {mu}"
            )));
        }
        let accel = alpha * constants.c * gap / constants.hbar;
        Ok(Self { alpha, gap, mu, accel, constants })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gap(&self) -> f64 {
        self.gap
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn accel(&self) -> f64 {
        self.accel
    }

    pub fn constants(&self) -> &PhysicalConstants {
        &self.constants
    }

    /// `gamma0` in 1/s for this gap and moment.
    pub fn gamma0(&self) -> f64 {
        gamma0(self.mu, self.gap, &self.constants).expect("validated at construction")
    }

    /// Converts a rate in `gamma0` units to 1/s.
    pub fn rate_to_physical(&self, scaled: f64) -> f64 {
        scaled * self.gamma0()
    }

    /// Converts a proper time in `1/gamma0` units to seconds.
    pub fn time_to_physical(&self, scaled: f64) -> f64 {
        scaled / self.gamma0()
    }

    pub fn unruh_temperature(&self) -> f64 {
        unruh_temperature(self.accel, &self.constants)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const K: PhysicalConstants = CODATA_2018;

    #[test]
    fn alpha_defining_case() {
        let gap = 1.3e-20;
        let accel = K.c * gap / K.hbar;
        assert_relative_eq!(alpha_of(accel, gap, &K).unwrap(), 1.0, max_relative = 1e-15);
        assert_eq!(alpha_of(0.0, gap, &K).unwrap(), 0.0);
    }

    #[test]
    fn alpha_rejects_bad_gap() {
        assert!(matches!(alpha_of(1.0, 0.0, &K), Err(Error::Domain(_))));
        assert!(matches!(alpha_of(1.0, -2.0, &K), Err(Error::Domain(_))));
    }

    #[test]
    fn alpha_electron_in_one_gauss() {
        // mpmath, 40 digits: 1e26 * hbar / (c * 2 mu_B)
        let gap = energy_gap(K.bohr_magneton, 1.0).unwrap();
        let alpha = alpha_of(1e26, gap, &K).unwrap();
        assert_relative_eq!(alpha, 189_652_205.997_795_26, max_relative = 1e-13);
    }

    #[test]
    fn gap_is_linear_in_field() {
        assert_relative_eq!(energy_gap(K.bohr_magneton, 1.0).unwrap(), 2.0 * K.bohr_magneton);
        let one = energy_gap(9.274e-21, 1.0).unwrap();
        assert_relative_eq!(one, 1.8548e-20, max_relative = 1e-14);
        assert_relative_eq!(energy_gap(9.274e-21, 2.0).unwrap(), 2.0 * one);
        assert!(energy_gap(0.0, 1.0).is_err());
        assert!(energy_gap(1.0, -1.0).is_err());
    }

    #[test]
    fn field_acceleration_sign_and_magnitude() {
        assert_eq!(acceleration_from_field(0.0, &K), 0.0);
        assert!(acceleration_from_field(-1.0, &K) < 0.0);
        assert!(acceleration_from_field(1.0, &K) > 0.0);
        // |e|/m from mpmath
        assert_relative_eq!(
            acceleration_from_field(1.0, &K),
            5.272_809_742_089_733e17,
            max_relative = 1e-13
        );
    }

    #[test]
    fn gamma0_scaling_and_value() {
        let mu = K.bohr_magneton;
        let gap = 2.0 * mu;
        let g = gamma0(mu, gap, &K).unwrap();
        assert_relative_eq!(gamma0(2.0 * mu, gap, &K).unwrap(), 4.0 * g, max_relative = 1e-15);
        assert_relative_eq!(gamma0(mu, 2.0 * gap, &K).unwrap(), 8.0 * g, max_relative = 1e-15);
        // mpmath, 40 digits
        assert_relative_eq!(g, 4.391_670_870_062_758e-23, max_relative = 1e-13);
        assert!(gamma0(0.0, gap, &K).is_err());
        assert!(gamma0(mu, -gap, &K).is_err());
    }

    #[test]
    fn unruh_temperature_values() {
        assert_eq!(unruh_temperature(0.0, &K), 0.0);
        let t = unruh_temperature(2.47e22, &K);
        assert_relative_eq!(t, 1.001_588_340_118_072, max_relative = 1e-13);
        assert_relative_eq!(unruh_temperature(4.94e22, &K), 2.0 * t, max_relative = 1e-15);
    }

    #[test]
    fn bohr_magneton_matches_definition() {
        let derived = K.electron_charge * K.hbar / (2.0 * K.electron_mass * K.c);
        assert_relative_eq!(derived, K.bohr_magneton, max_relative = 1e-9);
    }

    #[test]
    fn constants_must_be_positive() {
        assert!(PhysicalConstants::new(1.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_ok());
        assert!(PhysicalConstants::new(1.0, 0.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, 1.0, 1.0, f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn alpha_round_trips_on_log_grid() {
        for i in 0..50 {
            let accel = 10f64.powf(10.0 + 20.0 * i as f64 / 49.0);
            let gap = 10f64.powf(-24.0 + 8.0 * ((i * 7) % 50) as f64 / 49.0);
            let alpha = alpha_of(accel, gap, &K).unwrap();
            let back = alpha * gap * K.c / K.hbar;
            assert_relative_eq!(back, accel, max_relative = 1e-12);
        }
    }

    #[test]
    fn operating_point_is_consistent() {
        let gap = energy_gap(K.bohr_magneton, 1e4).unwrap();
        let p = OperatingPoint::new(3e25, gap, K.bohr_magneton, K).unwrap();
        let rel = (p.alpha() * K.c * p.gap() - p.accel() * K.hbar).abs() / (p.accel() * K.hbar);
        assert!(rel < 1e-12);
        let q = OperatingPoint::from_alpha(p.alpha(), gap, K.bohr_magneton, K).unwrap();
        assert_relative_eq!(q.accel(), p.accel(), max_relative = 1e-12);
        assert_relative_eq!(p.time_to_physical(1.0) * p.gamma0(), 1.0);
        assert!(OperatingPoint::new(1.0, gap, 0.0, K).is_err());
    }
}
