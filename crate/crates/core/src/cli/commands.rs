// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;

use super::config::{ProfileSpec, RunConfig};
use super::table::{Report, Table};
use crate::correlator::{rates_closed, rates_numeric, EpsilonSchedule, MIN_NUMERIC_ALPHA};
use crate::dynamics::{bell_state, density_from_coefficients, evolve_numeric_grid, LindbladSpec};
use crate::entanglement::{
    accel_for_t0, concurrence, concurrence_closed, disentanglement_time, exponent_constant, relaxation_times,
    t0_lab, tau0_asymptotic, tau0_scaled_asymptote,
};
use crate::error::{Error, Result};
use crate::kinematics::{rindler_event, worldline};
use crate::params::{alpha_of, gamma0, unruh_temperature, PhysicalConstants};

pub const RATES_COLUMNS: [&str; 7] = ["alpha", "n", "g_plus", "g_minus", "g_z", "t1", "t2"];
pub const ORACLE_COLUMNS: [&str; 3] = ["g_plus_numeric", "g_minus_numeric", "oracle_residual"];
pub const CURVE_COLUMNS: [&str; 3] = ["tau", "c_closed", "c_numeric"];
pub const SURFACE_COLUMNS: [&str; 3] = ["alpha", "tau", "c"];
pub const TAU0_COLUMNS: [&str; 3] = ["alpha", "tau0", "tau0_asymptotic"];
pub const WORLDLINE_COLUMNS: [&str; 5] = ["tau", "t", "z", "rapidity", "beta"];

/// The exponent constant quoted for the electron, m^2 s^-4.
pub const QUOTED_EXPONENT_CONSTANT: f64 = 3.8e61;

/// Largest RK4 step used for the numeric concurrence column.
const CURVE_DT: f64 = 1e-2;

fn require_positive_alpha(cfg: &RunConfig) -> Result<()> {
    if cfg.alpha_grid.iter().any(|&a| a <= 0.0) {
        return Err(Error::argument("this command needs alpha > 0"));
    }
    Ok(())
}

pub fn rates(cfg: &RunConfig) -> Result<Report> {
    let rows: Vec<Vec<f64>> = cfg
        .alpha_grid
        .par_iter()
        .map(|&alpha| -> Result<Vec<f64>> {
            let r = rates_closed(alpha);
            let t = relaxation_times(alpha);
            let mut row = vec![alpha, r.n, r.g_plus, r.g_minus, r.g_z, t.t1, t.t2];
            if cfg.oracle {
                if alpha >= MIN_NUMERIC_ALPHA {
                    let num = rates_numeric(alpha, &EpsilonSchedule::for_alpha(alpha))?.rates;
                    // relative to the flip rate: g_plus is exponentially small at low alpha
                    let residual =
                        (num.g_plus - r.g_plus).abs().max((num.g_minus - r.g_minus).abs()) / r.gamma1();
                    row.extend([num.g_plus, num.g_minus, residual]);
                } else {
                    row.extend([f64::NAN; 3]);
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let mut columns = RATES_COLUMNS.to_vec();
    if cfg.oracle {
        columns.extend(ORACLE_COLUMNS);
    }
    let mut table = Table::new("rates", &columns);
    rows.into_iter().for_each(|r| table.push(r));
    Ok(Report::Tables { tables: vec![table], scalars: vec![] })
}

pub fn curve(cfg: &RunConfig) -> Result<Report> {
    require_positive_alpha(cfg)?;
    let alpha = match cfg.alpha_grid.as_slice() {
        [a] => *a,
        _ => return Err(Error::argument("curve takes a single --alpha")),
    };
    let tau0 = disentanglement_time(alpha)?;
    let rates = rates_closed(alpha);
    let spec = LindbladSpec::new(rates, CURVE_DT.min(0.05 / rates.stiffness()))?;
    let rho0 = density_from_coefficients(&bell_state())?.density;
    let states = evolve_numeric_grid(&rho0, &spec, &cfg.tau_grid)?;

    let mut table = Table::new("curve", &CURVE_COLUMNS);
    for (&tau, rho) in cfg.tau_grid.iter().zip(&states) {
        table.push(vec![tau, concurrence_closed(alpha, tau), concurrence(rho)?]);
    }
    Ok(Report::Tables { tables: vec![table], scalars: vec![("alpha", alpha), ("tau0", tau0)] })
}

pub fn surface(cfg: &RunConfig) -> Result<Report> {
    require_positive_alpha(cfg)?;
    let per_alpha: Vec<(Vec<Vec<f64>>, Vec<f64>)> = cfg
        .alpha_grid
        .par_iter()
        .map(|&alpha| -> Result<_> {
            let tau0 = disentanglement_time(alpha)?;
            let rows = cfg
                .tau_grid
                .iter()
                .map(|&tau| {
                    let c = if tau >= tau0 { 0.0 } else { concurrence_closed(alpha, tau) };
                    vec![alpha, tau, c]
                })
                .collect();
            Ok((rows, vec![alpha, tau0, tau0_scaled_asymptote(alpha)]))
        })
        .collect::<Result<_>>()?;

    let mut grid = Table::new("surface", &SURFACE_COLUMNS);
    let mut zero_line = Table::new("tau0", &TAU0_COLUMNS);
    for (rows, t0) in per_alpha {
        rows.into_iter().for_each(|r| grid.push(r));
        zero_line.push(t0);
    }
    Ok(Report::Tables { tables: vec![grid, zero_line], scalars: vec![] })
}

pub fn worldline_table(cfg: &RunConfig) -> Result<Report> {
    let c = if cfg.cgs { PhysicalConstants::default().c } else { 1.0 };
    let events = worldline(&cfg.profile.build(), &cfg.tau_grid, c)?;
    let constant = match cfg.profile {
        ProfileSpec::Constant(a) => Some(a),
        _ => None,
    };
    let mut columns = WORLDLINE_COLUMNS.to_vec();
    if constant.is_some() {
        columns.push("closed_form_residual");
    }
    let mut table = Table::new("worldline", &columns);
    for e in events {
        let mut row = vec![e.tau, e.t, e.z, e.rapidity, e.beta];
        if let Some(a) = constant {
            let exact = rindler_event(a, e.tau, c)?;
            // z never vanishes on the hyperbola
            row.push((e.t - exact.t).abs().max((e.z - exact.z).abs()) / exact.t.abs().max(exact.z.abs()));
        }
        table.push(row);
    }
    Ok(Report::Tables { tables: vec![table], scalars: vec![] })
}

pub fn constants(cfg: &RunConfig) -> Result<Report> {
    let k = PhysicalConstants::default();
    let p = cfg.physical;
    let accel = match (p.target_t0, p.accel) {
        (Some(target), _) => accel_for_t0(target, &k, p.mu)?,
        (None, Some(a)) => a,
        (None, None) => return Err(Error::argument("constants needs --accel or --target-t0")),
    };
    let lab = t0_lab(accel, &k, p.mu)?;
    // cm^2 s^-4 -> m^2 s^-4
    let constant_si = exponent_constant(&k, p.mu) * 1e-4;
    let mut pairs = vec![
        ("mu_erg_per_gauss", p.mu),
        ("accel_cm_per_s2", accel),
        ("unruh_temperature_k", unruh_temperature(accel, &k)),
        ("tau0_asymptotic_s", tau0_asymptotic(accel, &k, p.mu)?),
        ("t0_exponent", lab.exponent),
        ("log_t0_s", lab.log_t0),
        ("t0_s", lab.t0),
        ("exponent_constant_m2_per_s4", constant_si),
        ("exponent_constant_rel_dev", constant_si / QUOTED_EXPONENT_CONSTANT - 1.0),
    ];
    if let Some(target) = p.target_t0 {
        pairs.push(("target_t0_s", target));
    }
    if let Some(gap) = p.gap {
        let alpha = alpha_of(accel, gap, &k)?;
        let g0 = gamma0(p.mu, gap, &k)?;
        pairs.extend([("gap_erg", gap), ("alpha", alpha), ("gamma0_per_s", g0)]);
        pairs.push(("tau0_s", disentanglement_time(alpha)? / g0));
    }
    Ok(Report::Pairs(pairs))
}
