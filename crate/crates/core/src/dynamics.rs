// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Two-qubit states and their evolution under the accelerated-spin channel.
//!
//! A state is stored either as a 4x4 [`DensityMatrix`] or as the sixteen
//! real coefficients of `rho = sum r_ij sigma_i (x) sigma_j`
//! ([`PauliCoefficients`]). The first qubit is the accelerated spin and the
//! only one the channel acts on; the second is a spectator.
//!
//! Everything here lives in the rotating frame that removes the local
//! Zeeman precession `exp(i H' tau)`. That unitary acts on the first qubit
//! alone, so populations in the sigma_3 basis and the concurrence are the
//! same in either frame.
//!
//! Sign convention: the jump operators follow `sigma_- = (sigma_1 + i sigma_2)/2`,
//! so the lower Zeeman level is `sigma_3 = +1` and the equilibrium
//! polarization `tanh(pi/alpha)` is positive.

use serde::Serialize;

use crate::correlator::RateSet;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, hermiticity_defect, kron, pauli, trace, Mat2, Mat4, ONE, ZERO};
use num_complex::Complex64;

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const EIGEN_TOL: f64 = -1e-10;

/// Real expansion coefficients over `sigma_i (x) sigma_j`, `i, j in 0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PauliCoefficients {
    r: [[f64; 4]; 4],
}

impl PauliCoefficients {
    /// Wraps the coefficient array; `r[0][0]` must be 1/4.
    pub fn new(r: [[f64; 4]; 4]) -> Result<Self> {
        if r.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Validation("coefficients must be finite".into()));
        }
        if (r[0][0] - 0.25).abs() > TRACE_TOL {
            return Err(Error::Validation(format!("r_00 must be 1/4 for unit trace, got {}", r[0][0])));
        }
        Ok(Self { r })
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.r[i][j]
    }

    pub fn as_array(&self) -> &[[f64; 4]; 4] {
        &self.r
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.r
            .iter()
            .flatten()
            .zip(other.r.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// A validated two-qubit density operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    m: Mat4,
}

impl DensityMatrix {
    /// Checks Hermiticity, unit trace and positivity (eigenvalues above -1e-10).
    pub fn new(m: Mat4) -> Result<Self> {
        validate_hermitian_trace(&m)?;
        let rho = Self { m };
        let min = rho.min_eigenvalue();
        if min < EIGEN_TOL {
            return Err(Error::Validation(format!("negative eigenvalue {min:.3e}")));
        }
        Ok(rho)
    }

    /// The maximally mixed state `1/4`.
    pub fn maximally_mixed() -> Self {
        Self { m: Mat4::identity() * Complex64::new(0.25, 0.0) }
    }

    /// Projector onto a normalized pure state.
    pub fn pure(psi: &nalgebra::Vector4<Complex64>) -> Result<Self> {
        let norm = psi.norm();
        if !(norm > 0.0) {
            return Err(Error::Validation("state vector has zero norm".into()));
        }
        let v = psi / Complex64::new(norm, 0.0);
        Ok(Self { m: v * v.adjoint() })
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_eigen(&self.m).0[0]
    }

    pub fn purity(&self) -> f64 {
        trace(&(self.m * self.m)).re
    }

    /// Largest imaginary part among the entries.
    pub fn max_imag(&self) -> f64 {
        self.m.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Reduced state of the second (spectator) qubit.
    pub fn reduced_second(&self) -> Mat2 {
        Mat2::from_fn(|b, bp| self.m[(b, bp)] + self.m[(2 + b, 2 + bp)])
    }

    /// Reduced state of the first (accelerated) qubit.
    pub fn reduced_first(&self) -> Mat2 {
        Mat2::from_fn(|a, ap| self.m[(2 * a, 2 * ap)] + self.m[(2 * a + 1, 2 * ap + 1)])
    }

    /// Applies a unitary: `U rho U^dagger`.
    pub fn conjugated(&self, u: &Mat4) -> Self {
        Self { m: u * self.m * u.adjoint() }
    }
}

fn validate_hermitian_trace(m: &Mat4) -> Result<()> {
    if m.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::Validation("matrix has non-finite entries".into()));
    }
    let defect = hermiticity_defect(m);
    if defect > HERMITIAN_TOL {
        return Err(Error::Validation(format!("not Hermitian (defect {defect:.3e})")));
    }
    let tr = trace(m);
    if (tr - ONE).norm() > TRACE_TOL {
        return Err(Error::Validation(format!("trace is {tr}, expected 1")));
    }
    Ok(())
}

fn basis(i: usize, j: usize) -> Mat4 {
    kron(&pauli(i), &pauli(j))
}

/// `r_ij = Tr(rho sigma_i (x) sigma_j) / 4` for a Hermitian matrix.
pub fn coeffs_from_matrix(m: &Mat4) -> Result<PauliCoefficients> {
    let defect = hermiticity_defect(m);
    if defect > HERMITIAN_TOL {
        return Err(Error::Validation(format!("not Hermitian (defect {defect:.3e})")));
    }
    let mut r = [[0.0; 4]; 4];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = 0.25 * trace(&(m * basis(i, j))).re;
        }
    }
    PauliCoefficients::new(r)
}

pub fn coeffs_from_density(rho: &DensityMatrix) -> PauliCoefficients {
    coeffs_from_matrix(&rho.m).expect("density matrices are Hermitian with unit trace")
}

/// Result of rebuilding a density matrix from coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reconstruction {
    pub density: DensityMatrix,
    /// Set when the generalized Bloch bound is exceeded; the matrix may
    /// then have negative eigenvalues.
    pub bloch_violation: bool,
}

/// `rho = sum r_ij sigma_i (x) sigma_j`. Hermitian by construction; the
/// positivity check is replaced by the Bloch-bound flag.
pub fn density_from_coefficients(c: &PauliCoefficients) -> Result<Reconstruction> {
    let mut m = Mat4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            let r = c.r[i][j];
            if r != 0.0 {
                m += basis(i, j) * Complex64::new(r, 0.0);
            }
        }
    }
    validate_hermitian_trace(&m)?;
    Ok(Reconstruction { density: DensityMatrix { m }, bloch_violation: bloch_norm(c) > 1.0 + 1e-12 })
}

/// `(|up up> + |down down>)/sqrt 2`.
pub fn bell_state() -> PauliCoefficients {
    let mut r = [[0.0; 4]; 4];
    r[0][0] = 0.25;
    r[1][1] = 0.25;
    r[2][2] = -0.25;
    r[3][3] = 0.25;
    PauliCoefficients { r }
}

/// Sum of `y_ij^2` over `(i, j) != (0, 0)` with `y_ij = 4 r_ij / sqrt 3`.
/// At most 1, with equality for pure states.
pub fn bloch_norm(c: &PauliCoefficients) -> f64 {
    let total: f64 = c.r.iter().flatten().map(|x| x * x).sum();
    16.0 / 3.0 * (total - c.r[0][0] * c.r[0][0])
}

/// Closed-form solution of the coefficient equations at proper time `tau`
/// (units of `1/gamma0`).
///
/// Rows 1 and 2 decay at `Gamma2 = (g_minus + g_plus)/2 + 2 g_z`; row 3
/// relaxes towards `polarization * r_0j` at `Gamma1 = g_minus + g_plus`;
/// row 0 is conserved.
pub fn evolve_analytic(c0: &PauliCoefficients, rates: &RateSet, tau: f64) -> PauliCoefficients {
    let coherence = (-rates.gamma2() * tau).exp();
    let relax = (-rates.gamma1() * tau).exp();
    let settled = -(-rates.gamma1() * tau).exp_m1();
    let p = rates.polarization();
    let mut r = c0.r;
    for j in 0..4 {
        r[1][j] *= coherence;
        r[2][j] *= coherence;
        r[3][j] = c0.r[3][j] * relax + p * c0.r[0][j] * settled;
    }
    PauliCoefficients { r }
}

/// `tau -> infinity` limit: `(1 + tanh(pi/alpha) sigma_3)/2 (x) 2 sum_j r_0j sigma_j`.
/// Non-positive `alpha` takes the zero-temperature limit `tanh -> 1`.
pub fn steady_state(c0: &PauliCoefficients, alpha: f64) -> PauliCoefficients {
    let pol = if alpha > 0.0 { (std::f64::consts::PI / alpha).tanh() } else { 1.0 };
    let mut r = [[0.0; 4]; 4];
    for j in 0..4 {
        r[0][j] = c0.r[0][j];
        r[3][j] = pol * c0.r[0][j];
    }
    PauliCoefficients { r }
}

/// Rates plus a fixed RK4 step, both in `gamma0` units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LindbladSpec {
    rates: RateSet,
    dt: f64,
}

impl LindbladSpec {
    /// Requires `dt * max(g_minus, g_plus, 4 g_z) < 0.1`.
    pub fn new(rates: RateSet, dt: f64) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::argument(format!("time step must be positive, got {dt}")));
        }
        let stiffness = rates.stiffness();
        if !(dt * stiffness < 0.1) {
            return Err(Error::argument(format!(
                "time step {dt} too large for rates (dt * max rate = {:.3} >= 0.1)",
                dt * stiffness
            )));
        }
        Ok(Self { rates, dt })
    }

    pub fn rates(&self) -> &RateSet {
        &self.rates
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }
}

struct Generator {
    lower: Mat4,
    raise: Mat4,
    dephase: Mat4,
    lower_number: Mat4,
    raise_number: Mat4,
    g_minus: f64,
    g_plus: f64,
    g_z: f64,
}

impl Generator {
    fn new(rates: &RateSet) -> Self {
        let id = pauli(0);
        let sigma_minus = Mat2::new(ZERO, ONE, ZERO, ZERO);
        let sigma_plus = sigma_minus.adjoint();
        let lower = kron(&sigma_minus, &id);
        let raise = kron(&sigma_plus, &id);
        Self {
            lower_number: raise * lower,
            raise_number: lower * raise,
            lower,
            raise,
            dephase: kron(&pauli(3), &id),
            g_minus: rates.g_minus,
            g_plus: rates.g_plus,
            g_z: rates.g_z,
        }
    }

    // (g-/2)[2 s- r s+ - {s+ s-, r}] + (g+/2)[2 s+ r s- - {s- s+, r}] + g_z [Z r Z - r]
    fn apply(&self, rho: &Mat4) -> Mat4 {
        let half = |x: f64| Complex64::new(0.5 * x, 0.0);
        let down = (self.lower * rho * self.raise) * Complex64::new(2.0, 0.0)
            - self.lower_number * rho
            - rho * self.lower_number;
        let up = (self.raise * rho * self.lower) * Complex64::new(2.0, 0.0)
            - self.raise_number * rho
            - rho * self.raise_number;
        let dephase = self.dephase * rho * self.dephase - rho;
        down * half(self.g_minus) + up * half(self.g_plus) + dephase * Complex64::new(self.g_z, 0.0)
    }

    fn rk4_step(&self, rho: &Mat4, h: f64) -> Mat4 {
        let hc = Complex64::new(h, 0.0);
        let half = Complex64::new(0.5 * h, 0.0);
        let k1 = self.apply(rho);
        let k2 = self.apply(&(rho + k1 * half));
        let k3 = self.apply(&(rho + k2 * half));
        let k4 = self.apply(&(rho + k3 * hc));
        rho + (k1 + k2 * Complex64::new(2.0, 0.0) + k3 * Complex64::new(2.0, 0.0) + k4) * (hc / 6.0)
    }
}

const POSITIVITY_TOL: f64 = -1e-8;
const POSITIVITY_CHECK_EVERY: usize = 250;

fn check_positivity(m: &Mat4, tau: f64) -> Result<()> {
    let min = hermitian_eigen(m).0[0];
    if min < POSITIVITY_TOL {
        return Err(Error::Instability { tau, min_eigenvalue: min });
    }
    Ok(())
}

/// Integrates the master equation with classical RK4 from 0 to each time
/// in `taus` (ascending, non-negative), returning the state at each.
pub fn evolve_numeric_grid(rho0: &DensityMatrix, spec: &LindbladSpec, taus: &[f64]) -> Result<Vec<DensityMatrix>> {
    if taus.iter().any(|&t| !(t >= 0.0 && t.is_finite())) {
        return Err(Error::argument("evolution times must be finite and non-negative"));
    }
    if taus.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::argument("evolution times must be ascending"));
    }
    let generator = Generator::new(&spec.rates);
    let mut rho = rho0.m;
    let mut now = 0.0;
    let mut steps_taken = 0usize;
    let mut out = Vec::with_capacity(taus.len());
    for &target in taus {
        let span = target - now;
        if span > 0.0 {
            let n = (span / spec.dt).ceil() as usize;
            let h = span / n as f64;
            for k in 1..=n {
                rho = generator.rk4_step(&rho, h);
                steps_taken += 1;
                if steps_taken.is_multiple_of(POSITIVITY_CHECK_EVERY) {
                    check_positivity(&rho, now + k as f64 * h)?;
                }
            }
            now = target;
        }
        check_positivity(&rho, now)?;
        out.push(DensityMatrix { m: rho });
    }
    Ok(out)
}

/// State at proper time `tau` by RK4 integration of the master equation.
pub fn evolve_numeric(rho0: &DensityMatrix, spec: &LindbladSpec, tau: f64) -> Result<DensityMatrix> {
    Ok(evolve_numeric_grid(rho0, spec, &[tau])?.remove(0))
}
