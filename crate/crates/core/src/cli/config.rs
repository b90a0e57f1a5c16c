// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Run configuration: grids, config files and precedence.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kinematics::AccelerationProfile;

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "RINDLER_SPIN_CONFIG";

/// `lo:hi:n[:log]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub log: bool,
}

impl Grid {
    pub fn linear(lo: f64, hi: f64, n: usize) -> Self {
        Grid { lo, hi, n, log: false }
    }

    pub fn logarithmic(lo: f64, hi: f64, n: usize) -> Self {
        Grid { lo, hi, n, log: true }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        let last = (self.n - 1) as f64;
        let (a, b) = if self.log { (self.lo.ln(), self.hi.ln()) } else { (self.lo, self.hi) };
        (0..self.n)
            .map(|k| {
                if k == 0 {
                    return self.lo;
                }
                if k == self.n - 1 {
                    return self.hi;
                }
                let x = a + (b - a) * k as f64 / last;
                if self.log { x.exp() } else { x }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::argument(format!("grid `{s}` is not of the form lo:hi:n[:log]"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad());
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        let log = match parts.get(3).map(|p| p.trim()) {
            None | Some("lin") => false,
            Some("log") => true,
            Some(_) => return Err(bad()),
        };
        if !lo.is_finite() || !hi.is_finite() {
            return Err(bad());
        }
        if n == 0 {
            return Err(Error::argument(format!("grid `{s}` has no points")));
        }
        if hi < lo || (n > 1 && hi == lo) {
            return Err(Error::argument(format!("grid `{s}` must be increasing")));
        }
        if log && lo <= 0.0 {
            return Err(Error::argument(format!("log grid `{s}` needs a positive lower end")));
        }
        Ok(Grid { lo, hi, n, log })
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.n)?;
        if self.log {
            write!(f, ":log")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::argument(format!("unknown format `{other}`; expected csv or json"))),
        }
    }
}

/// How the alpha axis was specified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaSpec {
    Single(f64),
    Grid(Grid),
}

impl AlphaSpec {
    pub fn values(&self) -> Vec<f64> {
        match self {
            AlphaSpec::Single(a) => vec![*a],
            AlphaSpec::Grid(g) => g.values(),
        }
    }
}

/// Parsed `--profile` value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileSpec {
    Constant(f64),
    Sinusoid { a0: f64, omega: f64 },
    Zero,
}

pub const KNOWN_PROFILES: &str = "constant:A, sinusoid:A0,OMEGA, zero";

impl ProfileSpec {
    pub fn build(&self) -> AccelerationProfile {
        match *self {
            ProfileSpec::Constant(a) => AccelerationProfile::constant(a),
            ProfileSpec::Sinusoid { a0, omega } => AccelerationProfile::sinusoid(a0, omega),
            ProfileSpec::Zero => AccelerationProfile::zero(),
        }
    }
}

impl FromStr for ProfileSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let numbers = |p: Option<&str>, want: usize| -> Result<Vec<f64>> {
            let p = p.ok_or_else(|| Error::argument(format!("profile `{name}` needs {want} parameter(s)")))?;
            let v: Vec<f64> = p
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::argument(format!("bad parameters in profile `{s}`")))?;
            if v.len() != want || v.iter().any(|x| !x.is_finite()) {
                return Err(Error::argument(format!("profile `{name}` needs {want} finite parameter(s)")));
            }
            Ok(v)
        };
        match name {
            "constant" => {
                let v = numbers(params, 1)?;
                if v[0] <= 0.0 {
                    return Err(Error::argument("constant profile needs a positive acceleration"));
                }
                Ok(ProfileSpec::Constant(v[0]))
            }
            "sinusoid" => {
                let v = numbers(params, 2)?;
                Ok(ProfileSpec::Sinusoid { a0: v[0], omega: v[1] })
            }
            "zero" if params.is_none() => Ok(ProfileSpec::Zero),
            _ => Err(Error::argument(format!("unknown profile `{s}`; known profiles: {KNOWN_PROFILES}"))),
        }
    }
}

/// One layer of settings. Flags and the config file each produce one;
/// unset fields fall through to the next layer.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    pub alpha: Option<AlphaSpec>,
    pub tau_grid: Option<Grid>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub oracle: Option<bool>,
    pub profile: Option<ProfileSpec>,
    pub cgs: Option<bool>,
    pub mu: Option<f64>,
    pub gap: Option<f64>,
    pub accel: Option<f64>,
    pub target_t0: Option<f64>,
    pub seed: Option<u64>,
}

fn parse_value<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| Error::argument(format!("config key `{key}`: cannot parse `{v}`")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(Error::argument(format!("config key `{key}`: expected true or false, got `{v}`"))),
    }
}

impl Settings {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse_config(text: &str) -> Result<Self> {
        let mut s = Settings::default();
        let mut alpha_single = None;
        let mut alpha_grid = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::argument(format!("config line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            match key.as_str() {
                "alpha" => alpha_single = Some(parse_value::<f64>(&key, value)?),
                "alpha_grid" => alpha_grid = Some(value.parse::<Grid>()?),
                "tau_grid" => s.tau_grid = Some(value.parse()?),
                "format" => s.format = Some(value.parse()?),
                "out" => s.out = Some(PathBuf::from(value)),
                "oracle" => s.oracle = Some(parse_bool(&key, value)?),
                "profile" => s.profile = Some(value.parse()?),
                "cgs" => s.cgs = Some(parse_bool(&key, value)?),
                "mu" => s.mu = Some(parse_value(&key, value)?),
                "gap" => s.gap = Some(parse_value(&key, value)?),
                "accel" => s.accel = Some(parse_value(&key, value)?),
                "target_t0" => s.target_t0 = Some(parse_value(&key, value)?),
                "seed" => s.seed = Some(parse_value(&key, value)?),
                other => {
                    return Err(Error::argument(format!("config line {}: unknown key `{other}`", lineno + 1)));
                }
            }
        }
        s.alpha = match (alpha_single, alpha_grid) {
            (Some(_), Some(_)) => return Err(Error::argument("config sets both alpha and alpha_grid")),
            (Some(a), None) => Some(AlphaSpec::Single(a)),
            (None, Some(g)) => Some(AlphaSpec::Grid(g)),
            (None, None) => None,
        };
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        Self::parse_config(&text)
    }

    /// Fields set here win; the rest come from `lower`.
    pub fn over(self, lower: Settings) -> Settings {
        Settings {
            alpha: self.alpha.or(lower.alpha),
            tau_grid: self.tau_grid.or(lower.tau_grid),
            format: self.format.or(lower.format),
            out: self.out.or(lower.out),
            oracle: self.oracle.or(lower.oracle),
            profile: self.profile.or(lower.profile),
            cgs: self.cgs.or(lower.cgs),
            mu: self.mu.or(lower.mu),
            gap: self.gap.or(lower.gap),
            accel: self.accel.or(lower.accel),
            target_t0: self.target_t0.or(lower.target_t0),
            seed: self.seed.or(lower.seed),
        }
    }
}

/// Physical parameters for unit restoration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Physical {
    /// Magnetic moment, erg/G.
    pub mu: f64,
    /// Level splitting, erg.
    pub gap: Option<f64>,
    /// Proper acceleration, cm/s^2.
    pub accel: Option<f64>,
    /// Requested lab-frame disentanglement time, s.
    pub target_t0: Option<f64>,
}

/// Fully resolved configuration for one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub alpha_grid: Vec<f64>,
    pub tau_grid: Vec<f64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub oracle: bool,
    pub profile: ProfileSpec,
    pub cgs: bool,
    pub physical: Physical,
    pub seed: u64,
}

impl RunConfig {
    pub fn resolve(s: Settings, default_alpha: AlphaSpec, default_mu: f64) -> Result<Self> {
        let alpha_grid = s.alpha.unwrap_or(default_alpha).values();
        let tau_grid = s.tau_grid.unwrap_or(Grid::linear(0.0, 5.0, 120)).values();
        if alpha_grid.iter().any(|a| !(a.is_finite() && *a >= 0.0)) {
            return Err(Error::argument("alpha values must be finite and non-negative"));
        }
        if tau_grid.iter().any(|t| *t < 0.0) {
            return Err(Error::argument("tau values must be non-negative"));
        }
        let positive = |name: &str, v: Option<f64>| -> Result<Option<f64>> {
            match v {
                Some(x) if !(x > 0.0 && x.is_finite()) => {
                    Err(Error::argument(format!("--{name} must be positive and finite, got {x}")))
                }
                _ => Ok(v),
            }
        };
        let mu = positive("mu", Some(s.mu.unwrap_or(default_mu)))?.unwrap_or(default_mu);
        Ok(RunConfig {
            alpha_grid,
            tau_grid,
            format: s.format.unwrap_or_default(),
            out: s.out,
            oracle: s.oracle.unwrap_or(false),
            profile: s.profile.unwrap_or(ProfileSpec::Constant(1.0)),
            cgs: s.cgs.unwrap_or(false),
            physical: Physical {
                mu,
                gap: positive("gap", s.gap)?,
                accel: positive("accel", s.accel)?,
                target_t0: positive("target-t0", s.target_t0)?,
            },
            seed: s.seed.unwrap_or(0),
        })
    }
}
