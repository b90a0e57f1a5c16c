// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.

pub mod commands;
pub mod config;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::params::PhysicalConstants;
use config::{AlphaSpec, Format, Grid, ProfileSpec, RunConfig, Settings, CONFIG_ENV};
use table::Report;

#[derive(Debug, Parser)]
#[command(name = "rindler-spin", version, about = "Spin entanglement decay along accelerated worldlines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rates, Bose occupation and T1/T2 over an alpha grid.
    Rates,
    /// Concurrence of the Bell pair against proper time at one alpha.
    Curve,
    /// Concurrence over an (alpha, tau) grid plus the zero-concurrence line.
    Surface,
    /// Worldline events for an acceleration profile.
    Worldline,
    /// Physical-unit quantities for a given acceleration.
    Constants,
}

#[derive(Debug, Args, Default)]
pub struct CommonArgs {
    /// Single dimensionless acceleration.
    #[arg(long, global = true, conflicts_with = "alpha_grid")]
    pub alpha: Option<f64>,
    /// Alpha grid, lo:hi:n[:log].
    #[arg(long, global = true, value_parser = parse_grid)]
    pub alpha_grid: Option<Grid>,
    /// Proper-time grid in units of 1/gamma0 (or worldline units), lo:hi:n.
    #[arg(long, global = true, value_parser = parse_grid)]
    pub tau_grid: Option<Grid>,
    /// Add quadrature rates next to the closed forms.
    #[arg(long, global = true)]
    pub oracle: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Config file of `key = value` lines.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// constant:A, sinusoid:A0,OMEGA or zero.
    #[arg(long, global = true, value_parser = parse_profile)]
    pub profile: Option<ProfileSpec>,
    /// Worldline in cm and s instead of c = 1.
    #[arg(long, global = true)]
    pub cgs: bool,
    /// Magnetic moment, erg/G (default: Bohr magneton).
    #[arg(long, global = true)]
    pub mu: Option<f64>,
    /// Level splitting, erg.
    #[arg(long, global = true)]
    pub gap: Option<f64>,
    /// Proper acceleration, cm/s^2.
    #[arg(long, global = true)]
    pub accel: Option<f64>,
    /// Solve for the acceleration giving this lab-frame time, s.
    #[arg(long = "target-t0", global = true)]
    pub target_t0: Option<f64>,
    /// Recorded in JSON output.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_profile(s: &str) -> std::result::Result<ProfileSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl CommonArgs {
    fn settings(&self) -> Settings {
        let alpha = match (self.alpha, self.alpha_grid) {
            (Some(a), _) => Some(AlphaSpec::Single(a)),
            (None, Some(g)) => Some(AlphaSpec::Grid(g)),
            (None, None) => None,
        };
        Settings {
            alpha,
            tau_grid: self.tau_grid,
            format: self.format,
            out: self.out.clone(),
            oracle: self.oracle.then_some(true),
            profile: self.profile,
            cgs: self.cgs.then_some(true),
            mu: self.mu,
            gap: self.gap,
            accel: self.accel,
            target_t0: self.target_t0,
            seed: self.seed,
        }
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Rates => "rates",
            Command::Curve => "curve",
            Command::Surface => "surface",
            Command::Worldline => "worldline",
            Command::Constants => "constants",
        }
    }

    fn default_alpha(&self) -> AlphaSpec {
        match self {
            Command::Rates => AlphaSpec::Grid(Grid::logarithmic(0.05, 10.0, 200)),
            Command::Surface => AlphaSpec::Grid(Grid::linear(0.5, 5.0, 60)),
            _ => AlphaSpec::Single(1.0),
        }
    }
}

/// Builds the run configuration from flags, the config file and defaults.
pub fn resolve(cli: &Cli, env_config: Option<PathBuf>) -> Result<RunConfig> {
    let file = match cli.common.config.clone().or(env_config) {
        Some(path) => Settings::load(&path)?,
        None => Settings::default(),
    };
    let settings = cli.common.settings().over(file);
    RunConfig::resolve(settings, cli.command.default_alpha(), PhysicalConstants::default().bohr_magneton)
}

pub fn execute(command: &Command, cfg: &RunConfig) -> Result<Report> {
    match command {
        Command::Rates => commands::rates(cfg),
        Command::Curve => commands::curve(cfg),
        Command::Surface => commands::surface(cfg),
        Command::Worldline => commands::worldline_table(cfg),
        Command::Constants => commands::constants(cfg),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) | Error::Domain(_) => 2,
        Error::Io { .. } => 4,
        _ => 3,
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    let env_config = std::env::var_os(CONFIG_ENV).map(PathBuf::from);
    let result = resolve(&cli, env_config).and_then(|cfg| {
        let report = execute(&cli.command, &cfg)?;
        let files = report.render(cli.command.name(), cfg.seed, cfg.format, cfg.out.as_deref());
        table::emit(&files, stdout)
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "rindler-spin: {e}");
            exit_code(&e)
        }
    }
}
