//! Command-line front end for `yangbax-core`.
//!
//! Every subcommand renders into an in-memory [`Outcome`]; `main` only decides
//! where the bytes go and which exit code to use.

pub mod render;
pub mod setup;
pub mod sweep;
pub mod verify;

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use setup::{Family, Setup};

#[derive(Debug, Parser)]
#[command(name = "yangbax", version, about = "X-form Yang-Baxter gates, entanglement and Yangian checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print R̆(θ) as matrix JSON.
    BuildR {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the numerical checks and report PASS/FAIL per check.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Angle for the eight-level Hamiltonian checks (seeded draws are added).
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[command(flatten)]
        params: ParamsArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Entanglement measures over a θ grid, as CSV.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        start: f64,
        #[arg(long, default_value_t = std::f64::consts::PI, allow_negative_numbers = true)]
        stop: f64,
        #[arg(long, default_value_t = 101)]
        count: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Labeled eigenpairs of the eight-level Hamiltonian.
    Spectrum {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Shift-operator graph of the Yangian generators.
    TransferGraph {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[command(flatten)]
        params: ParamsArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum, default_value_t = Family::TwoQubit)]
    pub family: Family,
    /// Family phases, comma separated (1, 2 or 4 values).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub phases: Vec<f64>,
    /// Full phase table in basis order, not validated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub phases_raw: Vec<f64>,
    #[arg(long)]
    pub j1: Option<String>,
    #[arg(long)]
    pub j2: Option<String>,
    /// f on the positive labels of j1, descending.
    #[arg(long = "f", value_delimiter = ',', allow_negative_numbers = true)]
    pub f: Vec<f64>,
    /// g on the positive labels of j2, descending.
    #[arg(long = "g", value_delimiter = ',', allow_negative_numbers = true)]
    pub g: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ParamsArgs {
    /// α,β,γ,δ; each `re` or `re:im`.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub params: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl OutputArgs {
    fn pick(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            bail!("format {:?} is not available for this command", f);
        }
        Ok(f)
    }
}

/// Rendered command output plus whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub success: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self { body, success: true }
    }
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::BuildR { output, .. }
            | Command::Verify { output, .. }
            | Command::Sweep { output, .. }
            | Command::Spectrum { output, .. }
            | Command::TransferGraph { output, .. } => output,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::BuildR { family, theta, output } => {
            let format = output.pick(Format::Json, &[Format::Json, Format::Text])?;
            let setup = Setup::resolve(family)?;
            let r = setup.r_matrix(*theta)?;
            Ok(Outcome::ok(match format {
                Format::Json => render::matrix_json(r.matrix())?,
                _ => render::matrix_text(r.matrix()),
            }))
        }
        Command::Verify { family, theta, seed, trials, params, output } => {
            let format = output.pick(Format::Text, &[Format::Text, Format::Json])?;
            let setup = Setup::resolve(family)?;
            let params = setup::parse_params(&params.params)?;
            let report = verify::run(&setup, *theta, *seed, *trials, &params)?;
            let body = match format {
                Format::Json => report.to_json()?,
                _ => report.to_text(),
            };
            Ok(Outcome { body, success: report.passed() })
        }
        Command::Sweep { family, start, stop, count, output } => {
            output.pick(Format::Csv, &[Format::Csv])?;
            let setup = Setup::resolve(family)?;
            let grid = sweep::linspace(*start, *stop, *count)?;
            Ok(Outcome::ok(sweep::to_csv(&sweep::run(&setup, &grid)?)?))
        }
        Command::Spectrum { family, theta, output } => {
            let format = output.pick(Format::Text, &[Format::Text, Format::Json])?;
            let phis = Setup::resolve(family)?.three_qubit_phases()?;
            Ok(Outcome::ok(render::spectrum(*theta, phis, format)?))
        }
        Command::TransferGraph { family, theta, params, output } => {
            let format = output.pick(Format::Dot, &[Format::Dot, Format::Json])?;
            let phis = Setup::resolve(family)?.three_qubit_phases()?;
            let params = setup::parse_params(&params.params)?;
            Ok(Outcome::ok(render::transfer_graph(*theta, phis, &params, format)?))
        }
    }
}
