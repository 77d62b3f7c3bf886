//! Command-line front end for the `conformon` toolkit: configuration,
//! subcommands and deterministic CSV/JSON output.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;

pub use commands::{cmd_soliton_pipeline, Outcome, SolitonReport};
pub use config::{CommonArgs, GridSpec, RunConfig, TolConfig};
pub use error::CliError;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "conformon", version, about = "Membrane shape and surface quantum mechanics toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean/Gaussian curvature of a patch CSV (x,y,z)
    Curvature(CommonArgs),
    /// General shape-equation residual of a patch CSV
    ShapeResidual(CommonArgs),
    /// Newton solve of the reduced shape equation
    SolveReduced(CommonArgs),
    /// Soliton → spectrum → correspondence → profile pipeline
    Soliton(CommonArgs),
    /// Bound states of the 1D operator for a profile CSV (s,H)
    Spectrum(CommonArgs),
    /// Correspondence metric for a CSV (s,psi,H)
    Correspondence(CommonArgs),
    /// Planar curve from a curvature profile (s,kappa)
    Reconstruct(CommonArgs),
    /// Symmetry characteristics of a patch CSV
    Symmetry(CommonArgs),
    /// Print every default as key=value
    Defaults(CommonArgs),
}

/// Runs a parsed command.
pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Curvature(a) => commands::cmd_curvature(&a.resolve()?),
        Command::ShapeResidual(a) => commands::cmd_shape_residual(&a.resolve()?),
        Command::SolveReduced(a) => commands::cmd_solve_reduced(&a.resolve()?),
        Command::Soliton(a) => cmd_soliton_pipeline(&a.resolve()?).map(|(_, o)| o),
        Command::Spectrum(a) => commands::cmd_spectrum(&a.resolve()?),
        Command::Correspondence(a) => commands::cmd_correspondence(&a.resolve()?),
        Command::Reconstruct(a) => commands::cmd_reconstruct(&a.resolve()?),
        Command::Symmetry(a) => commands::cmd_symmetry(&a.resolve()?),
        Command::Defaults(a) => Ok(Outcome {
            summary: a.resolve()?.to_key_values().join("\n"),
            files: Vec::new(),
        }),
    }
}
