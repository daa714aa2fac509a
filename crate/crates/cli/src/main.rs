//! `k3tensor`: reproduces lattice, automorphism and finite-field surface computations.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use k3tensor_core::accept::{AcceptOptions, Suite};
use k3tensor_core::dynamics::catalog_actions;
use k3tensor_core::lattice::catalog_json;
use k3tensor_core::report::{cmd_accept, cmd_analyze, cmd_analyze_family, cmd_auto, cmd_lattice, AnalyzeOptions, RunReport};
use k3tensor_core::surface::scan_bound;
use k3tensor_core::tensor::{family_format, random_tensor, Ring, Tensor};
use k3tensor_core::{Error, Result};

#[derive(Parser)]
#[command(name = "k3tensor", version, about = "Exact computations on integer tensors and their K3 surfaces")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the surfaces of a tensor and scan them over finite fields.
    Analyze {
        /// Tensor file (JSON). Omit to use random tensors of `--family`.
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        family: Option<String>,
        /// Seeds for `--family`.
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 1, 2, 3, 4])]
        seeds: Vec<u64>,
        /// Field sizes for the point scans.
        #[arg(long, value_delimiter = ',', default_values_t = [5u64, 7, 11])]
        primes: Vec<u64>,
        /// Prime for fibration discriminant profiles.
        #[arg(long, default_value_t = 101)]
        profile_prime: u64,
        /// Cap on ambient points per scan; defaults to K3TENSOR_SCAN_BOUND or 1000000.
        #[arg(long)]
        scan_bound: Option<u128>,
    },
    /// Report on a cataloged Neron-Severi lattice.
    Lattice { family: String },
    /// Entropy of an automorphism, or a Salem family table for `pent --k N`.
    Auto {
        family: String,
        /// Word in the generators, e.g. "a34_5 a24_5".
        #[arg(long)]
        word: Option<String>,
        /// Number of powers, or the largest family index for `pent`.
        #[arg(long)]
        k: Option<u64>,
    },
    /// Run the acceptance suite.
    Accept {
        /// all, lattices, dynamics or geometry.
        #[arg(default_value = "all")]
        suite: String,
        /// Reduced samples for the finite-field criteria.
        #[arg(long)]
        quick: bool,
    },
    /// Write a random integer tensor of a family as JSON.
    Random {
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the cataloged lattices and automorphisms.
    Catalog,
}

fn emit(rep: &RunReport, json: bool) -> ExitCode {
    if json {
        println!("{}", rep.to_json());
    } else {
        print!("{}", rep.render_text());
    }
    if rep.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let rep = match cli.cmd {
        Cmd::Analyze { file, family, seeds, primes, profile_prime, scan_bound: bound } => {
            let opts = AnalyzeOptions { primes, profile_prime, scan_bound: bound.unwrap_or_else(scan_bound) };
            match (file, family) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))?;
                    cmd_analyze(&Tensor::from_json(&text)?, &opts)?
                }
                (None, Some(fam)) => cmd_analyze_family(&fam, &seeds, &opts)?,
                (None, None) => return Err(Error::Parameter("give a tensor file or --family".into())),
            }
        }
        Cmd::Lattice { family } => cmd_lattice(&family)?,
        Cmd::Auto { family, word, k } => cmd_auto(&family, word.as_deref(), k)?,
        Cmd::Accept { suite, quick } => cmd_accept(suite.parse::<Suite>()?, &AcceptOptions { quick })?,
        Cmd::Random { family, seed } => {
            let (shape, sym) = family_format(&family)?;
            println!("{}", random_tensor(&shape, sym, Ring::Z, seed)?.to_json());
            return Ok(ExitCode::SUCCESS);
        }
        Cmd::Catalog => {
            let actions: Vec<_> = catalog_actions()
                .iter()
                .map(|a| serde_json::json!({ "name": a.qualified_name(), "rank": a.matrix.rows(), "order": a.declared_order }))
                .collect();
            let all = serde_json::json!({ "lattices": catalog_json(), "automorphisms": actions });
            println!("{}", serde_json::to_string_pretty(&all).expect("catalog serializes"));
            return Ok(ExitCode::SUCCESS);
        }
    };
    Ok(emit(&rep, cli.json))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
