use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lambda_cdp::entropy::LogBase;
use lambda_cdp::report::{self, AnalysisConfig, OutputFormat, Preset, Render};
use lambda_cdp::symmetry::DEFAULT_VERTEX_CAP;
use lambda_cdp::{Error, UniversalParams};

const MAX_N_VAR: &str = "LAMBDA_CDP_MAX_N";

#[derive(Parser)]
#[command(name = "lambda-cdp", version, about = "Core vertices, core distance partitions and entropy of graph eigenvalues")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-eigenvalue report for a graph.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Report only the eigenvalue nearest this value.
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Rebuild the mu-CDP from an equitable lambda-CDP.
    Reconstruct {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// CSV of entropy bounds for k = 1..n core vertices.
    Bounds {
        n: usize,
        #[arg(long, default_value = "e")]
        log_base: LogBase,
    },
    /// Coalesce two singular graphs at 0-core vertices.
    Coalesce {
        file1: PathBuf,
        v1: usize,
        file2: PathBuf,
        v2: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Automorphism orbits.
    Orbits {
        file: PathBuf,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct MatrixArgs {
    /// Universal matrix coefficients a,d,i,j.
    #[arg(
        long,
        value_name = "A,D,I,J",
        allow_hyphen_values = true,
        value_parser = parse_gamma,
        conflicts_with_all = ["preset", "huckel"]
    )]
    gamma: Option<UniversalParams>,
    /// adjacency, laplacian, signless-laplacian or seidel.
    #[arg(long, conflicts_with = "huckel")]
    preset: Option<Preset>,
    /// Hückel Hamiltonian alpha I + beta A.
    #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"], allow_negative_numbers = true)]
    huckel: Option<Vec<f64>>,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, default_value = "e")]
    log_base: LogBase,
    #[arg(long)]
    tol_cluster: Option<f64>,
    #[arg(long)]
    tol_zero: Option<f64>,
    #[arg(long, default_value = "text")]
    format: OutputFormat,
}

fn parse_gamma(text: &str) -> Result<UniversalParams, String> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    match parts[..] {
        [a, d, i, j] => UniversalParams::new(a, d, i, j).map_err(|e| e.to_string()),
        _ => Err("expected four comma-separated values".to_string()),
    }
}

fn vertex_cap() -> usize {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => match v.parse::<usize>() {
            Ok(cap) => {
                if cap > DEFAULT_VERTEX_CAP {
                    eprintln!("warning: {MAX_N_VAR}={cap} raises the orbit search cap; large graphs may be slow");
                }
                cap
            }
            Err(_) => {
                eprintln!("warning: ignoring invalid {MAX_N_VAR}={v}");
                DEFAULT_VERTEX_CAP
            }
        },
        Err(_) => DEFAULT_VERTEX_CAP,
    }
}

fn config(matrix: Option<&MatrixArgs>, common: &CommonArgs) -> Result<AnalysisConfig, Error> {
    let mut config = match matrix {
        Some(MatrixArgs { gamma: Some(g), .. }) => AnalysisConfig::custom(*g, "custom"),
        Some(MatrixArgs { huckel: Some(h), .. }) => {
            AnalysisConfig::custom(UniversalParams::huckel(h[0], h[1])?, "huckel")
        }
        Some(MatrixArgs { preset: Some(p), .. }) => AnalysisConfig::preset(*p),
        _ => AnalysisConfig::default(),
    };
    config.base = common.log_base;
    if let Some(t) = common.tol_cluster {
        config.tolerances.cluster = t;
    }
    if let Some(t) = common.tol_zero {
        config.tolerances.zero = t;
    }
    config.vertex_cap = vertex_cap();
    Ok(config)
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Analyze { file, matrix, lambda, common } => {
            let mut config = config(Some(&matrix), &common)?;
            config.target = lambda;
            let g = report::read_graph(&file)?;
            Ok(report::analyze(&g, &config)?.render(common.format))
        }
        Command::Reconstruct { file, lambda, mu, matrix, common } => {
            let config = config(Some(&matrix), &common)?;
            let g = report::read_graph(&file)?;
            Ok(report::reconstruct(&g, &config, lambda, mu)?.render(common.format))
        }
        Command::Bounds { n, log_base } => report::bounds_csv(n, log_base),
        Command::Coalesce { file1, v1, file2, v2, common } => {
            let config = config(None, &common)?;
            let h1 = report::read_graph(&file1)?;
            let h2 = report::read_graph(&file2)?;
            Ok(report::coalesce_graphs(&h1, v1, &h2, v2, &config)?.render(common.format))
        }
        Command::Orbits { file, format } => {
            let config = AnalysisConfig { vertex_cap: vertex_cap(), ..AnalysisConfig::default() };
            let g = report::read_graph(&file)?;
            Ok(report::orbits(&g, &config)?.render(format))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
