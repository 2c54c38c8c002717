use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rdd_cli::{run, Command, Input, OutputFormat, RdfPolicy, RunConfig, EXIT_IO};
use rdd_core::{Family, FamilySpec};

/// Minimum Roman dominating distance energy: spectra, exact polynomials and
/// formula checks.
#[derive(Parser)]
#[command(name = "rdd", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Energy under the selected minimum RDF(s).
    Energy(Opts),
    /// Eigenvalues and energy.
    Spectrum(Opts),
    /// Domination number, Roman domination number and minimum RDFs.
    Rdf(Opts),
    /// Exact characteristic polynomial coefficients.
    Charpoly(Opts),
    /// Discrepancy ledger for identities, bounds and family closed forms.
    Verify(Opts),
    /// Write a family graph in edge-list format.
    Generate(Opts),
    /// Verify a seeded batch of random connected graphs.
    Batch(Opts),
}

#[derive(Args)]
struct Opts {
    /// Edge-list file: "n m" header then m lines "u v".
    #[arg(long, conflicts_with_all = ["family", "param"])]
    input: Option<PathBuf>,
    /// complete, bipartite, star, crown, spider, path or cycle.
    #[arg(long, requires = "param")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    param: Option<usize>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// canonical, all, or a 0-based index into the minimum RDFs.
    #[arg(long, default_value = "canonical")]
    rdf: RdfPolicy,
    /// text, json or csv.
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    count: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_IO } else { 0 });
        }
    };
    let (command, opts) = match cli.command {
        Cmd::Energy(o) => (Command::Energy, o),
        Cmd::Spectrum(o) => (Command::Spectrum, o),
        Cmd::Rdf(o) => (Command::Rdf, o),
        Cmd::Charpoly(o) => (Command::Charpoly, o),
        Cmd::Verify(o) => (Command::Verify, o),
        Cmd::Generate(o) => (Command::Generate, o),
        Cmd::Batch(o) => (Command::Batch, o),
    };
    let input = match (opts.input, opts.family, opts.param) {
        (Some(path), _, _) => Some(Input::File(path)),
        (None, Some(family), Some(param)) => match FamilySpec::new(family, param) {
            Ok(spec) => Some(Input::Family(spec)),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(rdd_cli::EXIT_PRECONDITION);
            }
        },
        _ => None,
    };
    let config = RunConfig {
        command,
        input,
        tol: opts.tol,
        rdf_policy: opts.rdf,
        format: opts.format,
        seed: opts.seed,
        count: opts.count,
    };

    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = match run(&config, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_IO);
    }
    ExitCode::from(status)
}
