use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tiltcell::catalog;
use tiltcell_cli::input::{InputDocument, TiltingRequest};
use tiltcell_cli::report::EXIT_INPUT;
use tiltcell_cli::{run, Command, Request, Source};

#[derive(Parser)]
#[command(name = "tiltcell", version, about = "Tilting modules and cellular bases of their endomorphism algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the standard category axioms.
    Verify(Args),
    /// Construct every indecomposable tilting module.
    Tilting(Args),
    /// Build and certify a standard basis of End(T).
    Basis(Args),
    /// Cell modules, Gram matrices and simple modules of End(T).
    Cells(Args),
    /// Duality, fixed points and the cellular basis of End(T).
    Cellular(Args),
    /// List the built-in algebras.
    List,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Args {
    /// JSON input document.
    #[arg(long, conflicts_with = "catalog", required_unless_present = "catalog")]
    input: Option<PathBuf>,
    /// Built-in algebra.
    #[arg(long)]
    catalog: Option<String>,
    /// "Q" or "Fp <p>".
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Random products per axiom check.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Dimension bound for the tilting construction.
    #[arg(long)]
    dim_bound: Option<usize>,
    /// "characteristic" or label=multiplicity pairs such as "1=2,2=1".
    #[arg(long)]
    tilting: Option<String>,
}

fn request(command: Command, a: &Args) -> Result<Request, String> {
    let source = match (&a.input, &a.catalog) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Source::Document(Box::new(InputDocument::parse(&text).map_err(|e| e.to_string())?))
        }
        (None, Some(name)) => Source::Catalog(name.clone()),
        (None, None) => return Err("one of --input or --catalog is required".into()),
    };
    let tilting = a.tilting.as_deref().map(TiltingRequest::parse).transpose().map_err(|e| e.to_string())?;
    Ok(Request {
        command,
        source,
        field: a.field.clone(),
        seed: a.seed,
        trials: a.trials,
        dim_bound: a.dim_bound,
        tilting,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let (command, args) = match &cli.command {
        Cmd::Verify(a) => (Command::Verify, a),
        Cmd::Tilting(a) => (Command::Tilting, a),
        Cmd::Basis(a) => (Command::Basis, a),
        Cmd::Cells(a) => (Command::Cells, a),
        Cmd::Cellular(a) => (Command::Cellular, a),
        Cmd::List => {
            for name in catalog::NAMES {
                println!("{name}");
            }
            return ExitCode::SUCCESS;
        }
    };
    let outcome = request(command, args).and_then(|r| run(&r).map_err(|e| e.to_string()));
    match outcome {
        Ok(report) => {
            match args.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
