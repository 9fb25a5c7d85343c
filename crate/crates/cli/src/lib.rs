//! Driver for the `tiltcell` command-line tool: input documents, field
//! dispatch, the pipeline commands and their reports.

pub mod commands;
pub mod input;
pub mod report;

use tiltcell::catalog;
use tiltcell::scalar::{parse_field, FieldKind, RuntimePrime};
use tiltcell::{Error, FRuntime, Rational, Result, Scalar, F101, F2, F3, F5, F7};

use commands::Setup;
use input::{InputDocument, TiltingRequest};
use report::{is_violation, Report};

pub const DEFAULT_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Verify,
    Tilting,
    Basis,
    Cells,
    Cellular,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Tilting => "tilting",
            Command::Basis => "basis",
            Command::Cells => "cells",
            Command::Cellular => "cellular",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Source {
    Catalog(String),
    Document(Box<InputDocument>),
}

/// A fully specified run. Explicit fields override the input document.
#[derive(Clone, Debug)]
pub struct Request {
    pub command: Command,
    pub source: Source,
    pub field: Option<String>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub dim_bound: Option<usize>,
    pub tilting: Option<TiltingRequest>,
}

impl Request {
    pub fn catalog(command: Command, name: &str) -> Self {
        Request {
            command,
            source: Source::Catalog(name.into()),
            field: None,
            seed: None,
            trials: None,
            dim_bound: None,
            tilting: None,
        }
    }

    fn field_spec(&self) -> String {
        let from_doc = match &self.source {
            Source::Document(d) => d.field.clone(),
            Source::Catalog(_) => None,
        };
        self.field.clone().or(from_doc).unwrap_or_else(|| "Q".into())
    }
}

/// Runs a request. `Err` means the input itself was unusable; violations
/// found by the pipeline are recorded in the report.
pub fn run(req: &Request) -> Result<Report> {
    let spec = req.field_spec();
    match parse_field(&spec) {
        Some(FieldKind::Rationals) => run_over::<Rational>(req),
        Some(FieldKind::PrimeField(2)) => run_over::<F2>(req),
        Some(FieldKind::PrimeField(3)) => run_over::<F3>(req),
        Some(FieldKind::PrimeField(5)) => run_over::<F5>(req),
        Some(FieldKind::PrimeField(7)) => run_over::<F7>(req),
        Some(FieldKind::PrimeField(101)) => run_over::<F101>(req),
        Some(FieldKind::PrimeField(p)) => {
            RuntimePrime::install(p).map_err(|e| Error::InvalidInput(e.to_string()))?;
            run_over::<FRuntime>(req)
        }
        None => Err(Error::InvalidInput(format!("unknown field {spec:?}; expected \"Q\" or \"Fp <prime>\""))),
    }
}

fn setup<S: Scalar>(req: &Request) -> Result<(String, Setup<S>)> {
    let (name, registry, involution, tilting, options) = match &req.source {
        Source::Catalog(name) => {
            let e = catalog::entry::<S>(name).ok_or_else(|| {
                Error::InvalidInput(format!("unknown catalog algebra {name:?}; known: {}", catalog::NAMES.join(", ")))
            })?;
            (name.clone(), e.registry()?, e.involution.clone(), None, Default::default())
        }
        Source::Document(d) => {
            let name = d.algebra.name.clone().unwrap_or_else(|| "input".into());
            (name, d.registry()?, d.involution()?, d.tilting.clone(), d.options.clone())
        }
    };
    let tilting = req.tilting.clone().or(tilting).unwrap_or_else(|| TiltingRequest::Named("characteristic".into()));
    let setup = Setup {
        registry,
        involution,
        tilting,
        seed: req.seed.or(options.seed).unwrap_or(0),
        trials: req.trials.or(options.trials).unwrap_or(DEFAULT_TRIALS),
        dim_bound: req.dim_bound.or(options.dim_bound),
    };
    Ok((name, setup))
}

fn run_over<S: Scalar>(req: &Request) -> Result<Report> {
    let (name, s) = match setup::<S>(req) {
        Ok(x) => x,
        Err(e) if is_violation(&e) => {
            let mut r =
                Report::new(req.command.name(), &algebra_name(req), S::field().to_string(), req.seed.unwrap_or(0));
            r.fail(&e);
            return Ok(r.finish());
        }
        Err(e) => return Err(e),
    };
    let mut report = Report::new(req.command.name(), &name, S::field().to_string(), s.seed);
    let outcome = match req.command {
        Command::Verify => commands::verify(&s, &mut report),
        Command::Tilting => commands::tilting(&s, &mut report),
        Command::Basis => commands::basis(&s, &mut report),
        Command::Cells => commands::cells(&s, &mut report),
        Command::Cellular => commands::cellular(&s, &mut report),
    };
    match outcome {
        Ok(()) => Ok(report.finish()),
        Err(e) if is_violation(&e) => {
            report.fail(&e);
            Ok(report.finish())
        }
        Err(e) => Err(e),
    }
}

fn algebra_name(req: &Request) -> String {
    match &req.source {
        Source::Catalog(n) => n.clone(),
        Source::Document(d) => d.algebra.name.clone().unwrap_or_else(|| "input".into()),
    }
}
