//! Structured reports and their text and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use tiltcell::{Error, Matrix, Scalar};

/// Process exit status for a finished run.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub algebra: String,
    pub field: String,
    pub seed: u64,
    pub passed: bool,
    pub sections: Vec<Section>,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub name: String,
    pub passed: bool,
    /// The statement this section certifies, named when it fails.
    pub certifies: String,
    pub summary: Vec<String>,
    pub data: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub kind: String,
    pub violates: String,
    pub message: String,
}

impl Section {
    pub fn new(name: &str, certifies: &str) -> Self {
        Section { name: name.into(), passed: true, certifies: certifies.into(), summary: Vec::new(), data: Value::Null }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    /// Records a check; a failed check marks the whole section failed.
    pub fn check(&mut self, ok: bool, s: impl Into<String>) {
        let s = s.into();
        self.passed &= ok;
        self.summary.push(if ok { s } else { format!("FAILED: {s}") });
    }
}

impl Report {
    pub fn new(command: &str, algebra: &str, field: String, seed: u64) -> Self {
        Report {
            command: command.into(),
            algebra: algebra.into(),
            field,
            seed,
            passed: true,
            sections: Vec::new(),
            failure: None,
        }
    }

    pub fn push(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn fail(&mut self, e: &Error) {
        self.failure = Some(Failure {
            kind: error_kind(e).into(),
            violates: violated_statement(e).into(),
            message: e.to_string(),
        });
    }

    /// Settles `passed`, deriving a failure from the first failed section
    /// when the pipeline itself did not raise one.
    pub fn finish(mut self) -> Self {
        if self.failure.is_none() {
            if let Some(s) = self.sections.iter().find(|s| !s.passed) {
                let message = s.summary.iter().find(|l| l.starts_with("FAILED")).cloned().unwrap_or_default();
                self.failure =
                    Some(Failure { kind: "CertificateFailed".into(), violates: s.certifies.clone(), message });
            }
        }
        self.passed = self.failure.is_none() && self.sections.iter().all(|s| s.passed);
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_PASS
        } else {
            EXIT_VIOLATION
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{} {} over {} (seed {}): {verdict}", self.command, self.algebra, self.field, self.seed);
        for s in &self.sections {
            let _ = writeln!(out, "[{}] {}", if s.passed { "ok" } else { "FAIL" }, s.name);
            for l in &s.summary {
                let _ = writeln!(out, "    {l}");
            }
        }
        if let Some(f) = &self.failure {
            let _ = writeln!(out, "failure ({}): violates {}", f.kind, f.violates);
            let _ = writeln!(out, "    {}", f.message);
        }
        out
    }
}

/// Whether an error is a mathematical violation (exit 1) rather than bad
/// input (exit 2).
pub fn is_violation(e: &Error) -> bool {
    matches!(
        e,
        Error::AxiomViolation { .. }
            | Error::NoFiltration { .. }
            | Error::TheoremViolation { .. }
            | Error::NotStandardDuality { .. }
            | Error::SymmetrizationDegenerate(_)
            | Error::NotInvolutive(_)
            | Error::CellularityFailure { .. }
            | Error::BasisFailure { .. }
            | Error::NoLift(_)
            | Error::NotSplit(_)
            | Error::NotComputable(_)
            | Error::ConstructionDiverged { .. }
            | Error::UnidentifiedSummand { .. }
            | Error::InconsistentSystem
    )
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InconsistentSystem => "InconsistentSystem",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::AlgebraMismatch => "AlgebraMismatch",
        Error::InvalidAlgebra(_) => "InvalidAlgebra",
        Error::InvalidModule(_) => "InvalidModule",
        Error::InvalidMorphism(_) => "InvalidMorphism",
        Error::NotSimple => "NotSimple",
        Error::NotSplit(_) => "NotSplit",
        Error::NotComputable(_) => "NotComputable",
        Error::InvalidPoset(_) => "InvalidPoset",
        Error::AxiomViolation { .. } => "AxiomViolation",
        Error::NoFiltration { .. } => "NoFiltration",
        Error::NothingToDo => "NothingToDo",
        Error::ConstructionDiverged { .. } => "ConstructionDiverged",
        Error::UnidentifiedSummand { .. } => "UnidentifiedSummand",
        Error::NoLift(_) => "NoLift",
        Error::BasisFailure { .. } => "BasisFailure",
        Error::LabelNotInSupport(_) => "LabelNotInSupport",
        Error::TheoremViolation { .. } => "TheoremViolation",
        Error::NotStandardDuality { .. } => "NotStandardDuality",
        Error::InvalidInvolution(_) => "InvalidInvolution",
        Error::SymmetrizationDegenerate(_) => "SymmetrizationDegenerate",
        Error::NotInvolutive(_) => "NotInvolutive",
        Error::CellularityFailure { .. } => "CellularityFailure",
        Error::InvalidInput(_) => "InvalidInput",
    }
}

/// The hypothesis or theorem an error contradicts.
pub fn violated_statement(e: &Error) -> &'static str {
    match e {
        Error::AxiomViolation { .. } => "standard category axioms: dim Hom(Δ(λ), ∇(μ)) = δ, Ext¹ = Ext² = 0",
        Error::NotSplit(_) => "split hypothesis: every simple module has scalar endomorphisms",
        Error::NoFiltration { .. } => "tilting modules carry standard and costandard filtrations",
        Error::ConstructionDiverged { .. } => "existence of the indecomposable tilting module T(λ)",
        Error::UnidentifiedSummand { .. } => "classification of indecomposable tilting modules by highest weight",
        Error::BasisFailure { .. } | Error::NoLift(_) => "standard basis theorem for End(T)",
        Error::TheoremViolation { .. } => "cell module theorems: simple dimensions and semisimplicity",
        Error::NotStandardDuality { .. } => "duality exchanges standard and costandard modules",
        Error::SymmetrizationDegenerate(_) | Error::NotInvolutive(_) => "fixed points of the duality",
        Error::CellularityFailure { .. } => "cellularity of the symmetric basis",
        Error::NotComputable(_) => "characteristic and splitting hypotheses of the construction",
        Error::InconsistentSystem => "exact linear algebra consistency",
        _ => "well-formed input",
    }
}

pub fn scalar<S: Scalar>(x: &S) -> Value {
    Value::String(x.to_string())
}

pub fn matrix<S: Scalar>(m: &Matrix<S>) -> Value {
    json!((0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}
