//! The JSON input document and its conversion into a registry.

use serde::Deserialize;
use tiltcell::algebra::Algebra;
use tiltcell::highest_weight::{Registry, WeightPoset};
use tiltcell::{Error, Matrix, Result, Scalar};

/// An exact scalar: a JSON integer or a decimal string such as `"-3/4"`.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn to_scalar<S: Scalar>(&self) -> Result<S> {
        match self {
            Number::Int(n) => Ok(S::from_i64(*n)),
            Number::Text(s) => S::parse_exact(s).map_err(|e| Error::InvalidInput(e.to_string())),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: Option<String>,
    pub algebra: AlgebraSpec,
    pub poset: PosetSpec,
    pub anti_involution: Option<Vec<Vec<Number>>>,
    pub tilting: Option<TiltingRequest>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: Option<String>,
    pub dim: usize,
    /// `(i, j, k, c)`: the coefficient of `b_k` in `b_i b_j` is `c`.
    pub structure_constants: Vec<(usize, usize, usize, Number)>,
    pub unit: Vec<Number>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    pub labels: Vec<String>,
    /// `[μ, λ]` means `μ < λ`.
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    pub idempotents: Option<Vec<Vec<Number>>>,
}

/// `"characteristic"`, or explicit multiplicities of indecomposable summands.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum TiltingRequest {
    Named(String),
    Sum(Vec<Summand>),
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Summand {
    pub label: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub seed: Option<u64>,
    pub dim_bound: Option<usize>,
    pub trials: Option<usize>,
}

impl TiltingRequest {
    /// Parses the command-line form: `characteristic` or `1=2,2=1`.
    pub fn parse(spec: &str) -> Result<Self> {
        if spec == "characteristic" {
            return Ok(TiltingRequest::Named(spec.into()));
        }
        spec.split(',')
            .map(|part| {
                let (label, mult) = part
                    .split_once('=')
                    .ok_or_else(|| Error::InvalidInput(format!("expected label=multiplicity, found {part:?}")))?;
                let multiplicity =
                    mult.trim().parse().map_err(|_| Error::InvalidInput(format!("bad multiplicity {mult:?}")))?;
                Ok(Summand { label: label.trim().to_string(), multiplicity })
            })
            .collect::<Result<Vec<_>>>()
            .map(TiltingRequest::Sum)
    }

    /// Multiplicity of each label, in registry order.
    pub fn multiplicities<S: Scalar>(&self, registry: &Registry<S>) -> Result<Vec<usize>> {
        match self {
            TiltingRequest::Named(n) if n == "characteristic" => Ok(vec![1; registry.len()]),
            TiltingRequest::Named(n) => Err(Error::InvalidInput(format!("unknown tilting request {n:?}"))),
            TiltingRequest::Sum(parts) => {
                let mut out = vec![0; registry.len()];
                for p in parts {
                    out[registry.index(&p.label)?] += p.multiplicity;
                }
                if out.iter().all(|&m| m == 0) {
                    return Err(Error::InvalidInput("tilting request is empty".into()));
                }
                Ok(out)
            }
        }
    }
}

fn vector<S: Scalar>(v: &[Number]) -> Result<Vec<S>> {
    v.iter().map(Number::to_scalar).collect()
}

pub fn matrix<S: Scalar>(rows: &[Vec<Number>], n: usize) -> Result<Matrix<S>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput(format!("expected a {n}x{n} matrix")));
    }
    let rows = rows.iter().map(|r| vector(r)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(n, rows))
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn registry<S: Scalar>(&self) -> Result<Registry<S>> {
        let a = &self.algebra;
        let constants = a
            .structure_constants
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, c.to_scalar::<S>()?)))
            .collect::<Result<Vec<_>>>()?;
        let name = a.name.clone().unwrap_or_else(|| "input".into());
        let algebra = Algebra::new(name, a.dim, &constants, vector(&a.unit)?)?;
        let poset = WeightPoset::new(self.poset.labels.clone(), &self.poset.covers)?;
        let idempotents = self.poset.idempotents.as_ref().map(|v| v.iter().map(|e| vector(e)).collect()).transpose()?;
        Registry::new(algebra, poset, idempotents)
    }

    pub fn involution<S: Scalar>(&self) -> Result<Option<Matrix<S>>> {
        self.anti_involution.as_ref().map(|m| matrix(m, self.algebra.dim)).transpose()
    }
}
