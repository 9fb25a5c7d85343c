use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid algebra presentation: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("module is not simple")]
    NotSimple,
    #[error("algebra is not split: {0}")]
    NotSplit(String),
    #[error("not computable: {0}")]
    NotComputable(String),
    #[error("invalid weight poset: {0}")]
    InvalidPoset(String),
    #[error("axiom violated ({axiom}) at ({lambda}, {mu}): {detail}")]
    AxiomViolation { axiom: String, lambda: String, mu: String, detail: String },
    #[error("no {kind}-filtration: Ext^1 criterion fails at {label}")]
    NoFiltration { kind: &'static str, label: String },
    #[error("Ext^1 vanishes, nothing to extend")]
    NothingToDo,
    #[error("construction diverged: dimension {dim} exceeds bound {bound}")]
    ConstructionDiverged { dim: usize, bound: usize },
    #[error("summand of dimension {dim} is not isomorphic to any indecomposable tilting module")]
    UnidentifiedSummand { dim: usize },
    #[error("no lift exists: {0}")]
    NoLift(String),
    #[error("basis construction failed at {label}: {reason}")]
    BasisFailure { label: String, reason: String },
    #[error("label {0} is not in the support of the datum")]
    LabelNotInSupport(String),
    #[error("theorem violated at {label}: {detail}")]
    TheoremViolation { label: String, detail: String },
    #[error("not a standard duality at {label}: {check}")]
    NotStandardDuality { label: String, check: String },
    #[error("invalid anti-involution: {0}")]
    InvalidInvolution(String),
    #[error("symmetrized form is degenerate: {0}")]
    SymmetrizationDegenerate(String),
    #[error("induced anti-automorphism is not an involution: {0}")]
    NotInvolutive(String),
    #[error("cellularity fails at {label} (i={i}, j={j}): {detail}")]
    CellularityFailure { label: String, i: usize, j: usize, detail: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
