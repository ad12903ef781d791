use std::fmt;

use thiserror::Error;

/// The fusion-ring identity that a candidate tensor failed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// Tensor or dual table has the wrong size, or an index is out of range.
    Shape,
    /// The dual map is not an involution fixing the unit.
    Involution,
    /// `N_{0j}^k = δ_{jk}` and `N_{i0}^k = δ_{ik}`.
    Unit,
    /// `N_{ij}^0 = 1` iff `j = i*`.
    Duality,
    /// `N_{ij}^k = N_{i*k}^j = N_{kj*}^i`.
    Reciprocity,
    /// `Σ_m N_{ij}^m N_{mk}^l = Σ_m N_{jk}^m N_{im}^l`.
    Associativity,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Shape => "shape",
            Identity::Involution => "involution",
            Identity::Unit => "unit",
            Identity::Duality => "duality",
            Identity::Reciprocity => "reciprocity",
            Identity::Associativity => "associativity",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First violated identity found by [`crate::FusionRing::verify`], with the
/// index tuple at which it fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{identity} axiom violated at {indices:?}")]
pub struct AxiomViolation {
    pub identity: Identity,
    pub indices: Vec<usize>,
}

impl AxiomViolation {
    pub(crate) fn new(identity: Identity, indices: &[usize]) -> Self {
        AxiomViolation {
            identity,
            indices: indices.to_vec(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Axiom(#[from] AxiomViolation),

    #[error("basis index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("empty tensor word")]
    EmptyWord,

    #[error("integer overflow while multiplying basis elements")]
    Overflow,

    #[error("power iteration did not converge for basis element {index} after {iterations} iterations")]
    NonConvergence { index: usize, iterations: usize },

    #[error("malformed ring: {0}")]
    MalformedRing(String),

    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("invalid coset: {0}")]
    InvalidCoset(String),

    #[error("grading construction is inconsistent: {0}")]
    InconsistentGrading(String),

    #[error("grading does not factor through the universal grading: {0}")]
    FactorizationFailure(String),

    #[error("isomorphism search exceeded the node budget of {budget}")]
    SearchBudget { budget: u64 },

    #[error("generalized Tambara-Yamagami structure is inconsistent: {0}")]
    GenTyInconsistent(String),

    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown family or corpus key `{0}`")]
    UnknownFamily(String),

    #[error("invalid bicharacter data: {0}")]
    InvalidBicharacter(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
