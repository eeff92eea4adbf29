//! Crate-wide error type.

use thiserror::Error;

use crate::report::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The independence axiom that a candidate family violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum IndependenceAxiom {
    /// The empty set must be independent.
    I1,
    /// Independence is hereditary under subsets.
    I2,
    /// Exchange: a smaller independent set extends from a larger one.
    I3,
}

impl std::fmt::Display for IndependenceAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            IndependenceAxiom::I1 => "I1",
            IndependenceAxiom::I2 => "I2",
            IndependenceAxiom::I3 => "I3",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set has {size} elements; at most {max} are supported")]
    GroundTooLarge { size: usize, max: usize },

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("bitmask {mask:#06x} has bits outside a {size}-element ground set")]
    MaskOutOfRange { mask: u16, size: usize },

    #[error("operands belong to different ground sets")]
    MismatchedGround,

    #[error("no phi-class contains {0}")]
    NoContainingClass(String),

    #[error("undefined on the empty set")]
    UndefinedOnEmpty,

    #[error("no phi-prime set is phi-equivalent to {0}, so its phi-dimension is undefined")]
    DimensionUndefined(String),

    #[error("size {n} is outside the supported range {lo}..={hi}")]
    SizeOutOfRange { n: usize, lo: usize, hi: usize },

    #[error("independence axiom {axiom} fails; witness {witness}")]
    IndependenceViolation {
        axiom: IndependenceAxiom,
        witness: Witness,
    },

    #[error("family is not closed under pairwise intersection; witness {witness}")]
    NotIntersectionClosed { witness: Witness },

    #[error("flat family does not contain the full ground set")]
    MissingFullSet,

    #[error("flats of the derived matroid differ from the input family; witness {witness}")]
    FlatsMismatch { witness: Witness },

    #[error(
        "exhaustive check requires ground size <= {cap}, but this ground has {size} elements"
    )]
    CapExceeded { size: usize, cap: usize },

    #[error("precondition `{name}` failed; witness {witness}")]
    Precondition { name: &'static str, witness: Witness },

    #[error("obligation `{name}` failed; witness {witness}")]
    Obligation { name: &'static str, witness: Witness },

    #[error("no qualifying system exists on ground sets of up to {0} elements")]
    SearchExhausted(usize),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl Error {
    /// Process exit code under the CLI contract: 2 for input/usage
    /// problems, 1 for checks that ran and failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GroundTooLarge { .. }
            | Error::DuplicateLabel(_)
            | Error::UnknownLabel(_)
            | Error::MaskOutOfRange { .. }
            | Error::MismatchedGround
            | Error::SizeOutOfRange { .. }
            | Error::CapExceeded { .. }
            | Error::Parse { .. } => 2,
            _ => 1,
        }
    }
}
