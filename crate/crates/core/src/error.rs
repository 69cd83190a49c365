use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of {size} elements exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("flat axiom violated ({axiom}): {witness}")]
    Axiom { axiom: Axiom, witness: String },

    #[error("element {0} is not in the ground set")]
    InvalidElement(usize),

    #[error("{0:?} is not a flat")]
    NotAFlat(Vec<usize>),

    #[error("{lower:?} is not contained in {upper:?}")]
    NotBelow {
        lower: Vec<usize>,
        upper: Vec<usize>,
    },

    #[error("element {0} is a coloop; the deletion formula requires a non-coloop")]
    Coloop(usize),

    #[error("rank-0 matroid has no linear coefficient")]
    RankZero,

    #[error("substitution t -> t^0 is not allowed")]
    ZeroSubstitution,

    #[error("edge {0} does not exist")]
    InvalidEdge(usize),

    #[error("edge {0} is a loop and cannot be contracted")]
    LoopContraction(usize),

    #[error("edge endpoint {vertex} is out of range for {vertices} vertices")]
    InvalidVertex { vertex: usize, vertices: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("element is not perverse: {0}")]
    NotPerverse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

/// The flat axioms checked on ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    GroundSet,
    FullSetIsFlat,
    IntersectionClosed,
    CoverPartition,
    Graded,
    Simple,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axiom::GroundSet => "subsets of the ground set",
            Axiom::FullSetIsFlat => "E is a flat",
            Axiom::IntersectionClosed => "intersection of flats is a flat",
            Axiom::CoverPartition => "covers partition the complement",
            Axiom::Graded => "covers raise rank by one",
            Axiom::Simple => "simplicity",
        })
    }
}
