use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("unknown type symbol {0:?}")]
    BadTypeSymbol(String),

    /// Root closure passed the cap, which is what happens for infinite
    /// (affine, hyperbolic, ...) groups.
    #[error("root closure exceeded {cap} positive roots; the group is not finite")]
    NonFiniteGroup { cap: usize },

    #[error("group has more than {cap} elements")]
    TooLarge { cap: usize },

    #[error("inconsistent root system: {0}")]
    RootSystem(String),

    #[error("generator {letter} out of range for rank {rank}")]
    BadLetter { letter: usize, rank: usize },

    #[error("cannot parse word {0:?}")]
    BadWord(String),

    #[error("cannot parse generator subset {0:?}")]
    BadSubset(String),

    #[error("element is not an involution")]
    NotInvolution,

    #[error("element does not invert the given element by conjugation")]
    NotReverser,

    #[error("element is not a product of two involutions")]
    NotStronglyReal,

    #[error("operation requires a type A group")]
    NotTypeA,

    #[error("index {k} out of range 0..{n}")]
    BadIndex { k: usize, n: usize },

    #[error("certificate check failed: {0}")]
    InternalProofViolation(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
