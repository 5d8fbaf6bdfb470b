use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group has more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("generated group has order {actual}, expected {expected}")]
    OrderMismatch { expected: usize, actual: usize },
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParameters(String),
    #[error("cannot parse group spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error("subgroup lattice has more than {cap} subgroups")]
    LatticeTooLarge { cap: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("maximal-measure subgroups are not closed: {0}")]
    CdClosureViolation(String),
    #[error("lower bound is not contained in upper bound")]
    NotNested,
    #[error("subgroup is not a member of the Chermak-Delgado lattice")]
    NotACdMember,
    #[error("group of order {order} is not a nontrivial {p}-group")]
    NotAPGroup { order: usize, p: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("catalog entry {order}#{id}: {source}")]
    Entry {
        order: usize,
        id: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("catalog declares {declared} groups of order {order} but lists {listed}")]
    CountMismatch {
        order: usize,
        declared: usize,
        listed: usize,
    },
    #[error("no catalog entries of order {0}")]
    MissingCatalog(usize),
    #[error("catalog is incomplete for order {order}: {reason}")]
    IncompleteCatalog { order: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
