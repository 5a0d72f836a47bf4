use crate::subset::Subset;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the empty set is not a member of the structure")]
    MissingEmptySet,
    #[error("not union-closed: {0} and {1} meet but their union is not connected")]
    NotUnionClosed(Subset, Subset),
    #[error("integral structure is missing the singleton {{{0}}}")]
    MissingSingleton(usize),
    #[error("subset {subset} does not fit a ground set of {size} points")]
    SubsetOutOfRange { subset: Subset, size: usize },
    #[error("point labels are not pairwise distinct: {0:?}")]
    DuplicateLabel(String),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("operation requires an integral space")]
    NotIntegral,
    #[error("{what}: size {size} exceeds the configured limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("family grew past the configured limit of {limit} members")]
    FamilySizeLimitExceeded { limit: usize },
    #[error("hom-set enumeration too large: {size} candidate maps exceed the limit {limit}")]
    HomTooLarge { size: u128, limit: u128 },
    #[error("search space too large: {size} candidates exceed the limit {limit}")]
    SearchTooLarge { size: u128, limit: u128 },
    #[error("ground set mismatch: {0}")]
    GroundMismatch(String),
    #[error("{0} is not a connected subset")]
    NotConnected(Subset),
    #[error("space has no points, so it has no index")]
    NoIndexForEmptySpace,
    #[error("graph is not a DAG")]
    NotADag,
    #[error("graph is not the generic graph of any space: {0}")]
    NotRealizable(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("space is not irreducible")]
    NotIrreducible,
    #[error("point {point} is not in a carrier of {size} points")]
    InvalidPoint { point: usize, size: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("map is not a connectivity morphism")]
    NotAMorphism,
    #[error("map does not preserve base points")]
    NotBased,
}
