use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid edge ({0}, {1}): loops are not allowed")]
    InvalidEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },

    #[error("size limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: String,
        actual: usize,
        limit: usize,
    },

    /// Paucity search ran into the subset cap before finding a certificate.
    #[error(
        "size limit exceeded: {candidates} candidate subsets of size {budget} exceed cap {cap} \
         (no augmentation with fewer than {budget} edges exists)"
    )]
    SearchCap {
        budget: usize,
        candidates: u128,
        cap: u128,
    },

    #[error("malformed graph: {0}")]
    Malformed(String),
}
