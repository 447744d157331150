use thiserror::Error;

#[derive(Debug, Error)]
pub enum NcError {
    #[error("h = {h} does not divide n = {n} (or is out of range)")]
    InvalidSubgroupOrder { n: u64, h: u64 },

    #[error("trivial subgroup H = {{e}} is not admitted")]
    TrivialSubgroup,

    #[error("cost guard violated: {what} = {got} exceeds limit {limit}")]
    CostGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("group table is invalid: {0}")]
    InvalidTable(String),

    #[error("subgroup is invalid: {0}")]
    InvalidSubgroup(String),

    #[error("group is not EPPO: element {element} has order {order}")]
    NotEppo { element: usize, order: u64 },

    #[error("malformed tagged coprime graph: expected exactly one loop, found {loops}")]
    MalformedTagged { loops: usize },

    #[error("malformed input: {0}")]
    Malformed(String),
}
